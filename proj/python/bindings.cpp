/* Copyright 2026 The Construal Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "construal/agreement.hpp"
#include "construal/construal.hpp"
#include "construal/corpus.hpp"
#include "construal/error.hpp"
#include "construal/lexicon.hpp"
#include "construal/tagger.hpp"
#include "construal/taxonomy.hpp"

namespace py = pybind11;
using namespace construal;

namespace {

py::dict KappaDict(const KappaResult& k) {
  py::dict d;
  d["value"] = k.value;
  d["observed"] = k.observed;
  d["expected"] = k.expected;
  d["degenerate"] = k.degenerate;
  return d;
}

py::dict StatsDict(const CorpusStats& s) {
  py::dict d;
  d["tokens_annotated"] = s.tokens_annotated;
  d["role_histogram"] = s.role_histogram;
  d["function_histogram"] = s.function_histogram;
  d["null_functions"] = s.null_functions;
  d["mismatches"] = s.mismatches;
  d["mismatch_rate"] = s.mismatch_rate;
  d["null_function_rate"] = s.null_function_rate;
  d["role_only_labels"] = s.role_only_labels;
  d["function_only_labels"] = s.function_only_labels;
  d["participant_labels_used"] = s.participant_labels_used;
  d["participant_labels_role_only"] = s.participant_labels_role_only;
  d["form_role_groups"] = s.form_role_groups;
  d["deterministic_groups"] = s.deterministic_groups;
  d["function_determinism"] = s.function_determinism;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Construal annotation toolkit core";

  py::exception<Error>(m, "ConstrualError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("construal._core").attr("ConstrualError");
      py::object inst = cls(py::str(e.what()));
      inst.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(cls.ptr(), inst.ptr());
    }
  });

  py::class_<Construal>(m, "Construal")
      .def(py::init<>())
      .def(py::init([](std::string role, std::vector<std::string> functions, bool metaphoric) {
             return Construal{std::move(role), std::move(functions), metaphoric};
           }),
           py::arg("role"), py::arg("functions") = std::vector<std::string>{},
           py::arg("metaphoric") = false)
      .def_readwrite("role", &Construal::role)
      .def_readwrite("functions", &Construal::functions)
      .def_readwrite("metaphoric", &Construal::metaphoric)
      .def_property_readonly("is_congruent", [](const Construal& c) { return IsCongruent(c); })
      .def("__str__", [](const Construal& c) { return FormatConstrual(c); })
      .def("__repr__", [](const Construal& c) { return "Construal('" + FormatConstrual(c) + "')"; })
      .def("__eq__", [](const Construal& a, const Construal& b) { return a == b; })
      .def("__hash__", [](const Construal& c) { return py::hash(py::str(FormatConstrual(c))); });

  m.def("parse_construal", &ParseConstrual, py::arg("text"));
  m.def("format_construal", &FormatConstrual, py::arg("construal"));
  m.def("validate_construal", &ValidateConstrual, py::arg("hierarchy"), py::arg("construal"));
  m.def(
      "simplify_chain",
      [](const Construal& c, const std::string& policy) {
        return SimplifyChain(c, ParseChainPolicy(policy));
      },
      py::arg("construal"), py::arg("policy"));

  py::class_<RevisionMap>(m, "RevisionMap")
      .def_static("parse", &RevisionMap::Parse, py::arg("text"))
      .def("serialize", &RevisionMap::Serialize)
      .def("retired_labels", &RevisionMap::RetiredLabels);

  py::class_<Hierarchy>(m, "Hierarchy")
      .def_static("load", &Hierarchy::Load, py::arg("text"))
      .def("serialize", &Hierarchy::Serialize)
      .def_property_readonly("version", &Hierarchy::version)
      .def("__len__", &Hierarchy::size)
      .def("__contains__", [](const Hierarchy& h, const std::string& s) { return h.Contains(s); })
      .def("labels",
           [](const Hierarchy& h) {
             std::vector<std::string> out;
             for (const auto& n : h.nodes()) out.push_back(n.name);
             return out;
           })
      .def("parents", [](const Hierarchy& h, const std::string& s) { return h.Get(s).parents; })
      .def("definition",
           [](const Hierarchy& h, const std::string& s) { return h.Get(s).definition; })
      .def("roots", &Hierarchy::Roots)
      .def("children", &Hierarchy::Children)
      .def("topological_order", &Hierarchy::TopologicalOrder)
      .def("is_ancestor", &Hierarchy::IsAncestor, py::arg("ancestor"), py::arg("descendant"))
      .def("ancestors", &Hierarchy::Ancestors)
      .def("lowest_common_subsumers", &Hierarchy::LowestCommonSubsumers)
      .def("depth", &Hierarchy::Depth)
      .def("validate_revision", &Hierarchy::ValidateRevision)
      .def("apply_revision", &Hierarchy::ApplyRevision);

  py::class_<Lexicon>(m, "Lexicon")
      .def_static("load", &Lexicon::Load, py::arg("text"), py::arg("hierarchy"))
      .def("serialize", &Lexicon::Serialize)
      .def("__len__", &Lexicon::size)
      .def("warnings", &Lexicon::Warnings)
      .def("prototypical_functions",
           [](const Lexicon& lex, const std::string& lang, const std::string& form) {
             const AdpositionEntry* e = lex.Find(lang, form);
             return e ? py::cast(e->prototypical_functions) : py::object(py::none());
           })
      .def("suggest_construals",
           [](const Lexicon& lex, const std::string& lang, const std::string& form,
              const std::string& sentence) { return lex.SuggestConstruals(lang, form, sentence); },
           py::arg("language"), py::arg("form"), py::arg("sentence") = "")
      .def("apply_revision", &Lexicon::ApplyRevision);

  py::class_<AnnotationRecord>(m, "AnnotationRecord")
      .def_readonly("doc_id", &AnnotationRecord::doc_id)
      .def_readonly("sent_id", &AnnotationRecord::sent_id)
      .def_property_readonly("target",
                             [](const AnnotationRecord& r) {
                               return py::make_tuple(r.target.start, r.target.end);
                             })
      .def_readonly("form", &AnnotationRecord::form)
      .def_readonly("annotator", &AnnotationRecord::annotator)
      .def_readonly("construal", &AnnotationRecord::construal)
      .def_readonly("note", &AnnotationRecord::note)
      .def_property_readonly("is_gold", &AnnotationRecord::is_gold);

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("records", &Corpus::records)
      .def("gold_records", &Corpus::GoldRecords)
      .def("language_of", &Corpus::LanguageOf)
      .def("serialize_annotations", [](const Corpus& c) { return SerializeAnnotations(c.records); })
      .def("serialize_documents", [](const Corpus& c) { return SerializeDocuments(c.documents); });

  m.def(
      "load_corpus",
      [](const std::string& docs, const std::string& ann, const Hierarchy& h,
         const Lexicon* lex) {
        auto r = LoadCorpus(docs, ann, h, lex);
        return py::make_tuple(std::move(r.corpus), std::move(r.warnings));
      },
      py::arg("documents"), py::arg("annotations"), py::arg("hierarchy"),
      py::arg("lexicon") = nullptr);
  m.def(
      "compute_stats",
      [](const Corpus& c, const Hierarchy& h) { return StatsDict(ComputeStats(c.records, h)); },
      py::arg("corpus"), py::arg("hierarchy"));
  m.def(
      "revise_corpus",
      [](const Corpus& c, const RevisionMap& rev) {
        Corpus out = c;
        out.records = ApplyRevisionToCorpus(c.records, rev);
        return out;
      },
      py::arg("corpus"), py::arg("revision"));

  m.def(
      "cohen_kappa",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return KappaDict(CohenKappa(a, b));
      },
      py::arg("a"), py::arg("b"));
  m.def("soft_similarity", &SoftSimilarity, py::arg("hierarchy"), py::arg("a"), py::arg("b"));
  m.def(
      "pairwise_agreement",
      [](const Corpus& c, const std::string& a, const std::string& b, const Hierarchy& h) {
        const AgreementReport r = PairwiseAgreement(c.records, a, b, h);
        py::dict d;
        d["n_items"] = r.n_items;
        d["exact_construal"] = r.exact_construal;
        d["role_agreement"] = r.role_agreement;
        d["function_agreement"] = r.function_agreement;
        d["kappa_role"] = KappaDict(r.kappa_role);
        d["kappa_function"] = KappaDict(r.kappa_function);
        d["kappa_construal"] = KappaDict(r.kappa_construal);
        d["soft_role"] = r.soft_role;
        d["disagreements"] = r.disagreements.size();
        return d;
      },
      py::arg("corpus"), py::arg("a"), py::arg("b"), py::arg("hierarchy"));

  py::class_<TagModel>(m, "TagModel")
      .def("tag", [](const TagModel& model, const std::string& lang,
                     const std::string& form) { return Tag(model, lang, form); })
      .def("evaluate", [](const TagModel& model, const Corpus& gold) {
        const Accuracy a = Evaluate(model, gold);
        py::dict d;
        d["n"] = a.n;
        d["exact"] = a.exact;
        d["role"] = a.role;
        d["function"] = a.function;
        return d;
      });
  m.def(
      "train",
      [](const Corpus& c, const Lexicon* lex) {
        return Train(c, lex ? std::make_shared<const Lexicon>(*lex) : nullptr);
      },
      py::arg("corpus"), py::arg("lexicon") = nullptr);
}
