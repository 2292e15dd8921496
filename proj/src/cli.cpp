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

#include "construal/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "construal/agreement.hpp"
#include "construal/corpus.hpp"
#include "construal/error.hpp"
#include "construal/lexicon.hpp"
#include "construal/service.hpp"
#include "construal/store.hpp"
#include "construal/tagger.hpp"
#include "construal/taxonomy.hpp"
#include "construal/text.hpp"
#include "httplib.h"

#ifndef CONSTRUAL_BUNDLED_DATA_DIR
#define CONSTRUAL_BUNDLED_DATA_DIR "data"
#endif

namespace construal {

namespace fs = std::filesystem;

std::string DefaultDataDir() {
  if (const char* env = std::getenv("CONSTRUAL_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return CONSTRUAL_BUNDLED_DATA_DIR;
}

namespace {

struct Config {
  std::string hierarchy;
  std::string lexicon;
  std::vector<std::string> corpora;
  std::string revision;
  std::string out;
  bool strict = false;
  bool tsv = false;

  // agree
  std::string a, b;
  // adjudicate
  std::string target, construal, expert;
  bool force = false;
  // collapse
  std::string chains;
  // tag
  std::string documents, targets, eval;
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string log;
  std::vector<std::string> annotators;
};

std::string DataFile(const char* name) { return (fs::path(DefaultDataDir()) / name).string(); }

// Rethrows with the file name in front of the message.
template <typename F>
auto InFile(const std::string& path, F f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string CompanionDocuments(const std::string& ann_path) {
  static constexpr std::string_view kAnn = ".ann.tsv";
  if (ann_path.size() > kAnn.size() &&
      std::string_view(ann_path).substr(ann_path.size() - kAnn.size()) == kAnn) {
    return ann_path.substr(0, ann_path.size() - kAnn.size()) + ".docs.tsv";
  }
  return ann_path + ".docs.tsv";
}

struct Inputs {
  Hierarchy hierarchy;
  std::optional<Lexicon> lexicon;
  Corpus corpus;
  std::vector<std::string> warnings;
};

class Runner {
 public:
  Runner(Config& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  Hierarchy LoadHierarchy() const {
    const std::string path = cfg_.hierarchy.empty() ? DataFile("hierarchy.txt") : cfg_.hierarchy;
    return InFile(path, [&] { return Hierarchy::Load(ReadFile(path)); });
  }

  // With `required` false a missing default lexicon is skipped.
  std::optional<Lexicon> LoadLexicon(const Hierarchy& h, bool required) const {
    std::string path = cfg_.lexicon;
    if (path.empty()) {
      path = DataFile("lexicon.txt");
      if (!required && !fs::exists(path)) return std::nullopt;
    }
    return InFile(path, [&] { return Lexicon::Load(ReadFile(path), h); });
  }

  // Default corpus is skipped when absent and `required` is false. A corpus
  // without a companion documents file loads against no documents.
  Corpus LoadCorpora(const Hierarchy& h, const Lexicon* lex, bool required,
                     std::vector<std::string>& warnings) const {
    std::vector<std::string> paths = cfg_.corpora;
    if (paths.empty()) {
      const std::string def = DataFile("corpus.ann.tsv");
      if (!required && !fs::exists(def)) return {};
      paths.push_back(def);
    }
    std::vector<Corpus> parts;
    for (const auto& path : paths) {
      const std::string docs_path = CompanionDocuments(path);
      const std::string docs = fs::exists(docs_path) ? ReadFile(docs_path) : std::string();
      auto result = InFile(path, [&] { return LoadCorpus(docs, ReadFile(path), h, lex); });
      for (auto& w : result.warnings) warnings.push_back(path + ": " + w);
      parts.push_back(std::move(result.corpus));
    }
    return parts.size() == 1 ? std::move(parts.front()) : MergeCorpora(parts);
  }

  Inputs Load(bool lexicon_required, bool corpus_required) const {
    Inputs in{LoadHierarchy(), std::nullopt, {}, {}};
    in.lexicon = LoadLexicon(in.hierarchy, lexicon_required);
    if (in.lexicon) {
      for (auto& w : in.lexicon->Warnings()) in.warnings.push_back("lexicon: " + w);
    }
    in.corpus = LoadCorpora(in.hierarchy, in.lexicon ? &*in.lexicon : nullptr, corpus_required,
                            in.warnings);
    return in;
  }

  void Emit(const std::string& text) const {
    if (cfg_.out.empty()) {
      out_ << text;
    } else {
      WriteFile(cfg_.out, text);
    }
  }

  int Finish(const std::vector<std::string>& warnings) const {
    for (const auto& w : warnings) err_ << "warning: " << w << "\n";
    return cfg_.strict && !warnings.empty() ? kExitFindings : kExitOk;
  }

  int Validate() const {
    Inputs in = Load(false, false);
    std::string text = std::to_string(in.hierarchy.size()) + " labels, " +
                       std::to_string(in.hierarchy.Roots().size()) + " roots\n";
    if (in.lexicon) text += "lexicon: " + std::to_string(in.lexicon->size()) + " entries\n";
    text += "corpus: " + std::to_string(in.corpus.records.size()) + " records, " +
            std::to_string(in.corpus.GoldRecords().size()) + " gold\n";
    Emit(text);
    return Finish(in.warnings);
  }

  int Stats() const {
    Inputs in = Load(false, true);
    const CorpusStats s = ComputeStats(in.corpus.records, in.hierarchy);
    Emit(cfg_.tsv ? StatsTsv(s) : StatsText(s));
    return Finish(in.warnings);
  }

  int Agree() const {
    Inputs in = Load(false, true);
    const auto report = PairwiseAgreement(in.corpus.records, cfg_.a, cfg_.b, in.hierarchy);
    Emit(cfg_.tsv ? FormatReportTsv(report) : FormatReportText(report));
    return Finish(in.warnings);
  }

  int Queue() const {
    Inputs in = Load(false, true);
    std::string text;
    for (const auto& item : DisagreementQueue(in.corpus.records)) {
      if (cfg_.tsv) {
        for (const auto& [who, c] : item.annotations) {
          text += item.target.ToString() + "\t" + item.form + "\t" + who + "\t" +
                  FormatConstrual(c) + "\n";
        }
      } else {
        text += item.target.ToString() + "  " + item.form;
        for (const auto& [who, c] : item.annotations) {
          text += "  " + who + "=" + FormatConstrual(c);
        }
        text += "\n";
      }
    }
    if (!cfg_.tsv) err_ << DisagreementQueue(in.corpus.records).size() << " targets in queue\n";
    Emit(text);
    return Finish(in.warnings);
  }

  int Adjudicate() const {
    if (cfg_.corpora.size() > 1) {
      throw Error(ErrorCode::kSyntax, "adjudicate takes a single --corpus");
    }
    Inputs in = Load(false, true);
    const TargetKey key = TargetKey::Parse(cfg_.target);
    const Construal chosen = ParseConstrual(cfg_.construal);
    const auto updated = construal::Adjudicate(in.corpus.records, key, chosen, cfg_.expert,
                                               in.hierarchy, cfg_.force);
    Emit(SerializeAnnotations(updated));
    return Finish(in.warnings);
  }

  int Collapse() const {
    Inputs in = Load(false, true);
    const std::string rev_path = cfg_.revision.empty() ? DataFile("revision.txt") : cfg_.revision;
    const RevisionMap m = InFile(rev_path, [&] { return RevisionMap::Parse(ReadFile(rev_path)); });
    const Hierarchy revised = in.hierarchy.ApplyRevision(m);
    std::vector<AnnotationRecord> records = ApplyRevisionToCorpus(in.corpus.records, m);
    if (!cfg_.chains.empty()) {
      const ChainPolicy policy = ParseChainPolicy(cfg_.chains);
      for (auto& r : records) r.construal = SimplifyChain(r.construal, policy);
    }
    for (const auto& r : records) ValidateConstrual(revised, r.construal);

    const fs::path dir(cfg_.out);
    fs::create_directories(dir);
    WriteFile((dir / "hierarchy.txt").string(), revised.Serialize());
    if (in.lexicon) {
      const Lexicon lex = in.lexicon->ApplyRevision(m);
      lex.Validate(revised);
      WriteFile((dir / "lexicon.txt").string(), lex.Serialize());
    }
    WriteFile((dir / "corpus.ann.tsv").string(), SerializeAnnotations(records));
    WriteFile((dir / "corpus.docs.tsv").string(), SerializeDocuments(in.corpus.documents));
    out_ << in.hierarchy.size() << " -> " << revised.size() << " labels, "
         << records.size() << " records written to " << dir.string() << "\n";
    return Finish(in.warnings);
  }

  int Tag() const {
    Inputs in = Load(true, false);
    auto lex = std::make_shared<const Lexicon>(*in.lexicon);
    const TagModel model = Train(in.corpus, lex);
    if (!cfg_.eval.empty()) {
      const std::string docs_path = CompanionDocuments(cfg_.eval);
      const std::string docs = fs::exists(docs_path) ? ReadFile(docs_path) : std::string();
      const auto gold = InFile(cfg_.eval, [&] {
        return LoadCorpus(docs, ReadFile(cfg_.eval), in.hierarchy, nullptr);
      });
      const Accuracy acc = Evaluate(model, gold.corpus);
      char buf[160];
      if (cfg_.tsv) {
        std::snprintf(buf, sizeof(buf), "n\t%zu\nexact\t%.6f\nrole\t%.6f\nfunction\t%.6f\n",
                      acc.n, acc.exact, acc.role, acc.function);
      } else {
        std::snprintf(buf, sizeof(buf),
                      "n         %zu\nexact     %.6f\nrole      %.6f\nfunction  %.6f\n", acc.n,
                      acc.exact, acc.role, acc.function);
      }
      Emit(buf);
      return Finish(in.warnings);
    }
    Corpus docs;
    if (cfg_.documents.empty()) {
      docs.documents = in.corpus.documents;
    } else {
      docs.documents =
          InFile(cfg_.documents, [&] { return LoadDocuments(ReadFile(cfg_.documents)); });
    }
    const auto targets = InFile(cfg_.targets, [&] { return ParseTargets(ReadFile(cfg_.targets), docs); });
    Emit(SerializeAnnotations(TagTargets(model, docs, targets)));
    return Finish(in.warnings);
  }

  int Serve() const {
    Inputs in = Load(true, false);
    std::vector<TargetKey> targets;
    if (!cfg_.targets.empty()) {
      for (auto& t : InFile(cfg_.targets, [&] {
             return ParseTargets(ReadFile(cfg_.targets), in.corpus);
           })) {
        targets.push_back({t.doc_id, t.sent_id, t.span});
      }
    }
    AnnotationStore::Options options;
    options.log_path = cfg_.log;
    options.annotators = cfg_.annotators;
    AnnotationStore store(std::move(in.hierarchy), std::move(*in.lexicon), std::move(in.corpus),
                          std::move(targets), options);
    for (const auto& w : in.warnings) err_ << "warning: " << w << "\n";
    httplib::Server server;
    RegisterRoutes(server, store);
    err_ << "listening on " << cfg_.host << ":" << cfg_.port << "\n";
    err_.flush();
    if (!server.listen(cfg_.host, cfg_.port)) {
      err_ << "error: cannot listen on " << cfg_.host << ":" << cfg_.port << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

 private:
  static std::string Fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
  }

  static std::vector<std::pair<std::string, std::string>> Scalars(const CorpusStats& s) {
    return {
        {"tokens_annotated", std::to_string(s.tokens_annotated)},
        {"null_functions", std::to_string(s.null_functions)},
        {"null_function_rate", Fixed(s.null_function_rate)},
        {"mismatches", std::to_string(s.mismatches)},
        {"mismatch_rate", Fixed(s.mismatch_rate)},
        {"participant_labels_used", std::to_string(s.participant_labels_used)},
        {"participant_labels_role_only", std::to_string(s.participant_labels_role_only)},
        {"form_role_groups", std::to_string(s.form_role_groups)},
        {"deterministic_groups", std::to_string(s.deterministic_groups)},
        {"function_determinism", Fixed(s.function_determinism)},
    };
  }

  static std::string JoinSet(const std::set<std::string>& s) {
    return Join(std::vector<std::string>(s.begin(), s.end()), ",");
  }

  static std::string StatsTsv(const CorpusStats& s) {
    std::string out;
    for (const auto& [k, v] : Scalars(s)) out += k + "\t" + v + "\n";
    for (const auto& [k, v] : s.role_histogram) out += "role\t" + k + "\t" + std::to_string(v) + "\n";
    for (const auto& [k, v] : s.function_histogram) {
      out += "function\t" + k + "\t" + std::to_string(v) + "\n";
    }
    out += "role_only_labels\t" + JoinSet(s.role_only_labels) + "\n";
    out += "function_only_labels\t" + JoinSet(s.function_only_labels) + "\n";
    return out;
  }

  static std::string StatsText(const CorpusStats& s) {
    const auto scalars = Scalars(s);
    size_t width = 0;
    for (const auto& [k, v] : scalars) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : scalars) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    auto histogram = [&out](const char* title, const std::map<std::string, size_t>& h) {
      out += title;
      out += "\n";
      for (const auto& [k, v] : h) out += "  " + k + "  " + std::to_string(v) + "\n";
    };
    histogram("roles", s.role_histogram);
    histogram("functions", s.function_histogram);
    out += "role only: " + JoinSet(s.role_only_labels) + "\n";
    out += "function only: " + JoinSet(s.function_only_labels) + "\n";
    return out;
  }

  Config& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Construal annotation toolkit", "construal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--hierarchy", cfg.hierarchy, "Supersense hierarchy file");
  app.add_option("--lexicon", cfg.lexicon, "Adposition lexicon file");
  app.add_option("--corpus", cfg.corpora, "Annotation TSV (repeatable)");
  app.add_option("--revision", cfg.revision, "Revision map file");
  app.add_option("--out", cfg.out, "Output file (directory for collapse)");
  app.add_flag("--strict", cfg.strict, "Treat warnings as findings");
  app.add_flag("--tsv", cfg.tsv, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Load and check all inputs");
  auto* stats = app.add_subcommand("stats", "Corpus statistics over gold records");
  auto* agree = app.add_subcommand("agree", "Pairwise agreement between two annotators");
  agree->add_option("--a", cfg.a, "First annotator")->required();
  agree->add_option("--b", cfg.b, "Second annotator")->required();
  auto* queue = app.add_subcommand("queue", "Targets awaiting adjudication");
  auto* adjudicate = app.add_subcommand("adjudicate", "Add a gold record for one target");
  adjudicate->add_option("--target", cfg.target, "doc:sent:start:end")->required();
  adjudicate->add_option("--construal", cfg.construal, "Chosen construal")->required();
  adjudicate->add_option("--expert", cfg.expert, "Expert id")->required();
  adjudicate->add_flag("--force", cfg.force, "Replace an existing gold record");
  auto* collapse = app.add_subcommand("collapse", "Apply the revision map to all inputs");
  collapse->add_option("--chains", cfg.chains, "Chain policy: keep-first-two or keep-ends");
  auto* tag = app.add_subcommand("tag", "Most-frequent-construal baseline");
  tag->add_option("--documents", cfg.documents, "Documents TSV for the targets");
  auto* targets_opt = tag->add_option("--targets", cfg.targets, "Target list TSV");
  auto* eval_opt = tag->add_option("--eval", cfg.eval, "Gold annotation TSV to score against");
  targets_opt->excludes(eval_opt);
  auto* serve = app.add_subcommand("serve", "Run the annotation service");
  serve->add_option("--host", cfg.host, "Bind address");
  serve->add_option("--port", cfg.port, "Port");
  serve->add_option("--log", cfg.log, "Append log path");
  serve->add_option("--annotators", cfg.annotators, "Registered annotator ids")->delimiter(',');
  serve->add_option("--targets", cfg.targets, "Extra target list TSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Runner run(cfg, out, err);
  try {
    if (tag->parsed() && cfg.targets.empty() && cfg.eval.empty()) {
      throw Error(ErrorCode::kSyntax, "tag needs --targets or --eval");
    }
    if (collapse->parsed() && cfg.out.empty()) {
      throw Error(ErrorCode::kSyntax, "collapse needs --out DIR");
    }
    if (validate->parsed()) return run.Validate();
    if (stats->parsed()) return run.Stats();
    if (agree->parsed()) return run.Agree();
    if (queue->parsed()) return run.Queue();
    if (adjudicate->parsed()) return run.Adjudicate();
    if (collapse->parsed()) return run.Collapse();
    if (tag->parsed()) return run.Tag();
    if (serve->parsed()) return run.Serve();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return IsParseError(e.code()) ? kExitUsage : kExitFindings;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace construal
