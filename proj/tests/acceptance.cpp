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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Tolerances and time limits are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "construal/agreement.hpp"
#include "construal/construal.hpp"
#include "construal/corpus.hpp"
#include "construal/error.hpp"
#include "construal/lexicon.hpp"
#include "construal/store.hpp"
#include "construal/tagger.hpp"
#include "construal/taxonomy.hpp"
#include "construal/text.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace construal;
using namespace construal::testing;

namespace {

constexpr double kKappaTolerance = 1e-12;
constexpr double kSoftTolerance = 1e-12;
constexpr double kTimeLimitSeconds = 1.0;
constexpr int kKappaTrials = 1000;
constexpr int kWorkflowTrials = 25;

// Hand tally over the bundled example transcription: 32 gold tokens, of
// which exactly four are congruent.
constexpr size_t kExampleTokens = 32;
constexpr size_t kExampleMismatches = 28;

std::string g_detail;

void Expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Runs `check`, records elapsed seconds, returns true on success.
bool Criterion(const char* name, double time_limit, const std::function<void()>& check) {
  g_detail.clear();
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    check();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (failure.empty() && time_limit > 0 && secs >= time_limit) {
    failure = "took " + Num(secs) + " s, limit " + Num(time_limit) + " s";
  }
  const bool ok = failure.empty();
  std::printf("%s  %-28s %.3fs  %s\n", ok ? "PASS" : "FAIL", name, secs,
              ok ? g_detail.c_str() : failure.c_str());
  return ok;
}

void HierarchyFidelity() {
  const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  Expect(h.size() == 75, "expected 75 labels, got " + std::to_string(h.size()));
  const auto roots = h.Roots();
  Expect((std::set<std::string>(roots.begin(), roots.end()) ==
          std::set<std::string>{"Participant", "Circumstance", "Configuration"}) &&
             roots.size() == 3,
         "roots are not exactly Participant, Circumstance, Configuration");
  for (const char* label : {"Contour", "Transit"}) {
    Expect(h.Get(label).parents.size() == 2, std::string(label) + " does not have 2 parents");
  }
  // Independent parser agrees on the graph.
  const auto g = oracle::ParseHierarchyText(ReadData("hierarchy.txt"));
  Expect(g.names.size() == 75, "oracle parser count differs");
  for (const auto& n : g.names) {
    Expect(h.Get(n).parents == g.parents.at(n), "parents differ for " + n);
  }
  g_detail = "75 labels, 3 roots, Contour/Transit have 2 parents";
}

bool HasRetired(const Construal& c, const RevisionMap& m) {
  if (m.Retires(c.role)) return true;
  for (const auto& f : c.functions) {
    if (m.Retires(f)) return true;
  }
  return false;
}

void RevisionTransform() {
  const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  const RevisionMap m = RevisionMap::Parse(ReadData("revision.txt"));
  Expect(m.RetiredLabels().size() == 5, "revision map does not retire 5 labels");
  const Hierarchy revised = h.ApplyRevision(m);
  Expect(revised.size() == 70, "expected 70 labels, got " + std::to_string(revised.size()));
  const Hierarchy reloaded = Hierarchy::Load(revised.Serialize());
  Expect(reloaded.size() == 70, "revised hierarchy does not revalidate to 70 labels");
  for (const auto& label : m.RetiredLabels()) {
    Expect(!reloaded.Contains(label), "revised hierarchy still has " + label);
  }
  const auto loaded = LoadCorpus(ReadData("corpus.docs.tsv"), ReadData("corpus.ann.tsv"), h, nullptr);
  const auto once = ApplyRevisionToCorpus(loaded.corpus.records, m);
  size_t retired = 0;
  for (const auto& r : once) {
    if (HasRetired(r.construal, m)) ++retired;
    ValidateConstrual(revised, r.construal);
  }
  Expect(retired == 0, std::to_string(retired) + " records keep a retired label");
  const auto twice = ApplyRevisionToCorpus(once, m);
  Expect(twice == once, "corpus revision is not idempotent");
  Expect(SerializeAnnotations(twice) == SerializeAnnotations(once), "revised bytes differ");
  g_detail = "75 -> 70 labels, 0 retired labels in " + std::to_string(once.size()) + " records";
}

void ExamplesCorpus() {
  const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  const Lexicon lex = Lexicon::Load(ReadData("lexicon.txt"), h);
  const auto loaded = LoadCorpus(ReadData("corpus.docs.tsv"), ReadData("corpus.ann.tsv"), h, &lex);
  for (const auto& r : loaded.corpus.records) {
    ValidateRecord(loaded.corpus, h, r);
    ValidateConstrual(h, r.construal);
  }
  // Every label resolves in the independent graph too.
  const auto g = oracle::ParseHierarchyText(ReadData("hierarchy.txt"));
  for (const auto& r : loaded.corpus.records) {
    const auto raw = oracle::SplitNotation(FormatConstrual(r.construal));
    Expect(g.parents.count(raw.role) == 1, "role does not resolve: " + raw.role);
    for (const auto& f : raw.functions) Expect(g.parents.count(f) == 1, "function does not resolve: " + f);
  }
  // The congruent set is exactly the four listed pairs.
  std::set<std::pair<std::string, std::string>> congruent;
  for (const auto& r : loaded.corpus.GoldRecords()) {
    if (IsCongruent(r.construal)) congruent.insert({r.form, FormatConstrual(r.construal)});
  }
  const std::set<std::pair<std::string, std::string>> expected = {
      {"at", "Time~>Time"},
      {"about", "Topic~>Topic"},
      {"into", "Destination~>Destination"},
      {"-eyse", "Location~>Location"}};
  Expect(congruent == expected, "congruent examples differ from the tally");
  const CorpusStats s = ComputeStats(loaded.corpus.records, h);
  Expect(s.tokens_annotated == kExampleTokens,
         "expected 32 tokens, got " + std::to_string(s.tokens_annotated));
  const double oracle_rate =
      static_cast<double>(kExampleMismatches) / static_cast<double>(kExampleTokens);
  Expect(s.mismatch_rate == oracle_rate,
         "mismatch_rate " + Num(s.mismatch_rate) + " != " + Num(oracle_rate));
  g_detail = "0 errors, mismatch_rate " + Num(s.mismatch_rate) + " = 28/32";
}

void KappaOracle() {
  std::mt19937 rng(20261014);
  double worst = 0.0;
  for (int trial = 0; trial < kKappaTrials; ++trial) {
    const int labels = std::uniform_int_distribution<int>(1, 10)(rng);
    const int items = std::uniform_int_distribution<int>(1, 50)(rng);
    std::uniform_int_distribution<int> pick(0, labels - 1);
    std::bernoulli_distribution agree(std::uniform_real_distribution<double>(0, 1)(rng));
    std::vector<std::string> a, b;
    for (int i = 0; i < items; ++i) {
      a.push_back("L" + std::to_string(pick(rng)));
      b.push_back(agree(rng) ? a.back() : "L" + std::to_string(pick(rng)));
    }
    const double got = CohenKappa(a, b).value;
    const double want = oracle::KappaFromTable(a, b);
    const double diff = std::fabs(got - want);
    worst = std::max(worst, diff);
    Expect(diff <= kKappaTolerance, "trial " + std::to_string(trial) + ": " + Num(got) +
                                        " vs oracle " + Num(want));
  }
  const std::vector<std::vector<std::string>> perfect = {
      {"A", "B"}, {"A", "B", "C", "A"}, {"Time", "Topic", "Location", "Time", ""}};
  for (const auto& p : perfect) {
    const double k = CohenKappa(p, p).value;
    Expect(k == 1.0, "perfect agreement gave " + Num(k));
  }
  const std::vector<std::string> a = {"A", "B", "A", "B"};
  const std::vector<std::string> b = {"B", "A", "B", "A"};
  const double flip = CohenKappa(a, b).value;
  Expect(flip == -1.0, "total disagreement gave " + Num(flip));
  g_detail = std::to_string(kKappaTrials) + " trials, max |diff| " + Num(worst);
}

void SoftAgreement() {
  const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  const auto g = oracle::ParseHierarchyText(ReadData("hierarchy.txt"));
  std::vector<std::string> labels;
  for (const auto& n : h.nodes()) labels.push_back(n.name);
  Expect(labels.size() == 75, "hierarchy does not have 75 labels");
  for (const auto& a : labels) {
    const double self = SoftSimilarity(h, a, a);
    Expect(self == 1.0, "soft(" + a + ", " + a + ") = " + Num(self));
    for (const auto& b : labels) {
      Expect(SoftSimilarity(h, a, b) == SoftSimilarity(h, b, a), "asymmetric at " + a + "/" + b);
    }
  }
  const double got = SoftSimilarity(h, "Location", "Destination");
  const double want = oracle::WuPalmer(g, "Location", "Destination");
  Expect(std::fabs(got - want) <= kSoftTolerance,
         "soft(Location, Destination) " + Num(got) + " vs oracle " + Num(want));
  g_detail = "soft(Location, Destination) = " + Num(got);
}

std::vector<std::string> NotationSamples() {
  std::vector<std::string> out = {"Stimulus~>Topic", "Topic~>Topic", "Location",
                                  "Recipient~>Beneficiary~>Goal", "Locus~>Location!m",
                                  "Time!m", "Manner~>Path"};
  for (const char* stem : {"pilot", "tagger"}) {
    for (const auto& r : ParseAnnotations(ReadFixture(std::string(stem) + ".ann.tsv"))) {
      out.push_back(FormatConstrual(r.construal));
    }
  }
  for (const auto& r : ParseAnnotations(ReadData("corpus.ann.tsv"))) {
    out.push_back(FormatConstrual(r.construal));
  }
  return out;
}

void RoundTrips() {
  const std::string htext = ReadData("hierarchy.txt");
  const Hierarchy h = Hierarchy::Load(htext);
  Expect(h.Serialize() == htext, "hierarchy bytes change on serialize");
  Expect(Hierarchy::Load(h.Serialize()).Serialize() == htext, "hierarchy reload differs");

  const std::string ltext = ReadData("lexicon.txt");
  const Lexicon lex = Lexicon::Load(ltext, h);
  Expect(lex.Serialize() == ltext, "lexicon bytes change on serialize");
  Expect(Lexicon::Load(lex.Serialize(), h) == lex, "lexicon reload differs");

  for (const auto& [docs, ann] :
       std::vector<std::pair<std::string, std::string>>{
           {ReadData("corpus.docs.tsv"), ReadData("corpus.ann.tsv")},
           {ReadFixture("pilot.docs.tsv"), ReadFixture("pilot.ann.tsv")},
           {ReadFixture("tagger.docs.tsv"), ReadFixture("tagger.ann.tsv")}}) {
    const auto c = LoadCorpus(docs, ann, h, nullptr).corpus;
    Expect(SerializeAnnotations(c.records) == ann, "annotation bytes change on serialize");
    Expect(SerializeDocuments(c.documents) == docs, "document bytes change on serialize");
    const auto again =
        LoadCorpus(SerializeDocuments(c.documents), SerializeAnnotations(c.records), h, nullptr);
    Expect(again.corpus.records == c.records, "corpus reload differs");
  }

  size_t n = 0;
  bool chain = false, metaphor = false;
  for (const auto& s : NotationSamples()) {
    const Construal c = ParseConstrual(s);
    Expect(FormatConstrual(c) == s, "notation round-trip failed for " + s);
    Expect(ParseConstrual(FormatConstrual(c)) == c, "notation reparse failed for " + s);
    const auto raw = oracle::SplitNotation(s);
    Expect(raw.role == c.role && raw.functions == c.functions && raw.metaphoric == c.metaphoric,
           "notation structure differs for " + s);
    chain |= c.functions.size() >= 2;
    metaphor |= c.metaphoric;
    ++n;
  }
  Expect(chain && metaphor, "samples lack a chain or a metaphor flag");
  g_detail = "3 corpora, hierarchy, lexicon, " + std::to_string(n) + " notations";
}

void BaselineTagger() {
  const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  auto lex = std::make_shared<const Lexicon>(Lexicon::Load(ReadData("lexicon.txt"), h));
  const auto bundled =
      LoadCorpus(ReadData("corpus.docs.tsv"), ReadData("corpus.ann.tsv"), h, nullptr).corpus;
  const TagModel m1 = Train(bundled, lex);
  const TagModel m2 = Train(bundled, lex);
  const Accuracy a1 = Evaluate(m1, bundled);
  const Accuracy a2 = Evaluate(m2, bundled);
  Expect(m1.counts == m2.counts, "training is not deterministic");
  Expect(a1.n == a2.n && a1.exact == a2.exact && a1.role == a2.role && a1.function == a2.function,
         "evaluation is not deterministic");
  for (const auto& r : bundled.GoldRecords()) {
    const std::string lang = bundled.LanguageOf(r.doc_id);
    Expect(Tag(m1, lang, r.form) == Tag(m2, lang, r.form), "tag differs for " + r.form);
  }

  const auto fixture =
      LoadCorpus(ReadFixture("tagger.docs.tsv"), ReadFixture("tagger.ann.tsv"), h, nullptr).corpus;
  const Accuracy fa = Evaluate(Train(fixture, lex), fixture);
  Expect(fa.n == 4 && fa.exact == 0.75, "3:1 fixture exact accuracy " + Num(fa.exact));

  // A lexicon form absent from the training data.
  size_t fallbacks = 0;
  for (const auto& e : lex->entries()) {
    if (e.prototypical_functions.empty() || m1.counts.count({e.language, e.form})) continue;
    const Construal c = Tag(m1, e.language, e.form);
    const Construal want{e.prototypical_functions.front(), {e.prototypical_functions.front()}, false};
    Expect(c == want, "fallback for " + e.form + " gave " + FormatConstrual(c));
    ++fallbacks;
  }
  const TagModel cold = Train(Corpus{}, lex);
  const auto& first = lex->entries().front();
  if (!first.prototypical_functions.empty()) {
    const Construal c = Tag(cold, first.language, first.form);
    Expect(IsCongruent(c) && c.role == first.prototypical_functions.front(),
           "cold fallback gave " + FormatConstrual(c));
    ++fallbacks;
  }
  Expect(fallbacks > 0, "no unseen form to test the fallback");
  g_detail = "3:1 exact 0.75, " + std::to_string(fallbacks) + " fallback forms";
}

// Random sequence of tasks, submissions and adjudications against a logged
// store; checks the export against everything accepted and replays the log.
void WorkflowProperty() {
  const Hierarchy& h = BundledHierarchy();
  const Lexicon& lex = BundledLexicon();
  const auto pilot = FixtureCorpus("pilot").corpus;
  std::vector<TargetKey> targets;
  for (const auto& r : pilot.records) targets.push_back(r.key());
  const std::vector<std::string> labels = {"Topic~>Topic", "Stimulus~>Topic", "Location",
                                           "Time",         "Goal",            "Agent~>Agent",
                                           "Creator~>Agent", "Manner~>Path!m"};
  const std::vector<std::string> people = {"u1", "u2", "u3", "u4"};
  std::mt19937 rng(7);
  size_t records_seen = 0;
  for (int trial = 0; trial < kWorkflowTrials; ++trial) {
    TempDir dir;
    AnnotationStore::Options opt;
    opt.log_path = dir.File("store.log");
    opt.annotators = people;
    Corpus seed;
    seed.documents = pilot.documents;
    std::vector<AnnotationRecord> accepted;
    std::string exported;
    {
      AnnotationStore store(h, lex, seed, targets, opt);
      const int steps = std::uniform_int_distribution<int>(5, 60)(rng);
      for (int step = 0; step < steps; ++step) {
        const auto& label = labels[rng() % labels.size()];
        if (rng() % 5 == 0) {
          const auto& key = targets[rng() % targets.size()];
          try {
            accepted.push_back(store.SubmitAdjudication(key, label, "exp", rng() % 2 == 0));
          } catch (const Error&) {
          }
          continue;
        }
        const auto& who = people[rng() % people.size()];
        const auto task = store.NextTask(who, Stage::kJoint);
        if (!task) continue;
        try {
          accepted.push_back(store.SubmitAnnotation(who, task->task_id, label));
        } catch (const Error&) {
        }
      }
      exported = store.Export();
    }
    const auto out = ParseAnnotations(exported);
    // Every accepted annotator record appears unmodified.
    for (const auto& r : accepted) {
      if (r.is_gold()) continue;
      Expect(std::count(out.begin(), out.end(), r) == 1, "missing or altered record " +
                                                             FormatAnnotationLine(r));
    }
    size_t annotator_records = 0;
    std::map<TargetKey, int> gold;
    for (const auto& r : out) {
      if (r.is_gold()) {
        ++gold[r.key()];
      } else {
        ++annotator_records;
      }
    }
    Expect(annotator_records == static_cast<size_t>(std::count_if(
                                    accepted.begin(), accepted.end(),
                                    [](const AnnotationRecord& r) { return !r.is_gold(); })),
           "export has unexpected annotator records");
    for (const auto& [key, n] : gold) {
      Expect(n == 1, "more than one gold record for " + key.ToString());
    }
    // The last accepted gold record per target is the one exported.
    std::map<TargetKey, AnnotationRecord> last_gold;
    for (const auto& r : accepted) {
      if (r.is_gold()) last_gold.insert_or_assign(r.key(), r);
    }
    for (const auto& [key, r] : last_gold) {
      Expect(std::count(out.begin(), out.end(), r) == 1, "gold for " + key.ToString() + " lost");
    }
    AnnotationStore replayed(h, lex, seed, targets, opt);
    Expect(replayed.Export() == exported, "replayed export differs in trial " + std::to_string(trial));
    records_seen += out.size();
  }
  g_detail = std::to_string(kWorkflowTrials) + " trials, " + std::to_string(records_seen) +
             " exported records";
}

}  // namespace

int main() {
  int failed = 0;
  failed += !Criterion("hierarchy-fidelity", kTimeLimitSeconds, HierarchyFidelity);
  failed += !Criterion("revision-transform", kTimeLimitSeconds, RevisionTransform);
  failed += !Criterion("examples-corpus", 0, ExamplesCorpus);
  failed += !Criterion("kappa-oracle", 0, KappaOracle);
  failed += !Criterion("soft-agreement", 0, SoftAgreement);
  failed += !Criterion("round-trips", 0, RoundTrips);
  failed += !Criterion("baseline-tagger", 0, BaselineTagger);
  failed += !Criterion("workflow-property", 0, WorkflowProperty);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
