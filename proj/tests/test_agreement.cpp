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

#include <random>

#include "construal/agreement.hpp"
#include "construal/error.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace construal;
using namespace construal::testing;

namespace {

const oracle::Graph& Graph() {
  static const oracle::Graph g = oracle::ParseHierarchyText(ReadData("hierarchy.txt"));
  return g;
}

std::vector<std::string> Seq(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("kappa fixtures") {
  CHECK(CohenKappa(Seq({"a", "b", "a", "c"}), Seq({"a", "b", "a", "c"})).value == 1.0);
  const KappaResult flip = CohenKappa(Seq({"x", "y", "x", "y"}), Seq({"y", "x", "y", "x"}));
  CHECK(flip.value == -1.0);
  CHECK(flip.observed == 0.0);
  CHECK(flip.expected == 0.5);
  const KappaResult same = CohenKappa(Seq({"a", "a", "a"}), Seq({"a", "a", "a"}));
  CHECK(same.degenerate);
  CHECK(same.value == 1.0);
  CHECK_FALSE(CohenKappa(Seq({"a", "a"}), Seq({"a", "b"})).degenerate);
  CHECK_THROWS_AS(CohenKappa(Seq({"a"}), Seq({"a", "b"})), Error);
  CHECK_THROWS_AS(CohenKappa(Seq({}), Seq({})), Error);
}

TEST_CASE("kappa matches the contingency-table oracle on random corpora") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int labels = std::uniform_int_distribution<int>(1, 10)(rng);
    const int items = std::uniform_int_distribution<int>(1, 50)(rng);
    std::uniform_int_distribution<int> pick(0, labels - 1);
    std::bernoulli_distribution copy(0.5);
    std::vector<std::string> a, b;
    for (int i = 0; i < items; ++i) {
      a.push_back("L" + std::to_string(pick(rng)));
      b.push_back(copy(rng) ? a.back() : "L" + std::to_string(pick(rng)));
    }
    const double lib = CohenKappa(a, b).value;
    const double ref = oracle::KappaFromTable(a, b);
    REQUIRE(std::abs(lib - ref) <= 1e-12);
    CHECK(lib <= 1.0 + 1e-12);
    CHECK(lib >= -1.0 - 1e-12);
  }
}

TEST_CASE("soft similarity") {
  const Hierarchy& h = BundledHierarchy();
  for (const auto& n : h.nodes()) CHECK(SoftSimilarity(h, n.name, n.name) == 1.0);
  const double ld = SoftSimilarity(h, "Location", "Destination");
  CHECK(ld == doctest::Approx(oracle::WuPalmer(Graph(), "Location", "Destination")).epsilon(1e-12));
  CHECK(ld == SoftSimilarity(h, "Destination", "Location"));
  CHECK(SoftSimilarity(h, "Participant", "Circumstance") == 0.0);
  CHECK(SoftSimilarity(h, "Agent", "Time") == 0.0);
  CHECK_THROWS_AS(SoftSimilarity(h, "Void", "Void"), Error);
  std::vector<std::string> labels;
  for (const auto& n : h.nodes()) labels.push_back(n.name);
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      const double s = SoftSimilarity(h, a, b);
      REQUIRE(s == SoftSimilarity(h, b, a));
      REQUIRE(s == doctest::Approx(oracle::WuPalmer(Graph(), a, b)).epsilon(1e-12));
      REQUIRE(s >= 0.0);
      REQUIRE(s <= 1.0);
    }
  }
}

TEST_CASE("pairwise agreement on the pilot fixture") {
  const Corpus c = FixtureCorpus("pilot").corpus;
  const AgreementReport r = PairwiseAgreement(c.records, "a1", "a2", BundledHierarchy());
  CHECK(r.n_items == 6);
  CHECK(r.exact_construal == doctest::Approx(3.0 / 6.0));
  CHECK(r.role_agreement == doctest::Approx(3.0 / 6.0));
  CHECK(r.function_agreement == 1.0);
  CHECK(r.kappa_function.value == 1.0);
  const auto roles_a = Seq({"Stimulus", "Topic", "Location", "Time", "Stimulus", "Creator"});
  const auto roles_b = Seq({"Topic", "Topic", "Location", "Time", "Goal", "Agent"});
  CHECK(r.kappa_role.value ==
        doctest::Approx(oracle::KappaFromTable(roles_a, roles_b)).epsilon(1e-12));
  double soft = 0.0;
  for (size_t i = 0; i < roles_a.size(); ++i) soft += oracle::WuPalmer(Graph(), roles_a[i], roles_b[i]);
  CHECK(r.soft_role == doctest::Approx(soft / 6.0).epsilon(1e-12));
  REQUIRE(r.disagreements.size() == 3);
  CHECK(r.disagreements[0].a == ParseConstrual("Stimulus~>Topic"));
  CHECK(r.disagreements[0].b == ParseConstrual("Topic~>Topic"));

  const AgreementReport swapped = PairwiseAgreement(c.records, "a2", "a1", BundledHierarchy());
  CHECK(swapped.kappa_role.value == doctest::Approx(r.kappa_role.value).epsilon(1e-12));
  CHECK(swapped.soft_role == doctest::Approx(r.soft_role).epsilon(1e-12));
  CHECK_THROWS_AS(PairwiseAgreement(c.records, "a1", "nobody", BundledHierarchy()), Error);
}

TEST_CASE("agreement report formats") {
  const Corpus c = FixtureCorpus("pilot").corpus;
  const AgreementReport r = PairwiseAgreement(c.records, "a1", "a2", BundledHierarchy());
  const std::string tsv = FormatReportTsv(r);
  CHECK(tsv.find("n_items\t6\n") != std::string::npos);
  CHECK(tsv.find("exact_construal\t0.500000\n") != std::string::npos);
  CHECK(tsv.find("kappa_function\t1.000000\n") != std::string::npos);
  const std::string text = FormatReportText(r);
  CHECK(text.find("p01:s1:3:4") != std::string::npos);
  CHECK(text.find("Stimulus~>Topic vs Topic~>Topic") != std::string::npos);
}

TEST_CASE("disagreement queue") {
  const Corpus c = FixtureCorpus("pilot").corpus;
  const auto q = DisagreementQueue(c.records);
  REQUIRE(q.size() == 3);
  CHECK(q[0].target.ToString() == "p01:s1:3:4");
  CHECK(q[0].form == "about");
  CHECK(q[0].annotations.size() == 2);
  CHECK(q[1].target.sent_id == "s5");
  CHECK(q[2].target.sent_id == "s6");
  const auto adjudicated = Adjudicate(c.records, q[0].target, ParseConstrual("Stimulus~>Topic"),
                                      "expert1", BundledHierarchy());
  CHECK(DisagreementQueue(adjudicated).size() == 2);
}

TEST_CASE("adjudication adds gold without touching annotator records") {
  const Hierarchy& h = BundledHierarchy();
  const Corpus c = FixtureCorpus("pilot").corpus;
  const TargetKey key = TargetKey::Parse("p01:s1:3:4");
  const auto out = Adjudicate(c.records, key, ParseConstrual("Stimulus~>Topic"), "expert1", h);
  REQUIRE(out.size() == c.records.size() + 1);
  for (size_t i = 0; i < c.records.size(); ++i) CHECK(out[i] == c.records[i]);
  CHECK(out.back().is_gold());
  CHECK(out.back().form == "about");
  CHECK(out.back().note == "adjudicated-by=expert1");

  try {
    Adjudicate(out, key, ParseConstrual("Topic~>Topic"), "expert2", h);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kGoldExists);
  }
  const auto forced = Adjudicate(out, key, ParseConstrual("Topic~>Topic"), "expert2", h, true);
  CHECK(forced.size() == out.size());
  CHECK(forced.back().construal == ParseConstrual("Topic~>Topic"));

  CHECK_THROWS_AS(Adjudicate(c.records, TargetKey::Parse("p01:s9:0:1"),
                             ParseConstrual("Time"), "e", h),
                  Error);
  CHECK_THROWS_AS(Adjudicate(c.records, key, ParseConstrual("Nope"), "e", h), Error);
  CHECK_THROWS_AS(Adjudicate(c.records, key, ParseConstrual("Time"), "two words", h), Error);
}
