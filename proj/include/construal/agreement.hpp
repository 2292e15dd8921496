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

#ifndef CONSTRUAL_AGREEMENT_HPP_
#define CONSTRUAL_AGREEMENT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "construal/corpus.hpp"
#include "construal/taxonomy.hpp"

namespace construal {

struct KappaResult {
  double value = 0.0;
  double observed = 0.0;  // p_o
  double expected = 0.0;  // p_e from marginal products
  // Set when both raters used one and the same category (p_e = 1). The value
  // is then 1.0 if they agree everywhere, else 0.0.
  bool degenerate = false;
};

// Cohen's kappa over paired categorical judgements. Each string is an atomic
// category. Sequences must have equal, non-zero length.
KappaResult CohenKappa(std::span<const std::string> a, std::span<const std::string> b);

// Wu-Palmer-style similarity 2 * depth(lcs) / (depth(a) + depth(b)), taking
// the deepest lowest common subsumer. Equal labels score 1; labels with no
// common root score 0.
double SoftSimilarity(const Hierarchy& h, std::string_view a, std::string_view b);

struct Disagreement {
  TargetKey target;
  std::string form;
  Construal a;
  Construal b;
};

struct AgreementReport {
  std::string annotator_a;
  std::string annotator_b;
  size_t n_items = 0;
  double exact_construal = 0.0;
  double role_agreement = 0.0;
  double function_agreement = 0.0;
  KappaResult kappa_role;
  KappaResult kappa_function;
  KappaResult kappa_construal;
  double soft_role = 0.0;
  std::vector<Disagreement> disagreements;
};

// Compares the two annotators over targets both annotated. Exact agreement
// uses the full construal (role, chain, metaphor flag); the function slot
// compares first functions, where a null function equals only another null.
// Throws kNoCommonTargets.
AgreementReport PairwiseAgreement(const std::vector<AnnotationRecord>& records,
                                  std::string_view annotator_a,
                                  std::string_view annotator_b, const Hierarchy& h);

// Aligned "metric  value" lines followed by the disagreement list.
std::string FormatReportText(const AgreementReport& report);
// One "metric<TAB>value" line per metric.
std::string FormatReportTsv(const AgreementReport& report);

struct QueueItem {
  TargetKey target;
  std::string form;
  // (annotator, construal) for every non-gold record of the target.
  std::vector<std::pair<std::string, Construal>> annotations;
};

// Targets with at least two distinct non-gold construals and no gold record,
// in (doc_id, sent_id, span) order.
std::vector<QueueItem> DisagreementQueue(const std::vector<AnnotationRecord>& records);

// Returns the records with a gold record for `target` added; annotator
// records are never touched. An existing gold record is replaced only when
// `force` is set, otherwise kGoldExists is thrown.
std::vector<AnnotationRecord> Adjudicate(const std::vector<AnnotationRecord>& records,
                                         const TargetKey& target, const Construal& chosen,
                                         std::string_view expert_id, const Hierarchy& h,
                                         bool force = false);

}  // namespace construal

#endif  // CONSTRUAL_AGREEMENT_HPP_
