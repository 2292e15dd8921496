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

#include "construal/agreement.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "construal/error.hpp"

namespace construal {

KappaResult CohenKappa(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kNoCommonTargets,
                "kappa needs two equal-length, non-empty rating sequences");
  }
  std::map<std::string_view, std::pair<size_t, size_t>> marginals;
  size_t agree = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ++marginals[a[i]].first;
    ++marginals[b[i]].second;
    if (a[i] == b[i]) ++agree;
  }
  const double n = static_cast<double>(a.size());
  KappaResult k;
  k.observed = static_cast<double>(agree) / n;
  for (const auto& [category, counts] : marginals) {
    k.expected += (static_cast<double>(counts.first) / n) *
                  (static_cast<double>(counts.second) / n);
  }
  if (marginals.size() == 1) {
    k.degenerate = true;
    k.value = agree == a.size() ? 1.0 : 0.0;
    return k;
  }
  k.value = (k.observed - k.expected) / (1.0 - k.expected);
  return k;
}

double SoftSimilarity(const Hierarchy& h, std::string_view a, std::string_view b) {
  if (a == b) {
    h.Get(a);
    return 1.0;
  }
  const auto lcs = h.LowestCommonSubsumers(a, b);
  if (lcs.empty()) return 0.0;
  int best = 0;
  for (const auto& s : lcs) best = std::max(best, h.Depth(s));
  const int denom = h.Depth(a) + h.Depth(b);
  if (denom == 0) return 0.0;
  return 2.0 * best / denom;
}

namespace {

std::string FunctionSlot(const Construal& c) { return std::string(c.first_function()); }

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::pair<std::string, std::string>> Metrics(const AgreementReport& r) {
  auto kappa = [](const KappaResult& k) {
    return Fixed(k.value) + (k.degenerate ? " (degenerate)" : "");
  };
  return {
      {"annotator_a", r.annotator_a},
      {"annotator_b", r.annotator_b},
      {"n_items", std::to_string(r.n_items)},
      {"exact_construal", Fixed(r.exact_construal)},
      {"role_agreement", Fixed(r.role_agreement)},
      {"function_agreement", Fixed(r.function_agreement)},
      {"kappa_role", kappa(r.kappa_role)},
      {"kappa_function", kappa(r.kappa_function)},
      {"kappa_construal", kappa(r.kappa_construal)},
      {"soft_role", Fixed(r.soft_role)},
      {"disagreements", std::to_string(r.disagreements.size())},
  };
}

}  // namespace

AgreementReport PairwiseAgreement(const std::vector<AnnotationRecord>& records,
                                  std::string_view annotator_a,
                                  std::string_view annotator_b, const Hierarchy& h) {
  std::map<TargetKey, const AnnotationRecord*> by_a;
  std::map<TargetKey, const AnnotationRecord*> by_b;
  for (const auto& r : records) {
    if (r.annotator == annotator_a) by_a[r.key()] = &r;
    if (r.annotator == annotator_b) by_b[r.key()] = &r;
  }
  AgreementReport rep;
  rep.annotator_a = std::string(annotator_a);
  rep.annotator_b = std::string(annotator_b);
  std::vector<std::string> roles_a, roles_b, fn_a, fn_b, full_a, full_b;
  size_t exact = 0, role = 0, fn = 0;
  double soft = 0.0;
  for (const auto& [key, ra] : by_a) {
    const auto it = by_b.find(key);
    if (it == by_b.end()) continue;
    const Construal& ca = ra->construal;
    const Construal& cb = it->second->construal;
    roles_a.push_back(ca.role);
    roles_b.push_back(cb.role);
    fn_a.push_back(FunctionSlot(ca));
    fn_b.push_back(FunctionSlot(cb));
    full_a.push_back(FormatConstrual(ca));
    full_b.push_back(FormatConstrual(cb));
    if (ca == cb) {
      ++exact;
    } else {
      rep.disagreements.push_back({key, ra->form, ca, cb});
    }
    if (ca.role == cb.role) ++role;
    if (fn_a.back() == fn_b.back()) ++fn;
    soft += SoftSimilarity(h, ca.role, cb.role);
  }
  rep.n_items = roles_a.size();
  if (rep.n_items == 0) {
    throw Error(ErrorCode::kNoCommonTargets, "annotators " + rep.annotator_a + " and " +
                                                 rep.annotator_b + " share no targets");
  }
  const double n = static_cast<double>(rep.n_items);
  rep.exact_construal = static_cast<double>(exact) / n;
  rep.role_agreement = static_cast<double>(role) / n;
  rep.function_agreement = static_cast<double>(fn) / n;
  rep.kappa_role = CohenKappa(roles_a, roles_b);
  rep.kappa_function = CohenKappa(fn_a, fn_b);
  rep.kappa_construal = CohenKappa(full_a, full_b);
  rep.soft_role = soft / n;
  return rep;
}

std::string FormatReportText(const AgreementReport& report) {
  const auto metrics = Metrics(report);
  size_t width = 0;
  for (const auto& [name, value] : metrics) width = std::max(width, name.size());
  std::string out;
  for (const auto& [name, value] : metrics) {
    out += name + std::string(width - name.size() + 2, ' ') + value + "\n";
  }
  for (const auto& d : report.disagreements) {
    out += "  " + d.target.ToString() + "  " + d.form + "  " + FormatConstrual(d.a) +
           " vs " + FormatConstrual(d.b) + "\n";
  }
  return out;
}

std::string FormatReportTsv(const AgreementReport& report) {
  std::string out;
  for (const auto& [name, value] : Metrics(report)) out += name + "\t" + value + "\n";
  return out;
}

std::vector<QueueItem> DisagreementQueue(const std::vector<AnnotationRecord>& records) {
  std::map<TargetKey, std::vector<const AnnotationRecord*>> by_target;
  for (const auto& r : records) by_target[r.key()].push_back(&r);
  std::vector<QueueItem> out;
  for (auto& [key, recs] : by_target) {
    const bool has_gold =
        std::any_of(recs.begin(), recs.end(), [](const auto* r) { return r->is_gold(); });
    if (has_gold) continue;
    std::sort(recs.begin(), recs.end(), [](const auto* a, const auto* b) {
      return a->annotator < b->annotator;
    });
    std::set<Construal> distinct;
    QueueItem item{key, recs.front()->form, {}};
    for (const auto* r : recs) {
      distinct.insert(r->construal);
      item.annotations.emplace_back(r->annotator, r->construal);
    }
    if (distinct.size() >= 2) out.push_back(std::move(item));
  }
  return out;
}

std::vector<AnnotationRecord> Adjudicate(const std::vector<AnnotationRecord>& records,
                                         const TargetKey& target, const Construal& chosen,
                                         std::string_view expert_id, const Hierarchy& h,
                                         bool force) {
  if (expert_id.empty() || expert_id.find_first_of(" \t\r\n") != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedRecord, "invalid expert id '" + std::string(expert_id) + "'");
  }
  ValidateConstrual(h, chosen);
  const AnnotationRecord* any = nullptr;
  std::optional<size_t> gold_index;
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].key() != target) continue;
    if (any == nullptr) any = &records[i];
    if (records[i].is_gold()) gold_index = i;
  }
  if (any == nullptr) {
    throw Error(ErrorCode::kNotFound, "no annotations for target " + target.ToString());
  }
  if (gold_index && !force) {
    throw Error(ErrorCode::kGoldExists,
                "target " + target.ToString() + " already has a gold record");
  }
  AnnotationRecord gold;
  gold.doc_id = target.doc_id;
  gold.sent_id = target.sent_id;
  gold.target = target.span;
  gold.form = any->form;
  gold.annotator = std::string(kGoldAnnotator);
  gold.construal = chosen;
  gold.note = "adjudicated-by=" + std::string(expert_id);
  std::vector<AnnotationRecord> out = records;
  if (gold_index) {
    out[*gold_index] = std::move(gold);
  } else {
    out.push_back(std::move(gold));
  }
  return out;
}

}  // namespace construal
