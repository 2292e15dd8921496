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

#include "construal/tagger.hpp"

#include <charconv>

#include "construal/error.hpp"
#include "construal/text.hpp"

namespace construal {

TagModel Train(const Corpus& corpus, std::shared_ptr<const Lexicon> lexicon) {
  TagModel model;
  model.fallback = std::move(lexicon);
  for (const auto& r : corpus.records) {
    if (!r.is_gold()) continue;
    ++model.counts[{corpus.LanguageOf(r.doc_id), r.form}][r.construal];
  }
  return model;
}

Construal Tag(const TagModel& model, std::string_view language, std::string_view form) {
  const auto it = model.counts.find({std::string(language), std::string(form)});
  if (it != model.counts.end() && !it->second.empty()) {
    const Construal* best = nullptr;
    size_t best_count = 0;
    std::string best_text;
    for (const auto& [c, count] : it->second) {
      std::string text = FormatConstrual(c);
      bool better = best == nullptr || count > best_count;
      if (!better && count == best_count) {
        const bool cong = IsCongruent(c);
        const bool best_cong = IsCongruent(*best);
        better = cong != best_cong ? cong : text < best_text;
      }
      if (better) {
        best = &c;
        best_count = count;
        best_text = std::move(text);
      }
    }
    return *best;
  }
  if (model.fallback) {
    if (const AdpositionEntry* e = model.fallback->Find(language, form)) {
      const auto& f = e->prototypical_functions.front();
      return Construal{f, {f}, false};
    }
  }
  throw Error(ErrorCode::kNotFound, "form (" + std::string(language) + ", " +
                                        std::string(form) +
                                        ") is unknown to both the model and the lexicon");
}

Accuracy Evaluate(const TagModel& model, const Corpus& gold) {
  Accuracy acc;
  size_t exact = 0, role = 0, fn = 0;
  for (const auto& r : gold.records) {
    if (!r.is_gold()) continue;
    ++acc.n;
    const Construal predicted = Tag(model, gold.LanguageOf(r.doc_id), r.form);
    if (predicted == r.construal) ++exact;
    if (predicted.role == r.construal.role) ++role;
    if (predicted.first_function() == r.construal.first_function()) ++fn;
  }
  if (acc.n == 0) throw Error(ErrorCode::kEmptyGold, "no gold records to evaluate against");
  const double n = static_cast<double>(acc.n);
  acc.exact = static_cast<double>(exact) / n;
  acc.role = static_cast<double>(role) / n;
  acc.function = static_cast<double>(fn) / n;
  return acc;
}

std::vector<TagTarget> ParseTargets(std::string_view text, const Corpus& documents) {
  std::vector<TagTarget> out;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto fields = Split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5) {
      throw Error(ErrorCode::kMalformedRecord,
                  "expected doc_id, sent_id, start, end[, form]", line_no);
    }
    TagTarget t{std::string(fields[0]), std::string(fields[1]), {}, {}};
    for (int k = 0; k < 2; ++k) {
      const auto f = fields[2 + k];
      int v = -1;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size() || v < 0) {
        throw Error(ErrorCode::kMalformedRecord, "invalid span index", line_no);
      }
      (k == 0 ? t.span.start : t.span.end) = v;
    }
    const Sentence* s = documents.FindSentence(t.doc_id, t.sent_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kUnknownDocument,
                  "unknown sentence " + t.doc_id + "/" + t.sent_id, line_no);
    }
    if (t.span.start >= t.span.end || t.span.end > static_cast<int>(s->tokens.size())) {
      throw Error(ErrorCode::kSpanOutOfRange, "target span out of range", line_no);
    }
    if (fields.size() == 5 && !fields[4].empty()) {
      t.form = std::string(fields[4]);
    } else {
      std::vector<std::string> toks(s->tokens.begin() + t.span.start,
                                    s->tokens.begin() + t.span.end);
      t.form = Join(toks, " ");
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<AnnotationRecord> TagTargets(const TagModel& model, const Corpus& documents,
                                         const std::vector<TagTarget>& targets) {
  std::vector<AnnotationRecord> out;
  for (const auto& t : targets) {
    AnnotationRecord r;
    r.doc_id = t.doc_id;
    r.sent_id = t.sent_id;
    r.target = t.span;
    r.form = t.form;
    r.annotator = std::string(kBaselineAnnotator);
    r.construal = Tag(model, documents.LanguageOf(t.doc_id), t.form);
    out.push_back(std::move(r));
  }
  SortCanonical(out);
  return out;
}

}  // namespace construal
