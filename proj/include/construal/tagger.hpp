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

#ifndef CONSTRUAL_TAGGER_HPP_
#define CONSTRUAL_TAGGER_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "construal/corpus.hpp"
#include "construal/lexicon.hpp"

namespace construal {

inline constexpr std::string_view kBaselineAnnotator = "mfs-baseline";

// Most-frequent-construal baseline keyed on (language, form) alone. Forms
// never seen in training fall back to the lexicon's most prototypical
// function as a congruent construal.
struct TagModel {
  std::map<std::pair<std::string, std::string>, std::map<Construal, size_t>> counts;
  std::shared_ptr<const Lexicon> fallback;
};

// Tallies gold records only. An empty corpus yields a lexicon-only model.
TagModel Train(const Corpus& corpus, std::shared_ptr<const Lexicon> lexicon);

// Ties are broken congruent-first, then by notation string. Throws kNotFound
// when neither the counts nor the lexicon know the form.
Construal Tag(const TagModel& model, std::string_view language, std::string_view form);

struct Accuracy {
  size_t n = 0;
  double exact = 0.0;
  double role = 0.0;
  double function = 0.0;  // first function; null equals only null
};

// Scores the model on the gold records of `gold`. Throws kEmptyGold.
Accuracy Evaluate(const TagModel& model, const Corpus& gold);

struct TagTarget {
  std::string doc_id;
  std::string sent_id;
  Span span;
  std::string form;
};

// Target list TSV: doc_id, sent_id, start, end[, form]. A missing form is
// read from the document tokens.
std::vector<TagTarget> ParseTargets(std::string_view text, const Corpus& documents);

// One record per target, annotator "mfs-baseline".
std::vector<AnnotationRecord> TagTargets(const TagModel& model, const Corpus& documents,
                                         const std::vector<TagTarget>& targets);

}  // namespace construal

#endif  // CONSTRUAL_TAGGER_HPP_
