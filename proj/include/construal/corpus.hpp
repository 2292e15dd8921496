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

#ifndef CONSTRUAL_CORPUS_HPP_
#define CONSTRUAL_CORPUS_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "construal/construal.hpp"
#include "construal/lexicon.hpp"
#include "construal/taxonomy.hpp"

namespace construal {

inline constexpr std::string_view kGoldAnnotator = "gold";

// Token index span; `end` is exclusive.
struct Span {
  int start = 0;
  int end = 0;

  auto operator<=>(const Span&) const = default;
};

struct Sentence {
  std::string sent_id;
  std::string text;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string doc_id;
  std::string language;
  std::vector<Sentence> sentences;

  const Sentence* FindSentence(std::string_view sent_id) const;
  bool operator==(const Document&) const = default;
};

struct TargetKey {
  std::string doc_id;
  std::string sent_id;
  Span span;

  auto operator<=>(const TargetKey&) const = default;
  std::string ToString() const;  // doc:sent:start:end
  static TargetKey Parse(std::string_view text);
};

struct AnnotationRecord {
  std::string doc_id;
  std::string sent_id;
  Span target;
  std::string form;
  std::string annotator;
  Construal construal;
  std::string note;

  TargetKey key() const { return {doc_id, sent_id, target}; }
  bool is_gold() const { return annotator == kGoldAnnotator; }
  bool operator==(const AnnotationRecord&) const = default;
};

// Order by (doc_id, sent_id, span, annotator).
bool CanonicalLess(const AnnotationRecord& a, const AnnotationRecord& b);
void SortCanonical(std::vector<AnnotationRecord>& records);

struct Corpus {
  std::vector<Document> documents;  // sorted by doc_id
  std::vector<AnnotationRecord> records;

  const Document* FindDocument(std::string_view doc_id) const;
  const Sentence* FindSentence(std::string_view doc_id, std::string_view sent_id) const;
  // Empty string for unknown documents.
  std::string LanguageOf(std::string_view doc_id) const;
  std::vector<AnnotationRecord> GoldRecords() const;
};

// Documents TSV: doc_id, sent_id, language, raw_text, space-joined tokens.
std::vector<Document> LoadDocuments(std::string_view text);
std::string SerializeDocuments(const std::vector<Document>& documents);

// Annotation TSV: doc_id, sent_id, start, end, form, annotator, construal,
// note. Only syntax is checked here.
std::vector<AnnotationRecord> ParseAnnotations(std::string_view text);
// Canonical order with a header comment line; byte-stable for equal input.
std::string SerializeAnnotations(std::vector<AnnotationRecord> records);
std::string FormatAnnotationLine(const AnnotationRecord& r);
AnnotationRecord ParseAnnotationLine(std::string_view line, int line_no = 0);

// Structural checks for one record against the documents: span range,
// construal labels, annotator id. Throws.
void ValidateRecord(const Corpus& corpus, const Hierarchy& h, const AnnotationRecord& r);

// Warnings for a record the lexicon does not back (unknown form, or a
// construal that is neither attested nor congruent with a prototypical
// function). Empty when the record is backed.
std::vector<std::string> LexiconWarnings(const Corpus& corpus, const Lexicon& lex,
                                         const AnnotationRecord& r);

struct LoadResult {
  Corpus corpus;
  std::vector<std::string> warnings;
};

// Structural problems are hard errors; lexicon gaps become warnings. `lex`
// may be null to skip the lexicon checks.
LoadResult LoadCorpus(std::string_view documents_text, std::string_view annotations_text,
                      const Hierarchy& h, const Lexicon* lex);

// Merges corpora loaded from several files. Identical documents may repeat;
// conflicting ones and duplicate (span, annotator) records are errors.
Corpus MergeCorpora(const std::vector<Corpus>& parts);

struct CorpusStats {
  size_t tokens_annotated = 0;  // gold records
  std::map<std::string, size_t> role_histogram;
  // Every chain element counts once, so this sums to the total number of
  // function slots over gold records.
  std::map<std::string, size_t> function_histogram;
  size_t null_functions = 0;
  size_t mismatches = 0;
  double mismatch_rate = 0.0;
  double null_function_rate = 0.0;
  std::set<std::string> role_only_labels;
  std::set<std::string> function_only_labels;
  // Among Participant descendants used in the corpus, those seen only as roles.
  size_t participant_labels_used = 0;
  size_t participant_labels_role_only = 0;
  // Share of (form, role) groups whose gold function chain never varies.
  size_t form_role_groups = 0;
  size_t deterministic_groups = 0;
  double function_determinism = 0.0;

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats ComputeStats(const std::vector<AnnotationRecord>& records, const Hierarchy& h);

// Relabels every record with ReviseConstrual. Throws kLabelInUse listing all
// offending records when a retired label cannot be mapped.
std::vector<AnnotationRecord> ApplyRevisionToCorpus(
    const std::vector<AnnotationRecord>& records, const RevisionMap& m);

}  // namespace construal

#endif  // CONSTRUAL_CORPUS_HPP_
