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

#include "construal/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "construal/error.hpp"
#include "construal/text.hpp"

namespace construal {

namespace {

constexpr std::string_view kDocumentsHeader =
    "# doc_id\tsent_id\tlanguage\traw_text\ttokens\n";
constexpr std::string_view kAnnotationsHeader =
    "# doc_id\tsent_id\tstart\tend\tform\tannotator\tconstrual\tnote\n";

int ParseIndex(std::string_view field, const char* what, int line_no) {
  int value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw Error(ErrorCode::kMalformedRecord,
                std::string("invalid ") + what + " '" + std::string(field) + "'", line_no);
  }
  return value;
}

bool ValidId(std::string_view id) {
  return !id.empty() && id.find_first_of(" \t\r\n") == std::string_view::npos;
}

std::string Describe(const AnnotationRecord& r) {
  return r.key().ToString() + " (" + r.annotator + ")";
}

}  // namespace

const Sentence* Document::FindSentence(std::string_view sent_id) const {
  for (const auto& s : sentences) {
    if (s.sent_id == sent_id) return &s;
  }
  return nullptr;
}

std::string TargetKey::ToString() const {
  return doc_id + ":" + sent_id + ":" + std::to_string(span.start) + ":" +
         std::to_string(span.end);
}

TargetKey TargetKey::Parse(std::string_view text) {
  auto parts = Split(text, ':');
  if (parts.size() != 4) {
    throw Error(ErrorCode::kSyntax,
                "target must be doc:sent:start:end, got '" + std::string(text) + "'");
  }
  TargetKey k;
  k.doc_id = std::string(parts[0]);
  k.sent_id = std::string(parts[1]);
  try {
    k.span = {ParseIndex(parts[2], "start", 0), ParseIndex(parts[3], "end", 0)};
  } catch (const Error& e) {
    throw Error(ErrorCode::kSyntax, e.detail());
  }
  return k;
}

bool CanonicalLess(const AnnotationRecord& a, const AnnotationRecord& b) {
  return std::tie(a.doc_id, a.sent_id, a.target, a.annotator) <
         std::tie(b.doc_id, b.sent_id, b.target, b.annotator);
}

void SortCanonical(std::vector<AnnotationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), CanonicalLess);
}

const Document* Corpus::FindDocument(std::string_view doc_id) const {
  const auto it = std::lower_bound(
      documents.begin(), documents.end(), doc_id,
      [](const Document& d, std::string_view id) { return d.doc_id < id; });
  return it != documents.end() && it->doc_id == doc_id ? &*it : nullptr;
}

const Sentence* Corpus::FindSentence(std::string_view doc_id,
                                     std::string_view sent_id) const {
  const Document* d = FindDocument(doc_id);
  return d == nullptr ? nullptr : d->FindSentence(sent_id);
}

std::string Corpus::LanguageOf(std::string_view doc_id) const {
  const Document* d = FindDocument(doc_id);
  return d == nullptr ? std::string() : d->language;
}

std::vector<AnnotationRecord> Corpus::GoldRecords() const {
  std::vector<AnnotationRecord> out;
  for (const auto& r : records) {
    if (r.is_gold()) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Documents

std::vector<Document> LoadDocuments(std::string_view text) {
  std::vector<Document> docs;
  std::map<std::string, size_t, std::less<>> index;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto fields = Split(line, '\t');
    if (fields.size() != 5) {
      throw Error(ErrorCode::kMalformedRecord,
                  "expected 5 tab-separated fields, got " + std::to_string(fields.size()),
                  line_no);
    }
    const std::string doc_id(fields[0]);
    const std::string sent_id(fields[1]);
    const std::string language(fields[2]);
    if (!ValidId(doc_id) || !ValidId(sent_id) || !ValidId(language)) {
      throw Error(ErrorCode::kMalformedRecord, "empty or malformed id field", line_no);
    }
    Sentence s{sent_id, std::string(fields[3]), {}};
    for (auto tok : Split(fields[4], ' ')) {
      if (tok.empty()) {
        throw Error(ErrorCode::kMalformedRecord, "empty token in sentence " + sent_id,
                    line_no);
      }
      s.tokens.emplace_back(tok);
    }
    auto it = index.find(doc_id);
    if (it == index.end()) {
      it = index.emplace(doc_id, docs.size()).first;
      docs.push_back(Document{doc_id, language, {}});
    }
    Document& d = docs[it->second];
    if (d.language != language) {
      throw Error(ErrorCode::kMalformedRecord,
                  "document " + doc_id + " has conflicting languages", line_no);
    }
    if (d.FindSentence(sent_id) != nullptr) {
      throw Error(ErrorCode::kDuplicateRecord,
                  "duplicate sentence " + doc_id + "/" + sent_id, line_no);
    }
    d.sentences.push_back(std::move(s));
  }
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  return docs;
}

std::string SerializeDocuments(const std::vector<Document>& documents) {
  std::vector<const Document*> docs;
  for (const auto& d : documents) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });
  std::string out(kDocumentsHeader);
  for (const Document* d : docs) {
    std::vector<const Sentence*> sents;
    for (const auto& s : d->sentences) sents.push_back(&s);
    std::sort(sents.begin(), sents.end(), [](const Sentence* a, const Sentence* b) {
      return a->sent_id < b->sent_id;
    });
    for (const Sentence* s : sents) {
      out += d->doc_id + "\t" + s->sent_id + "\t" + d->language + "\t" + s->text + "\t" +
             Join(s->tokens, " ") + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Annotations

AnnotationRecord ParseAnnotationLine(std::string_view line, int line_no) {
  const auto fields = Split(line, '\t');
  if (fields.size() != 7 && fields.size() != 8) {
    throw Error(ErrorCode::kMalformedRecord,
                "expected 8 tab-separated fields, got " + std::to_string(fields.size()),
                line_no);
  }
  AnnotationRecord r;
  r.doc_id = std::string(fields[0]);
  r.sent_id = std::string(fields[1]);
  r.target.start = ParseIndex(fields[2], "start", line_no);
  r.target.end = ParseIndex(fields[3], "end", line_no);
  r.form = std::string(fields[4]);
  r.annotator = std::string(fields[5]);
  try {
    r.construal = ParseConstrual(fields[6]);
  } catch (const Error& e) {
    throw Error(e.code(), e.detail(), line_no);
  }
  if (fields.size() == 8) r.note = std::string(fields[7]);
  if (!ValidId(r.doc_id) || !ValidId(r.sent_id) || !ValidId(r.annotator) || r.form.empty()) {
    throw Error(ErrorCode::kMalformedRecord, "empty or malformed id field", line_no);
  }
  return r;
}

std::vector<AnnotationRecord> ParseAnnotations(std::string_view text) {
  std::vector<AnnotationRecord> out;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    out.push_back(ParseAnnotationLine(line, line_no));
  }
  return out;
}

std::string FormatAnnotationLine(const AnnotationRecord& r) {
  return r.doc_id + "\t" + r.sent_id + "\t" + std::to_string(r.target.start) + "\t" +
         std::to_string(r.target.end) + "\t" + r.form + "\t" + r.annotator + "\t" +
         FormatConstrual(r.construal) + "\t" + r.note;
}

std::string SerializeAnnotations(std::vector<AnnotationRecord> records) {
  SortCanonical(records);
  std::string out(kAnnotationsHeader);
  for (const auto& r : records) out += FormatAnnotationLine(r) + "\n";
  return out;
}

void ValidateRecord(const Corpus& corpus, const Hierarchy& h, const AnnotationRecord& r) {
  if (!ValidId(r.annotator)) {
    throw Error(ErrorCode::kMalformedRecord, "invalid annotator id '" + r.annotator + "'");
  }
  const Sentence* s = corpus.FindSentence(r.doc_id, r.sent_id);
  if (s == nullptr) {
    throw Error(ErrorCode::kUnknownDocument,
                "unknown sentence " + r.doc_id + "/" + r.sent_id);
  }
  const int n = static_cast<int>(s->tokens.size());
  if (r.target.start >= r.target.end) {
    throw Error(ErrorCode::kSpanOutOfRange,
                "empty span (" + std::to_string(r.target.start) + "," +
                    std::to_string(r.target.end) + ") in " + r.doc_id + "/" + r.sent_id);
  }
  if (r.target.end > n) {
    throw Error(ErrorCode::kSpanOutOfRange,
                "span (" + std::to_string(r.target.start) + "," +
                    std::to_string(r.target.end) + ") exceeds " + std::to_string(n) +
                    " tokens in " + r.doc_id + "/" + r.sent_id);
  }
  ValidateConstrual(h, r.construal);
}

std::vector<std::string> LexiconWarnings(const Corpus& corpus, const Lexicon& lex,
                                         const AnnotationRecord& r) {
  std::vector<std::string> out;
  const std::string language = corpus.LanguageOf(r.doc_id);
  const AdpositionEntry* e = lex.Find(language, r.form);
  if (e == nullptr) {
    out.push_back(Describe(r) + ": form (" + language + ", " + r.form +
                  ") is not in the lexicon");
    return out;
  }
  const bool attested =
      std::any_of(e->attested.begin(), e->attested.end(), [&](const Attestation& a) {
        return a.construal.role == r.construal.role &&
               a.construal.functions == r.construal.functions;
      });
  const auto& proto = e->prototypical_functions;
  const bool congruent_proto =
      IsCongruent(r.construal) &&
      std::find(proto.begin(), proto.end(), r.construal.role) != proto.end();
  if (!attested && !congruent_proto) {
    out.push_back(Describe(r) + ": construal " + FormatConstrual(r.construal) +
                  " is not attested for (" + language + ", " + r.form + ")");
  }
  return out;
}

LoadResult LoadCorpus(std::string_view documents_text, std::string_view annotations_text,
                      const Hierarchy& h, const Lexicon* lex) {
  LoadResult result;
  result.corpus.documents = LoadDocuments(documents_text);

  std::set<std::tuple<TargetKey, std::string>> seen;
  int line_no = 0;
  for (std::string_view line : Lines(annotations_text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    AnnotationRecord r = ParseAnnotationLine(line, line_no);
    try {
      ValidateRecord(result.corpus, h, r);
    } catch (const Error& e) {
      throw Error(e.code(), e.detail(), line_no);
    }
    if (!seen.emplace(r.key(), r.annotator).second) {
      throw Error(ErrorCode::kDuplicateRecord,
                  "duplicate record for " + Describe(r), line_no);
    }
    const Sentence* s = result.corpus.FindSentence(r.doc_id, r.sent_id);
    std::vector<std::string> span_tokens(s->tokens.begin() + r.target.start,
                                         s->tokens.begin() + r.target.end);
    if (Join(span_tokens, " ") != r.form) {
      result.warnings.push_back("line " + std::to_string(line_no) + ": form '" + r.form +
                                "' differs from target tokens '" +
                                Join(span_tokens, " ") + "'");
    }
    if (lex != nullptr) {
      for (auto& w : LexiconWarnings(result.corpus, *lex, r)) {
        result.warnings.push_back("line " + std::to_string(line_no) + ": " + w);
      }
    }
    result.corpus.records.push_back(std::move(r));
  }
  return result;
}

Corpus MergeCorpora(const std::vector<Corpus>& parts) {
  Corpus out;
  std::map<std::string, Document> docs;
  std::set<std::tuple<TargetKey, std::string>> seen;
  for (const auto& part : parts) {
    for (const auto& d : part.documents) {
      const auto [it, inserted] = docs.emplace(d.doc_id, d);
      if (!inserted && !(it->second == d)) {
        throw Error(ErrorCode::kDuplicateRecord,
                    "document " + d.doc_id + " differs between corpus files");
      }
    }
    for (const auto& r : part.records) {
      if (!seen.emplace(r.key(), r.annotator).second) {
        throw Error(ErrorCode::kDuplicateRecord, "duplicate record for " + Describe(r));
      }
      out.records.push_back(r);
    }
  }
  for (auto& [id, d] : docs) out.documents.push_back(std::move(d));
  return out;
}

// ---------------------------------------------------------------------------
// Statistics and revision

CorpusStats ComputeStats(const std::vector<AnnotationRecord>& records, const Hierarchy& h) {
  CorpusStats st;
  std::map<std::pair<std::string, std::string>, std::set<std::vector<std::string>>> groups;
  for (const auto& r : records) {
    if (!r.is_gold()) continue;
    const auto& c = r.construal;
    ++st.tokens_annotated;
    ++st.role_histogram[c.role];
    for (const auto& f : c.functions) ++st.function_histogram[f];
    if (c.has_null_function()) ++st.null_functions;
    if (!IsCongruent(c)) ++st.mismatches;
    groups[{r.form, c.role}].insert(c.functions);
  }
  if (st.tokens_annotated > 0) {
    const double n = static_cast<double>(st.tokens_annotated);
    st.mismatch_rate = static_cast<double>(st.mismatches) / n;
    st.null_function_rate = static_cast<double>(st.null_functions) / n;
  }
  for (const auto& [label, count] : st.role_histogram) {
    if (!st.function_histogram.count(label)) st.role_only_labels.insert(label);
  }
  for (const auto& [label, count] : st.function_histogram) {
    if (!st.role_histogram.count(label)) st.function_only_labels.insert(label);
  }
  std::set<std::string> used;
  for (const auto& [label, count] : st.role_histogram) used.insert(label);
  for (const auto& [label, count] : st.function_histogram) used.insert(label);
  if (h.Contains("Participant")) {
    for (const auto& label : used) {
      if (!h.Contains(label) || !h.IsAncestor("Participant", label)) continue;
      ++st.participant_labels_used;
      if (st.role_only_labels.count(label)) ++st.participant_labels_role_only;
    }
  }
  st.form_role_groups = groups.size();
  for (const auto& [key, chains] : groups) {
    if (chains.size() == 1) ++st.deterministic_groups;
  }
  if (st.form_role_groups > 0) {
    st.function_determinism = static_cast<double>(st.deterministic_groups) /
                              static_cast<double>(st.form_role_groups);
  }
  return st;
}

std::vector<AnnotationRecord> ApplyRevisionToCorpus(
    const std::vector<AnnotationRecord>& records, const RevisionMap& m) {
  m.CheckConsistent();
  std::vector<AnnotationRecord> out;
  out.reserve(records.size());
  std::vector<std::string> problems;
  for (const auto& r : records) {
    AnnotationRecord revised = r;
    try {
      revised.construal = ReviseConstrual(r.construal, m);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLabelInUse) throw;
      problems.push_back(Describe(r) + ": " + e.detail());
    }
    out.push_back(std::move(revised));
  }
  if (!problems.empty()) {
    std::string msg = "retired labels still in use by " + std::to_string(problems.size()) +
                      " record(s):";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorCode::kLabelInUse, msg);
  }
  return out;
}

}  // namespace construal
