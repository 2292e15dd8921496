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

#include "construal/lexicon.hpp"

#include <algorithm>

#include "construal/error.hpp"
#include "construal/text.hpp"

namespace construal {

namespace {

std::string Key(std::string_view language, std::string_view form) {
  std::string key(language);
  key += '\t';
  key += form;
  return key;
}

// "Role ~> F1 ~> F2!m", the spaced rendering used in lexicon files.
std::string SpacedNotation(const Construal& c) {
  std::string out = c.role;
  for (const auto& f : c.functions) out += " ~> " + f;
  if (c.metaphoric) out += "!m";
  return out;
}

struct Counted {
  size_t first_index;
  size_t count;
};

template <typename T>
std::vector<T> ByCountThenFirstSeen(const std::vector<T>& items) {
  std::vector<T> distinct;
  std::vector<Counted> stats;
  for (size_t i = 0; i < items.size(); ++i) {
    const auto it = std::find(distinct.begin(), distinct.end(), items[i]);
    if (it == distinct.end()) {
      distinct.push_back(items[i]);
      stats.push_back({i, 1});
    } else {
      ++stats[it - distinct.begin()].count;
    }
  }
  std::vector<size_t> order(distinct.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return stats[a].count > stats[b].count;
  });
  std::vector<T> out;
  for (size_t i : order) out.push_back(distinct[i]);
  return out;
}

template <typename T>
void PushUnique(std::vector<T>& out, T value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(std::move(value));
}

}  // namespace

void Lexicon::Add(AdpositionEntry entry, int line) {
  const auto key = Key(entry.language, entry.form);
  if (index_.count(key)) {
    throw Error(ErrorCode::kDuplicateEntry,
                "duplicate entry (" + entry.language + ", " + entry.form + ")", line);
  }
  index_.emplace(key, entries_.size());
  entries_.push_back(std::move(entry));
}

Lexicon Lexicon::Load(std::string_view text, const Hierarchy& h) {
  Lexicon lex;
  std::optional<AdpositionEntry> current;
  int entry_line = 0;
  bool saw_proto = false;

  auto finish = [&]() {
    if (!current) return;
    if (!saw_proto || current->prototypical_functions.empty()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "entry (" + current->language + ", " + current->form +
                      ") has no prototypical functions",
                  entry_line);
    }
    lex.Add(std::move(*current), entry_line);
    current.reset();
  };
  auto require_label = [&](const std::string& label, int line) {
    if (!h.Contains(label)) {
      throw Error(ErrorCode::kUnknownLabel, "unknown label '" + label + "'", line);
    }
  };

  int line_no = 0;
  for (std::string_view raw : Lines(text)) {
    ++line_no;
    const auto line = Trim(raw);
    if (line.empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') continue;

    const auto words = SplitWhitespace(line);
    if (words[0] == "entry") {
      if (current) {
        throw Error(ErrorCode::kMalformedRecord,
                    "entry must be separated from the previous one by a blank line",
                    line_no);
      }
      if (words.size() < 3 || words.size() > 4) {
        throw Error(ErrorCode::kMalformedRecord, "expected 'entry <lang> <form> [kind]'",
                    line_no);
      }
      current = AdpositionEntry{};
      current->language = std::string(words[1]);
      current->form = std::string(words[2]);
      if (words.size() == 4) current->kind = std::string(words[3]);
      entry_line = line_no;
      saw_proto = false;
      continue;
    }
    if (!current) {
      throw Error(ErrorCode::kMalformedRecord, "field outside of an entry block", line_no);
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedRecord, "expected 'field: value'", line_no);
    }
    const auto field = Trim(line.substr(0, colon));
    const auto value = Trim(line.substr(colon + 1));
    if (field == "proto") {
      if (saw_proto) {
        throw Error(ErrorCode::kMalformedRecord, "proto given twice", line_no);
      }
      saw_proto = true;
      for (auto f : Split(value, ',')) {
        f = Trim(f);
        if (f.empty()) {
          throw Error(ErrorCode::kMalformedRecord, "empty prototypical function", line_no);
        }
        require_label(std::string(f), line_no);
        current->prototypical_functions.emplace_back(f);
      }
    } else if (field == "attested") {
      const auto parts = Split(value, '|');
      if (parts.size() != 3) {
        throw Error(ErrorCode::kMalformedRecord,
                    "expected 'attested: construal | example | source'", line_no);
      }
      Attestation a;
      try {
        a.construal = ParseConstrual(Trim(parts[0]));
        ValidateConstrual(h, a.construal);
      } catch (const Error& e) {
        throw Error(e.code(), e.detail(), line_no);
      }
      a.example = std::string(Trim(parts[1]));
      a.source = std::string(Trim(parts[2]));
      current->attested.push_back(std::move(a));
    } else if (field == "native") {
      current->native = std::string(value);
    } else if (field == "notes") {
      current->notes = std::string(value);
    } else {
      throw Error(ErrorCode::kMalformedRecord, "unknown field '" + std::string(field) + "'",
                  line_no);
    }
  }
  finish();
  return lex;
}

std::string Lexicon::Serialize() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i > 0) out += "\n";
    out += "entry " + e.language + " " + e.form;
    if (!e.kind.empty()) out += " " + e.kind;
    out += "\n";
    if (!e.native.empty()) out += "native: " + e.native + "\n";
    out += "proto: " + Join(e.prototypical_functions, ", ") + "\n";
    for (const auto& a : e.attested) {
      out += "attested: " + SpacedNotation(a.construal) + " | " + a.example + " | " +
             a.source + "\n";
    }
    if (!e.notes.empty()) out += "notes: " + e.notes + "\n";
  }
  return out;
}

const AdpositionEntry* Lexicon::Find(std::string_view language,
                                     std::string_view form) const {
  const auto it = index_.find(Key(language, form));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string> Lexicon::Warnings() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    for (const auto& a : e.attested) {
      const auto& fs = a.construal.functions;
      if (fs.size() != 1) continue;
      const auto& proto = e.prototypical_functions;
      if (std::find(proto.begin(), proto.end(), fs[0]) == proto.end()) {
        out.push_back("(" + e.language + ", " + e.form + ") attests " +
                      FormatConstrual(a.construal) + " with non-prototypical function " +
                      fs[0]);
      }
    }
  }
  return out;
}

Suggestions Lexicon::SuggestFunctions(std::string_view language, std::string_view form,
                                      std::string_view role) const {
  Suggestions s;
  const AdpositionEntry* e = Find(language, form);
  if (e == nullptr) return s;
  s.found = true;
  std::vector<FunctionChain> attested;
  for (const auto& a : e->attested) {
    if (a.construal.role == role) attested.push_back(a.construal.functions);
  }
  s.chains = ByCountThenFirstSeen(attested);
  for (const auto& f : e->prototypical_functions) PushUnique(s.chains, FunctionChain{f});
  PushUnique(s.chains, FunctionChain{});
  return s;
}

std::vector<Construal> Lexicon::SuggestConstruals(std::string_view language,
                                                  std::string_view form,
                                                  std::string_view sentence) const {
  std::vector<Construal> out;
  const AdpositionEntry* e = Find(language, form);
  if (e == nullptr) return out;
  std::vector<Construal> all;
  for (const auto& a : e->attested) {
    if (!sentence.empty() && a.example == sentence) PushUnique(out, a.construal);
    all.push_back(a.construal);
  }
  for (auto& c : ByCountThenFirstSeen(all)) PushUnique(out, std::move(c));
  for (const auto& f : e->prototypical_functions) PushUnique(out, Construal{f, {f}, false});
  return out;
}

Lexicon Lexicon::Attest(const Hierarchy& h, std::string_view language,
                        std::string_view form, const Construal& construal,
                        std::string example, std::string source) const {
  ValidateConstrual(h, construal);
  const auto it = index_.find(Key(language, form));
  if (it == index_.end()) {
    throw Error(ErrorCode::kNotFound, "no lexicon entry (" + std::string(language) + ", " +
                                          std::string(form) + ")");
  }
  Lexicon out = *this;
  Attestation a{construal, std::move(example), std::move(source)};
  PushUnique(out.entries_[it->second].attested, std::move(a));
  return out;
}

Lexicon Lexicon::ApplyRevision(const RevisionMap& m) const {
  Lexicon out;
  for (const auto& e : entries_) {
    AdpositionEntry revised = e;
    const std::string where = "(" + e.language + ", " + e.form + ")";
    revised.prototypical_functions.clear();
    for (const auto& f : e.prototypical_functions) {
      if (const std::string* to = m.RenameOf(f)) {
        PushUnique(revised.prototypical_functions, *to);
      } else if (const Construal* rw = m.RewriteOf(f)) {
        for (const auto& g : rw->functions) PushUnique(revised.prototypical_functions, g);
      } else if (m.Drops(f)) {
        throw Error(ErrorCode::kLabelInUse,
                    where + " uses dropped label '" + f + "' as a prototypical function");
      } else {
        PushUnique(revised.prototypical_functions, f);
      }
    }
    if (revised.prototypical_functions.empty()) {
      throw Error(ErrorCode::kLabelInUse, where + " loses all prototypical functions");
    }
    revised.attested.clear();
    for (const auto& a : e.attested) {
      Attestation ra = a;
      try {
        ra.construal = ReviseConstrual(a.construal, m);
      } catch (const Error& err) {
        throw Error(err.code(), where + ": " + err.detail());
      }
      PushUnique(revised.attested, std::move(ra));
    }
    out.Add(std::move(revised), 0);
  }
  return out;
}

void Lexicon::Validate(const Hierarchy& h) const {
  for (const auto& e : entries_) {
    const std::string where = "(" + e.language + ", " + e.form + ")";
    for (const auto& f : e.prototypical_functions) {
      if (!h.Contains(f)) {
        throw Error(ErrorCode::kUnknownLabel, where + ": unknown label '" + f + "'");
      }
    }
    for (const auto& a : e.attested) {
      try {
        ValidateConstrual(h, a.construal);
      } catch (const Error& err) {
        throw Error(err.code(), where + ": " + err.detail());
      }
    }
  }
}

}  // namespace construal
