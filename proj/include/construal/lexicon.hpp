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

#ifndef CONSTRUAL_LEXICON_HPP_
#define CONSTRUAL_LEXICON_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "construal/construal.hpp"
#include "construal/taxonomy.hpp"

namespace construal {

struct Attestation {
  Construal construal;
  std::string example;
  std::string source;

  bool operator==(const Attestation&) const = default;
};

// One adposition or case marker in one language. `kind` (preposition,
// postposition, case-marker) and `native` (native-script form) are metadata
// and never affect validation.
struct AdpositionEntry {
  std::string language;
  std::string form;
  std::string kind;
  std::string native;
  std::vector<std::string> prototypical_functions;  // most prototypical first
  std::vector<Attestation> attested;
  std::string notes;

  bool operator==(const AdpositionEntry&) const = default;
};

using FunctionChain = std::vector<std::string>;

struct Suggestions {
  bool found = false;
  std::vector<FunctionChain> chains;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Record-per-block format terminated by blank lines:
  //   entry <lang> <form> [kind]
  //   native: <native-script form>            (optional)
  //   proto: F1, F2
  //   attested: Role ~> F1 ~> F2 | example sentence | source
  //   notes: free text                        (optional)
  // Unknown labels are hard errors.
  static Lexicon Load(std::string_view text, const Hierarchy& h);
  std::string Serialize() const;

  const std::vector<AdpositionEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  const AdpositionEntry* Find(std::string_view language, std::string_view form) const;

  // Attested single-function chains whose function is not prototypical for
  // the entry. These are flagged but accepted.
  std::vector<std::string> Warnings() const;

  // Function chains for `role`, best first: chains attested with this role
  // (by attestation count, ties by first occurrence), then each prototypical
  // function as a one-element chain, then the null chain.
  Suggestions SuggestFunctions(std::string_view language, std::string_view form,
                               std::string_view role) const;

  // Whole construals for a target whose role is not yet known: attestations
  // whose example equals `sentence` first, then attested construals by count,
  // then congruent construals for each prototypical function.
  std::vector<Construal> SuggestConstruals(std::string_view language,
                                           std::string_view form,
                                           std::string_view sentence) const;

  // Returns a lexicon with the attestation appended to the (language, form)
  // entry. Adding an identical attestation again is a no-op.
  Lexicon Attest(const Hierarchy& h, std::string_view language, std::string_view form,
                 const Construal& construal, std::string example,
                 std::string source) const;

  // Relabels the lexicon under a hierarchy revision. Renamed labels are
  // replaced everywhere; a rewritten label used as a congruent or bare
  // single-label attestation becomes its rewrite construal, and as a
  // prototypical function is replaced by the rewrite's functions. Any other
  // use of a retired label throws kLabelInUse.
  Lexicon ApplyRevision(const RevisionMap& m) const;

  void Validate(const Hierarchy& h) const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::vector<AdpositionEntry> entries_;
  std::map<std::string, size_t, std::less<>> index_;  // "lang\tform"

  void Add(AdpositionEntry entry, int line);
};

}  // namespace construal

#endif  // CONSTRUAL_LEXICON_HPP_
