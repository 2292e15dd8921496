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

#ifndef CONSTRUAL_TAXONOMY_HPP_
#define CONSTRUAL_TAXONOMY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "construal/construal.hpp"

namespace construal {

struct Supersense {
  std::string name;
  std::vector<std::string> parents;  // empty only for roots
  std::string definition;
  std::vector<std::string> hints;    // paraphrase and WH-question cues

  bool operator==(const Supersense&) const = default;
};

// A single-step simplification of a hierarchy. A label may appear in at most
// one of the three lists.
struct RevisionMap {
  std::vector<std::pair<std::string, std::string>> renames;
  std::vector<std::pair<std::string, Construal>> rewrites;
  std::vector<std::string> dropped;

  bool empty() const {
    return renames.empty() && rewrites.empty() && dropped.empty();
  }
  // Labels that no longer exist after the revision.
  std::vector<std::string> RetiredLabels() const;
  bool Retires(std::string_view label) const;
  const std::string* RenameOf(std::string_view label) const;
  const Construal* RewriteOf(std::string_view label) const;
  bool Drops(std::string_view label) const;

  // Checks the map on its own: no label listed twice, no replacement that is
  // itself retired. Throws kInvalidRevision.
  void CheckConsistent() const;

  // Revision file: `rename Old -> New`, `rewrite Old -> Role ~> Function`,
  // `drop Old`, with '#' comment lines.
  static RevisionMap Parse(std::string_view text);
  std::string Serialize() const;

  bool operator==(const RevisionMap&) const = default;
};

// Relabels one construal under `m`. Renamed labels are replaced in both
// slots. A rewritten label used as a single-label annotation (congruent or
// bare role) becomes the rewrite construal. Any other use of a rewritten or
// dropped label throws kLabelInUse. Immediate repetitions created by a merge
// are collapsed, so applying the same map twice equals applying it once.
Construal ReviseConstrual(const Construal& c, const RevisionMap& m);

// The supersense taxonomy: a rooted DAG with multiple inheritance. Values are
// immutable once built; every query is const and safe for concurrent readers.
class Hierarchy {
 public:
  // Parses the hierarchy file format:
  //   Name < Parent1, Parent2 | definition | hint | hint
  //   Name < . | definition                       (root)
  // '#' starts a comment line and blank lines are ignored; both are kept so
  // that Serialize() reproduces a canonical file exactly. A leading
  // "# version: X" comment sets the version.
  static Hierarchy Load(std::string_view text);

  // Builds and validates a hierarchy from nodes given in display order.
  static Hierarchy FromNodes(std::vector<Supersense> nodes, std::string version);

  std::string Serialize() const;

  const std::string& version() const { return version_; }
  size_t size() const { return nodes_.size(); }
  const std::vector<Supersense>& nodes() const { return nodes_; }

  bool Contains(std::string_view label) const;
  // Throws kUnknownLabel.
  const Supersense& Get(std::string_view label) const;

  std::vector<std::string> Roots() const;
  std::vector<std::string> Children(std::string_view label) const;
  // Parents before children; ties keep display order.
  std::vector<std::string> TopologicalOrder() const;

  // Reflexive: a label is its own ancestor.
  bool IsAncestor(std::string_view ancestor, std::string_view descendant) const;
  // All ancestors including the label itself, in display order.
  std::vector<std::string> Ancestors(std::string_view label) const;
  // Minimal common ancestors of a and b, in display order. Empty when a and b
  // share no root.
  std::vector<std::string> LowestCommonSubsumers(std::string_view a,
                                                 std::string_view b) const;
  // Shortest parent-edge distance to any root; roots have depth 0.
  int Depth(std::string_view label) const;

  // Throws unless every replacement in `m` exists in this hierarchy and
  // survives the revision.
  void ValidateRevision(const RevisionMap& m) const;

  // Returns a new hierarchy with retired labels removed. Children of a
  // renamed label are re-pointed at its replacement; children of a rewritten
  // or dropped label inherit that label's own parents. Sources absent from
  // this hierarchy are ignored.
  Hierarchy ApplyRevision(const RevisionMap& m) const;

  bool operator==(const Hierarchy& other) const {
    return version_ == other.version_ && nodes_ == other.nodes_;
  }

 private:
  Hierarchy() = default;
  static Hierarchy Build(std::vector<Supersense> nodes, std::vector<int> lines,
                         std::vector<std::vector<std::string>> preambles,
                         std::vector<std::string> trailer, std::string version);
  int IndexOf(std::string_view label) const;

  std::string version_;
  std::vector<Supersense> nodes_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  // is_ancestor_[d][a]: a is an ancestor of d (reflexive).
  std::vector<std::vector<bool>> is_ancestor_;
  // Comment and blank lines preceding each node, and after the last node.
  std::vector<std::vector<std::string>> preambles_;
  std::vector<std::string> trailer_;
};

}  // namespace construal

#endif  // CONSTRUAL_TAXONOMY_HPP_
