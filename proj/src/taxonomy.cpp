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

#include "construal/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "construal/error.hpp"
#include "construal/text.hpp"

namespace construal {

namespace {

constexpr std::string_view kVersionPrefix = "# version:";

bool HasWhitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

Supersense ParseNodeLine(std::string_view line, int line_no) {
  const auto fields = Split(line, '|');
  const std::string_view head = fields[0];
  const auto lt = head.find('<');
  if (lt == std::string_view::npos) {
    throw Error(ErrorCode::kSyntax, "expected 'Name < Parents | definition'", line_no);
  }
  Supersense node;
  node.name = std::string(Trim(head.substr(0, lt)));
  if (node.name.empty()) throw Error(ErrorCode::kSyntax, "empty label name", line_no);
  if (HasWhitespace(node.name)) {
    throw Error(ErrorCode::kSyntax, "label '" + node.name + "' contains whitespace",
                line_no);
  }
  const std::string_view parent_list = Trim(head.substr(lt + 1));
  if (parent_list.empty()) {
    throw Error(ErrorCode::kSyntax,
                "label '" + node.name + "' has no parent list (use '.' for a root)",
                line_no);
  }
  if (parent_list != ".") {
    for (std::string_view p : Split(parent_list, ',')) {
      p = Trim(p);
      if (p.empty() || HasWhitespace(p)) {
        throw Error(ErrorCode::kSyntax,
                    "malformed parent list for '" + node.name + "'", line_no);
      }
      if (std::find(node.parents.begin(), node.parents.end(), p) != node.parents.end()) {
        throw Error(ErrorCode::kSyntax,
                    "parent '" + std::string(p) + "' listed twice for '" + node.name + "'",
                    line_no);
      }
      node.parents.emplace_back(p);
    }
  }
  if (fields.size() > 1) node.definition = std::string(Trim(fields[1]));
  for (size_t i = 2; i < fields.size(); ++i) {
    const auto hint = Trim(fields[i]);
    if (!hint.empty()) node.hints.emplace_back(hint);
  }
  return node;
}

std::string FormatNodeLine(const Supersense& node) {
  std::string out = node.name + " < ";
  out += node.parents.empty() ? std::string(".") : Join(node.parents, ", ");
  out += " |";
  if (!node.definition.empty()) out += " " + node.definition;
  for (const auto& hint : node.hints) out += " | " + hint;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RevisionMap

std::vector<std::string> RevisionMap::RetiredLabels() const {
  std::vector<std::string> out;
  for (const auto& [from, to] : renames) out.push_back(from);
  for (const auto& [from, c] : rewrites) out.push_back(from);
  out.insert(out.end(), dropped.begin(), dropped.end());
  return out;
}

bool RevisionMap::Retires(std::string_view label) const {
  return RenameOf(label) != nullptr || RewriteOf(label) != nullptr || Drops(label);
}

const std::string* RevisionMap::RenameOf(std::string_view label) const {
  for (const auto& [from, to] : renames) {
    if (from == label) return &to;
  }
  return nullptr;
}

const Construal* RevisionMap::RewriteOf(std::string_view label) const {
  for (const auto& [from, c] : rewrites) {
    if (from == label) return &c;
  }
  return nullptr;
}

bool RevisionMap::Drops(std::string_view label) const {
  return std::find(dropped.begin(), dropped.end(), label) != dropped.end();
}

void RevisionMap::CheckConsistent() const {
  std::set<std::string, std::less<>> seen;
  for (const auto& label : RetiredLabels()) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidRevision,
                  "label '" + label + "' is revised more than once");
    }
  }
  auto check_target = [&](const std::string& from, const std::string& target) {
    if (seen.count(target)) {
      throw Error(ErrorCode::kInvalidRevision, "replacement '" + target + "' for '" +
                                                   from + "' is itself retired");
    }
  };
  for (const auto& [from, to] : renames) check_target(from, to);
  for (const auto& [from, c] : rewrites) {
    check_target(from, c.role);
    for (const auto& f : c.functions) check_target(from, f);
  }
}

RevisionMap RevisionMap::Parse(std::string_view text) {
  RevisionMap m;
  int line_no = 0;
  for (std::string_view raw : Lines(text)) {
    ++line_no;
    if (IsBlankOrComment(raw)) continue;
    const auto line = Trim(raw);
    const auto space = line.find_first_of(" \t");
    const auto verb = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{}
                                                      : Trim(line.substr(space));
    if (verb == "drop") {
      if (rest.empty() || HasWhitespace(rest)) {
        throw Error(ErrorCode::kSyntax, "expected 'drop Label'", line_no);
      }
      m.dropped.emplace_back(rest);
      continue;
    }
    const auto arrow = rest.find("->");
    if ((verb != "rename" && verb != "rewrite") || arrow == std::string_view::npos) {
      throw Error(ErrorCode::kSyntax,
                  "expected 'rename Old -> New', 'rewrite Old -> Role ~> Function' "
                  "or 'drop Old'",
                  line_no);
    }
    const std::string from(Trim(rest.substr(0, arrow)));
    const auto to = Trim(rest.substr(arrow + 2));
    if (from.empty() || HasWhitespace(from) || to.empty()) {
      throw Error(ErrorCode::kSyntax, "malformed " + std::string(verb) + " line", line_no);
    }
    if (verb == "rename") {
      if (HasWhitespace(to)) {
        throw Error(ErrorCode::kSyntax, "malformed rename target", line_no);
      }
      m.renames.emplace_back(from, std::string(to));
    } else {
      try {
        m.rewrites.emplace_back(from, ParseConstrual(to));
      } catch (const Error& e) {
        throw Error(e.code(), e.detail(), line_no);
      }
    }
  }
  m.CheckConsistent();
  return m;
}

std::string RevisionMap::Serialize() const {
  std::string out;
  for (const auto& [from, to] : renames) out += "rename " + from + " -> " + to + "\n";
  for (const auto& [from, c] : rewrites) {
    out += "rewrite " + from + " -> " + c.role;
    for (const auto& f : c.functions) out += " ~> " + f;
    if (c.metaphoric) out += "!m";
    out += "\n";
  }
  for (const auto& label : dropped) out += "drop " + label + "\n";
  return out;
}

Construal ReviseConstrual(const Construal& c, const RevisionMap& m) {
  const bool single_label =
      c.functions.empty() || (c.functions.size() == 1 && c.functions[0] == c.role);
  if (single_label) {
    if (const Construal* rw = m.RewriteOf(c.role)) {
      Construal out = *rw;
      out.metaphoric = out.metaphoric || c.metaphoric;
      return out;
    }
  }
  auto map_label = [&](const std::string& label) -> std::string {
    if (const std::string* to = m.RenameOf(label)) return *to;
    if (m.Retires(label)) {
      throw Error(ErrorCode::kLabelInUse, "retired label '" + label + "' is used in " +
                                               FormatConstrual(c));
    }
    return label;
  };
  Construal out;
  out.metaphoric = c.metaphoric;
  out.role = map_label(c.role);
  for (const auto& f : c.functions) {
    std::string mapped = map_label(f);
    if (out.functions.empty() || out.functions.back() != mapped) {
      out.functions.push_back(std::move(mapped));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hierarchy

Hierarchy Hierarchy::Load(std::string_view text) {
  std::vector<Supersense> nodes;
  std::vector<int> lines;
  std::vector<std::vector<std::string>> preambles;
  std::vector<std::string> pending;
  std::string version;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (line_no == 1 && line.substr(0, kVersionPrefix.size()) == kVersionPrefix) {
      version = std::string(Trim(line.substr(kVersionPrefix.size())));
      continue;
    }
    if (IsBlankOrComment(line)) {
      pending.emplace_back(Trim(line).empty() ? std::string_view{} : line);
      continue;
    }
    nodes.push_back(ParseNodeLine(line, line_no));
    lines.push_back(line_no);
    preambles.push_back(std::move(pending));
    pending.clear();
  }
  return Build(std::move(nodes), std::move(lines), std::move(preambles),
               std::move(pending), std::move(version));
}

Hierarchy Hierarchy::FromNodes(std::vector<Supersense> nodes, std::string version) {
  const size_t n = nodes.size();
  return Build(std::move(nodes), std::vector<int>(n, 0),
               std::vector<std::vector<std::string>>(n), {}, std::move(version));
}

Hierarchy Hierarchy::Build(std::vector<Supersense> nodes, std::vector<int> lines,
                           std::vector<std::vector<std::string>> preambles,
                           std::vector<std::string> trailer, std::string version) {
  Hierarchy h;
  h.version_ = std::move(version);
  h.nodes_ = std::move(nodes);
  h.preambles_ = std::move(preambles);
  h.trailer_ = std::move(trailer);
  const int n = static_cast<int>(h.nodes_.size());

  for (int i = 0; i < n; ++i) {
    const auto& name = h.nodes_[i].name;
    if (name.empty() || HasWhitespace(name)) {
      throw Error(ErrorCode::kSyntax, "invalid label name '" + name + "'", lines[i]);
    }
    if (!h.index_.emplace(name, i).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate label '" + name + "'", lines[i]);
    }
  }

  h.parents_.assign(n, {});
  h.children_.assign(n, {});
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    for (const auto& p : h.nodes_[i].parents) {
      const auto it = h.index_.find(p);
      if (it == h.index_.end()) {
        throw Error(ErrorCode::kUnknownParent,
                    "label '" + h.nodes_[i].name + "' has unknown parent '" + p + "'",
                    lines[i]);
      }
      h.parents_[i].push_back(it->second);
      h.children_[it->second].push_back(i);
    }
    if (h.parents_[i].empty()) roots.push_back(i);
  }
  // Kahn's algorithm over parent edges. Nodes left unvisited lie on or below
  // a cycle.
  std::vector<int> pending_parents(n);
  std::deque<int> ready(roots.begin(), roots.end());
  for (int i = 0; i < n; ++i) pending_parents[i] = static_cast<int>(h.parents_[i].size());
  std::vector<int> order;
  while (!ready.empty()) {
    const int u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (int c : h.children_[u]) {
      if (--pending_parents[c] == 0) ready.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    // Walk unvisited parents until a node repeats; that loop is a cycle.
    int u = 0;
    while (pending_parents[u] == 0) ++u;
    std::vector<int> path;
    std::vector<int> pos(n, -1);
    while (pos[u] < 0) {
      pos[u] = static_cast<int>(path.size());
      path.push_back(u);
      for (int p : h.parents_[u]) {
        if (pending_parents[p] > 0) {
          u = p;
          break;
        }
      }
    }
    std::string names;
    for (size_t k = pos[u]; k < path.size(); ++k) names += h.nodes_[path[k]].name + " < ";
    names += h.nodes_[u].name;
    throw Error(ErrorCode::kCycle, "cycle detected: " + names, lines[u]);
  }
  if (roots.empty()) {
    throw Error(ErrorCode::kNoRoots, "hierarchy has no root labels");
  }

  h.depth_.assign(n, -1);
  std::deque<int> frontier;
  for (int r : roots) {
    h.depth_[r] = 0;
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (int c : h.children_[u]) {
      if (h.depth_[c] < 0) {
        h.depth_[c] = h.depth_[u] + 1;
        frontier.push_back(c);
      }
    }
  }

  h.is_ancestor_.assign(n, std::vector<bool>(n, false));
  for (int u : order) {
    h.is_ancestor_[u][u] = true;
    for (int p : h.parents_[u]) {
      for (int a = 0; a < n; ++a) {
        if (h.is_ancestor_[p][a]) h.is_ancestor_[u][a] = true;
      }
    }
  }
  return h;
}

std::string Hierarchy::Serialize() const {
  std::string out;
  if (!version_.empty()) out += std::string(kVersionPrefix) + " " + version_ + "\n";
  for (size_t i = 0; i < nodes_.size(); ++i) {
    for (const auto& line : preambles_[i]) out += line + "\n";
    out += FormatNodeLine(nodes_[i]) + "\n";
  }
  for (const auto& line : trailer_) out += line + "\n";
  return out;
}

int Hierarchy::IndexOf(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownLabel, "unknown label '" + std::string(label) + "'");
  }
  return it->second;
}

bool Hierarchy::Contains(std::string_view label) const {
  return index_.find(label) != index_.end();
}

const Supersense& Hierarchy::Get(std::string_view label) const {
  return nodes_[IndexOf(label)];
}

std::vector<std::string> Hierarchy::Roots() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (parents_[i].empty()) out.push_back(nodes_[i].name);
  }
  return out;
}

std::vector<std::string> Hierarchy::Children(std::string_view label) const {
  std::vector<std::string> out;
  for (int c : children_[IndexOf(label)]) out.push_back(nodes_[c].name);
  return out;
}

std::vector<std::string> Hierarchy::TopologicalOrder() const {
  const size_t n = nodes_.size();
  std::vector<size_t> pending(n);
  std::set<size_t> ready;
  for (size_t i = 0; i < n; ++i) {
    pending[i] = parents_[i].size();
    if (pending[i] == 0) ready.insert(i);
  }
  std::vector<std::string> out;
  while (!ready.empty()) {
    const size_t u = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(nodes_[u].name);
    for (int c : children_[u]) {
      if (--pending[c] == 0) ready.insert(c);
    }
  }
  return out;
}

bool Hierarchy::IsAncestor(std::string_view ancestor, std::string_view descendant) const {
  const int a = IndexOf(ancestor);
  const int d = IndexOf(descendant);
  return is_ancestor_[d][a];
}

std::vector<std::string> Hierarchy::Ancestors(std::string_view label) const {
  const int d = IndexOf(label);
  std::vector<std::string> out;
  for (size_t a = 0; a < nodes_.size(); ++a) {
    if (is_ancestor_[d][a]) out.push_back(nodes_[a].name);
  }
  return out;
}

std::vector<std::string> Hierarchy::LowestCommonSubsumers(std::string_view a,
                                                          std::string_view b) const {
  const int ia = IndexOf(a);
  const int ib = IndexOf(b);
  const size_t n = nodes_.size();
  std::vector<size_t> common;
  for (size_t k = 0; k < n; ++k) {
    if (is_ancestor_[ia][k] && is_ancestor_[ib][k]) common.push_back(k);
  }
  std::vector<std::string> out;
  for (size_t k : common) {
    const bool minimal = std::none_of(common.begin(), common.end(), [&](size_t j) {
      return j != k && is_ancestor_[j][k];
    });
    if (minimal) out.push_back(nodes_[k].name);
  }
  return out;
}

int Hierarchy::Depth(std::string_view label) const { return depth_[IndexOf(label)]; }

void Hierarchy::ValidateRevision(const RevisionMap& m) const {
  m.CheckConsistent();
  auto require = [&](const std::string& from, const std::string& target) {
    if (!Contains(target)) {
      throw Error(ErrorCode::kInvalidRevision,
                  "revision target '" + target + "' for '" + from + "' is missing");
    }
  };
  for (const auto& [from, to] : m.renames) require(from, to);
  for (const auto& [from, c] : m.rewrites) {
    require(from, c.role);
    for (const auto& f : c.functions) require(from, f);
  }
}

Hierarchy Hierarchy::ApplyRevision(const RevisionMap& m) const {
  ValidateRevision(m);
  if (m.empty()) return *this;

  // Resolve a parent label to the surviving labels it stands for.
  std::function<void(int, std::vector<std::string>&)> resolve =
      [&](int p, std::vector<std::string>& out) {
        const auto& name = nodes_[p].name;
        std::vector<std::string> add;
        if (const std::string* to = m.RenameOf(name)) {
          add.push_back(*to);
        } else if (m.Retires(name)) {
          for (int gp : parents_[p]) resolve(gp, out);
          return;
        } else {
          add.push_back(name);
        }
        for (auto& label : add) {
          if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
        }
      };

  std::vector<Supersense> nodes;
  std::vector<std::vector<std::string>> preambles;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (m.Retires(nodes_[i].name)) continue;
    Supersense node = nodes_[i];
    std::vector<std::string> parents;
    for (int p : parents_[i]) resolve(p, parents);
    std::erase(parents, node.name);
    if (!parents_[i].empty() && parents.empty()) {
      throw Error(ErrorCode::kDanglingParent,
                  "revision leaves '" + node.name + "' without a parent");
    }
    node.parents = std::move(parents);
    nodes.push_back(std::move(node));
    preambles.push_back(preambles_[i]);
  }
  const size_t n = nodes.size();
  // The suffix is added once so that revising twice is a no-op.
  std::string version = version_;
  if (version.empty()) {
    version = "revised";
  } else if (version != "revised" && !version.ends_with("+revised")) {
    version += "+revised";
  }
  return Build(std::move(nodes), std::vector<int>(n, 0), std::move(preambles),
               trailer_, std::move(version));
}

}  // namespace construal
