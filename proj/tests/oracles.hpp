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

#ifndef CONSTRUAL_TESTS_ORACLES_HPP_
#define CONSTRUAL_TESTS_ORACLES_HPP_

// Reference computations written without the library, used to check it.
// Deliberately naive: a separate line parser, DFS, BFS, contingency tables.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace construal::oracle {

struct Graph {
  std::vector<std::string> names;
  std::map<std::string, std::vector<std::string>> parents;
};

inline std::string Strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads "Name < P1, P2 | ..." lines; "< ." marks a root.
inline Graph ParseHierarchyText(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = Strip(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string head = t.substr(0, t.find('|'));
    const auto lt = head.find('<');
    const std::string name = Strip(head.substr(0, lt));
    std::vector<std::string> ps;
    std::string rest = Strip(head.substr(lt + 1));
    if (rest != ".") {
      std::istringstream parts(rest);
      std::string p;
      while (std::getline(parts, p, ',')) ps.push_back(Strip(p));
    }
    g.names.push_back(name);
    g.parents[name] = ps;
  }
  return g;
}

inline std::vector<std::string> Roots(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& n : g.names) {
    if (g.parents.at(n).empty()) out.push_back(n);
  }
  return out;
}

// Every node reachable upward from `a`, including `a`.
inline std::set<std::string> AncestorsDfs(const Graph& g, const std::string& a) {
  std::set<std::string> seen;
  std::vector<std::string> stack{a};
  while (!stack.empty()) {
    const std::string n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& p : g.parents.at(n)) stack.push_back(p);
  }
  return seen;
}

inline int DepthBfs(const Graph& g, const std::string& a) {
  std::deque<std::pair<std::string, int>> q{{a, 0}};
  std::set<std::string> seen{a};
  while (!q.empty()) {
    auto [n, d] = q.front();
    q.pop_front();
    if (g.parents.at(n).empty()) return d;
    for (const auto& p : g.parents.at(n)) {
      if (seen.insert(p).second) q.push_back({p, d + 1});
    }
  }
  return -1;
}

inline std::vector<std::string> LowestCommonSubsumers(const Graph& g, const std::string& a,
                                                      const std::string& b) {
  const auto aa = AncestorsDfs(g, a);
  const auto bb = AncestorsDfs(g, b);
  std::vector<std::string> common;
  for (const auto& x : aa) {
    if (bb.count(x)) common.push_back(x);
  }
  std::vector<std::string> out;
  for (const auto& x : common) {
    bool lowest = true;
    for (const auto& y : common) {
      if (y != x && AncestorsDfs(g, y).count(x)) lowest = false;
    }
    if (lowest) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double WuPalmer(const Graph& g, const std::string& a, const std::string& b) {
  if (a == b) return 1.0;
  int best = -1;
  for (const auto& s : LowestCommonSubsumers(g, a, b)) best = std::max(best, DepthBfs(g, s));
  if (best < 0) return 0.0;
  const int denom = DepthBfs(g, a) + DepthBfs(g, b);
  return denom == 0 ? 0.0 : 2.0 * best / denom;
}

// Cohen's kappa from an explicit k x k contingency table.
inline double KappaFromTable(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::map<std::string, int> index;
  for (const auto& x : a) index.emplace(x, 0);
  for (const auto& x : b) index.emplace(x, 0);
  int k = 0;
  for (auto& [name, i] : index) i = k++;
  std::vector<std::vector<double>> table(k, std::vector<double>(k, 0.0));
  for (size_t i = 0; i < a.size(); ++i) table[index[a[i]]][index[b[i]]] += 1.0;
  const double n = static_cast<double>(a.size());
  double diag = 0.0, chance = 0.0;
  for (int i = 0; i < k; ++i) {
    diag += table[i][i];
    double row = 0.0, col = 0.0;
    for (int j = 0; j < k; ++j) {
      row += table[i][j];
      col += table[j][i];
    }
    chance += row * col;
  }
  const double po = diag / n;
  const double pe = chance / (n * n);
  if (pe == 1.0) return po == 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

// Splits raw notation text without the library parser: role, functions, flag.
struct RawConstrual {
  std::string role;
  std::vector<std::string> functions;
  bool metaphoric = false;
};

inline RawConstrual SplitNotation(std::string s) {
  RawConstrual r;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "!m") {
    r.metaphoric = true;
    s.resize(s.size() - 2);
  }
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const auto next = s.find("~>", pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 2;
  }
  r.role = parts.front();
  r.functions.assign(parts.begin() + 1, parts.end());
  return r;
}

}  // namespace construal::oracle

#endif  // CONSTRUAL_TESTS_ORACLES_HPP_
