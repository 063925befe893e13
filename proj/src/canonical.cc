// Copyright 2026 The rvgkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rvg/canonical.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rvg/graph6.h"

namespace rvg {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Code = std::vector<uint32_t>;

// Refines `p` to the coarsest equitable partition below it. Every choice
// depends only on cell order and neighbour counts, so the result commutes
// with relabelling.
void Refine(const std::vector<uint32_t>& adj, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 0; s < p.size() && !changed; ++s) {
      uint32_t splitter = 0;
      for (int v : p[s]) splitter |= uint32_t{1} << v;
      for (size_t x = 0; x < p.size() && !changed; ++x) {
        if (p[x].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(p[x].size());
        for (int v : p[x]) keyed.emplace_back(std::popcount(adj[v] & splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + x);
        p.insert(p.begin() + x, pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.num_vertices()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = static_cast<uint32_t>(g.Neighbors(v));
  }

  std::vector<int> Run() {
    Partition root;
    if (n_ > 0) {
      root.emplace_back(n_);
      std::iota(root[0].begin(), root[0].end(), 0);
    }
    Refine(adj_, root);
    std::vector<int> prefix;
    Visit(root, prefix);
    return best_lab_;
  }

 private:
  Code Encode(const std::vector<int>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Code code(n_, 0);
    for (int i = 0; i < n_; ++i) {
      uint32_t row = 0;
      for (uint32_t m = adj_[lab[i]]; m != 0; m &= m - 1) {
        row |= uint32_t{1} << pos[std::countr_zero(m)];
      }
      code[i] = row;
    }
    return code;
  }

  // Records the automorphism sending from[i] -> to[i].
  void AddAutomorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(std::move(gamma));
  }

  // Orbit representatives of the group generated by the known automorphisms
  // that fix every vertex of `prefix`.
  std::vector<int> Orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const std::vector<int>& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int Visit(const Partition& p, std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    if (static_cast<int>(p.size()) == n_) return Leaf(p, prefix);
    size_t target = 0;
    while (p[target].size() == 1) ++target;
    std::vector<int> explored;
    for (int v : p[target]) {
      if (!explored.empty()) {
        std::vector<int> orbit = Orbits(prefix);
        bool redundant = std::any_of(explored.begin(), explored.end(),
                                     [&](int u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      explored.push_back(v);
      Partition child = p;
      Cell rest;
      for (int u : p[target]) {
        if (u != v) rest.push_back(u);
      }
      child[target] = {v};
      child.insert(child.begin() + target + 1, rest);
      Refine(adj_, child);
      prefix.push_back(v);
      const int unwind = Visit(child, prefix);
      prefix.pop_back();
      if (unwind >= 0 && unwind < depth) return unwind;
    }
    return -1;
  }

  int Leaf(const Partition& p, const std::vector<int>& prefix) {
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[i] = p[i][0];
    Code code = Encode(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_path_ = prefix;
      return -1;
    }
    if (code == first_code_) {
      AddAutomorphism(first_lab_, lab);
      const std::vector<int>& gamma = generators_.back();
      size_t d = 0;
      while (d < prefix.size() && d < first_path_.size() &&
             prefix[d] == first_path_[d]) {
        ++d;
      }
      // If gamma carries the first path onto ours through the divergence
      // point, our whole subtree there is an image of an explored one.
      if (d < prefix.size() && d < first_path_.size()) {
        bool maps_path = true;
        for (size_t i = 0; i <= d && maps_path; ++i) {
          maps_path = gamma[first_path_[i]] == prefix[i];
        }
        if (maps_path) return static_cast<int>(d);
      }
      return -1;
    }
    if (code == best_code_) {
      AddAutomorphism(best_lab_, lab);
      return -1;
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
    }
    return -1;
  }

  int n_;
  std::vector<uint32_t> adj_;
  std::vector<int> first_lab_, best_lab_, first_path_;
  Code first_code_, best_code_;
  std::vector<std::vector<int>> generators_;
};

absl::Status CheckCap(const Graph& g) {
  if (g.num_vertices() > kMaxCanonicalVertices) {
    return absl::InvalidArgumentError(
        absl::StrCat("canonical form supports at most ", kMaxCanonicalVertices,
                     " vertices, got ", g.num_vertices()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<CanonicalForm> Canonical(const Graph& g) {
  if (absl::Status s = CheckCap(g); !s.ok()) return s;
  std::vector<int> lab = CanonicalSearch(g).Run();
  CanonicalForm form;
  form.labeling.assign(g.num_vertices(), 0);
  for (int i = 0; i < g.num_vertices(); ++i) form.labeling[lab[i]] = i;
  form.encoding = ToGraph6(g.Permuted(form.labeling));
  return form;
}

absl::StatusOr<bool> Isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    if (absl::Status s = CheckCap(a); !s.ok()) return s;
    if (absl::Status s = CheckCap(b); !s.ok()) return s;
    return false;
  }
  absl::StatusOr<CanonicalForm> ca = Canonical(a);
  if (!ca.ok()) return ca.status();
  absl::StatusOr<CanonicalForm> cb = Canonical(b);
  if (!cb.ok()) return cb.status();
  return ca->encoding == cb->encoding;
}

absl::StatusOr<std::optional<std::vector<int>>> FindIsomorphism(
    const Graph& a, const Graph& b) {
  absl::StatusOr<CanonicalForm> ca = Canonical(a);
  if (!ca.ok()) return ca.status();
  absl::StatusOr<CanonicalForm> cb = Canonical(b);
  if (!cb.ok()) return cb.status();
  if (ca->encoding != cb->encoding) return std::optional<std::vector<int>>();
  // a --labeling_a--> canonical <--labeling_b-- b.
  std::vector<int> inverse_b(b.num_vertices());
  for (int v = 0; v < b.num_vertices(); ++v) inverse_b[cb->labeling[v]] = v;
  std::vector<int> perm(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) perm[v] = inverse_b[ca->labeling[v]];
  return std::optional<std::vector<int>>(std::move(perm));
}

}  // namespace rvg
