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

#include "rvg/packing_search.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <map>
#include <mutex>
#include <thread>

namespace rvg {
namespace {

constexpr int8_t kUndecided = -2;
constexpr int8_t kEmpty = -1;
constexpr int kSplitDepth = 2;
constexpr int kCheckInterval = 1024;

using Masks = std::array<uint32_t, kMaxPackingVertices>;

struct State {
  std::vector<int8_t> owner;
  std::array<Rect, kMaxPackingVertices> rects{};
  int placed = 0;
  int first = 0;      // First undecided cell, row-major.
  int undecided = 0;  // Number of undecided cells.
  int rows_checked = 0;
  int depth = 0;      // Decisions taken since the root.
};

// Shared by all workers of one search.
struct Control {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int64_t max_nodes = 0;
  std::atomic<int64_t> total_nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<int> winner{INT_MAX};
};

// Target graph data used by the mapping test.
struct TargetInfo {
  int n = 0;
  std::array<uint32_t, kMaxPackingVertices> nbr{};
  std::array<int, kMaxPackingVertices> degree{};
  // twin[v]: vertices interchangeable with v by a transposition-generated
  // group of automorphisms (including v).
  std::array<uint32_t, kMaxPackingVertices> twin{};
  // component[v]: the vertices of v's connected component.
  std::array<uint32_t, kMaxPackingVertices> component{};
  bool connected = true;
  // lanes[k]: fewest lanes in each direction needed by k components.
  std::vector<int> lanes;
  int min_degree = 0;
  int edges = 0;

  explicit TargetInfo(const Graph& g) : n(g.num_vertices()) {
    for (int v = 0; v < n; ++v) {
      nbr[v] = static_cast<uint32_t>(g.Neighbors(v));
      degree[v] = g.Degree(v);
    }
    edges = g.num_edges();
    min_degree = n == 0 ? 0 : *std::min_element(degree.begin(), degree.begin() + n);
    std::array<int, kMaxPackingVertices> parent{};
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const uint32_t bu = uint32_t{1} << u, bv = uint32_t{1} << v;
        if ((nbr[u] & ~bv) == (nbr[v] & ~bu)) {
          const int a = find(u), b = find(v);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    for (int v = 0; v < n; ++v) twin[find(v)] |= uint32_t{1} << v;
    for (int v = 0; v < n; ++v) twin[v] = twin[find(v)];
    for (const std::vector<int>& c : g.Components()) {
      uint32_t mask = 0;
      for (int v : c) mask |= uint32_t{1} << v;
      for (int v : c) component[v] = mask;
    }
    connected = g.Components().size() <= 1;
    std::vector<int> sides;
    for (const std::vector<int>& c : g.Components()) {
      int degree_sum = 0;
      bool thin = true;
      for (int v : c) {
        degree_sum += degree[v];
        thin &= degree[v] <= 2;
      }
      sides.push_back(thin && degree_sum == 2 * (static_cast<int>(c.size()) - 1) ? 1 : 2);
    }
    SetSides(std::move(sides));
  }

  // sides[i]: a lower bound on both sides of any box component i fits in.
  void SetSides(std::vector<int> sides) {
    std::sort(sides.begin(), sides.end());
    lanes.assign(1, 0);
    for (int side : sides) lanes.push_back(lanes.back() + side);
  }
};

class Kernel {
 public:
  using Visit = std::function<bool(const std::vector<Rect>&)>;

  Kernel(const PackingProblem& p, const TargetInfo& t, Control& control,
         const Visit& visit)
      : p_(p), t_(t), control_(control), visit_(visit),
        rows_(p.rows), cols_(p.cols) {}

  void set_task(int index) { task_ = index; }
  void set_collect(std::vector<State>* tasks) { collect_ = tasks; }
  int64_t nodes() const { return nodes_; }
  int64_t prunes() const { return prunes_; }
  bool stopped() const { return stopped_; }

  // Returns true when the search must stop (accepted leaf or abort).
  bool Dfs(State& s) {
    if (collect_ != nullptr && (s.depth == kSplitDepth || s.placed == t_.n)) {
      collect_->push_back(s);
      return false;
    }
    ++nodes_;
    if (nodes_ % kCheckInterval == 0 && ShouldAbort()) return stopped_ = true;
    if (s.placed == t_.n) return Leaf(s);
    if (s.first >= rows_ * cols_ || s.undecided < t_.n - s.placed) {
      ++prunes_;
      return false;
    }
    if (!t_.connected && rows_ < 64 && cols_ < 64 && !LanesSuffice(s)) {
      ++prunes_;
      return false;
    }
    if (p_.monotone_edge && !Mappable(s, nullptr)) {
      ++prunes_;
      return false;
    }
    const int r = s.first / cols_;
    const int c = s.first % cols_;
    const int id = s.placed;
    int cap = cols_ - c;
    for (int dh = 1; r + dh <= rows_; ++dh) {
      const int8_t* row = &s.owner[(r + dh - 1) * cols_ + c];
      int run = 0;
      while (run < cap && row[run] == kUndecided) ++run;
      cap = run;
      if (cap == 0) break;
      for (int dw = 1; dw <= cap; ++dw) {
        if (p_.degree_perimeter && Sides(r, c, dw, dh) < t_.min_degree) continue;
        const Rect rect{c, r, c + dw, r + dh};
        Fill(s, rect, static_cast<int8_t>(id));
        s.rects[id] = rect;
        ++s.placed;
        s.undecided -= dw * dh;
        if (Descend(s)) return true;
        --s.placed;
        s.undecided += dw * dh;
        Fill(s, rect, kUndecided);
      }
    }
    s.owner[s.first] = kEmpty;
    --s.undecided;
    if (Descend(s)) return true;
    ++s.undecided;
    s.owner[s.first] = kUndecided;
    return false;
  }

 private:
  bool ShouldAbort() {
    if (control_.aborted.load(std::memory_order_relaxed)) return true;
    if (control_.winner.load(std::memory_order_relaxed) < task_) return true;
    const int64_t total =
        control_.total_nodes.fetch_add(kCheckInterval, std::memory_order_relaxed) +
        kCheckInterval;
    if ((control_.max_nodes > 0 && total > control_.max_nodes) ||
        (control_.deadline.has_value() &&
         std::chrono::steady_clock::now() > *control_.deadline)) {
      control_.aborted = true;
      return true;
    }
    return false;
  }

  // Placed rectangles sharing a lane belong to one component, so at least
  // (components - clusters) components are still untouched, and they need
  // lanes no placed rectangle crosses.
  bool LanesSuffice(const State& s) const {
    const int components = static_cast<int>(t_.lanes.size()) - 1;
    std::array<int, kMaxPackingVertices> parent{};
    int clusters = s.placed;
    for (int i = 0; i < s.placed; ++i) parent[i] = i;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    uint64_t used_rows = 0, used_cols = 0;
    for (int i = 0; i < s.placed; ++i) {
      const Rect& a = s.rects[i];
      used_rows |= ((uint64_t{1} << a.y2) - 1) & ~((uint64_t{1} << a.y1) - 1);
      used_cols |= ((uint64_t{1} << a.x2) - 1) & ~((uint64_t{1} << a.x1) - 1);
      for (int j = 0; j < i; ++j) {
        const Rect& b = s.rects[j];
        const bool share = (a.y1 < b.y2 && b.y1 < a.y2) || (a.x1 < b.x2 && b.x1 < a.x2);
        if (!share) continue;
        const int x = find(i), y = find(j);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
          --clusters;
        }
      }
    }
    const int untouched = components - clusters;
    if (untouched <= 0) return true;
    const int need = t_.lanes[untouched];
    const int r = s.first / cols_;
    const uint64_t below = ((uint64_t{1} << rows_) - 1) & ~((uint64_t{1} << r) - 1);
    const uint64_t all_cols = (uint64_t{1} << cols_) - 1;
    return std::popcount(below & ~used_rows) >= need &&
           std::popcount(all_cols & ~used_cols) >= need;
  }

  int Sides(int r, int c, int dw, int dh) const {
    return (c > 0 ? dh : 0) + (c + dw < cols_ ? dh : 0) + (r > 0 ? dw : 0) +
           (r + dh < rows_ ? dw : 0);
  }

  void Fill(State& s, const Rect& rect, int8_t value) const {
    for (int y = rect.y1; y < rect.y2; ++y) {
      std::fill_n(&s.owner[y * cols_ + rect.x1], rect.width(), value);
    }
  }

  // Advances past decided cells, checks rows that became complete, recurses,
  // and restores the bookkeeping.
  bool Descend(State& s) {
    const int saved_first = s.first;
    const int saved_rows = s.rows_checked;
    const int total = rows_ * cols_;
    while (s.first < total && s.owner[s.first] != kUndecided) ++s.first;
    bool ok = true;
    if (p_.normal_form || p_.exact_box) {
      const int complete = s.first / cols_;
      for (; ok && s.rows_checked < complete; ++s.rows_checked) {
        ok = RowAcceptable(s, s.rows_checked);
      }
    }
    bool stop = false;
    if (ok) {
      ++s.depth;
      stop = Dfs(s);
      --s.depth;
    } else {
      ++prunes_;
    }
    s.first = saved_first;
    s.rows_checked = saved_rows;
    return stop;
  }

  bool RowEmpty(const State& s, int r) const {
    const int8_t* row = &s.owner[r * cols_];
    return std::all_of(row, row + cols_, [](int8_t o) { return o == kEmpty; });
  }

  bool RowsEqual(const State& s, int a, int b) const {
    return std::equal(&s.owner[a * cols_], &s.owner[a * cols_] + cols_,
                      &s.owner[b * cols_]);
  }

  // Called once row r has no undecided cell, while rectangles remain to place.
  bool RowAcceptable(const State& s, int r) const {
    if (RowEmpty(s, r)) return false;
    return !(p_.normal_form && r > 0 && RowsEqual(s, r, r - 1));
  }

  bool ColumnEmpty(const State& s, int c) const {
    for (int r = 0; r < rows_; ++r) {
      if (s.owner[r * cols_ + c] != kEmpty) return false;
    }
    return true;
  }

  bool ColumnsEqual(const State& s, int a, int b) const {
    for (int r = 0; r < rows_; ++r) {
      if (s.owner[r * cols_ + a] != s.owner[r * cols_ + b]) return false;
    }
    return true;
  }

  // Full line tests once every cell is decided.
  bool LinesAcceptable(const State& s) const {
    if (!p_.normal_form && !p_.exact_box) return true;
    bool seen_empty = false;
    for (int r = 0; r < rows_; ++r) {
      const bool empty = RowEmpty(s, r);
      if (empty && (p_.exact_box || r == 0)) return false;
      if (!empty && seen_empty) return false;
      if (!empty && p_.normal_form && r > 0 && RowsEqual(s, r, r - 1)) {
        return false;
      }
      seen_empty |= empty;
    }
    seen_empty = false;
    for (int c = 0; c < cols_; ++c) {
      const bool empty = ColumnEmpty(s, c);
      if (empty && (p_.exact_box || c == 0)) return false;
      if (!empty && seen_empty) return false;
      if (!empty && p_.normal_form && c > 0 && ColumnsEqual(s, c, c - 1)) {
        return false;
      }
      seen_empty |= empty;
    }
    return true;
  }

  // Sight bookkeeping along one lane.
  void ScanLane(const State& s, int start, int stride, int len, Masks& upper,
                Masks& lower, std::array<int, kMaxPackingVertices>& open) const {
    int prev = -1;
    int last = kEmpty;
    bool gap_undecided = false;
    for (int t = 0, at = start; t < len; ++t, at += stride) {
      const int o = s.owner[at];
      if (o == kUndecided) {
        gap_undecided = true;
      } else if (o >= 0 && o != last) {
        if (prev < 0) {
          if (gap_undecided) ++open[o];
        } else {
          upper[o] |= uint32_t{1} << prev;
          upper[prev] |= uint32_t{1} << o;
          if (gap_undecided) {
            ++open[o];
            ++open[prev];
          } else {
            lower[o] |= uint32_t{1} << prev;
            lower[prev] |= uint32_t{1} << o;
          }
        }
        prev = o;
        gap_undecided = false;
      }
      last = o;
    }
    if (prev >= 0 && gap_undecided) ++open[prev];
  }

  // True iff the placed rectangles admit an injective map into the target
  // consistent with forced and forbidden sight. At a leaf the map is an
  // isomorphism and is written to `phi`.
  bool Mappable(const State& s, std::array<int, kMaxPackingVertices>* phi) const {
    Masks upper{}, lower{};
    std::array<int, kMaxPackingVertices> open{};
    for (int r = 0; r < rows_; ++r) {
      ScanLane(s, r * cols_, 1, cols_, upper, lower, open);
    }
    for (int c = 0; c < cols_; ++c) {
      ScanLane(s, c, cols_, rows_, upper, lower, open);
    }
    const int k = s.placed;
    const int remaining = t_.n - k;
    int lower_edges = 0;
    for (int i = 0; i < k; ++i) lower_edges += std::popcount(lower[i]);
    if (lower_edges / 2 > t_.edges) return false;
    Masks cand{};
    for (int i = 0; i < k; ++i) {
      const int lo = std::popcount(lower[i]);
      const int hi = std::popcount(upper[i]) + std::min(open[i], remaining);
      for (int v = 0; v < t_.n; ++v) {
        if (t_.degree[v] >= lo && t_.degree[v] <= hi) cand[i] |= uint32_t{1} << v;
      }
      if (cand[i] == 0) return false;
    }
    // Consecutive rectangles along a unit lane see each other, so two
    // rectangles sharing a lane are joined by a path: same component.
    Masks share{};
    if (!t_.connected) {
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          const Rect& a = s.rects[i];
          const Rect& b = s.rects[j];
          const bool rows = a.y1 < b.y2 && b.y1 < a.y2;
          const bool cols = a.x1 < b.x2 && b.x1 < a.x2;
          if (rows || cols) {
            share[i] |= uint32_t{1} << j;
            share[j] |= uint32_t{1} << i;
          }
        }
      }
    }
    std::array<int, kMaxPackingVertices> local{};
    return Match(cand, k == 32 ? ~0u : (uint32_t{1} << k) - 1, 0, upper, lower,
                 share, phi != nullptr ? *phi : local);
  }

  bool Match(const Masks& cand, uint32_t todo, uint32_t used, const Masks& upper,
             const Masks& lower, const Masks& share,
             std::array<int, kMaxPackingVertices>& phi) const {
    if (todo == 0) return true;
    int best = -1;
    int best_count = INT_MAX;
    for (uint32_t m = todo; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      const int count = std::popcount(cand[i] & ~used);
      if (count == 0) return false;
      if (count < best_count) {
        best = i;
        best_count = count;
      }
    }
    const int i = best;
    todo &= ~(uint32_t{1} << i);
    for (uint32_t options = cand[i] & ~used; options != 0; options &= options - 1) {
      const int v = std::countr_zero(options);
      const uint32_t bit = uint32_t{1} << v;
      if (t_.twin[v] & ~used & (bit - 1)) continue;
      Masks next = cand;
      bool ok = true;
      for (uint32_t m = todo; m != 0 && ok; m &= m - 1) {
        const int j = std::countr_zero(m);
        if ((lower[i] >> j) & 1) {
          next[j] &= t_.nbr[v];
        } else if (!((upper[i] >> j) & 1)) {
          next[j] &= ~t_.nbr[v];
        }
        if ((share[i] >> j) & 1) next[j] &= t_.component[v];
        next[j] &= ~bit;
        ok = next[j] != 0;
      }
      if (!ok) continue;
      phi[i] = v;
      if (Match(next, todo, used | bit, upper, lower, share, phi)) return true;
    }
    return false;
  }

  // Occupancy code of the image of the used region under one grid symmetry;
  // labels are renumbered by first appearance.
  std::vector<int> ImageCode(const State& s, int used_rows, int used_cols,
                             int kind) const {
    const bool swap = kind >= 4;
    const int out_rows = swap ? used_cols : used_rows;
    const int out_cols = swap ? used_rows : used_cols;
    std::vector<int> code;
    code.reserve(2 + out_rows * out_cols);
    code.push_back(out_rows);
    code.push_back(out_cols);
    std::array<int, kMaxPackingVertices> relabel;
    relabel.fill(-1);
    int next = 0;
    for (int r = 0; r < out_rows; ++r) {
      for (int c = 0; c < out_cols; ++c) {
        int sr = swap ? c : r;
        int sc = swap ? r : c;
        if (kind & 1) sr = used_rows - 1 - sr;
        if (kind & 2) sc = used_cols - 1 - sc;
        const int o = s.owner[sr * cols_ + sc];
        if (o < 0) {
          code.push_back(-1);
        } else {
          if (relabel[o] < 0) relabel[o] = next++;
          code.push_back(relabel[o]);
        }
      }
    }
    return code;
  }

  bool Canonical(const State& s) const {
    int used_rows = rows_, used_cols = cols_;
    while (used_rows > 0 && RowEmpty(s, used_rows - 1)) --used_rows;
    while (used_cols > 0 && ColumnEmpty(s, used_cols - 1)) --used_cols;
    const std::vector<int> own = ImageCode(s, used_rows, used_cols, 0);
    const int kinds = rows_ == cols_ ? 8 : 4;
    for (int kind = 1; kind < kinds; ++kind) {
      if (ImageCode(s, used_rows, used_cols, kind) < own) return false;
    }
    return true;
  }

  bool Leaf(State& s) {
    const int total = rows_ * cols_;
    std::vector<int> filled;
    for (int i = s.first; i < total; ++i) {
      if (s.owner[i] == kUndecided) {
        s.owner[i] = kEmpty;
        filled.push_back(i);
      }
    }
    std::array<int, kMaxPackingVertices> phi{};
    bool accepted = LinesAcceptable(s) && Mappable(s, &phi) &&
                    (!p_.canonical_leaves || Canonical(s));
    bool stop = false;
    if (accepted) {
      std::vector<Rect> witness(t_.n);
      for (int i = 0; i < t_.n; ++i) witness[phi[i]] = s.rects[i];
      stop = visit_(witness);
    } else {
      ++prunes_;
    }
    for (int i : filled) s.owner[i] = kUndecided;
    if (stop) stopped_ = true;
    return stop;
  }

  const PackingProblem& p_;
  const TargetInfo& t_;
  Control& control_;
  const Visit& visit_;
  const int rows_;
  const int cols_;
  int task_ = 0;
  std::vector<State>* collect_ = nullptr;
  int64_t nodes_ = 0;
  int64_t prunes_ = 0;
  bool stopped_ = false;
};

State InitialState(const PackingProblem& p) {
  State s;
  s.owner.assign(p.rows * p.cols, kUndecided);
  s.undecided = p.rows * p.cols;
  for (const Rect& r : p.preplaced) {
    for (int y = r.y1; y < r.y2; ++y) {
      for (int x = r.x1; x < r.x2; ++x) s.owner[y * p.cols + x] = s.placed;
    }
    s.rects[s.placed++] = r;
    s.undecided -= r.area();
  }
  while (s.first < p.rows * p.cols && s.owner[s.first] != kUndecided) ++s.first;
  return s;
}

// Rectangles of different components never share a unit lane (consecutive
// rectangles along a lane see each other), and deleting the lanes a
// component does not use leaves a representation of it. So component C needs
// a box a_C x b_C it fits in, with sum a_C <= rows and sum b_C <= cols.
// Without `exact`, a_C * b_C >= |C| and both sides >= 2 unless C is a path;
// with it, the fit is decided by a search on C alone.

// Fit verdicts of small connected graphs, keyed by adjacency and box.
class FitMemo {
 public:
  std::optional<bool> Get(const std::vector<uint64_t>& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void Put(std::vector<uint64_t> key, bool fits) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(std::move(key), fits);
  }

 private:
  std::mutex mu_;
  std::map<std::vector<uint64_t>, bool> map_;
};

FitMemo& Memo() {
  static FitMemo* memo = new FitMemo;
  return *memo;
}

// False only when the search proves C does not fit in a x b.
bool ComponentFits(const Graph& c, int a, int b,
                   const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  if (a > b) std::swap(a, b);
  std::vector<uint64_t> key;
  for (int v = 0; v < c.num_vertices(); ++v) key.push_back(c.Neighbors(v));
  key.push_back(static_cast<uint64_t>(a) << 32 | static_cast<uint64_t>(b));
  if (std::optional<bool> hit = Memo().Get(key)) return *hit;
  PackingProblem sub;
  sub.target = c;
  sub.rows = a;
  sub.cols = b;
  PackingLimits limits;
  limits.deadline = deadline;
  const PackingResult r = SolvePacking(sub, limits);
  if (r.outcome == PackingOutcome::kAborted) return true;
  const bool fits = r.outcome == PackingOutcome::kFound;
  Memo().Put(std::move(key), fits);
  return fits;
}

// Least side of a box each component fits in, found by search (lanes up to
// `limit`; falls back to the cheap bound on timeouts).
std::vector<int> ComponentSides(
    const Graph& g, int limit,
    const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  std::vector<int> sides;
  for (const std::vector<int>& c : g.Components()) {
    const Graph sub = g.InducedSubgraph(c);
    int a = 1;
    while (a < limit && !ComponentFits(sub, a, limit, deadline)) ++a;
    sides.push_back(a);
  }
  return sides;
}

bool ComponentsFit(const Graph& g, int rows, int cols, bool exact,
                   const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  const std::vector<std::vector<int>> comps = g.Components();
  if (comps.size() <= 1) return true;
  constexpr int kNone = INT_MAX / 2;
  // least[r]: least total of b over the components so far with sum a = r.
  std::vector<int> least(rows + 1, kNone);
  least[0] = 0;
  for (const std::vector<int>& c : comps) {
    const int size = static_cast<int>(c.size());
    int degree_sum = 0;
    bool thin = true;
    for (int v : c) {
      degree_sum += g.Degree(v);
      thin &= g.Degree(v) <= 2;
    }
    const bool path = thin && degree_sum == 2 * (size - 1);
    const int min_side = path ? 1 : 2;
    const Graph sub = g.InducedSubgraph(c);
    // side[a]: least b with C fitting in a x b (kNone if none up to cols).
    std::vector<int> side(rows + 1, kNone);
    int previous = cols;
    for (int a = min_side; a <= rows; ++a) {
      int b = std::max(min_side, (size + a - 1) / a);
      if (exact) {
        while (b <= previous && !ComponentFits(sub, a, b, deadline)) ++b;
        if (b > previous) continue;
        previous = b;
      }
      side[a] = b;
    }
    std::vector<int> next(rows + 1, kNone);
    for (int used = 0; used <= rows; ++used) {
      if (least[used] >= kNone) continue;
      for (int a = min_side; used + a <= rows; ++a) {
        if (side[a] >= kNone) continue;
        next[used + a] = std::min(next[used + a], least[used] + side[a]);
      }
    }
    least = std::move(next);
  }
  return *std::min_element(least.begin(), least.end()) <= cols;
}

bool ProblemUsable(const PackingProblem& p,
                   const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  const int n = p.target.num_vertices();
  return p.rows > 0 && p.cols > 0 && n <= kMaxPackingVertices &&
         static_cast<int>(p.preplaced.size()) <= n && p.rows * p.cols >= n &&
         (!p.preplaced.empty() ||
          ComponentsFit(p.target, p.rows, p.cols, p.component_boxes, deadline));
}

}  // namespace

PackingResult SolvePacking(const PackingProblem& problem,
                           const PackingLimits& limits) {
  PackingResult result;
  if (!ProblemUsable(problem, limits.deadline)) return result;
  TargetInfo target(problem.target);
  if (!target.connected && problem.component_boxes) {
    target.SetSides(ComponentSides(problem.target, std::max(problem.rows, problem.cols),
                                   limits.deadline));
  }
  Control control;
  control.deadline = limits.deadline;
  control.max_nodes = limits.max_nodes;

  // Split the tree at a fixed depth so the task list, and hence every
  // reported counter, is the same for any number of workers.
  std::vector<State> tasks;
  const Kernel::Visit never = [](const std::vector<Rect>&) { return true; };
  Kernel splitter(problem, target, control, never);
  splitter.set_collect(&tasks);
  State root = InitialState(problem);
  splitter.Dfs(root);

  struct TaskResult {
    bool done = false;
    bool found = false;
    std::vector<Rect> witness;
    int64_t nodes = 0;
    int64_t prunes = 0;
  };
  std::vector<TaskResult> outcomes(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t index = next.fetch_add(1);
      if (index >= tasks.size()) return;
      if (control.aborted || control.winner.load() < static_cast<int>(index)) {
        continue;
      }
      TaskResult& out = outcomes[index];
      const Kernel::Visit keep = [&out](const std::vector<Rect>& w) {
        out.found = true;
        out.witness = w;
        return true;
      };
      Kernel kernel(problem, target, control, keep);
      kernel.set_task(static_cast<int>(index));
      kernel.Dfs(tasks[index]);
      out.nodes = kernel.nodes();
      out.prunes = kernel.prunes();
      out.done = out.found || !kernel.stopped();
      if (out.found) {
        int current = control.winner.load();
        while (static_cast<int>(index) < current &&
               !control.winner.compare_exchange_weak(current, static_cast<int>(index))) {
        }
      }
    }
  };
  const int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  result.nodes = splitter.nodes();
  result.prunes = splitter.prunes();
  for (size_t i = 0; i < tasks.size(); ++i) {
    const TaskResult& out = outcomes[i];
    if (!out.done) {
      result.outcome = PackingOutcome::kAborted;
      result.witness.clear();
      return result;
    }
    result.nodes += out.nodes;
    result.prunes += out.prunes;
    if (out.found) {
      result.outcome = PackingOutcome::kFound;
      result.witness = out.witness;
      return result;
    }
  }
  result.outcome = PackingOutcome::kExhausted;
  return result;
}

int64_t EnumeratePackings(
    const PackingProblem& problem,
    const std::function<bool(const std::vector<Rect>&)>& visit) {
  if (!ProblemUsable(problem, std::nullopt)) return 0;
  const TargetInfo target(problem.target);
  Control control;
  int64_t count = 0;
  const Kernel::Visit counted = [&](const std::vector<Rect>& w) {
    ++count;
    return !visit(w);
  };
  Kernel kernel(problem, target, control, counted);
  State root = InitialState(problem);
  kernel.Dfs(root);
  return count;
}

}  // namespace rvg
