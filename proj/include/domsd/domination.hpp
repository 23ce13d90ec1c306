#pragma once

#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <numeric>
#include <utility>

#include "domsd/graph.hpp"

namespace domsd {

// Optional wall-clock budget for exact solvers.
struct SolveLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static SolveLimits within(std::chrono::milliseconds budget) {
    return SolveLimits{std::chrono::steady_clock::now() + budget};
  }
};

// A vertex subset together with the fingerprint of the graph it certifies.
struct DominatingSet {
  std::vector<VertexId> vertices;  // ascending
  std::uint64_t graph_fingerprint = 0;
};

struct GammaResult {
  int gamma = 0;
  DominatingSet witness;
};

inline bool is_dominating(const Graph& g, const std::vector<VertexId>& d) {
  const int n = g.vertex_count();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (VertexId v : d) {
    if (v < 0 || v >= n) throw PreconditionError("is_dominating: vertex out of range");
    covered[static_cast<std::size_t>(v)] = 1;
    for (VertexId u : g.neighbors(v)) covered[static_cast<std::size_t>(u)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool certifies(const DominatingSet& d, const Graph& g) {
  return d.graph_fingerprint == fingerprint(g) && is_dominating(g, d.vertices);
}

namespace detail {

// Single-word bitset; fast path for graphs with at most 64 vertices.
struct Mask64 {
  std::uint64_t w = 0;

  static Mask64 zero(int) { return {}; }
  static Mask64 full(int n) { return {n >= 64 ? ~0ull : ((1ull << n) - 1)}; }
  void set(int i) { w |= std::uint64_t{1} << i; }
  bool test(int i) const { return (w >> i) & 1u; }
  int count() const { return std::popcount(w); }
  bool intersects(const Mask64& o) const { return (w & o.w) != 0; }
  Mask64 and_not(const Mask64& o) const { return {w & ~o.w}; }
  Mask64& operator|=(const Mask64& o) {
    w |= o.w;
    return *this;
  }
  bool operator==(const Mask64&) const = default;
  template <class F>
  void for_each_bit(F f) const {
    for (std::uint64_t x = w; x != 0; x &= x - 1) f(std::countr_zero(x));
  }
};

// Multi-word bitset for larger graphs. Same interface as Mask64.
struct MaskWide {
  std::vector<std::uint64_t> w;

  static MaskWide zero(int n) { return {std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
  static MaskWide full(int n) {
    MaskWide m = zero(n);
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }
  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool intersects(const MaskWide& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  MaskWide and_not(const MaskWide& o) const {
    MaskWide r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  MaskWide& operator|=(const MaskWide& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  bool operator==(const MaskWide&) const = default;
  template <class F>
  void for_each_bit(F f) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1)
        f(static_cast<int>(i) * 64 + std::countr_zero(x));
  }
};

// Exact minimum dominating set by branch and bound.
//
// Branching rule: take an undominated vertex with the fewest remaining
// coverage options and branch on which member of its closed neighborhood
// enters the set; options already tried are excluded on later branches.
// Bounds: a greedy cover seeds the incumbent, and a packing of undominated
// vertices with pairwise disjoint option sets gives the lower bound.
template <class Mask>
class MdsSearch {
 public:
  MdsSearch(const Graph& g, SolveLimits limits)
      : g_(g),
        limits_(limits),
        n_(g.vertex_count()),
        all_(Mask::full(g.vertex_count())),
        zero_(Mask::zero(g.vertex_count())) {
    closed_.assign(static_cast<std::size_t>(n_), zero_);
    for (VertexId v = 0; v < n_; ++v) {
      closed_[static_cast<std::size_t>(v)].set(v);
      for (VertexId u : g.neighbors(v)) closed_[static_cast<std::size_t>(v)].set(u);
    }
    cand_scratch_.resize(static_cast<std::size_t>(n_) + 1);
    opt_scratch_.resize(static_cast<std::size_t>(n_) + 1);
  }

  GammaResult run(std::vector<VertexId> forced) {
    check_deadline();
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    for (VertexId v : forced)
      if (v < 0 || v >= n_) throw PreconditionError("forced vertex out of range");
    current_ = std::move(forced);
    dominated_ = zero_;
    banned_ = zero_;
    for (VertexId v : current_) dominated_ |= closed_[static_cast<std::size_t>(v)];
    best_ = greedy_complete();
    if (!(dominated_ == all_)) dfs(0);
    std::sort(best_.begin(), best_.end());
    return GammaResult{static_cast<int>(best_.size()),
                       DominatingSet{best_, fingerprint(g_)}};
  }

 private:
  std::vector<VertexId> greedy_complete() const {
    Mask dom = dominated_;
    std::vector<VertexId> sol = current_;
    while (!(dom == all_)) {
      int best_v = -1, best_gain = 0;
      for (VertexId v = 0; v < n_; ++v) {
        const int gain = closed_[static_cast<std::size_t>(v)].and_not(dom).count();
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      sol.push_back(best_v);
      dom |= closed_[static_cast<std::size_t>(best_v)];
    }
    return sol;
  }

  void check_deadline() {
    if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline)
      throw TimeoutError("domination solver exceeded its wall-clock budget");
  }

  void dfs(int depth) {
    if ((++nodes_ & 1023u) == 0) check_deadline();
    if (dominated_ == all_) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + 1 >= best_.size()) return;

    auto& cands = cand_scratch_[static_cast<std::size_t>(depth)];
    cands.clear();
    for (VertexId v = 0; v < n_; ++v) {
      if (dominated_.test(v)) continue;
      const int c = closed_[static_cast<std::size_t>(v)].and_not(banned_).count();
      if (c == 0) return;  // v can no longer be covered on this branch
      cands.emplace_back(c, v);
    }
    std::sort(cands.begin(), cands.end());

    Mask blocked = zero_;
    std::size_t lb = 0;
    for (const auto& [c, v] : cands) {
      const Mask opts = closed_[static_cast<std::size_t>(v)].and_not(banned_);
      if (!opts.intersects(blocked)) {
        ++lb;
        blocked |= opts;
      }
    }
    if (current_.size() + lb >= best_.size()) return;

    const VertexId branch_v = cands.front().second;
    auto& opts = opt_scratch_[static_cast<std::size_t>(depth)];
    opts.clear();
    closed_[static_cast<std::size_t>(branch_v)].and_not(banned_).for_each_bit(
        [&](int u) { opts.push_back(u); });

    const Mask saved_banned = banned_;
    for (VertexId u : opts) {
      const Mask saved_dom = dominated_;
      current_.push_back(u);
      dominated_ |= closed_[static_cast<std::size_t>(u)];
      dfs(depth + 1);
      dominated_ = saved_dom;
      current_.pop_back();
      banned_.set(u);
    }
    banned_ = saved_banned;
  }

  const Graph& g_;
  SolveLimits limits_;
  int n_;
  Mask all_, zero_;
  std::vector<Mask> closed_;
  Mask dominated_, banned_;
  std::vector<VertexId> current_, best_;
  std::vector<std::vector<std::pair<int, VertexId>>> cand_scratch_;
  std::vector<std::vector<VertexId>> opt_scratch_;
  std::uint64_t nodes_ = 0;
};

template <class Mask>
GammaResult brute_force_gamma(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Mask> closed(static_cast<std::size_t>(n), Mask::zero(n));
  for (VertexId v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)].set(v);
    for (VertexId u : g.neighbors(v)) closed[static_cast<std::size_t>(v)].set(u);
  }
  const Mask all = Mask::full(n);
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask cover = Mask::zero(n);
      for (int i : idx) cover |= closed[static_cast<std::size_t>(i)];
      if (cover == all) {
        std::vector<VertexId> witness(idx.begin(), idx.end());
        return GammaResult{k, DominatingSet{witness, fingerprint(g)}};
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw InternalError("gamma_bruteforce: no dominating set found");  // unreachable
}

// Tree DP over states {in set, dominated by a child, waiting for the parent}.
// Returns only the value; gamma_tree() adds witness reconstruction.
inline int gamma_tree_value(const Graph& t) {
  const int n = t.vertex_count();
  constexpr int kInf = 1 << 28;
  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId u : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        parent[static_cast<std::size_t>(u)] = v;
        order.push_back(u);
      }
    }
  }
  std::vector<int> in_set(static_cast<std::size_t>(n)), dominated(static_cast<std::size_t>(n)),
      waiting(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    long long sum_any = 0, sum_self = 0, sum_dom = 0;
    int flip = kInf;
    bool free_cover = false, has_child = false;
    for (VertexId c : t.neighbors(v)) {
      if (c == parent[static_cast<std::size_t>(v)]) continue;
      has_child = true;
      const std::size_t ci = static_cast<std::size_t>(c);
      sum_any += std::min({in_set[ci], dominated[ci], waiting[ci]});
      const int best01 = std::min(in_set[ci], dominated[ci]);
      sum_self += best01;
      sum_dom += dominated[ci];
      if (in_set[ci] <= dominated[ci])
        free_cover = true;
      else
        flip = std::min(flip, in_set[ci] - dominated[ci]);
    }
    const std::size_t vi = static_cast<std::size_t>(v);
    if (!has_child) {
      in_set[vi] = 1;
      dominated[vi] = kInf;
      waiting[vi] = 0;
    } else {
      in_set[vi] = static_cast<int>(std::min<long long>(kInf, 1 + sum_any));
      dominated[vi] = static_cast<int>(
          std::min<long long>(kInf, sum_self + (free_cover ? 0 : flip)));
      waiting[vi] = static_cast<int>(std::min<long long>(kInf, sum_dom));
    }
  }
  return std::min(in_set[0], dominated[0]);
}

}  // namespace detail

// Exact domination number by branch and bound. Agrees with gamma_bruteforce
// by contract; that agreement is enforced across the test corpus.
inline GammaResult gamma(const Graph& g, const SolveLimits& limits = {}) {
  if (g.vertex_count() == 0) throw PreconditionError("gamma: graph has no vertices");
  if (g.vertex_count() <= 64) return detail::MdsSearch<detail::Mask64>(g, limits).run({});
  return detail::MdsSearch<detail::MaskWide>(g, limits).run({});
}

// Minimum dominating set among those containing every vertex of `forced`.
inline GammaResult gamma_forced(const Graph& g, std::vector<VertexId> forced,
                                const SolveLimits& limits = {}) {
  if (g.vertex_count() == 0) throw PreconditionError("gamma_forced: graph has no vertices");
  if (g.vertex_count() <= 64)
    return detail::MdsSearch<detail::Mask64>(g, limits).run(std::move(forced));
  return detail::MdsSearch<detail::MaskWide>(g, limits).run(std::move(forced));
}

// Independent oracle: subsets enumerated in increasing cardinality,
// lexicographic within each cardinality, first dominating set wins.
inline GammaResult gamma_bruteforce(const Graph& g, int cap = 20) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("gamma_bruteforce: graph has no vertices");
  if (n > cap)
    throw PreconditionError("gamma_bruteforce: vertex count " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  if (n <= 64) return detail::brute_force_gamma<detail::Mask64>(g);
  return detail::brute_force_gamma<detail::MaskWide>(g);
}

// Linear-time exact domination number for trees, with witness.
inline GammaResult gamma_tree(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("gamma_tree: input is not a tree");
  const int n = t.vertex_count();
  constexpr int kInf = 1 << 28;
  if (n == 1) return GammaResult{1, DominatingSet{{0}, fingerprint(t)}};

  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId u : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        parent[static_cast<std::size_t>(u)] = v;
        order.push_back(u);
      }
    }
  }

  std::vector<int> in_set(static_cast<std::size_t>(n)), dominated(static_cast<std::size_t>(n)),
      waiting(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    long long sum_any = 0, sum_self = 0, sum_dom = 0;
    int flip = kInf;
    bool free_cover = false, has_child = false;
    for (VertexId c : t.neighbors(v)) {
      if (c == parent[static_cast<std::size_t>(v)]) continue;
      has_child = true;
      const std::size_t ci = static_cast<std::size_t>(c);
      sum_any += std::min({in_set[ci], dominated[ci], waiting[ci]});
      sum_self += std::min(in_set[ci], dominated[ci]);
      sum_dom += dominated[ci];
      if (in_set[ci] <= dominated[ci])
        free_cover = true;
      else
        flip = std::min(flip, in_set[ci] - dominated[ci]);
    }
    const std::size_t vi = static_cast<std::size_t>(v);
    if (!has_child) {
      in_set[vi] = 1;
      dominated[vi] = kInf;
      waiting[vi] = 0;
    } else {
      in_set[vi] = static_cast<int>(std::min<long long>(kInf, 1 + sum_any));
      dominated[vi] = static_cast<int>(
          std::min<long long>(kInf, sum_self + (free_cover ? 0 : flip)));
      waiting[vi] = static_cast<int>(std::min<long long>(kInf, sum_dom));
    }
  }

  // Reconstruct one optimal set by walking the decisions down from the root.
  std::vector<VertexId> witness;
  std::vector<std::pair<VertexId, int>> stack;  // (vertex, state 0=in 1=dominated 2=waiting)
  stack.emplace_back(0, in_set[0] <= dominated[0] ? 0 : 1);
  while (!stack.empty()) {
    const auto [v, state] = stack.back();
    stack.pop_back();
    const std::size_t vi = static_cast<std::size_t>(v);
    if (state == 0) witness.push_back(v);
    bool free_cover = false;
    VertexId flip_child = -1;
    int flip_cost = kInf;
    if (state == 1) {
      for (VertexId c : t.neighbors(v)) {
        if (c == parent[vi]) continue;
        const std::size_t ci = static_cast<std::size_t>(c);
        if (in_set[ci] <= dominated[ci])
          free_cover = true;
        else if (in_set[ci] - dominated[ci] < flip_cost) {
          flip_cost = in_set[ci] - dominated[ci];
          flip_child = c;
        }
      }
    }
    for (VertexId c : t.neighbors(v)) {
      if (c == parent[vi]) continue;
      const std::size_t ci = static_cast<std::size_t>(c);
      int child_state;
      if (state == 0) {
        const int m = std::min({in_set[ci], dominated[ci], waiting[ci]});
        child_state = (in_set[ci] == m) ? 0 : (dominated[ci] == m ? 1 : 2);
      } else if (state == 2) {
        child_state = 1;
      } else {
        child_state = (in_set[ci] <= dominated[ci]) ? 0 : 1;
        if (!free_cover && c == flip_child) child_state = 0;
      }
      stack.emplace_back(c, child_state);
    }
  }
  std::sort(witness.begin(), witness.end());
  return GammaResult{static_cast<int>(witness.size()),
                     DominatingSet{witness, fingerprint(t)}};
}

// The vertices contained in no minimum dominating set: exactly those whose
// forced variant costs more than gamma itself.
inline std::vector<VertexId> no_gamma_set_vertices(const Graph& g,
                                                   const SolveLimits& limits = {}) {
  const GammaResult base = gamma(g, limits);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(base.witness.vertices.begin(), base.witness.vertices.end(), v))
      continue;  // already in a minimum set
    if (gamma_forced(g, {v}, limits).gamma > base.gamma) out.push_back(v);
  }
  return out;
}

}  // namespace domsd
