#pragma once

#include <functional>
#include <random>

#include "domsd/graph.hpp"
#include "domsd/tree_class.hpp"

namespace domsd {

// Seeded generator with a bias-free bounded draw. The engine's output stream
// is pinned by the standard, so identical seeds reproduce identical graphs
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, bound).
  int below(int bound) {
    if (bound <= 0) throw PreconditionError("Rng::below: bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<int>(r % b);
  }

  // Uniform draw from [lo, hi] inclusive.
  int between(int lo, int hi) {
    if (lo > hi) throw PreconditionError("Rng::between: empty range");
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

inline Graph path(int n) {
  if (n < 1) throw PreconditionError("path: need at least one vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle: need at least three vertices");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) {
  if (n < 1) throw PreconditionError("complete: need at least one vertex");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Sides 0..p-1 and p..p+q-1.
inline Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("complete_bipartite: sides must be nonempty");
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

// Star with center 0 and q leaves.
inline Graph star(int q) {
  if (q < 1) throw PreconditionError("star: need at least one leaf");
  return complete_bipartite(1, q);
}

// Wheel with n rim vertices 0..n-1 and the hub last (id n).
inline Graph wheel(int n) {
  if (n < 3) throw PreconditionError("wheel: need at least three rim vertices");
  Graph g = cycle(n);
  g.add_vertices(1);
  for (int i = 0; i < n; ++i) g.add_edge(i, n);
  return g;
}

namespace detail {

// Standard decoding: repeatedly join the smallest remaining leaf to the next
// sequence entry. Every sequence over [0,n) of length n-2 yields a distinct
// labeled tree on n vertices.
inline Graph pruefer_decode(const std::vector<int>& seq, int n) {
  Graph g(n);
  if (n == 1) return g;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++deg[static_cast<std::size_t>(s)];
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (!used[static_cast<std::size_t>(leaf)] && deg[static_cast<std::size_t>(leaf)] == 1) {
        g.add_edge(leaf, s);
        used[static_cast<std::size_t>(leaf)] = 1;
        --deg[static_cast<std::size_t>(s)];
        break;
      }
    }
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[static_cast<std::size_t>(i)] && deg[static_cast<std::size_t>(i)] == 1) {
      if (u < 0)
        u = i;
      else
        v = i;
    }
  }
  g.add_edge(u, v);
  return g;
}

}  // namespace detail

// Uniform random labeled tree on n vertices.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_tree: need at least two vertices");
  Rng rng(seed);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& s : seq) s = rng.below(n);
  return detail::pruefer_decode(seq, n);
}

// Exhaustive stream of all n^(n-2) labeled trees on n vertices (2 <= n <= 9),
// in lexicographic sequence order.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n) : n_(n) {
    if (n < 2 || n > 9)
      throw PreconditionError("TreeEnumerator: n must be in [2, 9]");
    seq_.assign(static_cast<std::size_t>(n - 2), 0);
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (int i = 0; i < n_ - 2; ++i) t *= static_cast<std::uint64_t>(n_);
    return t;
  }

  std::optional<Graph> next() {
    if (done_) return std::nullopt;
    Graph g = detail::pruefer_decode(seq_, n_);
    int i = static_cast<int>(seq_.size()) - 1;
    while (i >= 0 && seq_[static_cast<std::size_t>(i)] == n_ - 1) {
      seq_[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0)
      done_ = true;
    else
      ++seq_[static_cast<std::size_t>(i)];
    return g;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
};

inline void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
  TreeEnumerator en(n);
  while (auto g = en.next()) fn(*g);
}

// Random spanning tree plus uniformly chosen extra edges. Connected and
// simple with exactly m edges; the distribution over connected graphs is
// deliberately not uniform.
inline Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_connected_graph: need at least one vertex");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw PreconditionError("random_connected_graph: infeasible edge count");
  Rng rng(seed);
  Graph g(n);
  if (n >= 2) {
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = rng.below(n);
    g = detail::pruefer_decode(seq, n);
  }
  std::vector<Edge> spare;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) spare.emplace_back(i, j);
  // partial Fisher-Yates: pick the required number of extra edges
  const int extra = m - (n - 1);
  for (int i = 0; i < extra; ++i) {
    const int j = i + rng.below(static_cast<int>(spare.size()) - i);
    std::swap(spare[static_cast<std::size_t>(i)], spare[static_cast<std::size_t>(j)]);
    g.add_edge(spare[static_cast<std::size_t>(i)].a, spare[static_cast<std::size_t>(i)].b);
  }
  return g;
}

// Random construction script: each step picks an operation uniformly and a
// uniformly random anchor of the status that operation requires.
inline FamilyScript random_family_f_script(int length, std::uint64_t seed) {
  if (length < 0) throw PreconditionError("random_family_f_script: negative length");
  Rng rng(seed);
  LabeledTree lt = family_base();
  FamilyScript script;
  script.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const auto op = rng.below(2) == 0 ? FamilyStep::Op::attach_path3
                                      : FamilyStep::Op::attach_path2;
    const Status required =
        op == FamilyStep::Op::attach_path3 ? Status::A : Status::B;
    const std::vector<VertexId> anchors = lt.labeling.with_status(required);
    const FamilyStep step{op, anchors[static_cast<std::size_t>(
                                  rng.below(static_cast<int>(anchors.size())))]};
    apply_family_step(lt, step);
    script.push_back(step);
  }
  return script;
}

// All connected labeled graphs on n vertices (1 <= n <= 7), enumerated by
// edge subsets of K_n in canonical pair order.
inline void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7)
    throw PreconditionError("enumerate_connected_graphs: n must be in [1, 7]");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int p = static_cast<int>(pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    // adjacency bitmaps for a quick connectivity test before building
    std::uint32_t adj[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int k = 0; k < p; ++k) {
      if ((mask >> k) & 1u) {
        adj[pairs[static_cast<std::size_t>(k)].first] |=
            1u << pairs[static_cast<std::size_t>(k)].second;
        adj[pairs[static_cast<std::size_t>(k)].second] |=
            1u << pairs[static_cast<std::size_t>(k)].first;
      }
    }
    std::uint32_t reach = 1, frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u) next |= adj[v];
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach != (1u << n) - 1) continue;
    Graph g(n);
    for (int k = 0; k < p; ++k)
      if ((mask >> k) & 1u)
        g.add_edge(pairs[static_cast<std::size_t>(k)].first,
                   pairs[static_cast<std::size_t>(k)].second);
    fn(g);
  }
}

}  // namespace domsd
