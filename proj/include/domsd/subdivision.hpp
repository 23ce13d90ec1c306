#pragma once

#include "domsd/domination.hpp"

namespace domsd {

// Per-edge and minimum multisubdivision numbers. Every per-edge value lies in
// {1,2,3}; a value outside that range would contradict the universal bound
// and is reported as an InternalError instead.
struct MsdReport {
  int msd = 0;
  Edge witness_edge;
  std::vector<std::pair<Edge, int>> per_edge;  // canonical edge order
  int gamma_base = 0;
};

struct SdReport {
  std::optional<int> sd;            // nullopt: no subset within budget raises gamma
  std::vector<Edge> witness_edges;  // empty when budget exceeded
  int budget = 0;
  int gamma_base = 0;
};

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw PreconditionError(std::string(op) + ": graph must be connected and nonempty");
}

// Subdividing edges of a tree yields a tree, so tree instances can use the
// linear DP for every derived graph instead of branch and bound.
inline int gamma_value(const Graph& g, bool tree_mode, const SolveLimits& limits) {
  if (tree_mode) return gamma_tree_value(g);
  return gamma(g, limits).gamma;
}

inline int msd_edge_with_base(const Graph& g, const Edge& e, int base, bool tree_mode,
                              const SolveLimits& limits) {
  for (int t = 1; t <= 3; ++t) {
    const int sub = gamma_value(subdivide(g, e, t), tree_mode, limits);
    if (sub < base)
      throw InternalError("subdivision decreased the domination number");
    if (sub > base) return t;
  }
  throw InternalError("msd(uv) exceeds 3 on some edge; this contradicts the 1..3 bound");
}

}  // namespace detail

// Smallest t in {1,2,3} with gamma(G_{e,t}) > gamma(G).
inline int msd_edge(const Graph& g, const Edge& e, const SolveLimits& limits = {}) {
  detail::require_connected(g, "msd_edge");
  if (g.vertex_count() < 2) throw PreconditionError("msd_edge: need at least two vertices");
  if (!g.has_edge(e)) throw PreconditionError("msd_edge: edge not present in graph");
  const bool tree_mode = is_tree(g);
  const int base = detail::gamma_value(g, tree_mode, limits);
  return detail::msd_edge_with_base(g, e, base, tree_mode, limits);
}

// Domination multisubdivision number: minimum of msd(uv) over all edges.
inline MsdReport msd(const Graph& g, const SolveLimits& limits = {}) {
  detail::require_connected(g, "msd");
  if (g.edge_count() == 0) throw PreconditionError("msd: graph has no edges");
  const bool tree_mode = is_tree(g);
  MsdReport r;
  r.gamma_base = detail::gamma_value(g, tree_mode, limits);
  r.msd = 4;
  for (const Edge& e : g.edges()) {
    const int t = detail::msd_edge_with_base(g, e, r.gamma_base, tree_mode, limits);
    r.per_edge.emplace_back(e, t);
    if (t < r.msd) {
      r.msd = t;
      r.witness_edge = e;
    }
  }
  return r;
}

inline int default_sd_budget(const Graph& g) { return std::min(g.edge_count(), 5); }

// Domination subdivision number, searched up to `budget` edges: smallest k
// such that subdividing some k-subset of edges once each raises gamma.
// Subsets are scanned in increasing size, lexicographic within each size over
// the canonical edge order, so the witness is reproducible.
inline SdReport sd(const Graph& g, int budget, const SolveLimits& limits = {}) {
  detail::require_connected(g, "sd");
  if (g.vertex_count() < 3)
    throw PreconditionError("sd: defined for connected graphs of order at least 3");
  if (budget < 1) throw PreconditionError("sd: budget must be positive");
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  budget = std::min(budget, m);
  const bool tree_mode = is_tree(g);

  SdReport r;
  r.budget = budget;
  r.gamma_base = detail::gamma_value(g, tree_mode, limits);
  std::vector<int> idx;
  std::vector<Edge> subset;
  for (int k = 1; k <= budget; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(es[static_cast<std::size_t>(i)]);
      const int sub = detail::gamma_value(subdivide_each_once(g, subset), tree_mode, limits);
      if (sub < r.gamma_base)
        throw InternalError("subdivision decreased the domination number");
      if (sub > r.gamma_base) {
        r.sd = k;
        r.witness_edges = subset;
        return r;
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return r;  // exceeds budget
}

// Decision predicate: does every single-edge subdivision leave gamma
// unchanged? Equivalent to msd(G) > 1.
inline bool sd_is_greater_than_one(const Graph& g, const SolveLimits& limits = {}) {
  detail::require_connected(g, "sd_is_greater_than_one");
  if (g.vertex_count() < 3)
    throw PreconditionError("sd_is_greater_than_one: need at least 3 vertices");
  const bool tree_mode = is_tree(g);
  const int base = detail::gamma_value(g, tree_mode, limits);
  for (const Edge& e : g.edges()) {
    const int sub = detail::gamma_value(subdivide(g, e, 1), tree_mode, limits);
    if (sub < base) throw InternalError("subdivision decreased the domination number");
    if (sub > base) return false;
  }
  return true;
}

}  // namespace domsd
