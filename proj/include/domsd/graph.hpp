#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domsd {

using VertexId = int;

// Malformed input text (edge lists, DIMACS files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its documented domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation contradicted an invariant that must hold unconditionally.
// Solver bugs surface here instead of leaking wrong answers.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver exceeded its wall-clock budget.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unordered vertex pair, stored with a < b. Self-loops are rejected.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(std::min(u, v)), b(std::max(u, v)) {
    if (u == v) throw PreconditionError("self-loops are not allowed");
    if (a < 0) throw PreconditionError("negative vertex id in edge");
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over dense vertex ids [0, n).
// Plain value type: deriving a variant means copying. Adjacency lists and the
// edge list are kept sorted, so iteration order is canonical everywhere; the
// deterministic searches in this toolkit rely on that.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Appends `count` isolated vertices with ids n, n+1, ...
  void add_vertices(int count) {
    if (count < 0) throw PreconditionError("cannot add a negative number of vertices");
    n_ += count;
    adj_.resize(static_cast<std::size_t>(n_));
  }

  void add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    Edge e(u, v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos != edges_.end() && *pos == e) throw PreconditionError("duplicate edge");
    edges_.insert(pos, e);
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
  }
  bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

  // Open neighborhood N(v), ascending ids.
  const std::vector<VertexId>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  // All edges sorted by (a, b): the canonical edge order.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  static void insert_sorted(std::vector<VertexId>& xs, VertexId v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw PreconditionError("vertex id out of range: " + std::to_string(v));
  }

  int n_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

// Stable content hash of (n, sorted edge list); used to tie dominating-set
// certificates to the graph they certify.
inline std::uint64_t fingerprint(const Graph& g) {
  constexpr std::uint64_t kPrime = 1099511628211ull;
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= kPrime;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.a));
    mix(static_cast<std::uint64_t>(e.b));
  }
  return h;
}

// Replaces the edge uv by the path (u, x_1, ..., x_t, v). The t new vertices
// get ids n, ..., n+t-1 in path order; existing ids are untouched, so callers
// can track original vertices across subdivisions.
inline Graph subdivide(const Graph& g, const Edge& e, int t) {
  if (t < 1) throw PreconditionError("subdivide: need at least one subdivision vertex");
  if (!g.has_edge(e)) throw PreconditionError("subdivide: edge not present in graph");
  const int n = g.vertex_count();
  Graph h(n + t);
  for (const Edge& f : g.edges())
    if (f != e) h.add_edge(f.a, f.b);
  VertexId prev = e.a;
  for (int i = 0; i < t; ++i) {
    h.add_edge(prev, n + i);
    prev = n + i;
  }
  h.add_edge(prev, e.b);
  return h;
}

// Subdivides each listed edge once, simultaneously. Subset semantics: the
// edges must be distinct edges of g; new vertices are numbered n, n+1, ... in
// canonical order of the subdivided edges.
inline Graph subdivide_each_once(const Graph& g, std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw PreconditionError("subdivide_each_once: duplicate edge in subdivision set");
  for (const Edge& e : es)
    if (!g.has_edge(e)) throw PreconditionError("subdivide_each_once: edge not present in graph");
  const int n = g.vertex_count();
  Graph h(n + static_cast<int>(es.size()));
  for (const Edge& f : g.edges())
    if (!std::binary_search(es.begin(), es.end(), f)) h.add_edge(f.a, f.b);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const VertexId x = n + static_cast<int>(i);
    h.add_edge(es[i].a, x);
    h.add_edge(x, es[i].b);
  }
  return h;
}

struct VertexClass {
  bool leaf = false;            // degree exactly 1
  bool support = false;         // adjacent to at least one leaf
  bool strong_support = false;  // adjacent to at least two leaves
};

inline std::vector<VertexClass> classify_vertices(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexClass> out(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) out[static_cast<std::size_t>(v)].leaf = g.degree(v) == 1;
  for (VertexId v = 0; v < n; ++v) {
    int leaf_neighbors = 0;
    for (VertexId u : g.neighbors(v))
      if (out[static_cast<std::size_t>(u)].leaf) ++leaf_neighbors;
    out[static_cast<std::size_t>(v)].support = leaf_neighbors >= 1;
    out[static_cast<std::size_t>(v)].strong_support = leaf_neighbors >= 2;
  }
  return out;
}

inline bool has_strong_support(const Graph& g) {
  const auto cls = classify_vertices(g);
  return std::any_of(cls.begin(), cls.end(),
                     [](const VertexClass& c) { return c.strong_support; });
}

// BFS distances from src; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, VertexId src) {
  if (src < 0 || src >= g.vertex_count())
    throw PreconditionError("bfs_distances: source out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(g.vertex_count()));
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId u : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

inline std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
  const auto dist = bfs_distances(g, u);
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("distance: vertex out of range");
  const int d = dist[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

inline int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("diameter: graph is empty");
  if (!is_connected(g)) throw PreconditionError("diameter: graph is not connected");
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

inline bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (VertexId u : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] < 0) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// PN[u, D] = N[u] - N[D - {u}], the vertices dominated by u and by no other
// member of D. Requires u in D.
inline std::vector<VertexId> private_neighborhood(const Graph& g, VertexId u,
                                                  const std::vector<VertexId>& d) {
  if (u < 0 || u >= g.vertex_count())
    throw PreconditionError("private_neighborhood: vertex out of range");
  if (std::find(d.begin(), d.end(), u) == d.end())
    throw PreconditionError("private_neighborhood: u must belong to the set");
  const int n = g.vertex_count();
  std::vector<char> in_closed_u(static_cast<std::size_t>(n), 0);
  in_closed_u[static_cast<std::size_t>(u)] = 1;
  for (VertexId w : g.neighbors(u)) in_closed_u[static_cast<std::size_t>(w)] = 1;
  std::vector<char> covered_by_rest(static_cast<std::size_t>(n), 0);
  for (VertexId w : d) {
    if (w == u) continue;
    if (w < 0 || w >= n) throw PreconditionError("private_neighborhood: set member out of range");
    covered_by_rest[static_cast<std::size_t>(w)] = 1;
    for (VertexId x : g.neighbors(w)) covered_by_rest[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (in_closed_u[static_cast<std::size_t>(v)] && !covered_by_rest[static_cast<std::size_t>(v)])
      out.push_back(v);
  return out;
}

}  // namespace domsd
