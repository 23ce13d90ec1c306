#pragma once

#include "domsd/domination.hpp"

namespace domsd {

enum class Status : std::uint8_t { A, B };

inline char status_letter(Status s) { return s == Status::A ? 'A' : 'B'; }

// Per-vertex A/B labeling of a tree. A(T) is the set of A-labeled vertices.
struct TreeStatusLabeling {
  std::vector<Status> statuses;  // indexed by vertex id

  std::vector<VertexId> with_status(Status s) const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < statuses.size(); ++v)
      if (statuses[v] == s) out.push_back(static_cast<VertexId>(v));
    return out;
  }
};

// One growth step of the labeled-tree family:
//  - attach_path3 hangs a path (x,y,z) off an A-vertex; x,y get B, z gets A.
//  - attach_path2 hangs a path (x,y) off a B-vertex; x gets B, y gets A.
struct FamilyStep {
  enum class Op : std::uint8_t { attach_path3, attach_path2 };
  Op op = Op::attach_path3;
  VertexId anchor = 0;
};

using FamilyScript = std::vector<FamilyStep>;

struct LabeledTree {
  Graph tree;
  TreeStatusLabeling labeling;
};

// The base of the family: a 4-path with A-leaves and B-supports.
inline LabeledTree family_base() {
  LabeledTree lt;
  lt.tree = Graph(4);
  lt.tree.add_edge(0, 1);
  lt.tree.add_edge(1, 2);
  lt.tree.add_edge(2, 3);
  lt.labeling.statuses = {Status::A, Status::B, Status::B, Status::A};
  return lt;
}

inline void apply_family_step(LabeledTree& lt, const FamilyStep& step) {
  const int n = lt.tree.vertex_count();
  if (step.anchor < 0 || step.anchor >= n)
    throw PreconditionError("family step: anchor id out of range");
  const Status required =
      step.op == FamilyStep::Op::attach_path3 ? Status::A : Status::B;
  if (lt.labeling.statuses[static_cast<std::size_t>(step.anchor)] != required)
    throw PreconditionError(std::string("family step: anchor must have status ") +
                            status_letter(required));
  if (step.op == FamilyStep::Op::attach_path3) {
    lt.tree.add_vertices(3);
    lt.tree.add_edge(step.anchor, n);
    lt.tree.add_edge(n, n + 1);
    lt.tree.add_edge(n + 1, n + 2);
    lt.labeling.statuses.insert(lt.labeling.statuses.end(),
                                {Status::B, Status::B, Status::A});
  } else {
    lt.tree.add_vertices(2);
    lt.tree.add_edge(step.anchor, n);
    lt.tree.add_edge(n, n + 1);
    lt.labeling.statuses.insert(lt.labeling.statuses.end(), {Status::B, Status::A});
  }
}

// Builds the labeled tree a construction script describes, starting from the
// base 4-path. Throws if a step anchors at a vertex of the wrong status.
inline LabeledTree build_family_f(const FamilyScript& script) {
  LabeledTree lt = family_base();
  for (const FamilyStep& step : script) apply_family_step(lt, step);
  return lt;
}

enum class LabelRule {
  leaf_is_a = 1,          // every leaf has status A
  support_is_b = 2,       // every support vertex has status B
  a_neighbors_in_b = 3,   // neighbors of an A-vertex are all B
  b_adjacency = 4,        // a B-vertex sees exactly one A and at least one B
  a_distance = 5,         // A-vertices are pairwise at distance >= 3
  a_set_dominates = 6,    // A(T) is a dominating set
  a_set_minimum = 7,      // |A(T)| equals gamma(T)
};

struct LabelViolation {
  LabelRule rule;
  VertexId vertex = -1;  // -1 for the set-level rules
  std::string detail;
};

// Checks the five structural labeling properties plus "A(T) is a minimum
// dominating set". Empty result means the labeling is valid.
inline std::vector<LabelViolation> verify_labeling(const Graph& t,
                                                   const TreeStatusLabeling& l) {
  if (!is_tree(t)) throw PreconditionError("verify_labeling: input is not a tree");
  if (static_cast<int>(l.statuses.size()) != t.vertex_count())
    throw PreconditionError("verify_labeling: labeling does not cover all vertices");

  std::vector<LabelViolation> out;
  const auto cls = classify_vertices(t);
  const int n = t.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t vi = static_cast<std::size_t>(v);
    const Status sv = l.statuses[vi];
    if (cls[vi].leaf && sv != Status::A)
      out.push_back({LabelRule::leaf_is_a, v,
                     "leaf " + std::to_string(v) + " is not labeled A"});
    if (cls[vi].support && sv != Status::B)
      out.push_back({LabelRule::support_is_b, v,
                     "support vertex " + std::to_string(v) + " is not labeled B"});
    if (sv == Status::A) {
      for (VertexId u : t.neighbors(v)) {
        if (l.statuses[static_cast<std::size_t>(u)] != Status::B) {
          out.push_back({LabelRule::a_neighbors_in_b, v,
                         "A-vertex " + std::to_string(v) + " has non-B neighbor " +
                             std::to_string(u)});
          break;
        }
      }
    } else {
      int a_count = 0, b_count = 0;
      for (VertexId u : t.neighbors(v))
        (l.statuses[static_cast<std::size_t>(u)] == Status::A ? a_count : b_count)++;
      if (a_count != 1 || b_count < 1)
        out.push_back({LabelRule::b_adjacency, v,
                       "B-vertex " + std::to_string(v) + " sees " +
                           std::to_string(a_count) + " A-neighbors and " +
                           std::to_string(b_count) + " B-neighbors"});
    }
  }

  const std::vector<VertexId> a_set = l.with_status(Status::A);
  for (VertexId v : a_set) {
    const auto dist = bfs_distances(t, v);
    for (VertexId u : a_set) {
      if (u <= v) continue;
      if (dist[static_cast<std::size_t>(u)] < 3) {
        out.push_back({LabelRule::a_distance, v,
                       "A-vertices " + std::to_string(v) + " and " + std::to_string(u) +
                           " are at distance " +
                           std::to_string(dist[static_cast<std::size_t>(u)])});
      }
    }
  }

  if (!is_dominating(t, a_set))
    out.push_back({LabelRule::a_set_dominates, -1, "A(T) does not dominate the tree"});
  const int gt = gamma_tree(t).gamma;
  if (static_cast<int>(a_set.size()) != gt)
    out.push_back({LabelRule::a_set_minimum, -1,
                   "|A(T)| = " + std::to_string(a_set.size()) + " but gamma = " +
                       std::to_string(gt)});
  return out;
}

namespace detail {

// Reverse-reduction core shared by the recognizer and its diagnostic
// variant. With prefer_max_degree the longest path is chosen so that v2 has
// maximum degree (ties: smaller v2, then smaller v0); without it the first
// longest path in scan order is taken.
inline std::optional<TreeStatusLabeling> recognize_family_impl(const Graph& t,
                                                               bool prefer_max_degree) {
  if (!is_tree(t)) throw PreconditionError("recognize_family_f: input is not a tree");
  const int n = t.vertex_count();
  if (n < 3) throw PreconditionError("recognize_family_f: need at least 3 vertices");
  if (n < 4) return std::nullopt;

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = t.degree(v);
  int alive_count = n;

  // BFS restricted to alive vertices.
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  std::vector<VertexId> queue;
  auto bfs_alive = [&](VertexId src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    dist[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (VertexId u : t.neighbors(v)) {
        if (!alive[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        }
      }
    }
  };

  struct Peel {
    bool path3;       // true: reverse attach_path3, false: reverse attach_path2
    VertexId anchor;  // v3 for path3, v2 for path2
    VertexId x, y, z; // forward attachment order; z unused for path2
  };
  std::vector<Peel> peeled;

  auto remove_vertex = [&](VertexId v) {
    alive[static_cast<std::size_t>(v)] = 0;
    --alive_count;
    for (VertexId u : t.neighbors(v))
      if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
  };

  while (alive_count > 4) {
    int diam = -1;
    for (VertexId s = 0; s < n; ++s) {
      if (!alive[static_cast<std::size_t>(s)]) continue;
      bfs_alive(s);
      for (VertexId v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)])
          diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
    }
    if (diam < 3) return std::nullopt;

    int best_deg = -1;
    VertexId v0 = -1, v1 = -1, v2 = -1, v3 = -1;
    for (VertexId s = 0; s < n; ++s) {
      if (!alive[static_cast<std::size_t>(s)]) continue;
      bfs_alive(s);
      for (VertexId e = 0; e < n; ++e) {
        if (!alive[static_cast<std::size_t>(e)] ||
            dist[static_cast<std::size_t>(e)] != diam)
          continue;
        // walk back from the far endpoint to recover the first path vertices
        std::vector<VertexId> tail;
        for (VertexId w = e; w != -1; w = parent[static_cast<std::size_t>(w)])
          tail.push_back(w);
        // tail is e..s; the path from s is the reverse
        const VertexId c0 = tail[tail.size() - 1];
        const VertexId c1 = tail[tail.size() - 2];
        const VertexId c2 = tail[tail.size() - 3];
        const VertexId c3 = tail[tail.size() - 4];
        const int d2 = deg[static_cast<std::size_t>(c2)];
        bool better;
        if (v0 < 0)
          better = true;
        else if (!prefer_max_degree)
          better = false;  // keep the first longest path found
        else
          better = d2 > best_deg || (d2 == best_deg && (c2 < v2 || (c2 == v2 && c0 < v0)));
        if (better) {
          best_deg = d2;
          v0 = c0;
          v1 = c1;
          v2 = c2;
          v3 = c3;
        }
      }
      if (!prefer_max_degree && v0 >= 0) break;
    }

    if (deg[static_cast<std::size_t>(v1)] != 2) return std::nullopt;
    if (deg[static_cast<std::size_t>(v2)] == 2) {
      peeled.push_back({true, v3, v2, v1, v0});
      remove_vertex(v0);
      remove_vertex(v1);
      remove_vertex(v2);
    } else {
      peeled.push_back({false, v2, v1, v0, -1});
      remove_vertex(v0);
      remove_vertex(v1);
    }
  }

  if (alive_count != 4) return std::nullopt;
  int deg_one = 0, deg_two = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[static_cast<std::size_t>(v)]) continue;
    if (deg[static_cast<std::size_t>(v)] == 1)
      ++deg_one;
    else if (deg[static_cast<std::size_t>(v)] == 2)
      ++deg_two;
  }
  if (deg_one != 2 || deg_two != 2) return std::nullopt;  // residue is not a 4-path

  // Replay the construction forward, type-checking every anchor.
  std::vector<Status> statuses(static_cast<std::size_t>(n), Status::B);
  for (VertexId v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1)
      statuses[static_cast<std::size_t>(v)] = Status::A;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const Status required = it->path3 ? Status::A : Status::B;
    if (statuses[static_cast<std::size_t>(it->anchor)] != required) return std::nullopt;
    if (it->path3) {
      statuses[static_cast<std::size_t>(it->x)] = Status::B;
      statuses[static_cast<std::size_t>(it->y)] = Status::B;
      statuses[static_cast<std::size_t>(it->z)] = Status::A;
    } else {
      statuses[static_cast<std::size_t>(it->x)] = Status::B;
      statuses[static_cast<std::size_t>(it->y)] = Status::A;
    }
  }
  return TreeStatusLabeling{std::move(statuses)};
}

}  // namespace detail

// Membership test for the construction family, by reverse reduction.
//
// While more than four vertices remain, take a longest path (v0,v1,v2,...)
// choosing the orientation/path whose v2 has maximum degree (ties: smaller
// v2, then smaller v0). A longest-path endpoint is a leaf, so v1 having any
// neighbor besides v0,v2 would make it a strong support vertex and the tree
// is rejected. If deg(v2) = 2 the hanging path (v0,v1,v2) is peeled as the
// reverse of an attach_path3 step anchored at v3; otherwise (v0,v1) is
// peeled as the reverse of an attach_path2 step anchored at v2. The residue
// must be the base 4-path, and the recorded script must replay forward with
// every anchor carrying the status its operation requires.
inline std::optional<TreeStatusLabeling> recognize_family_f(const Graph& t) {
  return detail::recognize_family_impl(t, true);
}

struct MsdOneResult {
  bool is_one = false;
  enum class Reason { none, leaf_in_excluded, edge_in_excluded } reason = Reason::none;
  VertexId witness_leaf = -1;
  std::optional<Edge> witness_edge;
  std::vector<VertexId> excluded;  // vertices in no minimum dominating set
};

// msd(T) = 1 characterization: some leaf lies in no minimum dominating set,
// or some edge has both endpoints in no minimum dominating set.
inline MsdOneResult msd_one_tree(const Graph& t, const SolveLimits& limits = {}) {
  if (!is_tree(t)) throw PreconditionError("msd_one_tree: input is not a tree");
  if (t.vertex_count() < 3) throw PreconditionError("msd_one_tree: need at least 3 vertices");
  MsdOneResult r;
  r.excluded = no_gamma_set_vertices(t, limits);
  const auto cls = classify_vertices(t);
  for (VertexId v : r.excluded) {
    if (cls[static_cast<std::size_t>(v)].leaf) {
      r.is_one = true;
      r.reason = MsdOneResult::Reason::leaf_in_excluded;
      r.witness_leaf = v;
      return r;
    }
  }
  for (const Edge& e : t.edges()) {
    if (std::binary_search(r.excluded.begin(), r.excluded.end(), e.a) &&
        std::binary_search(r.excluded.begin(), r.excluded.end(), e.b)) {
      r.is_one = true;
      r.reason = MsdOneResult::Reason::edge_in_excluded;
      r.witness_edge = e;
      return r;
    }
  }
  return r;
}

enum class TreeReason {
  strong_support,
  leaf_in_excluded,
  edge_in_excluded,
  family_f,
  residual_2,
};

inline const char* tree_reason_name(TreeReason r) {
  switch (r) {
    case TreeReason::strong_support: return "strong-support";
    case TreeReason::leaf_in_excluded: return "leaf-in-N";
    case TreeReason::edge_in_excluded: return "edge-in-N";
    case TreeReason::family_f: return "family-F";
    case TreeReason::residual_2: return "residual-2";
  }
  return "?";
}

struct TreeClassification {
  int msd = 0;
  int sd = 0;  // equal to msd for trees
  TreeReason reason = TreeReason::residual_2;
  std::optional<TreeStatusLabeling> labeling;  // present iff msd == 3
};

// Characterization-based tree classification: msd = 1 via the excluded-vertex
// criterion (with a strong-support shortcut), msd = 3 via family membership,
// msd = 2 otherwise. sd always equals msd on trees.
inline TreeClassification classify_tree(const Graph& t, const SolveLimits& limits = {}) {
  if (!is_tree(t)) throw PreconditionError("classify_tree: input is not a tree");
  if (t.vertex_count() < 3) throw PreconditionError("classify_tree: need at least 3 vertices");
  if (has_strong_support(t)) return {1, 1, TreeReason::strong_support, std::nullopt};
  const MsdOneResult one = msd_one_tree(t, limits);
  if (one.is_one) {
    const TreeReason reason = one.reason == MsdOneResult::Reason::leaf_in_excluded
                                  ? TreeReason::leaf_in_excluded
                                  : TreeReason::edge_in_excluded;
    return {1, 1, reason, std::nullopt};
  }
  // Stars never reach 3; skip the recognizer for diameter <= 2.
  if (diameter(t) > 2) {
    auto labeling = recognize_family_f(t);
    if (labeling) return {3, 3, TreeReason::family_f, std::move(labeling)};
  }
  return {2, 2, TreeReason::residual_2, std::nullopt};
}

}  // namespace domsd
