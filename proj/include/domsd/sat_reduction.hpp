#pragma once

#include <array>
#include <fstream>
#include <sstream>

#include "domsd/generators.hpp"
#include "domsd/subdivision.hpp"

namespace domsd {

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 3> lits;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// DIMACS CNF, restricted to width-3 clauses. Comment lines start with 'c';
// the header is "p cnf <vars> <clauses>"; clauses are zero-terminated and may
// span lines.
inline CnfFormula parse_dimacs(std::istream& in) {
  std::string line, body;
  bool have_header = false;
  CnfFormula f;
  int declared_clauses = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first[0] == 'c' && !have_header) continue;  // "cfoo" style comments
    if (!have_header) {
      if (first != "p") throw ParseError("DIMACS: expected \"p cnf\" header");
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf") throw ParseError("DIMACS: expected \"p cnf\" header");
      if (!(ls >> f.num_vars >> declared_clauses))
        throw ParseError("DIMACS: malformed header counts");
      if (f.num_vars < 1) throw ParseError("DIMACS: need at least one variable");
      if (declared_clauses < 1) throw ParseError("DIMACS: formula has no clauses");
      have_header = true;
      continue;
    }
    body += line;
    body += ' ';
  }
  if (!have_header) throw ParseError("DIMACS: missing header");

  std::istringstream tokens(body);
  std::vector<Literal> current;
  int lit = 0;
  while (tokens >> lit) {
    if (lit == 0) {
      if (current.size() != 3)
        throw ParseError("DIMACS: clause of width " + std::to_string(current.size()) +
                         "; every clause must have exactly 3 literals");
      f.clauses.push_back(Clause{{current[0], current[1], current[2]}});
      current.clear();
      continue;
    }
    const int var = std::abs(lit) - 1;
    if (var >= f.num_vars)
      throw ParseError("DIMACS: literal " + std::to_string(lit) + " out of range");
    current.push_back(Literal{var, lit > 0});
  }
  if (!tokens.eof()) throw ParseError("DIMACS: non-integer token in clause data");
  if (!current.empty()) throw ParseError("DIMACS: unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw ParseError("DIMACS: declared " + std::to_string(declared_clauses) +
                     " clauses but found " + std::to_string(f.clauses.size()));
  return f;
}

inline CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_dimacs(in);
}

struct PreprocessResult {
  CnfFormula formula;              // surviving clauses over densely renumbered variables
  std::vector<int> original_var;   // new index -> original index
  std::vector<int> removed_vars;   // original indices of pure or unused variables
  int removed_clauses = 0;
  bool duplicate_literals = false; // some surviving clause repeats a variable
};

// The gadget construction needs every variable in both polarities. A variable
// occurring in only one polarity satisfies all its clauses outright, so those
// clauses are deleted and the variable dropped; this cascades until stable.
inline PreprocessResult preprocess(const CnfFormula& f) {
  std::vector<char> clause_alive(f.clauses.size(), 1);
  std::vector<char> var_alive(static_cast<std::size_t>(f.num_vars), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < f.num_vars; ++v) {
      if (!var_alive[static_cast<std::size_t>(v)]) continue;
      int pos = 0, neg = 0;
      for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        if (!clause_alive[c]) continue;
        for (const Literal& l : f.clauses[c].lits)
          if (l.var == v) (l.positive ? pos : neg)++;
      }
      if (pos > 0 && neg > 0) continue;
      var_alive[static_cast<std::size_t>(v)] = 0;
      changed = true;
      if (pos + neg == 0) continue;  // unused variable: nothing to delete
      const bool polarity = pos > 0;
      for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        if (!clause_alive[c]) continue;
        for (const Literal& l : f.clauses[c].lits) {
          if (l.var == v && l.positive == polarity) {
            clause_alive[c] = 0;
            break;
          }
        }
      }
    }
  }

  PreprocessResult r;
  std::vector<int> remap(static_cast<std::size_t>(f.num_vars), -1);
  for (int v = 0; v < f.num_vars; ++v) {
    if (var_alive[static_cast<std::size_t>(v)]) {
      remap[static_cast<std::size_t>(v)] = static_cast<int>(r.original_var.size());
      r.original_var.push_back(v);
    } else {
      r.removed_vars.push_back(v);
    }
  }
  r.formula.num_vars = static_cast<int>(r.original_var.size());
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    if (!clause_alive[c]) {
      ++r.removed_clauses;
      continue;
    }
    Clause mapped = f.clauses[c];
    for (Literal& l : mapped.lits) l.var = remap[static_cast<std::size_t>(l.var)];
    if (mapped.lits[0].var == mapped.lits[1].var || mapped.lits[0].var == mapped.lits[2].var ||
        mapped.lits[1].var == mapped.lits[2].var)
      r.duplicate_literals = true;
    r.formula.clauses.push_back(mapped);
  }
  return r;
}

// The compiled instance: one 6-vertex gadget per variable, one vertex per
// clause, and the x1/x0 tail. Vertex ids are deterministic: gadgets first in
// variable order, then clause vertices, then x1, then x0.
struct ReductionGraph {
  Graph graph;
  int num_vars = 0;
  int num_clauses = 0;
  // per-variable gadget ids: {positive literal, negative literal,
  //  positive arm, negative arm, core c, core d}
  std::vector<std::array<VertexId, 6>> gadget;
  std::vector<VertexId> clause_vertex;
  VertexId x1 = -1;
  VertexId x0 = -1;
  CnfFormula formula;  // the preprocessed formula this graph encodes

  VertexId literal_vertex(int var, bool positive) const {
    return gadget[static_cast<std::size_t>(var)][positive ? 0 : 1];
  }
};

// Compiles a formula into its reduction graph. The gadget is a 4-cycle
// (arm+, c, arm-, d) with the two literal vertices hanging off the arms;
// each clause vertex joins its literal vertices; x1 joins every clause
// vertex and x0. Preprocessing runs first and must leave a nonempty formula.
inline ReductionGraph build_reduction(const CnfFormula& input) {
  PreprocessResult pre = preprocess(input);
  if (pre.formula.clauses.empty())
    throw PreconditionError(
        "build_reduction: formula is satisfied by pure-literal elimination; nothing to reduce");

  const int n = pre.formula.num_vars;
  const int m = static_cast<int>(pre.formula.clauses.size());
  ReductionGraph rg;
  rg.num_vars = n;
  rg.num_clauses = m;
  rg.formula = std::move(pre.formula);
  rg.graph = Graph(6 * n + m + 2);

  for (int i = 0; i < n; ++i) {
    const VertexId base = 6 * i;
    const VertexId lit_pos = base, lit_neg = base + 1;
    const VertexId arm_pos = base + 2, arm_neg = base + 3;
    const VertexId core_c = base + 4, core_d = base + 5;
    rg.gadget.push_back({lit_pos, lit_neg, arm_pos, arm_neg, core_c, core_d});
    rg.graph.add_edge(lit_pos, arm_pos);
    rg.graph.add_edge(lit_neg, arm_neg);
    rg.graph.add_edge(arm_pos, core_c);
    rg.graph.add_edge(core_c, arm_neg);
    rg.graph.add_edge(arm_neg, core_d);
    rg.graph.add_edge(core_d, arm_pos);
  }
  rg.x1 = 6 * n + m;
  rg.x0 = 6 * n + m + 1;
  for (int j = 0; j < m; ++j) {
    const VertexId cj = 6 * n + j;
    rg.clause_vertex.push_back(cj);
    std::vector<VertexId> targets;
    for (const Literal& l : rg.formula.clauses[static_cast<std::size_t>(j)].lits)
      targets.push_back(rg.literal_vertex(l.var, l.positive));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (VertexId t : targets) rg.graph.add_edge(cj, t);
    rg.graph.add_edge(cj, rg.x1);
  }
  rg.graph.add_edge(rg.x1, rg.x0);
  return rg;
}

// Structural sanity of a reduction graph; returns human-readable violations
// (empty when everything matches the construction).
inline std::vector<std::string> reduction_invariant_violations(const ReductionGraph& rg) {
  std::vector<std::string> out;
  const Graph& g = rg.graph;
  const int n = rg.num_vars, m = rg.num_clauses;
  if (g.vertex_count() != 6 * n + m + 2) out.push_back("vertex count is not 6n+m+2");
  if (g.edge_count() != 6 * n + 4 * m + 1) {
    // duplicate literals in a clause legitimately reduce the edge count
    bool dup = false;
    for (const Clause& c : rg.formula.clauses)
      if (c.lits[0].var == c.lits[1].var || c.lits[0].var == c.lits[2].var ||
          c.lits[1].var == c.lits[2].var)
        dup = true;
    if (!dup) out.push_back("edge count is not 6n+4m+1");
  }
  for (int i = 0; i < n; ++i) {
    const auto& gd = rg.gadget[static_cast<std::size_t>(i)];
    auto in_gadget = [&](VertexId v) {
      return std::find(gd.begin(), gd.end(), v) != gd.end();
    };
    int internal_edges = 0;
    for (VertexId v : gd)
      for (VertexId u : g.neighbors(v))
        if (in_gadget(u)) ++internal_edges;
    if (internal_edges != 12)  // 6 undirected edges
      out.push_back("gadget " + std::to_string(i) + " does not have 6 internal edges");
    auto internal_degree = [&](VertexId v) {
      int d = 0;
      for (VertexId u : g.neighbors(v))
        if (in_gadget(u)) ++d;
      return d;
    };
    if (internal_degree(gd[0]) != 1 || internal_degree(gd[1]) != 1)
      out.push_back("gadget " + std::to_string(i) + ": literal vertices must have gadget degree 1");
    if (internal_degree(gd[2]) != 3 || internal_degree(gd[3]) != 3)
      out.push_back("gadget " + std::to_string(i) + ": arm vertices must have gadget degree 3");
    if (internal_degree(gd[4]) != 2 || internal_degree(gd[5]) != 2)
      out.push_back("gadget " + std::to_string(i) + ": core vertices must have gadget degree 2");
  }
  for (int j = 0; j < m; ++j) {
    const Clause& c = rg.formula.clauses[static_cast<std::size_t>(j)];
    std::vector<VertexId> lits;
    for (const Literal& l : c.lits) lits.push_back(rg.literal_vertex(l.var, l.positive));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    const VertexId cj = rg.clause_vertex[static_cast<std::size_t>(j)];
    if (g.degree(cj) != static_cast<int>(lits.size()) + 1)
      out.push_back("clause vertex " + std::to_string(j) + " has wrong degree");
    for (VertexId lv : lits)
      if (!g.has_edge(cj, lv))
        out.push_back("clause vertex " + std::to_string(j) + " misses a literal edge");
    if (!g.has_edge(cj, rg.x1))
      out.push_back("clause vertex " + std::to_string(j) + " is not adjacent to x1");
  }
  if (g.degree(rg.x0) != 1) out.push_back("x0 must have degree 1");
  if (g.degree(rg.x1) != m + 1) out.push_back("x1 must have degree m+1");
  if (!is_bipartite(g)) out.push_back("reduction graph must be bipartite");
  if (!is_connected(g)) out.push_back("reduction graph must be connected");
  return out;
}

// Exhaustive truth-table scan, ascending assignment order.
inline std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f, int max_vars = 24) {
  if (f.num_vars > max_vars)
    throw PreconditionError("sat_bruteforce: variable count exceeds cap");
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (const Clause& c : f.clauses) {
      bool clause_true = false;
      for (const Literal& l : c.lits) {
        const bool value = (bits >> l.var) & 1u;
        if (value == l.positive) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> assignment(static_cast<std::size_t>(f.num_vars));
      for (int v = 0; v < f.num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (bits >> v) & 1u;
      return assignment;
    }
  }
  return std::nullopt;
}

struct ReductionReport {
  int num_vars = 0;
  int num_clauses = 0;
  int vertices = 0;
  int edges = 0;
  int gamma = 0;
  int gamma_x0x1_subdivided = 0;
  bool satisfiable = false;
  bool sd_gt_1 = false;
  bool pass = false;
};

// Desk-scale check of the reduction's promise on one instance: the graph has
// gamma = 2n+1, and the formula is satisfiable exactly when no single-edge
// subdivision raises gamma.
inline ReductionReport verify_biconditional(const CnfFormula& f,
                                            std::optional<std::chrono::milliseconds> budget = {}) {
  SolveLimits limits;
  if (budget) limits = SolveLimits::within(*budget);
  const ReductionGraph rg = build_reduction(f);
  ReductionReport rep;
  rep.num_vars = rg.num_vars;
  rep.num_clauses = rg.num_clauses;
  rep.vertices = rg.graph.vertex_count();
  rep.edges = rg.graph.edge_count();
  rep.gamma = gamma(rg.graph, limits).gamma;
  rep.satisfiable = sat_bruteforce(rg.formula).has_value();
  rep.sd_gt_1 = sd_is_greater_than_one(rg.graph, limits);
  rep.gamma_x0x1_subdivided =
      gamma(subdivide(rg.graph, Edge(rg.x0, rg.x1), 1), limits).gamma;
  rep.pass = (rep.satisfiable == rep.sd_gt_1) && (rep.gamma == 2 * rep.num_vars + 1);
  return rep;
}

// Seeded random width-3 CNF in which every variable occurs in both
// polarities, so preprocessing keeps it intact. Clauses use three distinct
// variables when possible; with fewer than three variables a clause may
// repeat one.
inline CnfFormula random_width3_cnf(int num_vars, int num_clauses, Rng& rng) {
  if (num_vars < 1 || num_clauses < 1)
    throw PreconditionError("random_width3_cnf: need at least one variable and clause");
  if (3 * num_clauses < 2 * num_vars)
    throw PreconditionError("random_width3_cnf: too few literal slots for both polarities");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
      std::array<int, 3> vars{};
      if (num_vars >= 3) {
        vars[0] = rng.below(num_vars);
        do {
          vars[1] = rng.below(num_vars);
        } while (vars[1] == vars[0]);
        do {
          vars[2] = rng.below(num_vars);
        } while (vars[2] == vars[0] || vars[2] == vars[1]);
      } else {
        for (int& v : vars) v = rng.below(num_vars);
      }
      Clause clause;
      for (int i = 0; i < 3; ++i)
        clause.lits[static_cast<std::size_t>(i)] =
            Literal{vars[static_cast<std::size_t>(i)], rng.below(2) == 0};
      f.clauses.push_back(clause);
    }
    std::vector<char> pos(static_cast<std::size_t>(num_vars), 0),
        neg(static_cast<std::size_t>(num_vars), 0);
    for (const Clause& c : f.clauses)
      for (const Literal& l : c.lits)
        (l.positive ? pos : neg)[static_cast<std::size_t>(l.var)] = 1;
    bool complete = true;
    for (int v = 0; v < num_vars; ++v)
      if (!pos[static_cast<std::size_t>(v)] || !neg[static_cast<std::size_t>(v)]) complete = false;
    if (complete) return f;
  }
  throw PreconditionError("random_width3_cnf: could not hit both polarities; parameters too tight");
}

}  // namespace domsd
