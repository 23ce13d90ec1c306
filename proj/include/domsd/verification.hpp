#pragma once

#include "domsd/generators.hpp"
#include "domsd/graph_io.hpp"
#include "domsd/sat_reduction.hpp"
#include "domsd/subdivision.hpp"
#include "domsd/tree_class.hpp"

namespace domsd {

// Outcome of one verification sweep. Failures keep a short message list and
// the first offending graph so callers can dump a counterexample.
struct SweepOutcome {
  bool pass = true;
  std::uint64_t items = 0;
  std::vector<std::string> failures;
  std::optional<Graph> counterexample;

  void fail(const std::string& msg, const Graph* g = nullptr) {
    pass = false;
    if (failures.size() < 8) failures.push_back(msg);
    if (!counterexample && g != nullptr) counterexample = *g;
  }
};

namespace detail {

inline std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges:";
  for (const Edge& e : g.edges())
    s += " " + std::to_string(e.a) + "-" + std::to_string(e.b);
  return s;
}

inline int expected_mod3(int n) {
  switch (n % 3) {
    case 0: return 1;
    case 2: return 2;
    default: return 3;
  }
}

}  // namespace detail

// Closed-form tables: msd and sd of paths and cycles follow the mod-3 rule;
// complete graphs and wheels have msd = sd = 1; complete bipartite graphs
// follow the three-case rule (sd checked where a closed form exists: 1 for
// stars, 2 for 3 <= p <= q).
inline SweepOutcome check_closed_forms(int path_cycle_max = 30, int complete_wheel_max = 10,
                                       int bipartite_max = 6) {
  SweepOutcome out;
  for (int n = 3; n <= path_cycle_max; ++n) {
    const int want = detail::expected_mod3(n);
    for (const Graph& g : {path(n), cycle(n)}) {
      ++out.items;
      const MsdReport mr = msd(g);
      const SdReport sr = sd(g, 3);
      if (mr.msd != want)
        out.fail("msd mismatch at n=" + std::to_string(n) + ": got " +
                     std::to_string(mr.msd) + ", want " + std::to_string(want),
                 &g);
      if (!sr.sd || *sr.sd != want)
        out.fail("sd mismatch at n=" + std::to_string(n), &g);
    }
  }
  for (int n = 3; n <= complete_wheel_max; ++n) {
    for (const Graph& g : {complete(n), wheel(n)}) {
      ++out.items;
      if (msd(g).msd != 1) out.fail("msd != 1 on a complete graph or wheel", &g);
      const SdReport sr = sd(g, 3);
      if (!sr.sd || *sr.sd != 1) out.fail("sd != 1 on a complete graph or wheel", &g);
    }
  }
  for (int p = 1; p <= bipartite_max; ++p) {
    for (int q = p; q <= bipartite_max; ++q) {
      ++out.items;
      const Graph g = complete_bipartite(p, q);
      const int want = (p == 1 && q > 1) ? 1 : (p == 1 ? 2 : 3);
      if (msd(g).msd != want)
        out.fail("msd(K_{" + std::to_string(p) + "," + std::to_string(q) + "}) != " +
                     std::to_string(want),
                 &g);
      if (p == 1 && q > 1) {
        const SdReport sr = sd(g, 3);
        if (!sr.sd || *sr.sd != 1) out.fail("sd != 1 on a star", &g);
      } else if (p >= 3) {
        const SdReport sr = sd(g, 3);
        if (!sr.sd || *sr.sd != 2)
          out.fail("sd(K_{" + std::to_string(p) + "," + std::to_string(q) + "}) != 2", &g);
      }
    }
  }
  return out;
}

struct CorpusOutcome {
  std::uint64_t graphs = 0;
  SweepOutcome bound;        // msd in {1,2,3}; gamma(G_{e,3}) >= gamma(G)+1 per edge
  SweepOutcome equivalence;  // sd_is_greater_than_one(G) <=> msd(G) > 1
  SweepOutcome oracle;       // branch-and-bound gamma == brute-force gamma
  std::uint64_t nonmonotone_triples = 0;  // diagnostic: gamma over t=1,2,3 per edge
};

namespace detail {

inline void corpus_check_one(const Graph& g, CorpusOutcome& out, int oracle_max_n,
                             bool inject_fault) {
  ++out.graphs;
  const int n = g.vertex_count();
  const bool tree_mode = is_tree(g);
  const int base = gamma_value(g, tree_mode, {});

  ++out.bound.items;
  const MsdReport mr = msd(g);
  if (mr.msd < 1 || mr.msd > 3) out.bound.fail("msd outside {1,2,3}: " + describe(g), &g);
  int derived_msd = 4;
  for (const Edge& e : g.edges()) {
    int gt[3];
    for (int t = 1; t <= 3; ++t)
      gt[t - 1] = gamma_value(subdivide(g, e, t), tree_mode, {});
    if (gt[0] > gt[1] || gt[1] > gt[2]) ++out.nonmonotone_triples;
    const int required = base + (inject_fault ? 2 : 1);
    if (gt[2] < required)
      out.bound.fail("gamma(G_{e,3}) < gamma(G)+" + std::to_string(inject_fault ? 2 : 1) +
                         " on edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                         " of " + describe(g),
                     &g);
    for (int t = 1; t <= 3; ++t) {
      if (gt[t - 1] > base) {
        derived_msd = std::min(derived_msd, t);
        break;
      }
    }
  }
  if (derived_msd != mr.msd)
    out.bound.fail("msd() disagrees with per-edge gamma values: " + describe(g), &g);

  if (n >= 3) {
    ++out.equivalence.items;
    const bool gt1 = sd_is_greater_than_one(g);
    if (gt1 != (mr.msd > 1))
      out.equivalence.fail("sd>1 and msd>1 disagree: " + describe(g), &g);
  }

  if (n <= oracle_max_n) {
    ++out.oracle.items;
    const GammaResult bb = gamma(g);
    const GammaResult bf = gamma_bruteforce(g);
    if (bb.gamma != bf.gamma)
      out.oracle.fail("branch-and-bound gamma " + std::to_string(bb.gamma) +
                          " != brute force " + std::to_string(bf.gamma) + ": " + describe(g),
                      &g);
    if (!certifies(bb.witness, g) || static_cast<int>(bb.witness.vertices.size()) != bb.gamma)
      out.oracle.fail("invalid witness: " + describe(g), &g);
  }
}

}  // namespace detail

// Exhaustive connected graphs for n <= exhaustive_max_n plus seeded random
// connected graphs up to random_max_n vertices.
inline CorpusOutcome sweep_connected_corpus(int exhaustive_max_n, int random_samples,
                                            int random_max_n, std::uint64_t seed,
                                            bool inject_fault = false) {
  CorpusOutcome out;
  const int oracle_cap = 12;
  for (int n = 2; n <= exhaustive_max_n; ++n)
    enumerate_connected_graphs(
        n, [&](const Graph& g) { detail::corpus_check_one(g, out, oracle_cap, inject_fault); });
  for (int i = 0; i < random_samples; ++i) {
    Rng meta(seed + static_cast<std::uint64_t>(i));
    const int n = meta.between(3, random_max_n);
    const int max_m = n * (n - 1) / 2;
    const int m = meta.between(n - 1, max_m);
    const Graph g = random_connected_graph(n, m, meta.next());
    detail::corpus_check_one(g, out, oracle_cap, inject_fault);
  }
  return out;
}

struct TreeCorpusOutcome {
  std::uint64_t trees = 0;
  SweepOutcome theorem;  // subset-search sd == msd == characterization answer
  SweepOutcome oracle;   // branch-and-bound == brute force == tree DP
  std::uint64_t tiebreak_mismatches = 0;  // diagnostic: naive longest-path choice flips verdict
  std::vector<std::string> tiebreak_examples;
};

namespace detail {

inline void tree_check_one(const Graph& t, TreeCorpusOutcome& out, int oracle_max_n,
                           bool diagnostics) {
  ++out.trees;
  if (t.vertex_count() < 3) return;

  ++out.theorem.items;
  const MsdReport mr = msd(t);
  const SdReport sr = sd(t, 3);
  const TreeClassification cls = classify_tree(t);
  if (!sr.sd)
    out.theorem.fail("sd exceeded budget 3 on a tree: " + describe(t), &t);
  else if (*sr.sd != mr.msd)
    out.theorem.fail("sd " + std::to_string(*sr.sd) + " != msd " + std::to_string(mr.msd) +
                         ": " + describe(t),
                     &t);
  if (cls.msd != mr.msd || cls.sd != cls.msd)
    out.theorem.fail("characterization answer " + std::to_string(cls.msd) +
                         " != computed msd " + std::to_string(mr.msd) + ": " + describe(t),
                     &t);
  if (cls.msd == 3) {
    if (!cls.labeling)
      out.theorem.fail("classification with msd=3 lacks a labeling: " + describe(t), &t);
    else if (!verify_labeling(t, *cls.labeling).empty())
      out.theorem.fail("emitted labeling fails verification: " + describe(t), &t);
  }

  if (t.vertex_count() <= oracle_max_n) {
    ++out.oracle.items;
    const int bb = gamma(t).gamma;
    const int bf = gamma_bruteforce(t).gamma;
    const int dp = gamma_tree(t).gamma;
    if (bb != bf || dp != bf)
      out.oracle.fail("gamma disagreement (bb=" + std::to_string(bb) + ", brute=" +
                          std::to_string(bf) + ", tree=" + std::to_string(dp) + "): " +
                          describe(t),
                      &t);
  }

  if (diagnostics) {
    const bool proof_choice = detail::recognize_family_impl(t, true).has_value();
    const bool naive_choice = detail::recognize_family_impl(t, false).has_value();
    if (proof_choice != naive_choice) {
      ++out.tiebreak_mismatches;
      if (out.tiebreak_examples.size() < 4) out.tiebreak_examples.push_back(describe(t));
    }
  }
}

}  // namespace detail

// Exhaustive labeled trees for n <= exhaustive_max_n plus seeded random
// trees up to random_max_n vertices.
inline TreeCorpusOutcome sweep_tree_corpus(int exhaustive_max_n, int random_samples,
                                           int random_max_n, std::uint64_t seed,
                                           bool diagnostics = false) {
  TreeCorpusOutcome out;
  const int oracle_cap = 8;
  for (int n = 3; n <= exhaustive_max_n; ++n)
    for_each_tree(n,
                  [&](const Graph& t) { detail::tree_check_one(t, out, oracle_cap, diagnostics); });
  for (int i = 0; i < random_samples; ++i) {
    Rng meta(seed + static_cast<std::uint64_t>(i));
    const int n = meta.between(3, random_max_n);
    const Graph t = random_tree(n, meta.next());
    detail::tree_check_one(t, out, oracle_cap, diagnostics);
  }
  return out;
}

// Random construction scripts: the built labeling passes every check, A(T)
// is a minimum dominating set, the recognizer accepts the tree with a valid
// labeling, and every edge has per-edge msd 3.
inline SweepOutcome sweep_family_f(int samples, int max_script_len, std::uint64_t seed) {
  SweepOutcome out;
  for (int i = 0; i < samples; ++i) {
    ++out.items;
    Rng meta(seed + static_cast<std::uint64_t>(i));
    const int len = meta.below(max_script_len + 1);
    const LabeledTree lt = build_family_f(random_family_f_script(len, meta.next()));
    const Graph& t = lt.tree;
    if (!verify_labeling(t, lt.labeling).empty())
      out.fail("constructed labeling fails verification: " + detail::describe(t), &t);
    const int gt = gamma_tree(t).gamma;
    if (static_cast<int>(lt.labeling.with_status(Status::A).size()) != gt)
      out.fail("|A(T)| != gamma(T): " + detail::describe(t), &t);
    const auto recognized = recognize_family_f(t);
    if (!recognized)
      out.fail("recognizer rejects a constructed family tree: " + detail::describe(t), &t);
    else if (!verify_labeling(t, *recognized).empty())
      out.fail("recognizer labeling fails verification: " + detail::describe(t), &t);
    const MsdReport mr = msd(t);
    for (const auto& [e, v] : mr.per_edge) {
      if (v != 3) {
        out.fail("per-edge msd != 3 on edge " + std::to_string(e.a) + "-" +
                     std::to_string(e.b) + ": " + detail::describe(t),
                 &t);
        break;
      }
    }
  }
  return out;
}

// The bundled 4-variable sample instance:
// (u0|u1|u2) & (!u0|u1|u2) & (!u1|!u2|u3) & (!u1|!u2|!u3)
inline CnfFormula sample_formula_4() {
  CnfFormula f;
  f.num_vars = 4;
  auto lit = [](int v, bool pos) { return Literal{v, pos}; };
  f.clauses.push_back({{lit(0, true), lit(1, true), lit(2, true)}});
  f.clauses.push_back({{lit(0, false), lit(1, true), lit(2, true)}});
  f.clauses.push_back({{lit(1, false), lit(2, false), lit(3, true)}});
  f.clauses.push_back({{lit(1, false), lit(2, false), lit(3, false)}});
  return f;
}

// All eight sign patterns over three variables: unsatisfiable by design.
inline CnfFormula complete_polarity_formula_3() {
  CnfFormula f;
  f.num_vars = 3;
  for (int bits = 0; bits < 8; ++bits) {
    Clause c;
    for (int v = 0; v < 3; ++v)
      c.lits[static_cast<std::size_t>(v)] = Literal{v, ((bits >> v) & 1) == 0};
    f.clauses.push_back(c);
  }
  return f;
}

// Reduction checks: the bundled instances plus seeded random formulas all
// satisfy the structural invariants, gamma = 2n+1, the biconditional, and
// gamma of the x0x1-subdivided graph lands on 2n+1 (satisfiable) or 2n+2
// (unsatisfiable).
inline SweepOutcome sweep_reductions(int samples, std::uint64_t seed) {
  SweepOutcome out;
  auto check_formula = [&](const CnfFormula& f, const std::string& what) {
    ++out.items;
    const ReductionGraph rg = build_reduction(f);
    for (const std::string& v : reduction_invariant_violations(rg))
      out.fail(what + ": " + v, &rg.graph);
    const ReductionReport rep = verify_biconditional(f);
    if (!rep.pass)
      out.fail(what + ": biconditional failed (gamma=" + std::to_string(rep.gamma) +
                   ", satisfiable=" + std::to_string(rep.satisfiable) +
                   ", sd_gt_1=" + std::to_string(rep.sd_gt_1) + ")",
               &rg.graph);
    const int expect_x = rep.satisfiable ? 2 * rep.num_vars + 1 : 2 * rep.num_vars + 2;
    if (rep.gamma_x0x1_subdivided != expect_x)
      out.fail(what + ": gamma after subdividing x0x1 is " +
                   std::to_string(rep.gamma_x0x1_subdivided) + ", want " +
                   std::to_string(expect_x),
               &rg.graph);
  };

  {
    const CnfFormula f = sample_formula_4();
    check_formula(f, "4-variable sample");
    const ReductionReport rep = verify_biconditional(f);
    if (rep.vertices != 30 || rep.edges != 41 || rep.gamma != 9 || !rep.satisfiable ||
        !rep.sd_gt_1)
      out.fail("4-variable sample: expected 30 vertices, 41 edges, gamma 9, satisfiable, sd>1");
  }
  {
    const CnfFormula f = complete_polarity_formula_3();
    check_formula(f, "complete-polarity family");
    const ReductionReport rep = verify_biconditional(f);
    if (rep.satisfiable || rep.sd_gt_1)
      out.fail("complete-polarity family must be unsatisfiable with sd = 1");
  }
  for (int i = 0; i < samples; ++i) {
    Rng meta(seed + static_cast<std::uint64_t>(i));
    const int nv = meta.between(1, 4);
    const int min_m = std::max(1, (2 * nv + 2) / 3);
    const int nm = meta.between(min_m, 8);
    Rng gen(meta.next());
    check_formula(random_width3_cnf(nv, nm, gen), "random formula " + std::to_string(i));
  }
  return out;
}

// The two parameters genuinely diverge off trees: K_{3,3} has sd 2 but msd 3.
inline SweepOutcome check_incomparability() {
  SweepOutcome out;
  ++out.items;
  const Graph g = complete_bipartite(3, 3);
  const SdReport sr = sd(g, 3);
  if (!sr.sd || *sr.sd != 2) out.fail("sd(K_{3,3}) != 2", &g);
  if (msd(g).msd != 3) out.fail("msd(K_{3,3}) != 3", &g);
  return out;
}

// Tree DP against the subset-enumeration oracle on every labeled tree with
// at most max_n vertices.
inline SweepOutcome check_tree_dp_oracle(int max_n) {
  SweepOutcome out;
  for (int n = 2; n <= max_n; ++n) {
    for_each_tree(n, [&](const Graph& t) {
      ++out.items;
      const GammaResult dp = gamma_tree(t);
      if (dp.gamma != gamma_bruteforce(t).gamma)
        out.fail("tree DP disagrees with brute force: " + detail::describe(t), &t);
      else if (!certifies(dp.witness, t) ||
               static_cast<int>(dp.witness.vertices.size()) != dp.gamma)
        out.fail("tree DP witness invalid: " + detail::describe(t), &t);
    });
  }
  return out;
}

}  // namespace domsd
