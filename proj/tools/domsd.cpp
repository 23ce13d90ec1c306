// Command-line surface: exact domination numbers, subdivision parameters,
// tree classification, CNF reduction graphs, and the property-sweep runner.
// Exit codes: 0 success, 1 verification/theorem failure, 2 input error,
// 3 precondition violation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "domsd/graph_io.hpp"
#include "domsd/reports.hpp"
#include "domsd/verification.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int run_gamma(const std::string& input) {
  const domsd::Graph g = domsd::read_edge_list_file(input);
  const domsd::GammaResult r = domsd::gamma(g);
  domsd::GammaReport rep{r.gamma, r.witness.vertices};
  std::cout << domsd::to_json(rep).dump(2) << "\n";
  return 0;
}

int run_classify(const std::string& input, int budget, bool tree_mode, bool verify,
                 const std::string& dot_path) {
  const domsd::Graph g = domsd::read_edge_list_file(input);
  domsd::ClassificationReport rep;
  bool verify_failed = false;

  if (tree_mode) {
    if (!domsd::is_tree(g))
      throw domsd::PreconditionError("classify --tree: input graph is not a tree");
    auto t0 = Clock::now();
    const domsd::GammaResult gr = domsd::gamma_tree(g);
    rep.gamma = gr.gamma;
    rep.gamma_witness = gr.witness.vertices;
    rep.timings_ms["gamma_ms"] = ms_since(t0);
    auto t1 = Clock::now();
    const domsd::TreeClassification cls = domsd::classify_tree(g);
    rep.msd = cls.msd;
    rep.sd = cls.sd;
    rep.tree_reason = domsd::tree_reason_name(cls.reason);
    rep.tree_labeling = cls.labeling;
    rep.timings_ms["classify_ms"] = ms_since(t1);
    if (verify) {
      auto t2 = Clock::now();
      const domsd::MsdReport mr = domsd::msd(g);
      const int effective_budget = budget > 0 ? budget : domsd::default_sd_budget(g);
      const domsd::SdReport sr = domsd::sd(g, effective_budget);
      rep.budget = effective_budget;
      rep.per_edge_msd = mr.per_edge;
      rep.msd_witness_edge = mr.witness_edge;
      rep.sd_witness_edges = sr.witness_edges;
      rep.verified = (mr.msd == cls.msd) && sr.sd.has_value() && (*sr.sd == cls.sd);
      rep.timings_ms["verify_ms"] = ms_since(t2);
      if (!*rep.verified) verify_failed = true;
    }
  } else {
    auto t0 = Clock::now();
    const domsd::GammaResult gr = domsd::gamma(g);
    rep.gamma = gr.gamma;
    rep.gamma_witness = gr.witness.vertices;
    rep.timings_ms["gamma_ms"] = ms_since(t0);
    auto t1 = Clock::now();
    const domsd::MsdReport mr = domsd::msd(g);
    rep.msd = mr.msd;
    rep.per_edge_msd = mr.per_edge;
    rep.msd_witness_edge = mr.witness_edge;
    rep.timings_ms["msd_ms"] = ms_since(t1);
    auto t2 = Clock::now();
    const int effective_budget = budget > 0 ? budget : domsd::default_sd_budget(g);
    const domsd::SdReport sr = domsd::sd(g, effective_budget);
    rep.budget = effective_budget;
    rep.sd = sr.sd;
    rep.sd_witness_edges = sr.witness_edges;
    rep.timings_ms["sd_ms"] = ms_since(t2);
  }

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw domsd::ParseError("cannot open output file: " + dot_path);
    if (rep.tree_labeling) {
      std::map<domsd::VertexId, std::string> labels;
      for (std::size_t v = 0; v < rep.tree_labeling->statuses.size(); ++v)
        labels[static_cast<int>(v)] =
            std::to_string(v) + ":" +
            std::string(1, domsd::status_letter(rep.tree_labeling->statuses[v]));
      domsd::write_dot(dot, g, &labels);
    } else {
      domsd::write_dot(dot, g);
    }
  }

  std::cout << domsd::to_json(rep).dump(2) << "\n";
  if (verify_failed) {
    std::cerr << "classify: characterization disagrees with direct computation\n";
    return 1;
  }
  return 0;
}

int run_reduce(const std::string& input, bool verify, const std::string& dot_path,
               const std::string& edges_path, int budget_ms) {
  const domsd::CnfFormula f = domsd::parse_dimacs_file(input);
  const domsd::ReductionGraph rg = domsd::build_reduction(f);

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw domsd::ParseError("cannot open output file: " + dot_path);
    std::map<domsd::VertexId, std::string> labels;
    for (int i = 0; i < rg.num_vars; ++i) {
      labels[rg.literal_vertex(i, true)] = "u" + std::to_string(i);
      labels[rg.literal_vertex(i, false)] = "!u" + std::to_string(i);
    }
    for (int j = 0; j < rg.num_clauses; ++j)
      labels[rg.clause_vertex[static_cast<std::size_t>(j)]] = "c" + std::to_string(j);
    labels[rg.x0] = "x0";
    labels[rg.x1] = "x1";
    domsd::write_dot(dot, rg.graph, &labels);
  }
  if (!edges_path.empty()) {
    std::ofstream out(edges_path);
    if (!out) throw domsd::ParseError("cannot open output file: " + edges_path);
    domsd::write_edge_list(out, rg.graph);
  }

  if (!verify) {
    domsd::Json j{{"n", rg.num_vars},
                  {"m", rg.num_clauses},
                  {"vertices", rg.graph.vertex_count()},
                  {"edges", rg.graph.edge_count()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::optional<std::chrono::milliseconds> budget;
  if (budget_ms > 0) budget = std::chrono::milliseconds(budget_ms);
  const domsd::ReductionReport rep = domsd::verify_biconditional(f, budget);
  std::cout << domsd::to_json(rep).dump(2) << "\n";
  if (!rep.pass) {
    std::cerr << "reduce: instance failed the biconditional check\n";
    return 1;
  }
  return 0;
}

void dump_counterexample(const domsd::SweepOutcome& o) {
  for (const std::string& f : o.failures) std::cerr << "  " << f << "\n";
  if (o.counterexample) {
    std::cerr << "  counterexample edge list:\n";
    domsd::write_edge_list(std::cerr, *o.counterexample);
  }
}

int run_verify_suite(int max_n, int samples, std::uint64_t seed, bool inject_fault) {
  bool all_pass = true;
  auto report = [&](const char* name, const domsd::SweepOutcome& o, double secs) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << name << " (" << o.items << " cases, "
              << secs << " s)\n";
    if (!o.pass) {
      all_pass = false;
      dump_counterexample(o);
    }
  };

  auto t0 = Clock::now();
  report("closed-forms", domsd::check_closed_forms(), ms_since(t0) / 1000.0);

  auto t1 = Clock::now();
  const auto corpus =
      domsd::sweep_connected_corpus(max_n, samples, 10, seed, inject_fault);
  const double corpus_secs = ms_since(t1) / 1000.0;
  report("msd-bound", corpus.bound, corpus_secs);
  report("sd1-iff-msd1", corpus.equivalence, 0.0);
  report("gamma-oracle-agreement", corpus.oracle, 0.0);
  std::cout << "note: corpus of " << corpus.graphs
            << " connected graphs; non-monotone subdivision triples: "
            << corpus.nonmonotone_triples << "\n";

  auto t2 = Clock::now();
  const auto trees =
      domsd::sweep_tree_corpus(std::min(max_n + 1, 8), samples, 16, seed, true);
  const double tree_secs = ms_since(t2) / 1000.0;
  report("tree-sd-equals-msd", trees.theorem, tree_secs);
  report("tree-gamma-oracle", trees.oracle, 0.0);
  std::cout << "note: " << trees.trees
            << " trees checked; longest-path tie-break verdict flips: "
            << trees.tiebreak_mismatches << "\n";
  for (const std::string& e : trees.tiebreak_examples) std::cout << "  " << e << "\n";

  auto t3 = Clock::now();
  report("family-construction", domsd::sweep_family_f(samples, 12, seed),
         ms_since(t3) / 1000.0);

  auto t4 = Clock::now();
  report("reduction-biconditional", domsd::sweep_reductions(std::min(samples, 100), seed),
         ms_since(t4) / 1000.0);

  auto t5 = Clock::now();
  report("incomparability-witness", domsd::check_incomparability(), ms_since(t5) / 1000.0);

  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "domsd: exact domination numbers, domination subdivision and "
      "multisubdivision parameters, tree classification, and CNF reduction graphs"};
  app.require_subcommand(1);

  std::string gamma_input;
  auto* cmd_gamma = app.add_subcommand("gamma", "exact domination number of an edge-list graph");
  cmd_gamma->add_option("input", gamma_input, "edge-list file")->required();

  std::string classify_input, classify_dot;
  int classify_budget = 0;
  bool classify_tree_mode = false, classify_verify = false;
  auto* cmd_classify =
      app.add_subcommand("classify", "gamma, sd, msd and per-edge msd of a connected graph");
  cmd_classify->add_option("input", classify_input, "edge-list file")->required();
  cmd_classify->add_option("--budget", classify_budget,
                           "edge budget for the sd search (default min(m, 5))");
  auto* tree_flag = cmd_classify->add_flag(
      "--tree", classify_tree_mode, "classify via the tree characterization");
  cmd_classify
      ->add_flag("--verify", classify_verify,
                 "cross-check the characterization against direct computation")
      ->needs(tree_flag);
  cmd_classify->add_option("--dot", classify_dot, "write a Graphviz file (with statuses if any)");

  std::string reduce_input, reduce_dot, reduce_edges;
  bool reduce_verify = false;
  int reduce_budget_ms = 0;
  auto* cmd_reduce =
      app.add_subcommand("reduce", "compile a width-3 DIMACS CNF into its reduction graph");
  cmd_reduce->add_option("input", reduce_input, "DIMACS CNF file")->required();
  cmd_reduce->add_flag("--verify", reduce_verify,
                       "check gamma = 2n+1 and the satisfiability biconditional");
  cmd_reduce->add_option("--dot", reduce_dot, "write a Graphviz file with role labels");
  cmd_reduce->add_option("--edges", reduce_edges, "write the graph as an edge list");
  cmd_reduce->add_option("--budget-ms", reduce_budget_ms,
                         "wall-clock budget for the solver in milliseconds");

  int suite_max_n = 6, suite_samples = 200;
  std::uint64_t suite_seed = 0;
  bool suite_inject_fault = false;
  auto* cmd_suite = app.add_subcommand("verify-suite", "run the property sweeps");
  cmd_suite->add_option("--max-n", suite_max_n, "exhaustive corpus cap (connected graphs)")
      ->check(CLI::Range(2, 7));
  cmd_suite->add_option("--samples", suite_samples, "random samples per sweep");
  cmd_suite->add_option("--seed", suite_seed, "seed for all randomized sweeps");
  cmd_suite->add_flag("--inject-fault", suite_inject_fault,
                      "deliberately tighten the msd bound to exercise the failure path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gamma->parsed()) return run_gamma(gamma_input);
    if (cmd_classify->parsed())
      return run_classify(classify_input, classify_budget, classify_tree_mode,
                          classify_verify, classify_dot);
    if (cmd_reduce->parsed())
      return run_reduce(reduce_input, reduce_verify, reduce_dot, reduce_edges,
                        reduce_budget_ms);
    if (cmd_suite->parsed())
      return run_verify_suite(suite_max_n, suite_samples, suite_seed, suite_inject_fault);
  } catch (const domsd::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const domsd::PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const domsd::TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return 1;
  } catch (const domsd::InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
