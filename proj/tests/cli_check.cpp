// End-to-end driver for the command-line tool: runs the built binary against
// the bundled data files, checks exit codes, and validates every JSON report
// against the shipped schema. Usage: cli_check <cli> <data_dir> <schema>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "domsd/generators.hpp"
#include "domsd/graph_io.hpp"
#include "support/schema_check.hpp"

namespace {

using Json = nlohmann::json;

int checks = 0;
int failures = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_merged(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: cli_check <cli> <data_dir> <schema>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];

  std::ifstream schema_in(argv[3]);
  if (!schema_in) {
    std::cerr << "cannot open schema " << argv[3] << "\n";
    return 2;
  }
  const Json schema = Json::parse(schema_in);
  schema_check::Validator validator(schema);
  auto valid = [&](const Json& j, const std::string& what) {
    std::string why;
    const bool ok = validator.validate(j, schema, &why);
    expect(ok, what + " fails schema validation: " + why);
  };

  {
    const RunResult r = run(cli + " gamma " + data + "/p7.edgelist");
    expect(r.exit_code == 0, "gamma p7 exit code");
    const Json j = Json::parse(r.output, nullptr, false);
    expect(!j.is_discarded(), "gamma p7 emits JSON");
    expect(j.at("gamma") == 3, "gamma(P7) must be 3");
    const auto witness = j.at("witness").get<std::vector<int>>();
    expect(domsd::is_dominating(domsd::path(7), witness), "gamma witness dominates P7");
    valid(j, "gamma report");
  }
  {
    expect(run(cli + " gamma " + data + "/malformed.edgelist").exit_code == 2,
           "malformed edge list exits 2");
    expect(run(cli + " gamma " + data + "/no_such_file.edgelist").exit_code == 2,
           "missing file exits 2");
    expect(run(cli + " gamma").exit_code == 2, "missing argument exits 2");
  }
  {
    const RunResult r = run(cli + " classify " + data + "/c5.edgelist");
    expect(r.exit_code == 0, "classify c5 exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("gamma") == 2 && j.at("sd") == 2 && j.at("msd") == 2,
           "classify C5 yields gamma 2, sd 2, msd 2");
    expect(j.at("per_edge_msd").size() == 5, "C5 has five per-edge entries");
    valid(j, "classification report (direct)");
  }
  {
    const RunResult r = run(cli + " classify " + data + "/k33.edgelist");
    expect(r.exit_code == 0, "classify k33 exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("sd") == 2 && j.at("msd") == 3, "K33 separates sd and msd");
    valid(j, "classification report (k33)");
  }
  {
    const RunResult r = run(cli + " classify " + data + "/p7.edgelist --tree --verify");
    expect(r.exit_code == 0, "classify p7 --tree --verify exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("sd") == 3 && j.at("msd") == 3, "P7 classifies as sd = msd = 3");
    expect(j.at("tree").at("reason") == "family-F", "P7 reason is family membership");
    expect(j.at("tree").contains("labeling"), "P7 labeling attached");
    expect(j.at("verified") == true, "characterization cross-check");
    valid(j, "classification report (tree)");
  }
  {
    const RunResult r = run(cli + " classify " + data + "/p7.edgelist --budget 2");
    expect(r.exit_code == 0, "under-budget classify still reports");
    const Json j = Json::parse(r.output);
    expect(j.at("sd") == "exceeds-budget", "budget marker serialized");
    valid(j, "classification report (exceeds budget)");
  }
  {
    expect(run(cli + " classify " + data + "/disconnected.edgelist").exit_code == 3,
           "disconnected input exits 3");
    expect(run(cli + " classify " + data + "/c5.edgelist --verify").exit_code == 2,
           "--verify without --tree is a usage error");
  }
  {
    const RunResult r = run(cli + " reduce " + data + "/sample4.cnf");
    expect(r.exit_code == 0, "reduce sample4 exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("n") == 4 && j.at("m") == 4 && j.at("vertices") == 30 && j.at("edges") == 41,
           "reduction counts for the 4-variable sample");
    valid(j, "reduction report (counts only)");
  }
  {
    const RunResult r = run(cli + " reduce " + data + "/sample4.cnf --verify");
    expect(r.exit_code == 0, "reduce --verify exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("gamma") == 9 && j.at("satisfiable") == true && j.at("sd_gt_1") == true &&
               j.at("pass") == true,
           "sample4 verification values");
    valid(j, "reduction report (verified)");
  }
  {
    const RunResult r = run(cli + " reduce " + data + "/unsat_full3.cnf --verify");
    expect(r.exit_code == 0, "reduce unsat --verify exit code");
    const Json j = Json::parse(r.output);
    expect(j.at("satisfiable") == false && j.at("sd_gt_1") == false && j.at("pass") == true,
           "unsatisfiable family verifies with sd = 1");
    valid(j, "reduction report (unsat)");
  }
  {
    expect(run(cli + " reduce " + data + "/width2_bad.cnf").exit_code == 2,
           "width-2 clause exits 2");
  }
  {
    const std::string dot_path = "/tmp/domsd_cli_check.dot";
    const std::string edges_path = "/tmp/domsd_cli_check.edges";
    const RunResult r = run(cli + " reduce " + data + "/sample4.cnf --dot " + dot_path +
                            " --edges " + edges_path);
    expect(r.exit_code == 0, "reduce with exports exit code");
    std::ifstream dot(dot_path);
    std::stringstream dot_text;
    dot_text << dot.rdbuf();
    expect(dot_text.str().find("label=\"x0\"") != std::string::npos, "dot export labels x0");
    const domsd::Graph g = domsd::read_edge_list_file(edges_path);
    expect(g.vertex_count() == 30 && g.edge_count() == 41, "edge-list export round trips");
  }
  {
    const RunResult r = run(cli + " verify-suite --max-n 4 --samples 5");
    expect(r.exit_code == 0, "verify-suite exits 0");
    expect(r.output.find("PASS closed-forms") != std::string::npos,
           "verify-suite prints per-suite lines");
    expect(r.output.find("FAIL") == std::string::npos, "verify-suite reports no failures");
  }
  {
    const RunResult r = run_merged(cli + " verify-suite --max-n 3 --samples 2 --inject-fault");
    expect(r.exit_code == 1, "fault injection exits 1");
    expect(r.output.find("FAIL msd-bound") != std::string::npos, "fault injection fails the bound");
    expect(r.output.find("counterexample edge list") != std::string::npos,
           "fault injection dumps a counterexample");
  }

  std::cout << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}
