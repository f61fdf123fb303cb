// Exercises the sphere-chroma binary end to end. argv[1] = path to the CLI.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/tmp/cli_stderr.txt";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-sphere-chroma>\n";
    return 2;
  }
  std::string cli = argv[1];

  {
    RunResult r = run(cli + " theta --r 0.70710678");
    check(r.status == 0, "theta exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["schema"] == "sphere-chroma/1", "schema tag present");
    check(std::abs(j["theta"].get<double>() - 1.5707963) < 1e-6,
          "theta(1/sqrt2) ~ pi/2");
  }

  {
    RunResult r = run(cli +
                      " classify --r 0.7071067811865475 --qmax 10 --tol 1e-9");
    check(r.status == 0, "classify exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["verdict"] == "Exceptional", "1/sqrt2 is the exceptional radius");
    check(j["p"] == 1 && j["q"] == 2, "match is (1,2)");
  }

  {
    RunResult r = run(cli + " exceptional --qmax 5");
    auto j = nlohmann::json::parse(r.out);
    check(j["items"].size() == 3, "three exceptional candidates up to q=5");
  }

  {
    RunResult r1 = run(cli + " cycle --p 4 --q 5 --out /tmp/cli_g.json");
    check(r1.status == 0, "cycle exits 0");
    RunResult r2 = run(cli + " graph chi --in /tmp/cli_g.json");
    check(r2.status == 0, "graph chi exits 0");
    auto j = nlohmann::json::parse(r2.out);
    check(j["chi"] == 3, "pentagon cycle needs 3 colors");
    check(j["optimal"] == true, "chi is certified");

    // round trip: write the same cycle again and require identical bytes
    RunResult r3 = run(cli + " cycle --p 4 --q 5 --out /tmp/cli_g2.json");
    check(r3.status == 0, "second cycle run exits 0");
    check(read_file("/tmp/cli_g.json") == read_file("/tmp/cli_g2.json"),
          "graph files byte-identical across runs");
  }

  {
    RunResult r = run(cli + " diamond --r 0.9");
    auto j = nlohmann::json::parse(r.out);
    check(std::abs(j["d_measured"].get<double>() - 0.7355279) < 1e-6,
          "measured D at 0.9");
    check(j["closed_form_deviation"].get<double>() > 0.1,
          "published closed form deviates from the oracle");
  }

  {
    RunResult r = run(cli + " theorem4 --r 0.70");
    auto j = nlohmann::json::parse(r.out);
    check(j["verdict"] == "NotApplicable", "D <= 1/2 at r = 0.70");
  }

  // usage errors: missing required seed, unknown subcommand
  check(run(cli + " sample --r 0.9 --n 5").status == 2,
        "sample without --seed is a usage error");
  check(run(cli + " frobnicate").status == 2, "unknown subcommand exits 2");

  // domain errors surface as exit 1 with the error name on stderr
  {
    RunResult r = run(cli + " theta --r 0.4");
    check(r.status == 1, "theta below 1/sqrt3 exits 1");
    check(read_file("/tmp/cli_stderr.txt").find("domain-error") !=
              std::string::npos,
          "error name reported on stderr");
  }

  // reproducibility: identical argv twice gives byte-identical payloads
  {
    std::string cmd = cli + " sample --r 0.9 --n 50 --seed 7";
    check(run(cmd).out == run(cmd).out, "sample payload byte-identical");
    std::string v = cli +
                    " coloring verify --name tetra4 --r 0.55 --n 20000 --seed 9";
    std::string out1 = run(v + " --workers 1").out;
    std::string out2 = run(v + " --workers 2").out;
    check(!out1.empty() && out1 == out2,
          "verify payload independent of worker count");
  }

  // CSV mode emits rows, not JSON
  {
    RunResult r = run(cli + " sample --r 0.9 --n 3 --seed 1 --csv");
    check(r.status == 0, "csv sample exits 0");
    check(r.out.rfind("index,", 0) == 0, "csv header row present");
  }

  // sampled pairs keep the unit-chord contract through JSON serialization
  {
    RunResult r = run(cli + " sample --r 0.9 --n 200 --seed 11");
    auto j = nlohmann::json::parse(r.out);
    bool all_unit = true;
    for (const auto& pair : j["pairs"]) {
      double dx = pair["x"][0].get<double>() - pair["y"][0].get<double>();
      double dy = pair["x"][1].get<double>() - pair["y"][1].get<double>();
      double dz = pair["x"][2].get<double>() - pair["y"][2].get<double>();
      if (std::abs(std::sqrt(dx * dx + dy * dy + dz * dz) - 1.0) > 1e-12)
        all_unit = false;
    }
    check(all_unit, "serialized pairs are unit to 1e-12");
  }

  // cap5 verification with the shipped parameter file
  {
    RunResult r = run(cli +
                      " coloring verify --name cap5 --r 0.5763502691896257 "
                      "--n 50000 --seed 3 --params " +
                      std::string(SCHROMA_DATA_FILE));
    check(r.status == 0, "cap5 verify with shipped params exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["violations"] == 0, "shipped cap5 params verify clean");
  }

  // a hand-written graph file round-trips through graph chi
  {
    std::ofstream g("/tmp/cli_user_graph.json");
    g << R"({"radius": 1.0, "tol": 1e-9, "exact": false,
             "points": [[0,0,1],[1,0,0],[0,1,0]],
             "edges": []})";
    g.close();
    RunResult r = run(cli + " graph chi --in /tmp/cli_user_graph.json");
    check(r.status == 0, "user graph chi exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["chi"] == 1, "edgeless graph is 1-chromatic");
  }

  // scans report a threshold and can dump a CSV trace
  {
    RunResult r = run(cli +
                      " coloring scan --name tetra4 --lo 0.50 --hi 0.62 "
                      "--tol 1e-3 --trace /tmp/cli_trace.csv");
    check(r.status == 0, "scan exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(std::abs(j["r_star"].get<double>() - 0.5630163) < 1e-3,
          "scan recovers the tetra threshold");
    std::string trace = read_file("/tmp/cli_trace.csv");
    check(trace.rfind("r,verdict,margin", 0) == 0, "trace header present");
    check(std::count(trace.begin(), trace.end(), '\n') >= 3,
          "trace has probe rows");
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << failures << " checks failed\n";
  return 1;
}
