// sphere-chroma: command-line front end. JSON payloads on stdout, human
// diagnostics on stderr; exit codes 0 (ok), 1 (domain error), 2 (usage).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "schroma/colorings.hpp"
#include "schroma/json_io.hpp"
#include "schroma/rational.hpp"
#include "schroma/udg.hpp"
#include "schroma/verifier.hpp"

namespace {

using schroma::json;

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

json base_payload() {
  json j;
  j["schema"] = schroma::kSchemaTag;
  return j;
}

schroma::ColoringSpec spec_by_name(const std::string& name, double r,
                                   const std::string& params_path) {
  if (name == "tetra4") return schroma::tetra4();
  if (name == "octa4") return schroma::octa4();
  if (name == "dodeca6") return schroma::dodeca6();
  if (name == "cap5") {
    schroma::CapStripesParams p =
        params_path.empty()
            ? schroma::find_cap_stripes_params(schroma::Radius(r))
            : schroma::load_cap_params_file(params_path);
    return schroma::cap5(p);
  }
  throw schroma::invalid_input_error("unknown coloring name: " + name);
}

struct Cmd {
  double r = 0.0;
  double lo = 0.0, hi = 0.0, tol = 1e-9;
  unsigned qmax = 100;
  unsigned p = 0, q = 0;
  std::uint64_t n = 0, seed = 0;
  unsigned workers = 1, restarts = schroma::kDefaultRestarts;
  std::string name, in_path, out_path, params_path, trace_path;
  bool csv = false;
};

void run_theta(const Cmd& c) {
  double th = schroma::theta(schroma::Radius(c.r));
  json j = base_payload();
  j["r"] = c.r;
  j["theta"] = th;
  emit(j);
  std::fprintf(stderr, "theta(%.7g) = %.7g rad\n", c.r, th);
}

void run_classify(const Cmd& c) {
  schroma::Classification cl =
      schroma::classify_radius(schroma::Radius(c.r), c.qmax, c.tol);
  json j = base_payload();
  j["r"] = c.r;
  json fields = schroma::classification_to_json(cl);
  for (auto& [k, v] : fields.items()) j[k] = v;
  emit(j);
  std::fprintf(stderr, "theta/pi = %.7g -> %s\n", cl.theta_over_pi,
               schroma::verdict_name(cl.verdict).c_str());
}

void run_exceptional(const Cmd& c) {
  auto items = schroma::enumerate_exceptional(c.qmax);
  json j = base_payload();
  j["q_max"] = c.qmax;
  json arr = json::array();
  for (const auto& [a, r] : items) {
    json row;
    row["p"] = a.p();
    row["q"] = a.q();
    row["r"] = r.value();
    arr.push_back(std::move(row));
  }
  j["items"] = std::move(arr);
  emit(j);
  std::fprintf(stderr, "%zu exceptional candidates with q <= %u\n",
               items.size(), c.qmax);
}

void run_cycle(const Cmd& c) {
  schroma::RationalAngle a(c.p, c.q);
  schroma::UnitDistanceGraph g = schroma::build_cycle(a);
  json j = base_payload();
  j["p"] = a.p();
  j["q"] = a.q();
  j["r"] = g.r;
  j["vertices"] = g.points.size();
  j["edges"] = g.edges.size();
  if (!c.out_path.empty()) {
    schroma::save_graph_file(g, c.out_path);
    j["out"] = c.out_path;
  } else {
    j["graph"] = schroma::graph_to_json(g);
  }
  emit(j);
  std::fprintf(stderr, "cycle (%u,%u): %zu vertices at r = %.7g\n", a.p(),
               a.q(), g.points.size(), g.r);
}

void run_diamond(const Cmd& c) {
  schroma::Radius r(c.r);
  schroma::DiamondConfig d = schroma::measure_diamond(r);
  json j = base_payload();
  j["r"] = c.r;
  j["d_measured"] = d.d_measured;
  if (d.beta_measured)
    j["beta_measured"] = *d.beta_measured;
  else
    j["beta_measured"] = nullptr;
  j["degenerate_antipodal"] = d.degenerate_antipodal;
  j["d_closed_form_verbatim"] = schroma::d_closed_form(r);
  j["d_closed_form_corrected"] = schroma::d_closed_form_corrected(r);
  j["closed_form_deviation"] = schroma::d_formula_deviation(r);
  emit(j);
  std::fprintf(stderr,
               "D = %.7g (published form gives %.7g, deviation %.7g)\n",
               d.d_measured, schroma::d_closed_form(r),
               schroma::d_formula_deviation(r));
}

void run_theorem4(const Cmd& c) {
  schroma::Theorem4Verdict v =
      schroma::theorem4_applicable(schroma::Radius(c.r), c.qmax, c.tol);
  json j = base_payload();
  j["r"] = c.r;
  j["d_measured"] = v.d_measured;
  j["d_above_half"] = v.d_above_half;
  if (!v.d_above_half) {
    j["verdict"] = "NotApplicable";
    j["reason"] = v.reason;
  } else {
    j["beta"] = *v.beta;
    j["classification"] = schroma::ratio_match_to_json(*v.beta_classification);
  }
  emit(j);
}

void run_verify(const Cmd& c) {
  schroma::Radius r(c.r);
  schroma::ColoringSpec spec = spec_by_name(c.name, c.r, c.params_path);
  schroma::VerificationReport rep =
      schroma::verify_coloring(spec, r, c.n, c.seed, c.workers);
  emit(schroma::report_to_json(rep));
  std::fprintf(stderr, "%s at r = %.7g: %llu/%llu violations in %.2fs\n",
               spec.id().c_str(), c.r,
               static_cast<unsigned long long>(rep.violations),
               static_cast<unsigned long long>(rep.n), rep.elapsed_seconds);
}

void run_scan(const Cmd& c) {
  std::optional<schroma::CapStripesParams> cap_params;
  if (c.name == "cap5") {
    if (c.params_path.empty())
      throw schroma::invalid_input_error(
          "coloring scan --name cap5 requires --params");
    cap_params = schroma::load_cap_params_file(c.params_path);
  }
  auto family = [&](schroma::Radius) {
    return cap_params ? schroma::cap5(*cap_params)
                      : spec_by_name(c.name, 0.0, "");
  };
  schroma::ScanResult res = schroma::threshold_scan(
      family, c.lo, c.hi, c.tol, c.restarts, c.seed);
  if (!c.trace_path.empty()) {
    std::ofstream out(c.trace_path);
    out << "r,verdict,margin\n";
    for (const auto& row : res.trace)
      out << row.r << "," << (row.violated ? 1 : 0) << "," << row.margin
          << "\n";
  }
  json j = base_payload();
  j["name"] = c.name;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["tol"] = c.tol;
  j["r_star"] = res.r_star;
  emit(j);
  std::fprintf(stderr, "threshold estimate r* = %.7g (%zu probes)\n",
               res.r_star, res.trace.size());
}

void run_chi(const Cmd& c) {
  schroma::UnitDistanceGraph g = schroma::load_graph_file(c.in_path);
  schroma::ColoringSolution sol = schroma::chromatic_number(g);
  json j = base_payload();
  j["chi"] = sol.k;
  j["optimal"] = sol.optimal;
  j["assignment"] = sol.assignment;
  emit(j);
  std::fprintf(stderr, "chi = %d (%s)\n", sol.k,
               sol.optimal ? "exact" : "bound only");
}

void run_sample(const Cmd& c) {
  schroma::Radius r(c.r);
  if (c.n < 1)
    throw schroma::precondition_error("sample: need --n >= 1");
  if (c.csv) {
    std::cout << "index,x0,x1,x2,y0,y1,y2\n";
    for (std::uint64_t i = 0; i < c.n; ++i) {
      schroma::PairSample p = schroma::sample_unit_pair(r, c.seed, i);
      std::printf("%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<unsigned long long>(i), p.x.vec().x, p.x.vec().y,
                  p.x.vec().z, p.y.vec().x, p.y.vec().y, p.y.vec().z);
    }
    return;
  }
  json j = base_payload();
  j["r"] = c.r;
  j["n"] = c.n;
  j["seed"] = c.seed;
  json pairs = json::array();
  for (std::uint64_t i = 0; i < c.n; ++i) {
    schroma::PairSample p = schroma::sample_unit_pair(r, c.seed, i);
    json row;
    row["x"] = {p.x.vec().x, p.x.vec().y, p.x.vec().z};
    row["y"] = {p.y.vec().x, p.y.vec().y, p.y.vec().z};
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical unit-distance geometry, colorings and graphs"};
  app.require_subcommand(1);
  Cmd c;

  auto* theta_cmd = app.add_subcommand("theta", "central angle for radius r");
  theta_cmd->add_option("--r", c.r, "sphere radius")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "rational-angle classification of r");
  classify_cmd->add_option("--r", c.r)->required();
  classify_cmd->add_option("--qmax", c.qmax, "denominator bound");
  classify_cmd->add_option("--tol", c.tol, "match tolerance");

  auto* exc_cmd =
      app.add_subcommand("exceptional", "odd-numerator radii up to qmax");
  exc_cmd->add_option("--qmax", c.qmax)->required();

  auto* cycle_cmd =
      app.add_subcommand("cycle", "unit-distance odd cycle for p/q");
  cycle_cmd->add_option("--p", c.p)->required();
  cycle_cmd->add_option("--q", c.q)->required();
  cycle_cmd->add_option("--out", c.out_path, "write graph JSON here");

  auto* diamond_cmd =
      app.add_subcommand("diamond", "diamond configuration at radius r");
  diamond_cmd->add_option("--r", c.r)->required();

  auto* t4_cmd =
      app.add_subcommand("theorem4", "diamond applicability verdict at r");
  t4_cmd->add_option("--r", c.r)->required();
  t4_cmd->add_option("--qmax", c.qmax);
  t4_cmd->add_option("--tol", c.tol);

  auto* coloring = app.add_subcommand("coloring", "coloring verification");
  coloring->require_subcommand(1);
  auto* verify_cmd = coloring->add_subcommand("verify", "randomized check");
  verify_cmd->add_option("--name", c.name)->required();
  verify_cmd->add_option("--r", c.r)->required();
  verify_cmd->add_option("--n", c.n)->required();
  verify_cmd->add_option("--seed", c.seed)->required();
  verify_cmd->add_option("--params", c.params_path, "cap5 parameter file");
  verify_cmd->add_option("--workers", c.workers);

  auto* scan_cmd = coloring->add_subcommand("scan", "threshold bisection");
  scan_cmd->add_option("--name", c.name)->required();
  scan_cmd->add_option("--lo", c.lo)->required();
  scan_cmd->add_option("--hi", c.hi)->required();
  scan_cmd->add_option("--tol", c.tol)->required();
  scan_cmd->add_option("--params", c.params_path, "cap5 parameter file");
  scan_cmd->add_option("--restarts", c.restarts);
  scan_cmd->add_option("--seed", c.seed)->default_val(2024);
  scan_cmd->add_option("--trace", c.trace_path, "CSV trace output");

  auto* graph = app.add_subcommand("graph", "finite graph operations");
  graph->require_subcommand(1);
  auto* chi_cmd = graph->add_subcommand("chi", "exact chromatic number");
  chi_cmd->add_option("--in", c.in_path)->required();

  auto* sample_cmd =
      app.add_subcommand("sample", "deterministic unit-pair samples");
  sample_cmd->add_option("--r", c.r)->required();
  sample_cmd->add_option("--n", c.n)->required();
  sample_cmd->add_option("--seed", c.seed)->required();
  sample_cmd->add_flag("--csv", c.csv, "emit CSV rows instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (theta_cmd->parsed()) run_theta(c);
    if (classify_cmd->parsed()) run_classify(c);
    if (exc_cmd->parsed()) run_exceptional(c);
    if (cycle_cmd->parsed()) run_cycle(c);
    if (diamond_cmd->parsed()) run_diamond(c);
    if (t4_cmd->parsed()) run_theorem4(c);
    if (coloring->parsed() && verify_cmd->parsed()) run_verify(c);
    if (coloring->parsed() && scan_cmd->parsed()) run_scan(c);
    if (graph->parsed() && chi_cmd->parsed()) run_chi(c);
    if (sample_cmd->parsed()) run_sample(c);
  } catch (const schroma::error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
