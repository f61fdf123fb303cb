#include "schroma/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace schroma {

json graph_to_json(const UnitDistanceGraph& g) {
  json j;
  j["schema"] = kSchemaTag;
  j["radius"] = g.r;
  j["tol"] = g.tol;
  j["exact"] = g.exact;
  json pts = json::array();
  for (const SpherePoint& p : g.points)
    pts.push_back({p.vec().x, p.vec().y, p.vec().z});
  j["points"] = std::move(pts);
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

UnitDistanceGraph graph_from_json(const json& j) {
  UnitDistanceGraph g;
  g.r = j.at("radius").get<double>();
  g.tol = j.value("tol", kGraphTol);
  g.exact = j.value("exact", false);
  Radius r(g.r);
  for (const auto& row : j.at("points")) {
    if (!row.is_array() || row.size() != 3)
      throw invalid_input_error("graph json: each point must be [x, y, z]");
    g.points.push_back(SpherePoint::trusted(
        Vec3{row[0].get<double>(), row[1].get<double>(), row[2].get<double>()},
        r));
  }
  for (const auto& row : j.at("edges")) {
    if (!row.is_array() || row.size() != 2)
      throw invalid_input_error("graph json: each edge must be [i, j]");
    auto a = row[0].get<std::uint32_t>();
    auto b = row[1].get<std::uint32_t>();
    if (a == b || a >= g.points.size() || b >= g.points.size())
      throw invalid_input_error("graph json: bad edge indices");
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

json cap_params_to_json(const CapStripesParams& p) {
  json j;
  j["cap_colatitude"] = p.cap_colatitude;
  j["meridians"] = p.meridians;
  j["zigzag"] = p.zigzag;
  return j;
}

CapStripesParams cap_params_from_json(const json& j) {
  CapStripesParams p;
  p.cap_colatitude = j.at("cap_colatitude").get<double>();
  auto m = j.at("meridians");
  auto z = j.at("zigzag");
  if (m.size() != 4 || z.size() != 4)
    throw invalid_input_error("cap params json: need 4 meridians and 4 zigzags");
  for (int i = 0; i < 4; ++i) {
    p.meridians[i] = m[i].get<double>();
    p.zigzag[i] = z[i].get<double>();
  }
  p.validate();
  return p;
}

json report_to_json(const VerificationReport& rep) {
  json j;
  j["schema"] = kSchemaTag;
  j["coloring"] = rep.coloring_id;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["violations"] = rep.violations;
  j["worst_margin"] = rep.worst_margin;
  j["seed"] = rep.seed;
  if (rep.first_violation_index)
    j["first_violation_index"] = *rep.first_violation_index;
  return j;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Applicable:
      return "Applicable";
    case Verdict::Exceptional:
      return "Exceptional";
    default:
      return "NoMatchUpTo";
  }
}

json classification_to_json(const Classification& c) {
  json j;
  j["verdict"] = verdict_name(c.verdict);
  j["theta_over_pi"] = c.theta_over_pi;
  if (c.match) {
    j["p"] = c.match->p();
    j["q"] = c.match->q();
  } else {
    j["q_max"] = c.q_max;
  }
  return j;
}

json ratio_match_to_json(const RatioMatch& m) {
  json j;
  j["verdict"] = verdict_name(m.verdict);
  j["ratio"] = m.ratio;
  if (m.verdict != Verdict::NoMatchUpTo) {
    j["p"] = m.p;
    j["q"] = m.q;
  } else {
    j["q_max"] = m.q_max;
  }
  return j;
}

UnitDistanceGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open graph file: " + path);
  json j;
  in >> j;
  return graph_from_json(j);
}

void save_graph_file(const UnitDistanceGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_input_error("cannot write graph file: " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

CapStripesParams load_cap_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open params file: " + path);
  json j;
  in >> j;
  return cap_params_from_json(j.contains("params") ? j["params"] : j);
}

}  // namespace schroma
