#include "schroma/udg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace schroma {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

UnitDistanceGraph build_graph(const std::vector<SpherePoint>& points,
                              double tol) {
  if (!(tol > 0.0) || tol > 1e-3)
    throw invalid_input_error("build_graph: tol must be in (0, 1e-3]");
  UnitDistanceGraph g;
  g.tol = tol;
  g.exact = false;
  if (points.empty()) {
    g.r = 0.0;
    return g;
  }
  double r0 = points.front().r();
  for (const SpherePoint& p : points)
    if (std::abs(p.r() - r0) > kSelfCheckTol * std::max(1.0, r0))
      throw invalid_input_error("build_graph: points lie on different spheres");
  g.r = r0;
  g.points = points;
  for (std::uint32_t i = 0; i < points.size(); ++i)
    for (std::uint32_t j = i + 1; j < points.size(); ++j)
      if (std::abs(chord_distance(points[i], points[j]) - 1.0) <= tol)
        g.edges.emplace_back(i, j);
  return g;
}

UnitDistanceGraph build_cycle(const RationalAngle& a) {
  if (!a.p_even())
    throw not_applicable_error(
        "build_cycle: odd numerator admits no unit-distance cycle of this form");
  Radius r = radius_from_rational(a);
  unsigned q = a.q();
  UnitDistanceGraph g;
  g.r = r.value();
  g.tol = kGraphTol;
  g.exact = true;
  g.points.reserve(q);
  for (unsigned j = 0; j < q; ++j)
    g.points.push_back(circle_point(r, kTwoPi * j / q));
  // consecutive cycle vertices sit p/2 positions apart and subtend theta;
  // chord monotonicity in the subtended angle rules out any other unit pair
  unsigned step = a.p() / 2;
  for (unsigned j = 0; j < q; ++j) {
    unsigned k = (j + step) % q;
    g.edges.emplace_back(std::min(j, k), std::max(j, k));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

DiamondConfig measure_diamond(Radius r) {
  double rv = r.value();
  if (rv <= kInvSqrt3 + kSelfCheckTol)
    throw domain_error(
        "measure_diamond: needs r > 1/sqrt(3) for two unit-circle points at "
        "mutual chord 1");

  double th = theta(r);
  UnitCircle c = unit_circle(r);
  SpherePoint x1 = SpherePoint::north_pole(r);
  SpherePoint x2 = circle_point(r, th / 2.0);
  SpherePoint x3 = circle_point(r, -th / 2.0);

  // x4 = (r cos t, 0, r sin t) with chord(x4, x2) = 1, i.e.
  //   A cos t + B sin t = C,  A = r R cos(theta/2), B = r z0, C = r^2 - 1/2.
  // t = pi/2 (the north pole) is always one root; reflect about the phase to
  // seed the other and polish it by Newton.
  double A = rv * c.circle_radius * std::cos(th / 2.0);
  double B = rv * c.plane_height;
  double C = rv * rv - 0.5;
  double phase = std::atan2(B, A);
  double t = 2.0 * phase - std::numbers::pi / 2.0;
  for (int iter = 0; iter < 60; ++iter) {
    double f = A * std::cos(t) + B * std::sin(t) - C;
    double df = -A * std::sin(t) + B * std::cos(t);
    if (std::abs(df) < 1e-15) break;
    double dt = f / df;
    dt = std::clamp(dt, -0.1, 0.1);
    t -= dt;
    if (std::abs(dt) < 1e-16) break;
  }

  SpherePoint x4(Vec3{rv * std::cos(t), 0.0, rv * std::sin(t)}, r);
  DiamondConfig d{x1, x2, x3, x4, 0.0, std::nullopt, false};
  d.d_measured = std::abs(rv * std::cos(t));
  if (d.d_measured > 0.5)
    d.beta_measured = 2.0 * std::asin(1.0 / (2.0 * d.d_measured));
  d.degenerate_antipodal =
      std::abs(chord_distance(x1, x4) - 2.0 * rv) <= 1e-9;
  return d;
}

double d_closed_form(Radius r) {
  double rv = r.value();
  double rad = 3.0 * rv * rv - 1.0;
  if (rad < 0.0)
    throw domain_error("d_closed_form: negative radicand for r < 1/sqrt(3)");
  return std::abs(2.0 * rv * (2.0 * rv * rv - 1.0) * std::sqrt(rad) /
                  (4.0 * rv * rv - 1.0));
}

double d_closed_form_corrected(Radius r) {
  double rv = r.value();
  double rad = 3.0 * rv * rv - 1.0;
  if (rad < 0.0)
    throw domain_error("d_closed_form_corrected: negative radicand");
  return std::abs(2.0 * (2.0 * rv * rv - 1.0) * std::sqrt(rad) /
                  (rv * (4.0 * rv * rv - 1.0)));
}

double d_formula_deviation(Radius r) {
  return std::abs(d_closed_form(r) - measure_diamond(r).d_measured);
}

double beta_from_theta(double theta_angle) {
  double ct = std::cos(theta_angle);
  if (std::abs(ct) < 1e-15)
    throw domain_error("beta_from_theta: cos(theta) = 0 (r = 1/sqrt(2))");
  double arg = std::tan(theta_angle / 2.0) / (4.0 * ct);
  // the underlying cross-section radius carries an absolute value, so the
  // angle is the magnitude
  double m = std::abs(arg);
  if (m > 1.0 + 1e-12)
    throw domain_error("beta_from_theta: arcsine argument exceeds 1");
  return 2.0 * std::asin(std::min(m, 1.0));
}

Theorem4Verdict theorem4_applicable(Radius r, unsigned q_max, double tol) {
  DiamondConfig d = measure_diamond(r);
  Theorem4Verdict v;
  v.d_measured = d.d_measured;
  v.d_above_half = d.d_measured > 0.5;
  if (!v.d_above_half) {
    v.reason = d.degenerate_antipodal
                   ? "degenerate: x4 antipodal to x1 (D = 0)"
                   : "D <= 1/2";
    return v;
  }
  v.beta = *d.beta_measured;
  v.beta_classification =
      classify_angle_ratio(*v.beta / std::numbers::pi, q_max, tol);
  return v;
}

namespace {

// Greedy clique from each start vertex in degree order.
int clique_lower_bound(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t n = adj.size();
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });
  int best = n > 0 ? 1 : 0;
  for (std::uint32_t start : order) {
    std::vector<std::uint32_t> clique{start};
    for (std::uint32_t cand : order) {
      if (cand == start) continue;
      bool ok = true;
      for (std::uint32_t member : clique) {
        bool adjacent = false;
        for (std::uint32_t nb : adj[member])
          if (nb == cand) {
            adjacent = true;
            break;
          }
        if (!adjacent) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(cand);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

// Saturation-degree greedy; ties by degree then index.
std::vector<int> dsatur(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t n = adj.size();
  std::vector<int> color(n, 0);
  std::vector<int> sat(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      if (pick < 0 || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && adj[v].size() > adj[pick].size()))
        pick = static_cast<int>(v);
    }
    std::vector<char> used(n + 2, 0);
    for (std::uint32_t nb : adj[pick])
      if (color[nb] > 0) used[color[nb]] = 1;
    int c = 1;
    while (used[c]) ++c;
    color[pick] = c;
    for (std::uint32_t nb : adj[pick]) {
      if (color[nb] != 0) continue;
      bool seen = false;
      for (std::uint32_t nb2 : adj[nb])
        if (color[nb2] == c && nb2 != static_cast<std::uint32_t>(pick)) {
          seen = true;
          break;
        }
      if (!seen) ++sat[nb];
    }
  }
  return color;
}

struct KColorSearch {
  const std::vector<std::vector<std::uint32_t>>& adj;
  int k;
  std::vector<int> color;
  long long budget;

  bool run(std::size_t v, int max_used) {
    if (budget-- <= 0) return false;  // treated as "not found" by caller
    if (v == adj.size()) return true;
    // symmetry breaking: a new color may only be the next unused one
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (std::uint32_t nb : adj[v])
        if (color[nb] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (run(v + 1, std::max(max_used, c))) return true;
      color[v] = 0;
    }
    return false;
  }
};

}  // namespace

ColoringSolution chromatic_number(const UnitDistanceGraph& g) {
  std::size_t n = g.points.size();
  ColoringSolution sol;
  if (n == 0) {
    sol.k = 0;
    sol.optimal = true;
    return sol;
  }

  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [i, j] : g.edges) {
    if (i == j) throw invalid_input_error("chromatic_number: self-loop");
    if (i >= n || j >= n)
      throw invalid_input_error("chromatic_number: edge index out of range");
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  int lb = clique_lower_bound(adj);
  std::vector<int> greedy = dsatur(adj);
  int ub = *std::max_element(greedy.begin(), greedy.end());

  if (lb == ub || n > kSolverVertexBudget) {
    sol.k = ub;
    sol.assignment = greedy;
    sol.optimal = lb == ub;
    return sol;
  }

  sol.k = ub;
  sol.assignment = greedy;
  sol.optimal = true;
  for (int k = lb; k < ub; ++k) {
    KColorSearch search{adj, k, std::vector<int>(n, 0), 50'000'000};
    bool found = search.run(0, 0);
    if (found) {
      sol.k = k;
      sol.assignment = search.color;
      break;
    }
    if (search.budget <= 0) {
      // could not certify k is infeasible; report the greedy bound honestly
      sol.optimal = false;
      break;
    }
  }
  return sol;
}

}  // namespace schroma
