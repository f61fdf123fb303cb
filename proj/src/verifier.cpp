#include "schroma/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "schroma/rng.hpp"

namespace schroma {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit-chord partner of x at circle azimuth phi. At r = 1/2 the circle
// degenerates to the antipode.
SpherePoint unit_partner(const SpherePoint& x, double phi) {
  if (x.r() == 0.5) return x.antipode();
  return circle_point_about(x, phi);
}

// Azimuth of the point on x's unit circle closest to direction d.
double azimuth_on_circle(const SpherePoint& x, const Vec3& d) {
  Vec3 n = x.direction();
  Vec3 h = std::abs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  Vec3 u = h.cross(n).normalized();
  Vec3 v = n.cross(u);
  return std::atan2(d.dot(v), d.dot(u));
}

SpherePoint area_uniform_point(Radius r, SplitMix64& rng) {
  double rv = r.value();
  double z = rng.next_double(-1.0, 1.0) * rv;
  double az = rng.next_double(0.0, kTwoPi);
  double rho = std::sqrt(std::max(rv * rv - z * z, 0.0));
  return SpherePoint(Vec3{rho * std::cos(az), rho * std::sin(az), z}, r);
}

}  // namespace

PairSample sample_unit_pair(Radius r, std::uint64_t seed, std::uint64_t index) {
  if (r.value() < 0.5)
    throw no_unit_pairs_error("sample_unit_pair: no unit pairs for r < 1/2");
  SplitMix64 rng = substream(seed, index);
  SpherePoint x = area_uniform_point(r, rng);
  double phi = rng.next_double(0.0, kTwoPi);
  return PairSample{x, unit_partner(x, phi), index, seed};
}

VerificationReport verify_coloring(const ColoringSpec& spec, Radius r,
                                   std::uint64_t n, std::uint64_t seed,
                                   unsigned workers) {
  if (n < 1) throw precondition_error("verify_coloring: sample count must be >= 1");
  if (workers < 1) throw invalid_input_error("verify_coloring: workers must be >= 1");
  r.require_unit_pairs();

  auto t0 = std::chrono::steady_clock::now();

  struct Partial {
    std::uint64_t violations = 0;
    double margin = kNearUnitWindow;
    std::optional<std::uint64_t> first;
  };

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      PairSample p = sample_unit_pair(r, seed, i);
      if (spec.assign(p.x) == spec.assign(p.y)) {
        ++out.violations;
        double chord = chord_distance(p.x, p.y);
        // sampled pairs are unit by construction, so this is negative
        out.margin = std::min(out.margin, std::abs(chord - 1.0) - kViolationTol);
        if (!out.first) out.first = i;
      }
    }
  };

  std::vector<Partial> parts(workers);
  if (workers == 1) {
    run_range(0, n, parts[0]);
  } else {
    std::vector<std::thread> threads;
    std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min<std::uint64_t>(n, w * chunk);
      std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
      threads.emplace_back(run_range, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
  }

  VerificationReport rep;
  rep.coloring_id = spec.id();
  rep.r = r.value();
  rep.n = n;
  rep.seed = seed;
  for (const Partial& p : parts) {
    rep.violations += p.violations;
    rep.worst_margin = std::min(rep.worst_margin, p.margin);
    if (p.first && (!rep.first_violation_index || *p.first < *rep.first_violation_index))
      rep.first_violation_index = p.first;
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

struct SearchState {
  bool found = false;
  std::optional<PairSample> witness;
  double margin = kNearUnitWindow;
};

enum class RefineOutcome { kViolation, kNoise, kClean };

// Project y onto x's exact unit circle and re-check colors there; a true
// violation is a same-colored pair at chord 1, not merely near it. A pair
// that is same-colored only on a sliver thinner than 1e-6 along the pair
// manifold is float noise (colorings whose extremal pairs sit exactly on
// cell boundaries approach chord 1 without ever containing a unit pair).
RefineOutcome refine_and_check(const ColoringSpec& spec, const SpherePoint& x,
                               const SpherePoint& y, SearchState& st) {
  bool degenerate = x.r() == 0.5;
  double phi = degenerate ? 0.0 : azimuth_on_circle(x, y.direction());
  SpherePoint yr = degenerate ? x.antipode() : circle_point_about(x, phi);
  double chord = chord_distance(x, yr);
  if (std::abs(chord - 1.0) > kViolationTol) return RefineOutcome::kClean;
  if (spec.assign(x) != spec.assign(yr)) return RefineOutcome::kClean;

  bool robust = false;
  if (degenerate) {
    robust = true;
  } else {
    const double nudge = 1e-6;
    for (double dphi : {nudge, -nudge})
      if (spec.assign(x) == spec.assign(circle_point_about(x, phi + dphi)))
        robust = true;
    if (!robust) {
      Vec3 n = x.direction();
      Vec3 h = std::abs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
      Vec3 u = h.cross(n).normalized();
      for (double s : {nudge, -nudge}) {
        SpherePoint xn(n + u * s, x.radius());
        SpherePoint yn =
            circle_point_about(xn, azimuth_on_circle(xn, yr.direction()));
        if (spec.assign(xn) == spec.assign(yn)) robust = true;
      }
    }
  }
  if (!robust) return RefineOutcome::kNoise;

  st.found = true;
  st.margin = std::min(st.margin, std::abs(chord - 1.0) - kViolationTol);
  if (!st.witness) st.witness = PairSample{x, yr, 0, 0};
  return RefineOutcome::kViolation;
}

void note_pair(const ColoringSpec& spec, const SpherePoint& x,
               const SpherePoint& y, SearchState& st) {
  if (spec.assign(x) != spec.assign(y)) return;
  double gap = std::abs(chord_distance(x, y) - 1.0);
  if (gap > kNearUnitWindow) return;
  if (gap <= 1e-5) {
    RefineOutcome out = refine_and_check(spec, x, y, st);
    if (out != RefineOutcome::kClean) return;  // noise never moves the margin
    if (gap <= kViolationTol) return;  // below the resolution of a violation
  }
  st.margin = std::min(st.margin, gap);
}

SpherePoint perturb(const SpherePoint& p, double sigma, SplitMix64& rng) {
  Vec3 n = p.direction();
  Vec3 h = std::abs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  Vec3 u = h.cross(n).normalized();
  Vec3 v = n.cross(u);
  double a = rng.next_double(-1.0, 1.0) * sigma;
  double b = rng.next_double(-1.0, 1.0) * sigma;
  return SpherePoint(n + u * a + v * b, p.radius());
}

}  // namespace

AdversarialResult adversarial_search(const ColoringSpec& spec, Radius r,
                                     unsigned restarts, std::uint64_t seed) {
  if (restarts < 1)
    throw invalid_input_error("adversarial_search: restarts must be >= 1");
  r.require_unit_pairs();

  SearchState st;

  // Directed sweep: exact unit pairs anchored at the coloring's probe
  // points, at uniform circle azimuths plus the azimuths aiming at every
  // other probe. Catches corner/edge extremal configurations outright.
  const auto& probes = spec.probe_directions;
  for (size_t i = 0; i < probes.size() && !st.found; ++i) {
    SpherePoint x(probes[i], r);
    std::vector<double> phis;
    const int sweep = 32;
    phis.reserve(sweep + probes.size());
    for (int k = 0; k < sweep; ++k) phis.push_back(kTwoPi * k / sweep);
    if (r.value() > 0.5)
      for (size_t j = 0; j < probes.size(); ++j)
        if (j != i) phis.push_back(azimuth_on_circle(x, probes[j]));
    for (double phi : phis) {
      SpherePoint y = unit_partner(x, phi);
      if (spec.assign(x) == spec.assign(y)) {
        refine_and_check(spec, x, y, st);
        if (st.found) break;
      }
    }
  }
  if (st.found) {
    return AdversarialResult{true, st.witness, st.margin};
  }

  // Hill-climbs: walk near-unit same-color pairs toward chord 1. The color
  // mismatch penalty keeps an established same-color pair from flipping, so
  // each climb measures how close its color class gets to a unit pair.
  const double mismatch_penalty = 1.0;
  auto objective = [&](const SpherePoint& x, const SpherePoint& y) {
    double f = std::abs(chord_distance(x, y) - 1.0);
    if (spec.assign(x) != spec.assign(y)) f += mismatch_penalty;
    return f;
  };

  for (unsigned restart = 0; restart < restarts; ++restart) {
    SplitMix64 rng = substream(seed, 0x517eb000 + restart);

    SpherePoint x = [&] {
      if (!probes.empty() && restart < 2 * probes.size())
        return SpherePoint(probes[restart % probes.size()], r);
      return area_uniform_point(r, rng);
    }();
    // start from a contracted unit pair so both points usually share a color
    SpherePoint y0 = unit_partner(x, rng.next_double(0.0, kTwoPi));
    SpherePoint y(x.direction() * 0.35 + y0.direction() * 0.65, r);

    double f = objective(x, y);
    note_pair(spec, x, y, st);

    double sigma = 0.3;
    for (int iter = 0; iter < 400 && sigma > 1e-10; ++iter) {
      bool improved = false;
      for (int cand = 0; cand < 7; ++cand) {
        SpherePoint xc = x;
        SpherePoint yc = y;
        switch (cand) {
          case 0:
            xc = perturb(x, sigma, rng);
            break;
          case 1:
            yc = perturb(y, sigma, rng);
            break;
          case 2:
            xc = perturb(x, sigma, rng);
            yc = perturb(y, sigma, rng);
            break;
          case 3:
            yc = perturb(y, sigma / 8.0, rng);
            break;
          case 4:
            xc = perturb(x, sigma / 8.0, rng);
            break;
          case 5:
            if (r.value() > 0.5) {
              // pull y halfway toward x's exact unit circle
              SpherePoint on = circle_point_about(
                  x, azimuth_on_circle(x, y.direction()));
              yc = SpherePoint(y.direction() * 0.5 + on.direction() * 0.5,
                               y.radius());
            }
            break;
          default:
            if (r.value() > 0.5)
              yc = circle_point_about(xc, azimuth_on_circle(xc, y.direction()));
            break;
        }
        double fc = objective(xc, yc);
        if (fc < f) {
          x = xc;
          y = yc;
          f = fc;
          improved = true;
          note_pair(spec, x, y, st);
          if (st.found) break;
        }
      }
      if (st.found) break;
      if (!improved) sigma *= 0.7;
    }
    if (st.found) break;
  }

  return AdversarialResult{st.found, st.witness, st.margin};
}

ScanResult threshold_scan(const std::function<ColoringSpec(Radius)>& family,
                          double r_lo, double r_hi, double tol,
                          unsigned restarts, std::uint64_t seed) {
  if (!(r_lo < r_hi)) throw invalid_input_error("threshold_scan: need r_lo < r_hi");
  if (!(tol > 0.0)) throw invalid_input_error("threshold_scan: tol must be positive");

  ScanResult out;
  unsigned step = 0;
  auto verdict = [&](double rv) {
    Radius r(rv);
    AdversarialResult a = adversarial_search(family(r), r, restarts,
                                             seed + 7919 * step++);
    out.trace.push_back(ScanPoint{rv, a.found, a.margin});
    return a.found;
  };

  bool lo_v = verdict(r_lo);
  bool hi_v = verdict(r_hi);
  if (lo_v == hi_v)
    throw bracketing_error(
        "threshold_scan: adversarial verdicts agree at both bracket ends");

  double lo = r_lo, hi = r_hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (verdict(mid) == hi_v)
      hi = mid;
    else
      lo = mid;
  }
  out.r_star = 0.5 * (lo + hi);
  return out;
}

}  // namespace schroma
