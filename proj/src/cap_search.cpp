#include <algorithm>
#include <cmath>
#include <numbers>

#include "schroma/colorings.hpp"
#include "schroma/verifier.hpp"

namespace schroma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSearchSeed = 0xcab5;
constexpr unsigned kSearchRestarts = 48;

// Adversarial margin of a parameter set; a found violation scores as the
// (negative) refined margin so the descent can still rank it.
double score(const CapStripesParams& p, Radius r) {
  AdversarialResult a =
      adversarial_search(cap5(p), r, kSearchRestarts, kSearchSeed);
  return a.found ? std::min(a.margin, -kViolationTol) : a.margin;
}

// Acceptance is harder than the per-candidate score: a deeper adversarial
// run plus a randomized verification, so a weakly-probed candidate cannot
// slip through at a tight radius.
bool accept(const CapStripesParams& p, Radius r) {
  ColoringSpec spec = cap5(p);
  AdversarialResult a =
      adversarial_search(spec, r, 2 * kSearchRestarts, kSearchSeed + 1);
  if (a.found || a.margin <= kCapStripesMarginGate) return false;
  return verify_coloring(spec, r, 400000, kSearchSeed + 2).violations == 0;
}

}  // namespace

CapStripesParams find_cap_stripes_params(Radius r) {
  if (r.value() > kInvSqrt3 + 1e-9)
    throw precondition_error(
        "find_cap_stripes_params: validity is only claimed for r <= 1/sqrt(3)");
  r.require_unit_pairs();

  // Seed: cap of chordal diameter 1 - 1e-3, four evenly spaced meridians,
  // no zigzag.
  CapStripesParams p;
  p.cap_colatitude = std::asin(std::min((1.0 - 1e-3) / (2.0 * r.value()), 1.0));
  p.meridians = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  p.zigzag = {0.0, 0.0, 0.0, 0.0};

  double best = score(p, r);
  if (best > kCapStripesMarginGate && accept(p, r)) return p;

  // Coordinate descent over cap colatitude, meridian cuts and zigzag
  // offsets, maximizing the adversarial margin.
  const int sweeps = 24;
  double step = 0.04;
  for (int sweep = 0; sweep < sweeps && step > 1e-4; ++sweep) {
    bool improved = false;
    for (int dim = 0; dim < 9; ++dim) {
      for (double dir : {1.0, -1.0}) {
        CapStripesParams q = p;
        if (dim == 0) {
          q.cap_colatitude += dir * step;
          if (!(q.cap_colatitude > 0.01) || !(q.cap_colatitude < kPi - 0.01))
            continue;
        } else if (dim < 5) {
          q.meridians[dim - 1] += dir * step;
        } else {
          q.zigzag[dim - 5] += dir * step;
        }
        try {
          q.validate();
        } catch (const invalid_input_error&) {
          continue;
        }
        double s = score(q, r);
        if (s > best) {
          best = s;
          p = q;
          improved = true;
        }
      }
      if (best > kCapStripesMarginGate && accept(p, r)) return p;
    }
    if (!improved) step *= 0.5;
  }

  if (best > kCapStripesMarginGate && accept(p, r)) return p;
  throw no_params_found_error(
      "find_cap_stripes_params: no parameter set reached the 1e-4 adversarial "
      "margin within the iteration budget");
}

}  // namespace schroma
