#ifndef SCHROMA_VERIFIER_HPP
#define SCHROMA_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schroma/colorings.hpp"
#include "schroma/geom.hpp"

namespace schroma {

// Same-color pairs farther than this from unit chord do not affect margins.
inline constexpr double kNearUnitWindow = 1e-3;
// A refined witness counts as a violation only within this of chord 1.
inline constexpr double kViolationTol = 1e-9;

inline constexpr unsigned kDefaultRestarts = 48;

// A unit-chord pair fully determined by (seed, index): x area-uniform on the
// sphere, y uniform on x's unit-distance circle.
struct PairSample {
  SpherePoint x;
  SpherePoint y;
  std::uint64_t index;
  std::uint64_t seed;
};

PairSample sample_unit_pair(Radius r, std::uint64_t seed, std::uint64_t index);

struct VerificationReport {
  std::string coloring_id;
  double r = 0.0;
  std::uint64_t n = 0;
  std::uint64_t violations = 0;
  // min over same-color near-unit pairs of |chord-1|; negative iff a
  // same-color unit pair was found; capped at kNearUnitWindow when clean.
  double worst_margin = kNearUnitWindow;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  std::optional<std::uint64_t> first_violation_index;
};

// Evaluates the coloring on both endpoints of samples 0..n-1. Reports are
// bitwise identical for fixed (seed, n) regardless of worker count.
VerificationReport verify_coloring(const ColoringSpec& spec, Radius r,
                                   std::uint64_t n, std::uint64_t seed,
                                   unsigned workers = 1);

struct AdversarialResult {
  bool found = false;
  std::optional<PairSample> witness;  // exact unit pair when found
  double margin = kNearUnitWindow;
};

// Directed sweeps over the coloring's probe points plus seeded hill-climbs
// over near-unit same-color pairs. A violation requires the refined witness
// (projected onto the exact unit-pair manifold) to remain same-colored.
AdversarialResult adversarial_search(const ColoringSpec& spec, Radius r,
                                     unsigned restarts, std::uint64_t seed);

struct ScanPoint {
  double r;
  bool violated;
  double margin;
};

struct ScanResult {
  double r_star = 0.0;
  std::vector<ScanPoint> trace;
};

// Bisection on the adversarial verdict; requires the verdicts to differ at
// the bracket ends.
ScanResult threshold_scan(const std::function<ColoringSpec(Radius)>& family,
                          double r_lo, double r_hi, double tol,
                          unsigned restarts = kDefaultRestarts,
                          std::uint64_t seed = 2024);

}  // namespace schroma

#endif  // SCHROMA_VERIFIER_HPP
