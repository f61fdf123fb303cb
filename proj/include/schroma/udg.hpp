#ifndef SCHROMA_UDG_HPP
#define SCHROMA_UDG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schroma/geom.hpp"
#include "schroma/rational.hpp"

namespace schroma {

inline constexpr double kGraphTol = 1e-9;
// Exact solving is documented up to this many vertices; beyond it the
// branch-and-bound may give up and return bounds.
inline constexpr std::size_t kSolverVertexBudget = 60;

struct UnitDistanceGraph {
  double r = 0.0;
  std::vector<SpherePoint> points;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j
  double tol = kGraphTol;
  bool exact = false;  // true when edges are unit by construction
};

// All pairs at |chord - 1| <= tol become edges. Requires a shared radius and
// tol in (0, 1e-3].
UnitDistanceGraph build_graph(const std::vector<SpherePoint>& points,
                              double tol = kGraphTol);

// For even p: q points at azimuths 2*pi*j/q on the unit circle of
// radius_from_rational(p/q); the edge set is exactly the Hamiltonian cycle
// stepping p/2 positions (consecutive cycle vertices subtend theta, and no
// other pair is at chord 1). Odd p has no such cycle and is rejected.
UnitDistanceGraph build_cycle(const RationalAngle& a);

// K4 minus the x1-x4 edge realized at unit distances in the symmetric frame:
// x1 at the north pole, x2/x3 mirror images across the xz-plane on x1's unit
// circle, x4 the second common unit-distance point of x2 and x3.
struct DiamondConfig {
  SpherePoint x1, x2, x3, x4;
  double d_measured = 0.0;                 // distance of x4 from the z-axis
  std::optional<double> beta_measured;     // 2 asin(1/(2D)) when D > 1/2
  bool degenerate_antipodal = false;       // x4 antipodal to x1 (r = 1/sqrt2)
};

// Geometric oracle: x4 is found by a 1-D root-find on the circle
// x^2 + z^2 = r^2 in the xz-plane. Requires r > 1/sqrt3.
DiamondConfig measure_diamond(Radius r);

// The published closed form for D, evaluated verbatim:
// |2r (2r^2-1) sqrt(3r^2-1) / (4r^2-1)|. Compare against measure_diamond;
// the two disagree (see d_formula_deviation).
double d_closed_form(Radius r);

// |d_closed_form - d_measured| at r, reported rather than assumed zero.
double d_formula_deviation(Radius r);

// The same closed form with the stray factor r moved to the denominator:
// |2 (2r^2-1) sqrt(3r^2-1) / (r (4r^2-1))|. This variant agrees with the
// geometric oracle and with the beta identity.
double d_closed_form_corrected(Radius r);

// beta = 2 asin(tan(theta/2) / (4 cos theta)); domain-checked.
double beta_from_theta(double theta_angle);

struct Theorem4Verdict {
  double d_measured = 0.0;
  bool d_above_half = false;
  std::optional<double> beta;
  std::optional<RatioMatch> beta_classification;
  std::string reason;  // set when not applicable on the D side
};

// D <= 1/2 -> not applicable; otherwise classifies beta/pi with the
// rational-angle matcher.
Theorem4Verdict theorem4_applicable(Radius r, unsigned q_max, double tol);

struct ColoringSolution {
  int k = 0;
  std::vector<int> assignment;  // colors 1..k, per vertex
  bool optimal = false;
};

// Exact chromatic number: greedy clique lower bound, DSATUR upper bound,
// then branch and bound with color-symmetry breaking. Deterministic.
ColoringSolution chromatic_number(const UnitDistanceGraph& g);

}  // namespace schroma

#endif  // SCHROMA_UDG_HPP
