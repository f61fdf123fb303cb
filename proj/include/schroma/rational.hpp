#ifndef SCHROMA_RATIONAL_HPP
#define SCHROMA_RATIONAL_HPP

#include <optional>
#include <vector>

#include "schroma/geom.hpp"

namespace schroma {

// Reduced fraction p/q encoding the angle (p/q)*pi, restricted to the open
// range 1/3 < p/q < 1 where the angle can arise as theta(r) for r > 1/sqrt3.
class RationalAngle {
 public:
  // Reduces p/q and validates the range. Boundary values 1/3 and 1 are
  // rejected, not special-cased.
  RationalAngle(unsigned p, unsigned q);

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }
  double value() const { return static_cast<double>(p_) / q_; }
  bool p_even() const { return p_ % 2 == 0; }

  bool operator==(const RationalAngle& o) const {
    return p_ == o.p_ && q_ == o.q_;
  }

 private:
  unsigned p_, q_;
};

enum class Verdict { Applicable, Exceptional, NoMatchUpTo };

// Outcome of testing a radius against the rational-angle criterion.
// Applicable/Exceptional carry the matched fraction; NoMatchUpTo records
// only the scanned denominator bound and is explicitly not a proof of
// irrationality.
struct Classification {
  Verdict verdict;
  std::optional<RationalAngle> match;
  unsigned q_max = 0;
  double theta_over_pi = 0.0;
};

// Raw fraction match for an arbitrary angle ratio in (0, 1); the matched
// fraction is not constrained to the theta range.
struct RatioMatch {
  Verdict verdict = Verdict::NoMatchUpTo;
  unsigned p = 0, q = 0;  // set iff verdict != NoMatchUpTo
  unsigned q_max = 0;
  double ratio = 0.0;
};

// Inverts theta: the radius with theta(r) = (p/q)*pi, via
// r = s / sqrt(4 s^2 - 1), s = sin(p pi / (2q)).
Radius radius_from_rational(const RationalAngle& a);

// Parity rule: p even -> Applicable, p odd -> Exceptional.
Classification theorem1_applicable(const RationalAngle& a);

// Numeric front end: computes c = theta(r)/pi and scans all reduced
// fractions with q <= q_max for |c - p/q| <= tol. Requires
// tol < 1/(2 q_max^2) so at most one fraction can match.
Classification classify_radius(Radius r, unsigned q_max, double tol);

// Same scan for an arbitrary angle ratio c in (0, 1); used for the
// diamond-configuration beta as well.
RatioMatch classify_angle_ratio(double c, unsigned q_max, double tol);

// All reduced p/q in (1/3, 1) with p odd and q <= q_max, paired with their
// radii, sorted by radius ascending.
std::vector<std::pair<RationalAngle, Radius>> enumerate_exceptional(
    unsigned q_max);

}  // namespace schroma

#endif  // SCHROMA_RATIONAL_HPP
