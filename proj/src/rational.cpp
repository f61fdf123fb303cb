#include "schroma/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace schroma {

RationalAngle::RationalAngle(unsigned p, unsigned q) {
  if (p == 0 || q == 0)
    throw invalid_input_error("rational angle: p and q must be positive");
  unsigned g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  // open range: 1/3 < p/q < 1
  if (3 * p_ <= q_ || p_ >= q_)
    throw domain_error("rational angle: p/q must lie strictly in (1/3, 1)");
}

Radius radius_from_rational(const RationalAngle& a) {
  double s = std::sin(a.value() * std::numbers::pi / 2.0);
  // range invariant guarantees s > 1/2, so the radicand is positive
  return Radius(s / std::sqrt(4.0 * s * s - 1.0));
}

Classification theorem1_applicable(const RationalAngle& a) {
  Classification out;
  out.verdict = a.p_even() ? Verdict::Applicable : Verdict::Exceptional;
  out.match = a;
  out.theta_over_pi = a.value();
  return out;
}

RatioMatch classify_angle_ratio(double c, unsigned q_max, double tol) {
  if (q_max < 1) throw invalid_input_error("classify: q_max must be >= 1");
  if (!(tol > 0.0)) throw invalid_input_error("classify: tol must be positive");
  if (tol >= 0.5 / (static_cast<double>(q_max) * q_max))
    throw ambiguity_error(
        "classify: tol >= 1/(2 q_max^2); two fractions could both match");

  RatioMatch out;
  out.q_max = q_max;
  out.ratio = c;

  // For each q the nearest p is the only candidate within tol < 1/(2q).
  for (unsigned q = 1; q <= q_max; ++q) {
    double pd = std::round(c * q);
    if (pd < 1.0) continue;
    auto p = static_cast<unsigned>(pd);
    if (p >= q) continue;  // require p/q < 1
    if (std::gcd(p, q) != 1) continue;
    if (std::abs(c - static_cast<double>(p) / q) <= tol) {
      out.verdict = (p % 2 == 0) ? Verdict::Applicable : Verdict::Exceptional;
      out.p = p;
      out.q = q;
      return out;
    }
  }
  return out;
}

Classification classify_radius(Radius r, unsigned q_max, double tol) {
  if (r.value() <= kInvSqrt3 - kSelfCheckTol)
    throw domain_error("classify_radius: requires r > 1/sqrt(3)");
  double c = theta(r) / std::numbers::pi;
  RatioMatch m = classify_angle_ratio(c, q_max, tol);
  Classification out;
  out.verdict = m.verdict;
  out.q_max = q_max;
  out.theta_over_pi = c;
  // theta(r)/pi lies in (1/3, 1] for r > 1/sqrt3, so any match is a valid
  // rational angle
  if (m.verdict != Verdict::NoMatchUpTo) out.match = RationalAngle(m.p, m.q);
  return out;
}

std::vector<std::pair<RationalAngle, Radius>> enumerate_exceptional(
    unsigned q_max) {
  if (q_max < 1)
    throw invalid_input_error("enumerate_exceptional: q_max must be >= 1");
  std::vector<std::pair<RationalAngle, Radius>> out;
  for (unsigned q = 1; q <= q_max; ++q) {
    for (unsigned p = 1; p < q; p += 2) {
      if (3 * p <= q) continue;
      if (std::gcd(p, q) != 1) continue;
      RationalAngle a(p, q);
      out.emplace_back(a, radius_from_rational(a));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second.value() != y.second.value())
      return x.second.value() < y.second.value();
    return x.first.q() < y.first.q();
  });
  return out;
}

}  // namespace schroma
