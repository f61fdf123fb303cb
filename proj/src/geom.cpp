#include "schroma/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schroma {

double chord_distance(const SpherePoint& a, const SpherePoint& b) {
  double ra = a.r(), rb = b.r();
  if (std::abs(ra - rb) > kSelfCheckTol * std::max(1.0, ra))
    throw invalid_input_error("chord_distance: points lie on different spheres");
  return (a.vec() - b.vec()).norm();
}

UnitCircle unit_circle(Radius r) {
  double rv = r.value();
  if (rv < 0.5)
    throw no_unit_pairs_error("unit_circle: no unit-distance pairs for r < 1/2");
  if (rv == 0.5)
    throw no_unit_pairs_error(
        "unit_circle: degenerate at r = 1/2 (circle collapses to the antipode)");
  double R = std::sqrt(4.0 * rv * rv - 1.0) / (2.0 * rv);
  double z0 = rv - 1.0 / (2.0 * rv);
  // at the representable 1/sqrt2 the plane height is roundoff, not geometry;
  // snapping it to zero keeps exact coordinate-plane symmetry downstream
  if (std::abs(z0) <= 8.0 * std::numeric_limits<double>::epsilon() * rv)
    z0 = 0.0;
  return UnitCircle{r, R, z0};
}

double theta(Radius r) {
  double rv = r.value();
  if (rv < kInvSqrt3 - kSelfCheckTol)
    throw domain_error("theta: undefined for r < 1/sqrt(3)");
  double u = rv / std::sqrt(4.0 * rv * rv - 1.0);
  // at r = 1/sqrt(3) roundoff can push the argument a hair past 1
  u = std::min(u, 1.0);
  return 2.0 * std::asin(u);
}

SpherePoint circle_point(Radius r, double phi) {
  UnitCircle c = unit_circle(r);
  Vec3 v{c.circle_radius * std::cos(phi), c.circle_radius * std::sin(phi),
         c.plane_height};
  return SpherePoint(v, r);
}

SpherePoint circle_point_about(const SpherePoint& pole, double phi) {
  UnitCircle c = unit_circle(pole.radius());
  Vec3 n = pole.direction();
  // deterministic tangent basis at the pole direction
  Vec3 h = std::abs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  Vec3 u = h.cross(n).normalized();
  Vec3 v = n.cross(u);
  Vec3 p = n * c.plane_height +
           (u * std::cos(phi) + v * std::sin(phi)) * c.circle_radius;
  return SpherePoint(p, pole.radius());
}

SpherePoint rotate(const SpherePoint& p, const Rotation& rot) {
  return SpherePoint(rot.apply(p.vec()), p.radius());
}

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  double ra = a.r(), rb = b.r();
  if (std::abs(ra - rb) > kSelfCheckTol * std::max(1.0, ra))
    throw invalid_input_error("geodesic_distance: points lie on different spheres");
  double c = a.direction().dot(b.direction());
  c = std::clamp(c, -1.0, 1.0);
  return ra * std::acos(c);
}

}  // namespace schroma
