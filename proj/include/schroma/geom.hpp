#ifndef SCHROMA_GEOM_HPP
#define SCHROMA_GEOM_HPP

#include <algorithm>
#include <cmath>

#include "schroma/errors.hpp"

namespace schroma {

// Self-consistency tolerance used by constructors and invariant checks.
inline constexpr double kSelfCheckTol = 1e-12;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt3 = 0.57735026918962576451;
inline constexpr double kSqrt3Over2 = 0.86602540378443864676;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }

  Vec3 normalized() const {
    double n = norm();
    if (n == 0.0) throw invalid_input_error("cannot normalize a zero vector");
    return {x / n, y / n, z / n};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Sphere radius, in the same length unit as the unit distance.
class Radius {
 public:
  explicit Radius(double r) : r_(r) {
    if (!(r > 0.0)) throw invalid_input_error("radius must be positive");
  }
  double value() const { return r_; }

  // unit-distance pairs exist iff 2r >= 1
  void require_unit_pairs() const {
    if (r_ < 0.5)
      throw no_unit_pairs_error("no unit-distance pairs on a sphere of radius < 1/2");
  }

 private:
  double r_;
};

// A point of the sphere S^2_r, kept in ambient coordinates so the chordal
// metric is a plain vector norm.
class SpherePoint {
 public:
  // Scales v onto the sphere of radius r. Rejects the zero vector.
  SpherePoint(const Vec3& v, Radius r) : r_(r) {
    double n = v.norm();
    if (n == 0.0)
      throw invalid_input_error("sphere point direction must be nonzero");
    v_ = v * (r.value() / n);
  }

  static SpherePoint north_pole(Radius r) {
    return SpherePoint(Vec3{0.0, 0.0, 1.0}, r);
  }
  static SpherePoint south_pole(Radius r) {
    return SpherePoint(Vec3{0.0, 0.0, -1.0}, r);
  }

  // Accepts v verbatim after checking |v| is already on the sphere, so that
  // serialized coordinates survive a round trip bit for bit.
  static SpherePoint trusted(const Vec3& v, Radius r, double tol = 1e-9) {
    if (std::abs(v.norm() - r.value()) > tol * std::max(1.0, r.value()))
      throw invalid_input_error("point does not lie on the stated sphere");
    SpherePoint p(v, r);
    p.v_ = v;
    return p;
  }

  const Vec3& vec() const { return v_; }
  Radius radius() const { return r_; }
  double r() const { return r_.value(); }

  SpherePoint antipode() const { return SpherePoint(-v_, r_); }
  Vec3 direction() const { return v_ * (1.0 / r_.value()); }

 private:
  Vec3 v_;
  Radius r_;
};

// Cross-section of unit-chord points around the +z pole:
//   R  = sqrt(4r^2 - 1) / (2r)   (circle radius)
//   z0 = r - 1/(2r)              (signed plane height; forced by R^2+z0^2=r^2)
struct UnitCircle {
  Radius r;
  double circle_radius;  // R
  double plane_height;   // z0
};

// Rotation about the diameter through a sphere point and its antipode.
class Rotation {
 public:
  Rotation(const Vec3& axis, double angle)
      : axis_(axis.normalized()), angle_(angle) {}

  static Rotation about_point(const SpherePoint& p, double angle) {
    return Rotation(p.vec(), angle);
  }

  const Vec3& axis() const { return axis_; }
  double angle() const { return angle_; }

  // Rodrigues rotation; preserves norms and pairwise distances.
  Vec3 apply(const Vec3& v) const {
    double c = std::cos(angle_), s = std::sin(angle_);
    Vec3 k = axis_;
    return v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
  }

 private:
  Vec3 axis_;
  double angle_;
};

// |a.v - b.v|; requires matching radii.
double chord_distance(const SpherePoint& a, const SpherePoint& b);

// Requires r > 1/2 (at r = 1/2 the circle degenerates to the antipode,
// which downstream constructions cannot use).
UnitCircle unit_circle(Radius r);

// Central angle subtended on the unit circle by two of its points at mutual
// unit distance: theta = 2 asin(r / sqrt(4r^2 - 1)). Defined for r >= 1/sqrt3.
double theta(Radius r);

// Point of unit_circle(r) at azimuth phi: (R cos phi, R sin phi, z0).
SpherePoint circle_point(Radius r, double phi);

// Point at azimuth phi on the unit-chord circle around an arbitrary pole.
// Exact by construction: |result - pole| = 1 up to roundoff.
SpherePoint circle_point_about(const SpherePoint& pole, double phi);

SpherePoint rotate(const SpherePoint& p, const Rotation& rot);

// Geodesic (great-circle) distance, provided as a derived convenience only;
// the graph metric everywhere in this library is chordal.
double geodesic_distance(const SpherePoint& a, const SpherePoint& b);

}  // namespace schroma

#endif  // SCHROMA_GEOM_HPP
