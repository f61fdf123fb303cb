#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "schroma/colorings.hpp"
#include "schroma/rng.hpp"
#include "schroma/verifier.hpp"

using namespace schroma;

namespace {

constexpr double kPi = std::numbers::pi;

SpherePoint random_point(Radius r, SplitMix64& rng) {
  double z = rng.next_double(-1.0, 1.0);
  double az = rng.next_double(0.0, 2.0 * kPi);
  double rho = std::sqrt(std::max(1.0 - z * z, 0.0));
  return SpherePoint(Vec3{rho * std::cos(az), rho * std::sin(az), z}, r);
}

const std::array<Vec3, 4> kTetraDirs = [] {
  double s = 1.0 / std::sqrt(3.0);
  return std::array<Vec3, 4>{Vec3{s, s, s}, Vec3{s, -s, -s}, Vec3{-s, s, -s},
                             Vec3{-s, -s, s}};
}();

}  // namespace

TEST_CASE("tetra coloring examples") {
  Radius r(1.0);
  CHECK(tetra_color(SpherePoint(kTetraDirs[0], r)) == 1);
  CHECK(tetra_color(SpherePoint(kTetraDirs[2], r)) == 3);
  // antipode of vertex 1: three-way tie among 2,3,4; smallest index wins
  CHECK(tetra_color(SpherePoint(-kTetraDirs[0], r)) == 2);
}

TEST_CASE("tetra cell diameter crosses 1 at the claimed threshold") {
  double r_star = claimed_threshold("tetra4");
  CHECK(std::abs(tetra_cell_diameter(Radius(r_star)) - 1.0) <= 1e-6);

  // root-find on the numerically maximized diameter
  double lo = 0.50, hi = 0.62;
  REQUIRE(tetra_cell_diameter(Radius(lo)) < 1.0);
  REQUIRE(tetra_cell_diameter(Radius(hi)) > 1.0);
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (tetra_cell_diameter(Radius(mid)) < 1.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(0.5 * (lo + hi) - r_star) <= 1e-6);
}

TEST_CASE("octa coloring sign classes and boundary table") {
  Radius r(kInvSqrt2);
  double a = 0.3;
  CHECK(octa_color(SpherePoint(Vec3{a, a, a}, r)) == 1);
  CHECK(octa_color(SpherePoint(Vec3{-a, -a, -a}, r)) == 1);

  // axis table
  CHECK(octa_color(SpherePoint(Vec3{1, 0, 0}, r)) == 4);
  CHECK(octa_color(SpherePoint(Vec3{0, 1, 0}, r)) == 1);
  CHECK(octa_color(SpherePoint(Vec3{0, 0, 1}, r)) == 2);
  CHECK(octa_color(SpherePoint(Vec3{-1, 0, 0}, r)) == 4);

  // arc table: circle z = 0 uses {1, 4}
  CHECK(octa_color(SpherePoint(Vec3{1, 1, 0}, r)) == 1);
  CHECK(octa_color(SpherePoint(Vec3{-1, 1, 0}, r)) == 4);
  CHECK(octa_color(SpherePoint(Vec3{-1, -1, 0}, r)) == 1);
  CHECK(octa_color(SpherePoint(Vec3{1, -1, 0}, r)) == 4);
  // circle x = 0 uses {1, 2}
  CHECK(octa_color(SpherePoint(Vec3{0, 1, 1}, r)) == 1);
  CHECK(octa_color(SpherePoint(Vec3{0, -1, 1}, r)) == 2);
  // circle y = 0 uses {3, 4}
  CHECK(octa_color(SpherePoint(Vec3{1, 0, 1}, r)) == 3);
  CHECK(octa_color(SpherePoint(Vec3{-1, 0, 1}, r)) == 4);
}

TEST_CASE("octa exactness on constructed orthogonal pairs") {
  Radius r(kInvSqrt2);
  SplitMix64 rng(7);

  // random orthogonal pairs
  for (int i = 0; i < 10000; ++i) {
    SpherePoint x = random_point(r, rng);
    Vec3 n = x.direction();
    Vec3 h = std::abs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 u = h.cross(n).normalized();
    Vec3 v = n.cross(u);
    double t = rng.next_double(0.0, 2.0 * kPi);
    SpherePoint y(u * std::cos(t) + v * std::sin(t), r);
    REQUIRE(std::abs(x.direction().dot(y.direction())) <= 1e-12);
    CHECK(octa_color(x) != octa_color(y));
  }

  // boundary-on-boundary pairs on each great circle, and axis pairs
  for (int k = 0; k < 360; ++k) {
    double t = 2.0 * kPi * k / 360.0;
    double c = std::cos(t), s = std::sin(t);
    SpherePoint xz(Vec3{c, s, 0}, r), yz(Vec3{-s, c, 0}, r);
    CHECK(octa_color(xz) != octa_color(yz));
    SpherePoint xx(Vec3{0, c, s}, r), yx(Vec3{0, -s, c}, r);
    CHECK(octa_color(xx) != octa_color(yx));
    SpherePoint xy(Vec3{c, 0, s}, r), yy(Vec3{-s, 0, c}, r);
    CHECK(octa_color(xy) != octa_color(yy));
    // axis against the circle it is orthogonal to
    CHECK(octa_color(SpherePoint(Vec3{0, 0, 1}, r)) != octa_color(xz));
    CHECK(octa_color(SpherePoint(Vec3{1, 0, 0}, r)) != octa_color(xx));
    CHECK(octa_color(SpherePoint(Vec3{0, 1, 0}, r)) != octa_color(xy));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Vec3 a{}, b{};
      (&a.x)[i] = 1.0;
      (&b.x)[j] = 1.0;
      CHECK(octa_color(SpherePoint(a, r)) != octa_color(SpherePoint(b, r)));
    }
}

TEST_CASE("dodeca coloring examples") {
  Radius r(0.8);
  double c = 2.0 / std::sqrt(5.0), h = 1.0 / std::sqrt(5.0);
  CHECK(dodeca_color(SpherePoint(Vec3{0, 0, 1}, r)) == 1);
  CHECK(dodeca_color(SpherePoint(Vec3{0, 0, -1}, r)) == 1);
  CHECK(dodeca_color(SpherePoint(Vec3{c, 0, h}, r)) == 2);
  CHECK(dodeca_color(SpherePoint(Vec3{-c, 0, -h}, r)) == 2);
}

TEST_CASE("antipodal invariance of octa and dodeca") {
  SplitMix64 rng(11);
  Radius ro(kInvSqrt2), rd(0.85);
  for (int i = 0; i < 100000; ++i) {
    SpherePoint x = random_point(ro, rng);
    CHECK(octa_color(x) == octa_color(x.antipode()));
    SpherePoint y = random_point(rd, rng);
    CHECK(dodeca_color(y) == dodeca_color(y.antipode()));
  }
}

TEST_CASE("totality and determinism") {
  SplitMix64 rng(13);
  CapStripesParams p;
  p.cap_colatitude = 1.0;
  p.meridians = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  p.zigzag = {0.1, -0.05, 0.2, 0.0};
  Radius r(0.7);
  for (int i = 0; i < 100000; ++i) {
    SpherePoint x = random_point(r, rng);
    int t1 = tetra_color(x), t2 = tetra_color(x);
    CHECK(t1 == t2);
    CHECK((t1 >= 1 && t1 <= 4));
    int o = octa_color(x);
    CHECK((o >= 1 && o <= 4));
    int d = dodeca_color(x);
    CHECK((d >= 1 && d <= 6));
    int cs = cap_stripes_color(x, p);
    CHECK(cs == cap_stripes_color(x, p));
    CHECK((cs >= 1 && cs <= 5));
  }
}

TEST_CASE("cap-stripes assignment rules") {
  CapStripesParams p;
  p.cap_colatitude = 1.0;
  p.meridians = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  p.zigzag = {0.0, 0.0, 0.0, 0.0};
  Radius r(0.55);

  CHECK(cap_stripes_color(SpherePoint::north_pole(r), p) == 1);
  // azimuth 0 at the south pole lands on the first cut: first stripe
  CHECK(cap_stripes_color(SpherePoint::south_pole(r), p) == 2);

  // the cap is open: a point exactly on the cap boundary joins the stripes
  auto at = [&](double colat, double az) {
    return SpherePoint(Vec3{std::sin(colat) * std::cos(az),
                            std::sin(colat) * std::sin(az), std::cos(colat)},
                       r);
  };
  SpherePoint near_boundary = at(1.0, 0.3);
  CapStripesParams p_exact = p;
  // pin the cap boundary to this point's own measured colatitude
  p_exact.cap_colatitude =
      std::acos(near_boundary.vec().z / near_boundary.r());
  CHECK(cap_stripes_color(near_boundary, p_exact) == 2);
  CHECK(cap_stripes_color(at(0.999999, 0.3), p) == 1);

  // points exactly on a meridian cut go to the lower-indexed region; exact
  // azimuths come from zeroed coordinates
  double s12 = std::sin(1.2), c12 = std::cos(1.2);
  CHECK(cap_stripes_color(SpherePoint(Vec3{s12, 0, c12}, r), p) == 2);   // az 0
  CHECK(cap_stripes_color(SpherePoint(Vec3{0, s12, c12}, r), p) == 2);   // az pi/2
  CHECK(cap_stripes_color(SpherePoint(Vec3{-s12, 0, c12}, r), p) == 3);  // az pi
  CHECK(cap_stripes_color(SpherePoint(Vec3{0, -s12, c12}, r), p) == 4);  // az 3pi/2
  CHECK(cap_stripes_color(at(1.2, kPi / 2 + 0.01), p) == 3);

  CapStripesParams bad = p;
  bad.meridians = {1.0, 0.5, 2.0, 3.0};
  CHECK_THROWS_AS(cap_stripes_color(at(1.2, 0.0), bad), invalid_input_error);
}

TEST_CASE("claimed thresholds") {
  CHECK(claimed_threshold("tetra4") ==
        doctest::Approx(std::sqrt(3.0 - std::sqrt(3.0)) / 2.0).epsilon(1e-15));
  CHECK(claimed_threshold("tetra4") == doctest::Approx(0.5630163).epsilon(1e-6));
  CHECK(claimed_threshold("cap5") == doctest::Approx(0.5773503).epsilon(1e-6));
  CHECK(claimed_threshold("dodeca6") == doctest::Approx(0.8660254).epsilon(1e-6));
  CHECK(claimed_threshold("octa4") == doctest::Approx(0.7071068).epsilon(1e-6));
  CHECK_THROWS_AS(claimed_threshold("hexa7"), invalid_input_error);
}

TEST_CASE("measurability proxy: no sampled point lands within 1e-9 of a tie") {
  SplitMix64 rng(17);
  Radius r(0.7);
  const auto& dirs = kTetraDirs;

  // dodecahedral pair directions in the same standard orientation
  std::array<Vec3, 6> pairs;
  pairs[0] = Vec3{0, 0, 1};
  for (int k = 0; k < 5; ++k) {
    double az = 2.0 * kPi * k / 5.0;
    pairs[1 + k] = Vec3{2.0 / std::sqrt(5.0) * std::cos(az),
                        2.0 / std::sqrt(5.0) * std::sin(az),
                        1.0 / std::sqrt(5.0)};
  }

  CapStripesParams cp;
  cp.cap_colatitude = 1.0;
  cp.meridians = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  cp.zigzag = {0.1, -0.05, 0.2, 0.0};

  int hits = 0;
  for (int i = 0; i < 1000000; ++i) {
    SpherePoint x = random_point(r, rng);
    Vec3 d = x.direction();
    // tetra: gap between the two largest vertex dots
    std::array<double, 4> dots;
    for (int k = 0; k < 4; ++k) dots[k] = d.dot(dirs[k]);
    std::sort(dots.begin(), dots.end());
    if (dots[3] - dots[2] < 1e-9) ++hits;
    // octa: closeness to a coordinate plane
    if (std::abs(d.x) < 1e-9 || std::abs(d.y) < 1e-9 || std::abs(d.z) < 1e-9)
      ++hits;
    // dodeca: gap between the two largest folded dots
    std::array<double, 6> fd;
    for (int k = 0; k < 6; ++k) fd[k] = std::abs(d.dot(pairs[k]));
    std::sort(fd.begin(), fd.end());
    if (fd[5] - fd[4] < 1e-9) ++hits;
    // cap-stripes: proximity to the cap boundary or a drifting cut
    double colat = std::acos(std::clamp(d.z, -1.0, 1.0));
    if (std::abs(colat - cp.cap_colatitude) < 1e-9) ++hits;
    double az = std::atan2(d.y, d.x);
    if (az < 0) az += 2.0 * kPi;
    double t = colat <= kPi / 2 ? 0.0 : (colat - kPi / 2) / (kPi / 2);
    for (int j = 0; j < 4; ++j) {
      double cut = std::fmod(cp.meridians[j] + cp.zigzag[j] * t + 2.0 * kPi,
                             2.0 * kPi);
      double diff = std::abs(az - cut);
      if (std::min(diff, 2.0 * kPi - diff) < 1e-9) ++hits;
    }
  }
  CHECK(hits == 0);
}

TEST_CASE("find_cap_stripes_params") {
  // degenerate-sampler radius: unit pairs are exactly antipodal there
  CapStripesParams p050 = find_cap_stripes_params(Radius(0.5));
  CHECK(verify_coloring(cap5(p050), Radius(0.5), 50000, 98).violations == 0);

  // slack case
  CapStripesParams p05 = find_cap_stripes_params(Radius(0.52));
  AdversarialResult a05 =
      adversarial_search(cap5(p05), Radius(0.52), kDefaultRestarts, 99);
  CHECK(!a05.found);
  CHECK(a05.margin > kCapStripesMarginGate);

  // near the claimed validity limit (endpoint minus a hair; see README note)
  Radius r_cap(kInvSqrt3 - 1e-3);
  CapStripesParams p = find_cap_stripes_params(r_cap);
  VerificationReport rep = verify_coloring(cap5(p), r_cap, 100000, 404);
  CHECK(rep.violations == 0);

  CHECK_THROWS_AS(find_cap_stripes_params(Radius(0.60)), precondition_error);
}
