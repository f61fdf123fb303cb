#include <cmath>
#include <string>

#include <doctest.h>

#include "schroma/json_io.hpp"
#include "schroma/verifier.hpp"

using namespace schroma;

TEST_CASE("sampler determinism and chord contract") {
  Radius r(0.9);
  PairSample a = sample_unit_pair(r, 123, 45);
  PairSample b = sample_unit_pair(r, 123, 45);
  CHECK((a.x.vec() - b.x.vec()).norm() == 0.0);
  CHECK((a.y.vec() - b.y.vec()).norm() == 0.0);
  PairSample c = sample_unit_pair(r, 123, 46);
  CHECK((a.x.vec() - c.x.vec()).norm() > 0.0);

  for (std::uint64_t i = 0; i < 10000; ++i) {
    PairSample p = sample_unit_pair(r, 7, i);
    CHECK(std::abs(chord_distance(p.x, p.y) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(sample_unit_pair(Radius(0.49), 1, 0), no_unit_pairs_error);
}

TEST_CASE("sampler area uniformity: z-moment") {
  Radius r(1.0);
  const std::uint64_t n = 100000;
  double sum_z = 0.0;
  for (std::uint64_t i = 0; i < n; ++i)
    sum_z += sample_unit_pair(r, 2718, i).x.vec().z;
  double mean = sum_z / n;
  // per-coordinate variance is r^2/3 for the area measure
  CHECK(std::abs(mean) <= 3.0 * 1.0 / std::sqrt(3.0 * n));
}

TEST_CASE("verify_coloring basics") {
  CHECK_THROWS_AS(verify_coloring(octa4(), Radius(kInvSqrt2), 0, 1),
                  precondition_error);

  VerificationReport good =
      verify_coloring(octa4(), Radius(kInvSqrt2), 100000, 31337);
  CHECK(good.violations == 0);
  CHECK(good.worst_margin > 0.0);

  VerificationReport bad = verify_coloring(tetra4(), Radius(0.60), 100000, 31337);
  CHECK(bad.violations > 0);
  CHECK(bad.worst_margin < 0.0);
  CHECK(bad.first_violation_index.has_value());
}

TEST_CASE("verify_coloring is worker-count independent") {
  Radius r(0.60);
  VerificationReport w1 = verify_coloring(tetra4(), r, 40000, 5, 1);
  VerificationReport w2 = verify_coloring(tetra4(), r, 40000, 5, 2);
  VerificationReport w8 = verify_coloring(tetra4(), r, 40000, 5, 8);
  for (const VerificationReport* other : {&w2, &w8}) {
    CHECK(w1.violations == other->violations);
    CHECK(w1.worst_margin == other->worst_margin);
    CHECK(w1.first_violation_index == other->first_violation_index);
    CHECK(report_to_json(w1).dump() == report_to_json(*other).dump());
  }
}

TEST_CASE("adversarial search verdicts around the tetra threshold") {
  AdversarialResult above = adversarial_search(tetra4(), Radius(0.58), 48, 1);
  CHECK(above.found);
  REQUIRE(above.witness.has_value());
  CHECK(std::abs(chord_distance(above.witness->x, above.witness->y) - 1.0) <=
        kViolationTol);
  CHECK(tetra_color(above.witness->x) == tetra_color(above.witness->y));

  AdversarialResult below = adversarial_search(tetra4(), Radius(0.55), 48, 1);
  CHECK(!below.found);
  CHECK(below.margin > 0.0);
}

TEST_CASE("adversarial search respects the octa boundary rules") {
  AdversarialResult res =
      adversarial_search(octa4(), Radius(kInvSqrt2), 48, 2);
  CHECK(!res.found);
  CHECK(res.margin > 0.0);
  CHECK_THROWS_AS(adversarial_search(octa4(), Radius(kInvSqrt2), 0, 2),
                  invalid_input_error);
}

TEST_CASE("the octa validity claim is a single radius, not a range") {
  // below 1/sqrt2 antipodally-paired octants contain unit pairs, above it
  // the octants themselves do
  CHECK(adversarial_search(octa4(), Radius(0.65), 48, 4).found);
  CHECK(adversarial_search(octa4(), Radius(0.75), 48, 4).found);
}

TEST_CASE("threshold scan on the tetra family") {
  auto family = [](Radius) { return tetra4(); };
  ScanResult res = threshold_scan(family, 0.50, 0.62, 1e-3, 48, 11);
  CHECK(std::abs(res.r_star - claimed_threshold("tetra4")) <= 1e-3);

  // monotone evidence along the trace
  for (const ScanPoint& a : res.trace)
    for (const ScanPoint& b : res.trace)
      if (a.violated && b.r > a.r) CHECK(b.violated);

  CHECK_THROWS_AS(threshold_scan(family, 0.50, 0.52, 1e-3, 24, 11),
                  bracketing_error);
}

TEST_CASE("dodecahedral verdicts around the claimed threshold") {
  AdversarialResult inside =
      adversarial_search(dodeca6(), Radius(kSqrt3Over2 - 0.01), 48, 3);
  CHECK(!inside.found);
  CHECK(inside.margin > 0.0);
  AdversarialResult outside =
      adversarial_search(dodeca6(), Radius(kSqrt3Over2 + 0.05), 48, 3);
  CHECK(outside.found);
}

TEST_CASE("threshold scan must not undercut the dodecahedral claim") {
  auto family = [](Radius) { return dodeca6(); };
  ScanResult res = threshold_scan(family, 0.80, 0.92, 1e-3, 48, 12);
  CHECK(res.r_star >= claimed_threshold("dodeca6") - 1e-3);
  CHECK(res.r_star <= 0.92);
}

TEST_CASE("threshold scan of the shipped cap-stripes parameters") {
  CapStripesParams p = load_cap_params_file(
      std::string(SCHROMA_SOURCE_DIR) + "/data/cap5_default_params.json");
  auto family = [&](Radius) { return cap5(p); };
  ScanResult res = threshold_scan(family, 0.50, 0.60, 1e-3, 48, 13);
  CHECK(res.r_star >= 0.5773 - 1e-3);
  CHECK(res.r_star <= claimed_threshold("cap5") + 1e-3);
}
