#ifndef SCHROMA_COLORINGS_HPP
#define SCHROMA_COLORINGS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schroma/geom.hpp"

namespace schroma {

// Parameters of the cap-and-stripes family: a polar cap (color 1) plus four
// azimuth stripes (colors 2..5) whose boundary meridians may drift with
// depth ("zigzag"), letting the stripes taper toward the south pole.
struct CapStripesParams {
  double cap_colatitude = 0.0;           // cap boundary, radians from +z
  std::array<double, 4> meridians{};     // strictly increasing in [0, 2pi)
  std::array<double, 4> zigzag{};        // per-boundary azimuth drift, radians

  void validate() const;
  std::uint64_t hash() const;
};

// A named total point -> color function with its claimed validity range.
// Assignment is total at every radius; validity is the verifier's concern.
struct ColoringSpec {
  std::string name;
  int k = 0;                      // color count
  double claimed_max_r = 0.0;     // validity claim: r <= claimed_max_r ...
  bool exact_radius = false;      // ... or exactly this radius (octahedral)
  std::optional<CapStripesParams> params;
  std::function<int(const SpherePoint&)> assign;  // colors in 1..k

  // Directed start points for adversarial search: cell corners, edge
  // midpoints, axis points. Unit directions; the verifier scales them.
  std::vector<Vec3> probe_directions;

  std::string id() const;  // name plus params hash when present
};

// Voronoi cells of the four inscribed tetrahedron directions
// (+++), (+--), (-+-), (--+) normalized; ties to the smallest index.
int tetra_color(const SpherePoint& x);

// Sign-octant classes folded under antipodality, with explicit arc and axis
// rules on the boundary great circles so that no two exactly-orthogonal
// points share a class. Valid exactly at r = 1/sqrt2.
int octa_color(const SpherePoint& x);

// Antipodal face-center pairs of the regular dodecahedron (two faces
// perpendicular to the z-axis); ties to the smallest pair index.
int dodeca_color(const SpherePoint& x);

// Cap (color 1, open: colatitude < cap boundary) and four stripes (2..5) by
// azimuth against the drifting meridian cuts. Points exactly on a cut go to
// the lower-indexed region.
int cap_stripes_color(const SpherePoint& x, const CapStripesParams& params);

// Packaged specs.
ColoringSpec tetra4();
ColoringSpec octa4();
ColoringSpec dodeca6();
ColoringSpec cap5(const CapStripesParams& params);

// sqrt(3-sqrt3)/2, 1/sqrt3, sqrt3/2, or exactly 1/sqrt2
// for names tetra4, cap5, dodeca6, octa4.
double claimed_threshold(const std::string& name);

// Deterministic coordinate-descent search for cap-and-stripes parameters
// whose adversarial same-color margin exceeds 1e-4, seeded from a cap of
// chordal diameter 1 - 1e-3. Requires r <= 1/sqrt3 + 1e-9. Throws
// no_params_found_error when the iteration budget is exhausted.
CapStripesParams find_cap_stripes_params(Radius r);

// Margin the parameter search must clear.
inline constexpr double kCapStripesMarginGate = 1e-4;

// Numerically maximized chord between two points of the color-1 tetrahedral
// cell at radius r (grid over the cell boundary plus local refinement).
double tetra_cell_diameter(Radius r);

}  // namespace schroma

#endif  // SCHROMA_COLORINGS_HPP
