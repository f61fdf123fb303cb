#include "schroma/colorings.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace schroma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Inscribed tetrahedron directions: even sign products, unit length.
const std::array<Vec3, 4>& tetra_vertices() {
  static const double s = 1.0 / std::sqrt(3.0);
  static const std::array<Vec3, 4> v = {Vec3{s, s, s}, Vec3{s, -s, -s},
                                        Vec3{-s, s, -s}, Vec3{-s, -s, s}};
  return v;
}

// Icosahedron vertices (= dodecahedron face centers), two of them on the
// z-axis so two dodecahedron faces are perpendicular to it. First six are
// the antipodal-pair representatives.
const std::array<Vec3, 12>& icosa_vertices() {
  static const std::array<Vec3, 12> v = [] {
    std::array<Vec3, 12> out{};
    out[0] = Vec3{0.0, 0.0, 1.0};
    double c = 2.0 / std::sqrt(5.0), h = 1.0 / std::sqrt(5.0);
    for (int k = 0; k < 5; ++k) {
      double az = kTwoPi * k / 5.0;
      out[1 + k] = Vec3{c * std::cos(az), c * std::sin(az), h};
    }
    for (int k = 0; k < 6; ++k) out[6 + k] = -out[k];
    return out;
  }();
  return v;
}

// Dodecahedron vertices: normalized sums of mutually adjacent icosahedron
// vertex triples (adjacent <=> dot = 1/sqrt5).
const std::vector<Vec3>& dodeca_vertices() {
  static const std::vector<Vec3> verts = [] {
    const auto& ico = icosa_vertices();
    std::vector<Vec3> out;
    const double adj = 1.0 / std::sqrt(5.0);
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j)
        for (int k = j + 1; k < 12; ++k) {
          if (std::abs(ico[i].dot(ico[j]) - adj) > 1e-9) continue;
          if (std::abs(ico[i].dot(ico[k]) - adj) > 1e-9) continue;
          if (std::abs(ico[j].dot(ico[k]) - adj) > 1e-9) continue;
          out.push_back((ico[i] + ico[j] + ico[k]).normalized());
        }
    return out;  // 20 of them
  }();
  return verts;
}

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

}  // namespace

int tetra_color(const SpherePoint& x) {
  const auto& v = tetra_vertices();
  Vec3 d = x.direction();
  int best = 0;
  double best_dot = d.dot(v[0]);
  for (int i = 1; i < 4; ++i) {
    double dot = d.dot(v[i]);
    if (dot > best_dot) {  // strict: ties keep the smallest index
      best_dot = dot;
      best = i;
    }
  }
  return best + 1;
}

int octa_color(const SpherePoint& x) {
  const Vec3& v = x.vec();
  bool zx = v.x == 0.0, zy = v.y == 0.0, zz = v.z == 0.0;
  int zeros = static_cast<int>(zx) + static_cast<int>(zy) + static_cast<int>(zz);

  if (zeros == 0) {
    int sx = sign_of(v.x), sy = sign_of(v.y), sz = sign_of(v.z);
    if (sx < 0) {  // fold antipodally onto sx = +
      sy = -sy;
      sz = -sz;
    }
    if (sy > 0) return sz > 0 ? 1 : 2;
    return sz > 0 ? 3 : 4;
  }

  if (zeros == 1) {
    // Each boundary great circle uses only two classes, so the axis point
    // orthogonal to it can take an avoided one.
    if (zz) return sign_of(v.x) == sign_of(v.y) ? 1 : 4;  // circle z = 0
    if (zx) return sign_of(v.y) == sign_of(v.z) ? 1 : 2;  // circle x = 0
    return sign_of(v.x) == sign_of(v.z) ? 3 : 4;          // circle y = 0
  }

  // axis points
  if (!zx) return 4;
  if (!zy) return 1;
  return 2;
}

int dodeca_color(const SpherePoint& x) {
  const auto& ico = icosa_vertices();
  Vec3 d = x.direction();
  int best = 0;
  double best_dot = std::abs(d.dot(ico[0]));
  for (int i = 1; i < 6; ++i) {
    double dot = std::abs(d.dot(ico[i]));
    if (dot > best_dot) {
      best_dot = dot;
      best = i;
    }
  }
  return best + 1;
}

void CapStripesParams::validate() const {
  if (!(cap_colatitude > 0.0) || !(cap_colatitude < kPi))
    throw invalid_input_error("cap-stripes: cap colatitude must be in (0, pi)");
  for (int j = 0; j < 4; ++j) {
    if (!(meridians[j] >= 0.0) || !(meridians[j] < kTwoPi))
      throw invalid_input_error("cap-stripes: meridians must lie in [0, 2pi)");
    if (!std::isfinite(zigzag[j]) || std::abs(zigzag[j]) > kPi / 2.0)
      throw invalid_input_error("cap-stripes: zigzag offsets must be in [-pi/2, pi/2]");
  }
  for (int j = 0; j < 3; ++j)
    if (!(meridians[j] < meridians[j + 1]))
      throw invalid_input_error("cap-stripes: meridians must be strictly increasing");
  // drifting cuts must keep their cyclic order at full drift as well
  for (double t : {0.0, 1.0}) {
    for (int j = 0; j < 4; ++j) {
      double a = meridians[j] + zigzag[j] * t;
      double b = meridians[(j + 1) % 4] + zigzag[(j + 1) % 4] * t +
                 (j == 3 ? kTwoPi : 0.0);
      if (!(b - a > 0.0) || !(b - a < kTwoPi))
        throw invalid_input_error("cap-stripes: zigzag would reorder the cuts");
    }
  }
}

std::uint64_t CapStripesParams::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  mix(cap_colatitude);
  for (double m : meridians) mix(m);
  for (double z : zigzag) mix(z);
  return h;
}

int cap_stripes_color(const SpherePoint& x, const CapStripesParams& params) {
  params.validate();
  const Vec3& v = x.vec();
  double colat = std::acos(std::clamp(v.z / x.r(), -1.0, 1.0));
  if (colat < params.cap_colatitude) return 1;

  double az = wrap_angle(std::atan2(v.y, v.x));
  // zigzag turns on below the equator and reaches full offset at the pole
  double t = colat <= kPi / 2.0 ? 0.0 : (colat - kPi / 2.0) / (kPi / 2.0);

  // region j covers [cut_j, cut_{j+1}) cyclically and has color j+2
  int region = 0;
  double best_behind = kTwoPi;
  bool on_cut = false;
  for (int j = 0; j < 4; ++j) {
    double cut = wrap_angle(params.meridians[j] + params.zigzag[j] * t);
    double behind = wrap_angle(az - cut);
    if (behind < best_behind) {
      best_behind = behind;
      region = j;
      on_cut = behind == 0.0;
    }
  }
  if (on_cut) {
    // boundary between region-1 (color region+1) and region (color region+2);
    // the lower-indexed of the two adjacent colors wins
    return region == 0 ? 2 : region + 1;
  }
  return region + 2;
}

namespace {

ColoringSpec make_spec(std::string name, int k, double claimed, bool exact,
                       std::function<int(const SpherePoint&)> assign,
                       std::vector<Vec3> probes) {
  ColoringSpec s;
  s.name = std::move(name);
  s.k = k;
  s.claimed_max_r = claimed;
  s.exact_radius = exact;
  s.assign = std::move(assign);
  s.probe_directions = std::move(probes);
  return s;
}

}  // namespace

ColoringSpec tetra4() {
  std::vector<Vec3> probes;
  for (const Vec3& v : tetra_vertices()) {
    probes.push_back(v);
    probes.push_back(-v);
  }
  // cell edge midpoints land on the coordinate axes
  probes.push_back(Vec3{1, 0, 0});
  probes.push_back(Vec3{-1, 0, 0});
  probes.push_back(Vec3{0, 1, 0});
  probes.push_back(Vec3{0, -1, 0});
  probes.push_back(Vec3{0, 0, 1});
  probes.push_back(Vec3{0, 0, -1});
  return make_spec("tetra4", 4, claimed_threshold("tetra4"), false,
                   [](const SpherePoint& x) { return tetra_color(x); },
                   std::move(probes));
}

ColoringSpec octa4() {
  std::vector<Vec3> probes;
  for (double sx : {1.0, -1.0}) {
    probes.push_back(Vec3{sx, 0, 0});
    probes.push_back(Vec3{0, sx, 0});
    probes.push_back(Vec3{0, 0, sx});
  }
  double s = 1.0 / std::sqrt(2.0);
  for (double a : {s, -s})
    for (double b : {s, -s}) {
      probes.push_back(Vec3{a, b, 0});
      probes.push_back(Vec3{0, a, b});
      probes.push_back(Vec3{a, 0, b});
    }
  double c = 1.0 / std::sqrt(3.0);
  for (double a : {c, -c})
    for (double b : {c, -c})
      for (double d : {c, -c}) probes.push_back(Vec3{a, b, d});
  return make_spec("octa4", 4, claimed_threshold("octa4"), true,
                   [](const SpherePoint& x) { return octa_color(x); },
                   std::move(probes));
}

ColoringSpec dodeca6() {
  std::vector<Vec3> probes;
  for (const Vec3& v : icosa_vertices()) probes.push_back(v);
  const auto& verts = dodeca_vertices();
  for (const Vec3& v : verts) probes.push_back(v);
  // pentagon edge midpoints: normalized sums of nearest vertex pairs
  double edge_dot = -1.0;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      edge_dot = std::max(edge_dot, verts[i].dot(verts[j]));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (verts[i].dot(verts[j]) > edge_dot - 1e-9)
        probes.push_back((verts[i] + verts[j]).normalized());
  return make_spec("dodeca6", 6, claimed_threshold("dodeca6"), false,
                   [](const SpherePoint& x) { return dodeca_color(x); },
                   std::move(probes));
}

ColoringSpec cap5(const CapStripesParams& params) {
  params.validate();
  std::vector<Vec3> probes;
  probes.push_back(Vec3{0, 0, 1});
  probes.push_back(Vec3{0, 0, -1});
  auto dir = [](double colat, double az) {
    return Vec3{std::sin(colat) * std::cos(az), std::sin(colat) * std::sin(az),
                std::cos(colat)};
  };
  double cap_inner = std::max(0.02, params.cap_colatitude - 0.02);
  for (double colat : {cap_inner, params.cap_colatitude, kPi / 2.0,
                       3.0 * kPi / 4.0, kPi - 0.05}) {
    for (int j = 0; j < 4; ++j) {
      double m = params.meridians[j];
      probes.push_back(dir(colat, m));
      probes.push_back(dir(colat, m + kPi / 4.0));
    }
  }
  ColoringSpec s = make_spec(
      "cap5", 5, claimed_threshold("cap5"), false,
      [params](const SpherePoint& x) { return cap_stripes_color(x, params); },
      std::move(probes));
  s.params = params;
  return s;
}

double claimed_threshold(const std::string& name) {
  if (name == "tetra4") return std::sqrt(3.0 - std::sqrt(3.0)) / 2.0;
  if (name == "cap5") return kInvSqrt3;
  if (name == "dodeca6") return kSqrt3Over2;
  if (name == "octa4") return kInvSqrt2;
  throw invalid_input_error("unknown coloring name: " + name);
}

double tetra_cell_diameter(Radius r) {
  const auto& v = tetra_vertices();
  // color-1 cell corners are the antipodes of the other three vertices
  std::array<Vec3, 3> corner = {-v[1], -v[2], -v[3]};

  auto slerp = [](const Vec3& a, const Vec3& b, double t) {
    double omega = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    double so = std::sin(omega);
    return (a * (std::sin((1.0 - t) * omega) / so) +
            b * (std::sin(t * omega) / so));
  };

  struct Arc {
    Vec3 a, b;
  };
  std::array<Arc, 3> arcs = {Arc{corner[0], corner[1]},
                             Arc{corner[1], corner[2]},
                             Arc{corner[2], corner[0]}};

  // the diameter of a geodesically convex cell is attained on its boundary
  double best = 0.0;
  int bi = 0, bj = 0;
  double bs = 0.0, bt = 0.0;
  const int grid = 48;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int gi = 0; gi <= grid; ++gi)
        for (int gj = 0; gj <= grid; ++gj) {
          double s = static_cast<double>(gi) / grid;
          double t = static_cast<double>(gj) / grid;
          double d = (slerp(arcs[i].a, arcs[i].b, s) -
                      slerp(arcs[j].a, arcs[j].b, t))
                         .norm();
          if (d > best) {
            best = d;
            bi = i;
            bj = j;
            bs = s;
            bt = t;
          }
        }

  // local refinement with shrinking steps
  double step = 1.0 / grid;
  while (step > 1e-10) {
    bool improved = false;
    for (double ds : {-step, 0.0, step})
      for (double dt : {-step, 0.0, step}) {
        double s = std::clamp(bs + ds, 0.0, 1.0);
        double t = std::clamp(bt + dt, 0.0, 1.0);
        double d =
            (slerp(arcs[bi].a, arcs[bi].b, s) - slerp(arcs[bj].a, arcs[bj].b, t))
                .norm();
        if (d > best) {
          best = d;
          bs = s;
          bt = t;
          improved = true;
        }
      }
    if (!improved) step *= 0.5;
  }
  return best * r.value();
}

std::string ColoringSpec::id() const {
  if (!params) return name;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "#%016llx",
                static_cast<unsigned long long>(params->hash()));
  return name + buf;
}

}  // namespace schroma
