#ifndef SCHROMA_RNG_HPP
#define SCHROMA_RNG_HPP

#include <cstdint>

namespace schroma {

// splitmix64: tiny, fast, and bit-identical on every platform, which the
// reproducibility contract needs (std::mt19937 + distributions are not
// guaranteed to produce the same doubles across standard libraries).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }
};

// Independent substream for (seed, index): consecutive indices land on
// well-separated splitmix streams, so evaluation order and thread count
// cannot change any draw.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL + index * 0xd1342543de82ef95ULL));
  // burn one output so seed=0, index=0 does not start at the raw key
  SplitMix64 out(mixer.next());
  return out;
}

}  // namespace schroma

#endif  // SCHROMA_RNG_HPP
