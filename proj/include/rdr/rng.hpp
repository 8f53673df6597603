#ifndef RDR_RNG_HPP
#define RDR_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace rdr {

// Reproducibility contract for every seeded transform in this library:
// a Mersenne Twister (mt19937, as specified by the C++ standard) seeded
// directly with the 32-bit seed, with bounded draws taken by rejection
// sampling on raw 32-bit outputs. Both pieces are fully specified, so the
// same (input, seed) yields the same bytes on any conforming platform.
// std::uniform_int_distribution and std::shuffle are deliberately not used;
// their output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint32_t seed) : gen_(seed) {}

  std::uint32_t next_u32() { return gen_(); }

  // Uniform draw from [0, n). n must be positive.
  std::size_t bounded(std::size_t n) {
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = (std::uint64_t{1} << 32) / range * range;
    std::uint64_t draw;
    do {
      draw = next_u32();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % range);
  }

  // Fisher-Yates shuffle driven by bounded().
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = bounded(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937 gen_;
};

}  // namespace rdr

#endif  // RDR_RNG_HPP
