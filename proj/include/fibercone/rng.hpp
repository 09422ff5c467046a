#pragma once

#include <cstdint>

namespace fibercone {

/// Deterministic, platform-independent generator (splitmix64).
/// std::uniform_int_distribution is implementation-defined, so all random
/// draws in the library go through this class to keep seeded runs
/// byte-identical across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Child generator for instance `index`; independent streams per instance.
  Rng fork(std::uint64_t index) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (index + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace fibercone
