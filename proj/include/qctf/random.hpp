#pragma once

#include <cstdint>
#include <vector>

#include "qctf/linalg.hpp"

namespace qctf {

/// SplitMix64 (Steele, Lea, Flood 2014). The sequence is defined entirely by the
/// integer arithmetic in next(), so a seed gives the same stream on every
/// platform. Doubles use the top 53 bits; normal
/// deviates use the basic Box-Muller transform (cosine branch only).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Complex normal with independent N(0,1) real and imaginary parts.
  cplx complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

 private:
  std::uint64_t state_;
};

/// Haar-random state of dimension `dim`.
StateVector random_state(std::size_t dim, std::uint64_t seed);
/// Haar-random unitary of size n: Gram-Schmidt on a complex Gaussian matrix
/// (the implied R factor has a positive real diagonal).
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace qctf
