#include "qctf/random.hpp"

#include <cmath>
#include <numbers>

#include "qctf/kernels.hpp"

namespace qctf {

double SplitMix64::normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<cplx> a(dim);
  for (auto& v : a) v = rng.complex_normal();
  return StateVector::normalized(std::move(a));
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  // Work on rows (contiguous) and transpose at the end.
  ComplexMatrix q(n, n);
  for (auto& v : q.entries()) v = rng.complex_normal();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const cplx proj = kernels::dotc(q.row(i), q.row(j));
        kernels::axpy(-proj, q.row(i), q.row(j));
      }
    }
    const double nrm = std::sqrt(kernels::norm2(q.row(j)));
    for (auto& v : q.row(j)) v /= nrm;
  }
  return q.transpose();
}

}  // namespace qctf
