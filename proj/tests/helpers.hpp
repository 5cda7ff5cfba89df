#pragma once

// Test fixtures plus reference computations (Taylor-series propagation, direct
// index contractions) that avoid the library's eigensolver and Laplace code.

#include <cmath>
#include <complex>
#include <vector>

#include "qctf/eigen.hpp"
#include "qctf/linalg.hpp"
#include "qctf/models.hpp"
#include "qctf/random.hpp"

namespace testref {

using qctf::cplx;
using qctf::ComplexMatrix;
using qctf::StateVector;

// exp(-i H t) by scaling and squaring of a Taylor series.
inline ComplexMatrix propagator(const ComplexMatrix& h, double t) {
  const std::size_t n = h.rows();
  double norm = 0.0;
  for (const auto& v : h.entries()) norm += std::abs(v);
  int squarings = 0;
  double scaled = norm * std::abs(t);
  while (scaled > 0.25) {
    scaled /= 2.0;
    ++squarings;
  }
  const cplx factor = cplx{0.0, -t} / std::pow(2.0, squarings);
  const ComplexMatrix a = factor * h;
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * a);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline StateVector evolve(const ComplexMatrix& h, const StateVector& psi, double t) {
  return StateVector(propagator(h, t) * psi.amplitudes());
}

// rho_M(a, b) = sum_i psi(a d + i) conj(psi(b d + i)).
inline ComplexMatrix reduced(const StateVector& psi, std::size_t n, std::size_t d) {
  ComplexMatrix rho(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < d; ++i) rho(a, b) += psi[a * d + i] * std::conj(psi[b * d + i]);
  return rho;
}

inline double det2(const ComplexMatrix& r) { return (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0)).real(); }

inline double purity(const ComplexMatrix& r) {
  double p = 0.0;
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b) p += (r(a, b) * r(b, a)).real();
  return p;
}

// (1 - Tr rho^2) / 2
inline double s2(const ComplexMatrix& r) { return 0.5 * (1.0 - purity(r)); }

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

inline std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> t(count);
  for (std::size_t i = 0; i < count; ++i) t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  return t;
}

struct System {
  ComplexMatrix h;
  StateVector psi;
  qctf::EigenDecomposition eig;
  qctf::Bipartition part;
};

inline System random_system(std::size_t n, std::size_t d, std::uint64_t seed) {
  System s;
  s.part = qctf::Bipartition{n, d, {}};
  s.h = qctf::build_random_hermitian(n * d, seed);
  s.psi = qctf::random_state(n * d, seed + 1000);
  s.eig = qctf::hermitian_eigendecompose(s.h);
  return s;
}

inline System make_system(ComplexMatrix h, StateVector psi, qctf::Bipartition part) {
  System s{std::move(h), std::move(psi), {}, std::move(part)};
  s.eig = qctf::hermitian_eigendecompose(s.h);
  return s;
}

}  // namespace testref
