#include "qctf/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qctf/kernels.hpp"

namespace qctf {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTolerance = 1e-13;

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

// Annihilates a(p,q) with W = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the
// (p,q) plane, where a(p,q) = |a(p,q)| e^{i phi}. The row update W^H A runs
// through the rot kernel on contiguous rows; the column update follows from
// Hermiticity. `vt` (if given) stores eigenvectors as rows and receives W^T.
void rotate(ComplexMatrix& a, ComplexMatrix* vt, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  kernels::rot(c, -s * phase, s, c * phase, a.row(p), a.row(q));
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    a(k, p) = std::conj(a(p, k));
    a(k, q) = std::conj(a(q, k));
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  if (vt != nullptr) {
    const cplx conj_phase = std::conj(phase);
    kernels::rot(c, -s * conj_phase, s, c * conj_phase, vt->row(p), vt->row(q));
  }
}

struct JacobiResult {
  std::vector<double> values;
  ComplexMatrix vt;
};

JacobiResult jacobi(const ComplexMatrix& h, bool want_vectors) {
  require_hermitian(h, 1e-12, "Hamiltonian");
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  // Symmetrize exactly so the column-from-row update starts consistent.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  ComplexMatrix vt = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

  const double scale2 = kernels::norm2(a.entries());
  const double target2 = kOffTolerance * kOffTolerance * scale2;
  int sweep = 0;
  while (off_diagonal_norm2(a) > target2) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("hermitian_eigendecompose: Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, want_vectors ? &vt : nullptr, p, q);
      }
    }
  }
  JacobiResult r;
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.values[i] = a(i, i).real();
  r.vt = std::move(vt);
  return r;
}

}  // namespace

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& h) {
  auto [values, vt] = jacobi(h, true);
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  EigenDecomposition eig;
  eig.values.resize(n);
  eig.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    eig.values[k] = values[order[k]];
    const auto src = vt.row(order[k]);
    for (std::size_t i = 0; i < n; ++i) eig.vectors(i, k) = src[i];
  }
  return eig;
}

EigenDecomposition with_overlaps(EigenDecomposition eig, const StateVector& psi0) {
  const std::size_t n = eig.dim();
  if (psi0.size() != n) throw std::invalid_argument("with_overlaps: state dimension does not match Hamiltonian");
  eig.overlaps.assign(n, 0.0);
  const ComplexMatrix vt = eig.vectors.transpose();
  for (std::size_t k = 0; k < n; ++k) eig.overlaps[k] = kernels::dotc(vt.row(k), psi0.amplitudes());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  auto r = jacobi(h, false);
  std::sort(r.values.begin(), r.values.end());
  return r.values;
}

}  // namespace qctf
