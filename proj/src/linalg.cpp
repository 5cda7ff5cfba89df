#include "qctf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qctf/kernels.hpp"

namespace qctf {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(e));
}

std::vector<cplx> ComplexMatrix::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      kernels::axpy(aik, b.row(k), out.row(i));
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return a + cplx(-1.0) * b; }

ComplexMatrix operator*(cplx alpha, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& v : out.entries()) v *= alpha;
  return out;
}

std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<cplx> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

HermiticityReport hermiticity_violation(const ComplexMatrix& a) {
  HermiticityReport r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const double v = std::abs(a(i, j) - std::conj(a(j, i)));
      if (v > r.worst) r = {v, i, j};
    }
  }
  return r;
}

void require_hermitian(const ComplexMatrix& a, double rel_tol, const std::string& what) {
  if (!a.is_square()) {
    std::ostringstream os;
    os << what << " is not square (" << a.rows() << "x" << a.cols() << ")";
    throw std::invalid_argument(os.str());
  }
  const auto r = hermiticity_violation(a);
  const double bound = rel_tol * a.max_abs();
  if (r.worst > bound) {
    std::ostringstream os;
    os.precision(17);
    os << what << " is not Hermitian: |a[" << r.row << "][" << r.col << "] - conj(a[" << r.col << "][" << r.row
       << "])| = " << r.worst << " exceeds " << bound;
    throw std::invalid_argument(os.str());
  }
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  const double nrm = std::sqrt(kernels::norm2(amplitudes));
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw std::invalid_argument("state vector is not normalizable (zero or non-finite norm)");
  }
  for (auto& a : amplitudes) a /= nrm;
  return StateVector(std::move(amplitudes));
}

double StateVector::norm() const { return std::sqrt(kernels::norm2(amplitudes_)); }

void validate_bipartition(const Bipartition& part, std::size_t dim) {
  if (part.n < 2) throw std::invalid_argument("bipartition: subsystem M needs dimension n >= 2");
  if (part.d < 1) throw std::invalid_argument("bipartition: subsystem R needs dimension d >= 1");
  if (part.n * part.d != dim) {
    std::ostringstream os;
    os << "bipartition: n*d = " << part.n << "*" << part.d << " does not match dimension " << dim;
    throw std::invalid_argument(os.str());
  }
}

ComplexMatrix partial_trace(const StateVector& psi, const Bipartition& part, Keep keep) {
  validate_bipartition(part, psi.size());
  const std::size_t n = part.n, d = part.d;
  const auto a = psi.amplitudes();
  if (keep == Keep::M) {
    // rho_M[a][b] = sum_i psi[a d + i] conj(psi[b d + i]) = <b-slice|a-slice>
    ComplexMatrix rho(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rho(x, y) = kernels::dotc(a.subspan(y * d, d), a.subspan(x * d, d));
    return rho;
  }
  ComplexMatrix rho(d, d);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) rho(i, j) += a[m * d + i] * std::conj(a[m * d + j]);
  return rho;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part, Keep keep) {
  if (!rho.is_square()) throw std::invalid_argument("partial_trace: density matrix is not square");
  validate_bipartition(part, rho.rows());
  const std::size_t n = part.n, d = part.d;
  if (keep == Keep::M) {
    ComplexMatrix out(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t i = 0; i < d; ++i) out(x, y) += rho(x * d + i, y * d + i);
    return out;
  }
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < n; ++m) out(i, j) += rho(m * d + i, m * d + j);
  return out;
}

ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra) {
  ComplexMatrix out(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) out(i, j) = ket[i] * std::conj(bra[j]);
  return out;
}

double frobenius(const ComplexMatrix& a) { return std::sqrt(kernels::norm2(a.entries())); }

}  // namespace qctf
