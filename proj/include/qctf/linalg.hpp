#pragma once

// Dense complex linear algebra used throughout the library: matrices,
// state vectors, bipartitions and partial traces.
//
// Product-basis index convention (fixed globally):
//   index = i_M * d + i_R
// where i_M labels the observed subsystem M (dimension n) and i_R the
// remainder R (dimension d).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qctf {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<cplx> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::vector<cplx> column(std::size_t j) const;

  std::span<cplx> entries() { return entries_; }
  std::span<const cplx> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double max_abs() const;
  cplx trace() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx alpha, const ComplexMatrix& a);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// Kronecker product a (x) b, with a's index as the major one.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |a_ij - conj(a_ji)| and where it occurs.
struct HermiticityReport {
  double worst = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};
HermiticityReport hermiticity_violation(const ComplexMatrix& a);

/// Throws std::invalid_argument if `a` is not square or not Hermitian within
/// rel_tol * max|a|. The message names the worst-violating entry pair.
void require_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12, const std::string& what = "matrix");

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  /// Divides by the 2-norm. Throws on an all-zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);

  std::size_t size() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  std::span<cplx> amplitudes() { return amplitudes_; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }
  cplx& operator[](std::size_t i) { return amplitudes_[i]; }
  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<cplx> amplitudes_;
};

/// Split of the full space into subsystem M (dimension n) and R (dimension d).
/// `m_sites` records which chain sites were gathered into M by the spin-chain
/// builders; it is empty for systems that come without a site structure.
struct Bipartition {
  std::size_t n = 2;
  std::size_t d = 1;
  std::vector<int> m_sites;

  std::size_t total() const { return n * d; }
  std::size_t index(std::size_t i_m, std::size_t i_r) const { return i_m * d + i_r; }
};

/// Validates n >= 2, d >= 1 and (if given) n*d == dim.
void validate_bipartition(const Bipartition& part, std::size_t dim);

enum class Keep { M, R };

/// Reduced density matrix of a pure state. Keep::M traces out R (n x n result),
/// Keep::R traces out M (d x d result).
ComplexMatrix partial_trace(const StateVector& psi, const Bipartition& part, Keep keep = Keep::M);
/// Same for a full density matrix of size (n*d) x (n*d).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part, Keep keep = Keep::M);

ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra);

/// Frobenius norm of all entries.
double frobenius(const ComplexMatrix& a);

}  // namespace qctf
