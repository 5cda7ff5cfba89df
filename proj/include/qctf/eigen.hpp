#pragma once

#include <vector>

#include "qctf/linalg.hpp"

namespace qctf {

/// Eigenpairs {E_k, |k>} of a Hermitian operator (hbar = 1). Eigenvalues are
/// ascending; column k of `vectors` is |k>. `overlaps` holds c_k = <k|psi0>
/// once the decomposition has been paired with an initial state.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
  std::vector<cplx> overlaps;

  std::size_t dim() const { return values.size(); }
  bool has_overlaps() const { return overlaps.size() == values.size() && !values.empty(); }
  /// Component <i|k>.
  cplx component(std::size_t i, std::size_t k) const { return vectors(i, k); }
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm is at
/// most 1e-13 * ||H||_F. Throws std::invalid_argument for non-square or
/// non-Hermitian input (1e-12 relative), std::runtime_error if the sweep
/// limit is hit.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& h);

/// Returns a copy of `eig` with c_k = <k|psi0> filled in.
EigenDecomposition with_overlaps(EigenDecomposition eig, const StateVector& psi0);

/// Eigenvalues only, for small density matrices.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

}  // namespace qctf
