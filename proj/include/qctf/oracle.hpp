#pragma once

// Brute-force reference: exact eigenmode propagation and entanglement
// quantities read off the reduced density matrix, with no Laplace machinery.

#include <vector>

#include "qctf/eigen.hpp"

namespace qctf {

/// `steps` uniform intervals on [t0, t1]; steps + 1 samples including both
/// endpoints.
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t steps = 1;

  /// Throws std::invalid_argument unless t0 <= t1, steps >= 1 and both ends
  /// are finite.
  void validate() const;
  std::vector<double> samples() const;
};

/// psi(t) = sum_k c_k exp(-i E_k t) |k>.
StateVector evolve(const EigenDecomposition& eig, const StateVector& psi0, double t);

struct OracleSample {
  double t = 0.0;
  double q = 0.0;       // det rho_M for n = 2, s2 of its eigenvalues otherwise
  double renyi2 = 0.0;  // bits
  double purity = 1.0;  // Tr rho_M^2
};

std::vector<OracleSample> oracle_measure(const EigenDecomposition& eig, const StateVector& psi0,
                                         const Bipartition& part, const TimeGrid& grid);

/// det rho_M for a 2x2 reduced density matrix.
double determinant_2x2(const ComplexMatrix& rho);

/// sum_{i<j} |det M^{ij}|^2 over the 2x2 column minors of the 2 x d
/// coefficient matrix M_{a i} = <a (x) i|psi> (n = 2).
double column_minor_measure(const StateVector& psi, const Bipartition& part);

}  // namespace qctf
