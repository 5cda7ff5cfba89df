#pragma once

// Entanglement of a subsystem M from the eigenmode expansion and from the
// geometry of its marginal wavefunctions.

#include <vector>

#include "qctf/eigen.hpp"
#include "qctf/laplace.hpp"
#include "qctf/zdomain.hpp"

namespace qctf {

/// <a k|b k'>: inner products of M-basis-projected eigenvector slices,
/// |a k> = (<a| (x) I)|k>.
class LocalOverlapTable {
 public:
  LocalOverlapTable(std::size_t n, std::size_t dim) : n_(n), dim_(dim), data_(n * n * dim * dim) {}

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t a, std::size_t b, std::size_t k, std::size_t kp) {
    return data_[((a * n_ + b) * dim_ + k) * dim_ + kp];
  }
  const cplx& operator()(std::size_t a, std::size_t b, std::size_t k, std::size_t kp) const {
    return data_[((a * n_ + b) * dim_ + k) * dim_ + kp];
  }

 private:
  std::size_t n_, dim_;
  std::vector<cplx> data_;
};

/// Column a of `mbasis` is |a>.
LocalOverlapTable local_overlaps(const EigenDecomposition& eig, const Bipartition& part, const ComplexMatrix& mbasis);

/// Laplace transform of det rho_M(t) from the eigenmode expansion (n = 2).
///
/// The quadruple sum over (k, l, k', l') factorizes into two star products,
///   Q~ = X star Y - U star V,
/// with X_{kk'} = c_k* c_k' <+k|+k'>, Y_{l'l} = c_l c_l'* <-l'|-l>,
/// U_{kl} = c_k* c_l <+k|-l>, V_{k'l'} = c_k' c_l'* <-l'|+k'>, each at its
/// energy difference. Pairs with |c c*| below `opt.prune` are skipped.
PoleResidueFunction qctf_measure_eigenmode(const EigenDecomposition& eig, const StateVector& psi0,
                                           const Bipartition& part, const ComplexMatrix& mbasis,
                                           const QctfOptions& opt = {});

/// Marginal wavefunctions |a psi> = (<a| (x) I)|psi>, one R-vector per
/// M-basis vector.
struct MarginalSet {
  std::vector<std::vector<cplx>> vectors;
};

MarginalSet marginals(const StateVector& psi, const Bipartition& part, const ComplexMatrix& mbasis);

/// Gram determinant <u|u><v|v> - |<u|v>|^2.
double wedge_area_sq(std::span<const cplx> u, std::span<const cplx> v);

/// Sum of squared wedge areas over all pairs of marginals.
double geometric_measure(const MarginalSet& m);

/// Laplace-domain marginals: component [a][i] is <a (x) i|G(s)|psi0>.
using LaplaceMarginalSet = std::vector<std::vector<PoleResidueFunction>>;

LaplaceMarginalSet marginals_laplace(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                                     const ComplexMatrix& mbasis, const QctfOptions& opt = {});

/// Sum over pairs of <u|u> star <v|v> - <u|v> star <v|u>, with every product
/// of Laplace-domain components taken as a star product.
PoleResidueFunction geometric_measure_laplace(const LaplaceMarginalSet& m, const CanonicalPolicy& policy = {});

/// Sum of all 2x2 principal minors of a square matrix (real part).
double principal_minor_sum(const ComplexMatrix& rho);

/// Second elementary symmetric polynomial sum_{i<j} l_i l_j.
double s2_from_eigenvalues(std::span<const double> lambda);

struct PurityEntropies {
  double purity = 1.0;   // Tr rho^2
  double renyi2 = 0.0;   // -log2 Tr rho^2, bits
  double linear = 0.0;   // 1 - Tr rho^2
};

/// Throws std::domain_error if Tr rho^2 is outside (0, 1 + 1e-10].
PurityEntropies renyi2_and_linear_entropy(const ComplexMatrix& rho);

/// Qubit relation S2 = -log2(1 - 2Q) for Q = det rho_M.
double renyi2_from_determinant(double q);

}  // namespace qctf
