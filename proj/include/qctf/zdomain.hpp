#pragma once

// Sparse Laurent representation of the QCTF K(z_d, z_a, [z_c], s).
//
// Coefficients are pole-residue functions of s keyed by integer exponent
// tuples. For a density-matrix QCTF the coefficient of z_d^(l-k) z_a^(l+k) is
// <l|rho~(s)|k>; for the off-diagonal block QCTF it is the transform of
// c_{+i}(t) conj(c_{-j}(t)) at (i-j, i+j). Residues at the origin are taken by
// exponent matching, never by numerical contour integration.

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qctf/eigen.hpp"
#include "qctf/laplace.hpp"

namespace qctf {

struct Exponent {
  int d = 0;  // power of z_d
  int a = 0;  // power of z_a
  int c = 0;  // power of z_c (pair label h); 0 for arity-2 functions

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class LaurentQCTF {
 public:
  explicit LaurentQCTF(int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Stores `f` at `e`; zero functions are not stored. Throws std::logic_error
  /// if d + a is odd (no (l, k) index pair maps there) or if an arity-2
  /// function receives a z_c exponent.
  void set(Exponent e, PoleResidueFunction f);
  /// Zero function when absent.
  PoleResidueFunction coefficient(Exponent e) const;
  const PoleResidueFunction* find(Exponent e) const;
  const std::map<Exponent, PoleResidueFunction>& coefficients() const { return coeffs_; }

 private:
  int arity_;
  std::map<Exponent, PoleResidueFunction> coeffs_;
};

/// Lexicographic labeling h <-> (j1, j2), j1 < j2, of the n(n-1)/2 pairs of
/// M-basis vectors. In pair h the "+" member is j1 and the "-" member is j2.
struct PairLabeling {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  static PairLabeling lexicographic(std::size_t n);
  std::size_t index_of(std::size_t j1, std::size_t j2) const;
};

struct QctfOptions {
  CanonicalPolicy policy{};
  /// Amplitude products smaller than this are skipped before star expansion.
  double prune = 1e-14;
};

/// Coefficients <j|G(s)|psi0> = sum_k <j|k> c_k / (s + i E_k) for the basis
/// whose columns are the kets |j>.
std::vector<PoleResidueFunction> qctf_wavefunction(const EigenDecomposition& eig, const StateVector& psi0,
                                                   const ComplexMatrix& basis, const QctfOptions& opt = {});

/// Arity-2 QCTF of the density matrix in the given basis.
LaurentQCTF qctf_density(const EigenDecomposition& eig, const StateVector& psi0, const ComplexMatrix& basis,
                         const QctfOptions& opt = {});

/// <l'|rho~(s)|k'> from a density QCTF. Column l' of `bra_basis` holds the
/// coordinates of |l'> in the QCTF basis (so <l|l'> = bra_basis(l, l')), and
/// likewise for `ket_basis`.
PoleResidueFunction residue_density_element(const LaurentQCTF& k, const ComplexMatrix& bra_basis,
                                            const ComplexMatrix& ket_basis, std::size_t l_prime, std::size_t k_prime,
                                            const CanonicalPolicy& policy = {});

/// Off-diagonal block QCTF for n = 2. Column 0 of `mbasis` is |+>, column 1 is
/// |->; R uses its computational basis.
LaurentQCTF qctf_offdiag(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                         const ComplexMatrix& mbasis, const QctfOptions& opt = {});

/// Laplace transform of det rho_M(t) from an off-diagonal QCTF: the
/// (z_d z_a)^-1 residue of K star K*(1/z*) minus K_d star K_d*.
PoleResidueFunction residue_entanglement(const LaurentQCTF& k, const CanonicalPolicy& policy = {});

/// Arity-3 QCTF with one z_c slice per M-basis pair.
LaurentQCTF qctf_paired(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                        const ComplexMatrix& mbasis, const PairLabeling& labeling, const QctfOptions& opt = {});

/// Laplace transform of the summed squared wedge areas (= s2 of rho_M).
PoleResidueFunction residue_entanglement_multi(const LaurentQCTF& k, const CanonicalPolicy& policy = {});

/// Per-(basis vector, R index) amplitude transforms c~_{a i}(s) =
/// <a (x) i|G(s)|psi0>, indexed [a][i].
std::vector<std::vector<PoleResidueFunction>> amplitude_transforms(const EigenDecomposition& eig,
                                                                   const StateVector& psi0, const Bipartition& part,
                                                                   const ComplexMatrix& mbasis,
                                                                   const QctfOptions& opt = {});

}  // namespace qctf
