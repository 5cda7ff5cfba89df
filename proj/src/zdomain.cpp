#include "qctf/zdomain.hpp"

#include <sstream>
#include <stdexcept>

#include "qctf/kernels.hpp"

namespace qctf {

namespace {

void require_square_basis(const ComplexMatrix& basis, std::size_t dim, const char* what) {
  if (basis.rows() != dim || basis.cols() != dim) {
    std::ostringstream os;
    os << what << ": basis is " << basis.rows() << "x" << basis.cols() << ", system dimension is " << dim;
    throw std::invalid_argument(os.str());
  }
}

std::vector<cplx> overlaps_for(const EigenDecomposition& eig, const StateVector& psi0) {
  if (psi0.size() != eig.dim()) throw std::invalid_argument("initial state dimension does not match the Hamiltonian");
  return with_overlaps(eig, psi0).overlaps;
}

// sum_k coeff[k] / (s + i E_k), skipping |coeff| below the prune threshold.
PoleResidueFunction resolvent_row(const EigenDecomposition& eig, std::span<const cplx> coeff, const QctfOptions& opt) {
  std::vector<PoleTerm> terms;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (std::abs(coeff[k]) < opt.prune) continue;
    terms.push_back({eig.values[k], coeff[k]});
  }
  return PoleResidueFunction::from_terms(std::move(terms), opt.policy);
}

// Shared builder of the pair-sliced off-diagonal QCTF. Coefficient
// (i - j, i + j, h) is c~_{h+, i} star conj_dual(c~_{h-, j}).
LaurentQCTF build_pairs(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                        const ComplexMatrix& mbasis, const PairLabeling& labeling, int arity, const QctfOptions& opt) {
  validate_bipartition(part, eig.dim());
  require_square_basis(mbasis, part.n, "M basis");
  if (labeling.n != part.n || labeling.pairs.size() != part.n * (part.n - 1) / 2) {
    throw std::invalid_argument("pair labeling is inconsistent with the subsystem dimension");
  }
  const auto amps = amplitude_transforms(eig, psi0, part, mbasis, opt);
  std::vector<std::vector<PoleResidueFunction>> duals(part.n);
  for (std::size_t a = 0; a < part.n; ++a)
    for (const auto& f : amps[a]) duals[a].push_back(conjugate_dual(f));

  LaurentQCTF k(arity);
  const int d = static_cast<int>(part.d);
  for (std::size_t h = 0; h < labeling.pairs.size(); ++h) {
    const auto [plus, minus] = labeling.pairs[h];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        auto f = star_convolve_pruned(amps[plus][i], duals[minus][j], opt.prune, opt.policy);
        k.set({i - j, i + j, arity == 3 ? static_cast<int>(h) : 0}, std::move(f));
      }
    }
  }
  return k;
}

PoleResidueFunction diagonal_residue(const LaurentQCTF& k, int c, const CanonicalPolicy& policy) {
  // Res_{z_d=0} z_d^-1 K at z_a = 1: every coefficient with zero z_d power.
  std::vector<const PoleResidueFunction*> fs;
  for (const auto& [e, f] : k.coefficients())
    if (e.d == 0 && e.c == c) fs.push_back(&f);
  const std::vector<cplx> ones(fs.size(), 1.0);
  return linear_combination(fs, ones, policy);
}

}  // namespace

LaurentQCTF::LaurentQCTF(int arity) : arity_(arity) {
  if (arity != 2 && arity != 3) throw std::invalid_argument("LaurentQCTF arity must be 2 or 3");
}

void LaurentQCTF::set(Exponent e, PoleResidueFunction f) {
  if ((e.d + e.a) % 2 != 0) throw std::logic_error("LaurentQCTF: z_d and z_a exponents must have equal parity");
  if (arity_ == 2 && e.c != 0) throw std::logic_error("LaurentQCTF: arity-2 function has no z_c exponent");
  if (f.is_zero()) {
    coeffs_.erase(e);
    return;
  }
  coeffs_[e] = std::move(f);
}

const PoleResidueFunction* LaurentQCTF::find(Exponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? nullptr : &it->second;
}

PoleResidueFunction LaurentQCTF::coefficient(Exponent e) const {
  const auto* f = find(e);
  return f ? *f : PoleResidueFunction{};
}

PairLabeling PairLabeling::lexicographic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("pair labeling needs n >= 2");
  PairLabeling l;
  l.n = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) l.pairs.emplace_back(a, b);
  return l;
}

std::size_t PairLabeling::index_of(std::size_t j1, std::size_t j2) const {
  for (std::size_t h = 0; h < pairs.size(); ++h)
    if (pairs[h] == std::pair{j1, j2}) return h;
  throw std::out_of_range("pair not present in labeling");
}

std::vector<std::vector<PoleResidueFunction>> amplitude_transforms(const EigenDecomposition& eig,
                                                                   const StateVector& psi0, const Bipartition& part,
                                                                   const ComplexMatrix& mbasis,
                                                                   const QctfOptions& opt) {
  validate_bipartition(part, eig.dim());
  require_square_basis(mbasis, part.n, "M basis");
  const auto c = overlaps_for(eig, psi0);
  const std::size_t n = part.n, d = part.d, dim = eig.dim();
  std::vector<std::vector<PoleResidueFunction>> out(n, std::vector<PoleResidueFunction>(d));
  std::vector<cplx> coeff(dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      // <a (x) i|k> c_k
      for (std::size_t k = 0; k < dim; ++k) {
        cplx s = 0.0;
        for (std::size_t m = 0; m < n; ++m) s += std::conj(mbasis(m, a)) * eig.vectors(part.index(m, i), k);
        coeff[k] = s * c[k];
      }
      out[a][i] = resolvent_row(eig, coeff, opt);
    }
  }
  return out;
}

std::vector<PoleResidueFunction> qctf_wavefunction(const EigenDecomposition& eig, const StateVector& psi0,
                                                   const ComplexMatrix& basis, const QctfOptions& opt) {
  require_square_basis(basis, eig.dim(), "qctf_wavefunction");
  const auto c = overlaps_for(eig, psi0);
  const std::size_t dim = eig.dim();
  const ComplexMatrix bv = basis.adjoint() * eig.vectors;  // <j|k>
  std::vector<PoleResidueFunction> out(dim);
  std::vector<cplx> coeff(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) coeff[k] = bv(j, k) * c[k];
    out[j] = resolvent_row(eig, coeff, opt);
  }
  return out;
}

LaurentQCTF qctf_density(const EigenDecomposition& eig, const StateVector& psi0, const ComplexMatrix& basis,
                         const QctfOptions& opt) {
  const auto waves = qctf_wavefunction(eig, psi0, basis, opt);
  std::vector<PoleResidueFunction> duals;
  duals.reserve(waves.size());
  for (const auto& w : waves) duals.push_back(conjugate_dual(w));
  LaurentQCTF k(2);
  const int dim = static_cast<int>(waves.size());
  for (int l = 0; l < dim; ++l)
    for (int m = 0; m < dim; ++m) k.set({l - m, l + m, 0}, star_convolve_pruned(waves[l], duals[m], opt.prune, opt.policy));
  return k;
}

PoleResidueFunction residue_density_element(const LaurentQCTF& k, const ComplexMatrix& bra_basis,
                                            const ComplexMatrix& ket_basis, std::size_t l_prime, std::size_t k_prime,
                                            const CanonicalPolicy& policy) {
  if (k.arity() != 2) throw std::invalid_argument("residue_density_element: expected an arity-2 QCTF");
  const std::size_t dim = bra_basis.rows();
  if (ket_basis.rows() != dim || bra_basis.cols() != dim || ket_basis.cols() != dim) {
    throw std::invalid_argument("residue_density_element: bra and ket bases must be square of the same size");
  }
  if (l_prime >= dim || k_prime >= dim) throw std::out_of_range("residue_density_element: index out of range");

  // Coefficient of z_d^-1 z_a^-1 in sum_{l,k} <l'|l><k|k'> z_d^-(l-k)-1 z_a^-(l+k)-1 K
  // selects exactly the stored (l-k, l+k) coefficients.
  std::vector<const PoleResidueFunction*> fs;
  std::vector<cplx> weights;
  for (const auto& [e, f] : k.coefficients()) {
    const int l = (e.a + e.d) / 2;
    const int m = (e.a - e.d) / 2;
    if (l < 0 || m < 0 || static_cast<std::size_t>(l) >= dim || static_cast<std::size_t>(m) >= dim) {
      throw std::invalid_argument("residue_density_element: QCTF exponent outside the basis range");
    }
    const cplx w = std::conj(bra_basis(l, l_prime)) * ket_basis(m, k_prime);
    if (w == cplx{}) continue;
    fs.push_back(&f);
    weights.push_back(w);
  }
  return linear_combination(fs, weights, policy);
}

LaurentQCTF qctf_offdiag(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                         const ComplexMatrix& mbasis, const QctfOptions& opt) {
  if (part.n != 2) throw std::invalid_argument("qctf_offdiag: subsystem M must be two-level (n = 2)");
  return build_pairs(eig, psi0, part, mbasis, PairLabeling::lexicographic(2), 2, opt);
}

LaurentQCTF qctf_paired(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                        const ComplexMatrix& mbasis, const PairLabeling& labeling, const QctfOptions& opt) {
  return build_pairs(eig, psi0, part, mbasis, labeling, 3, opt);
}

PoleResidueFunction residue_entanglement(const LaurentQCTF& k, const CanonicalPolicy& policy) {
  if (k.arity() != 2) throw std::invalid_argument("residue_entanglement: expected an arity-2 QCTF");
  std::vector<const PoleResidueFunction*> all;
  for (const auto& [e, f] : k.coefficients()) all.push_back(&f);
  const auto frobenius_term = sum_self_star(all, policy);
  const auto kd = diagonal_residue(k, 0, policy);
  const PoleResidueFunction* kd_list[] = {&kd};
  const auto diagonal_term = sum_self_star(kd_list, policy);
  const PoleResidueFunction* parts[] = {&frobenius_term, &diagonal_term};
  const cplx signs[] = {1.0, -1.0};
  return linear_combination(parts, signs, policy);
}

PoleResidueFunction residue_entanglement_multi(const LaurentQCTF& k, const CanonicalPolicy& policy) {
  if (k.arity() != 3) throw std::invalid_argument("residue_entanglement_multi: expected an arity-3 QCTF");
  std::vector<const PoleResidueFunction*> all;
  int max_c = -1;
  for (const auto& [e, f] : k.coefficients()) {
    all.push_back(&f);
    max_c = std::max(max_c, e.c);
  }
  const auto frobenius_term = sum_self_star(all, policy);
  // Res_{z_c=0} z_c^-1 K_d(z_c) star K_d*(1/z_c*) pairs equal pair labels.
  std::vector<PoleResidueFunction> kd;
  for (int c = 0; c <= max_c; ++c) kd.push_back(diagonal_residue(k, c, policy));
  std::vector<const PoleResidueFunction*> kd_list;
  for (const auto& f : kd) kd_list.push_back(&f);
  const auto diagonal_term = sum_self_star(kd_list, policy);
  const PoleResidueFunction* parts[] = {&frobenius_term, &diagonal_term};
  const cplx signs[] = {1.0, -1.0};
  return linear_combination(parts, signs, policy);
}

}  // namespace qctf
