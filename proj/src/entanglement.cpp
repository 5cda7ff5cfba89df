#include "qctf/entanglement.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qctf/kernels.hpp"

namespace qctf {

namespace {

void require_mbasis(const ComplexMatrix& mbasis, std::size_t n) {
  if (mbasis.rows() != n || mbasis.cols() != n) {
    std::ostringstream os;
    os << "M basis is " << mbasis.rows() << "x" << mbasis.cols() << ", subsystem dimension is " << n;
    throw std::invalid_argument(os.str());
  }
}

// slices[a][k] = (<a| (x) I)|k>, a vector over R.
std::vector<std::vector<std::vector<cplx>>> eigen_slices(const EigenDecomposition& eig, const Bipartition& part,
                                                         const ComplexMatrix& mbasis) {
  const std::size_t n = part.n, d = part.d, dim = eig.dim();
  std::vector<std::vector<std::vector<cplx>>> slices(n, std::vector<std::vector<cplx>>(dim, std::vector<cplx>(d)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        cplx s = 0.0;
        for (std::size_t m = 0; m < n; ++m) s += std::conj(mbasis(m, a)) * eig.vectors(part.index(m, i), k);
        slices[a][k][i] = s;
      }
  return slices;
}

// sum over (x, y) of weight(x, y) * table at frequency E_y - E_x.
template <class Weight>
PoleResidueFunction pair_function(const EigenDecomposition& eig, const CanonicalPolicy& policy,
                                  Weight&& weight) {
  const std::size_t dim = eig.dim();
  std::vector<PoleTerm> terms;
  double scale = 0.0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      cplx w;
      if (!weight(x, y, w)) continue;
      scale += std::abs(w);
      terms.push_back({eig.values[y] - eig.values[x], w});
    }
  }
  return PoleResidueFunction::from_terms(std::move(terms), policy, scale);
}

}  // namespace

LocalOverlapTable local_overlaps(const EigenDecomposition& eig, const Bipartition& part, const ComplexMatrix& mbasis) {
  validate_bipartition(part, eig.dim());
  require_mbasis(mbasis, part.n);
  const auto slices = eigen_slices(eig, part, mbasis);
  const std::size_t n = part.n, dim = eig.dim();
  LocalOverlapTable table(n, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t kp = 0; kp < dim; ++kp) table(a, b, k, kp) = kernels::dotc(slices[a][k], slices[b][kp]);
  return table;
}

PoleResidueFunction qctf_measure_eigenmode(const EigenDecomposition& eig, const StateVector& psi0,
                                           const Bipartition& part, const ComplexMatrix& mbasis,
                                           const QctfOptions& opt) {
  if (part.n != 2) throw std::invalid_argument("eigenmode measure requires a two-level subsystem (n = 2)");
  if (psi0.size() != eig.dim()) throw std::invalid_argument("initial state dimension does not match the Hamiltonian");
  const auto c = with_overlaps(eig, psi0).overlaps;
  const auto ov = local_overlaps(eig, part, mbasis);
  constexpr std::size_t plus = 0, minus = 1;

  // Each factor is a sum over one index pair; the bilinear weight c_x* c_y
  // (or its conjugate) gates pruning.
  auto gated = [&](std::size_t x, std::size_t y, cplx& w, cplx o) {
    const cplx cc = std::conj(c[x]) * c[y];
    if (std::abs(cc) < opt.prune) return false;
    w = cc * o;
    return true;
  };
  // X(t) = sum |c_{+i}(t)|^2, frequencies E_k' - E_k.
  auto x_fn = pair_function(eig, opt.policy,
                            [&](std::size_t k, std::size_t kp, cplx& w) { return gated(k, kp, w, ov(plus, plus, k, kp)); });
  // Y(t) = sum |c_{-j}(t)|^2, frequencies E_l - E_l'.
  auto y_fn = pair_function(eig, opt.policy,
                            [&](std::size_t lp, std::size_t l, cplx& w) { return gated(lp, l, w, ov(minus, minus, lp, l)); });
  // U(t) = sum conj(c_{+i}) c_{-i}, frequencies E_l - E_k.
  auto u_fn = pair_function(eig, opt.policy,
                            [&](std::size_t k, std::size_t l, cplx& w) { return gated(k, l, w, ov(plus, minus, k, l)); });
  // V(t) = sum conj(c_{-i}) c_{+i}, frequencies E_k' - E_l'.
  auto v_fn = pair_function(eig, opt.policy,
                            [&](std::size_t lp, std::size_t kp, cplx& w) { return gated(lp, kp, w, ov(minus, plus, lp, kp)); });

  const auto xy = star_convolve(x_fn, y_fn, opt.policy);
  const auto uv = star_convolve(u_fn, v_fn, opt.policy);
  const PoleResidueFunction* parts[] = {&xy, &uv};
  const cplx signs[] = {1.0, -1.0};
  return linear_combination(parts, signs, opt.policy);
}

MarginalSet marginals(const StateVector& psi, const Bipartition& part, const ComplexMatrix& mbasis) {
  validate_bipartition(part, psi.size());
  require_mbasis(mbasis, part.n);
  MarginalSet out;
  out.vectors.assign(part.n, std::vector<cplx>(part.d));
  for (std::size_t a = 0; a < part.n; ++a)
    for (std::size_t i = 0; i < part.d; ++i) {
      cplx s = 0.0;
      for (std::size_t m = 0; m < part.n; ++m) s += std::conj(mbasis(m, a)) * psi[part.index(m, i)];
      out.vectors[a][i] = s;
    }
  return out;
}

double wedge_area_sq(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw std::invalid_argument("wedge_area_sq: vectors differ in length");
  const double uu = kernels::norm2(u);
  const double vv = kernels::norm2(v);
  return uu * vv - std::norm(kernels::dotc(u, v));
}

double geometric_measure(const MarginalSet& m) {
  double total = 0.0;
  for (std::size_t a = 0; a < m.vectors.size(); ++a)
    for (std::size_t b = a + 1; b < m.vectors.size(); ++b) total += wedge_area_sq(m.vectors[a], m.vectors[b]);
  return total;
}

LaplaceMarginalSet marginals_laplace(const EigenDecomposition& eig, const StateVector& psi0, const Bipartition& part,
                                     const ComplexMatrix& mbasis, const QctfOptions& opt) {
  return amplitude_transforms(eig, psi0, part, mbasis, opt);
}

PoleResidueFunction geometric_measure_laplace(const LaplaceMarginalSet& m, const CanonicalPolicy& policy) {
  const std::size_t n = m.size();
  std::vector<std::vector<PoleResidueFunction>> duals(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& f : m[a]) duals[a].push_back(conjugate_dual(f));

  auto inner = [&](std::size_t a, std::size_t b) {
    std::vector<PoleResidueFunction> prods;
    for (std::size_t i = 0; i < m[a].size(); ++i) prods.push_back(star_convolve(duals[a][i], m[b][i], policy));
    std::vector<const PoleResidueFunction*> ptrs;
    for (const auto& p : prods) ptrs.push_back(&p);
    const std::vector<cplx> ones(ptrs.size(), 1.0);
    return linear_combination(ptrs, ones, policy);
  };

  std::vector<PoleResidueFunction> gram(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram[a * n + b] = inner(a, b);

  std::vector<PoleResidueFunction> areas;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      areas.push_back(star_convolve(gram[a * n + a], gram[b * n + b], policy));
      areas.push_back(scale(star_convolve(gram[a * n + b], gram[b * n + a], policy), -1.0, policy));
    }
  std::vector<const PoleResidueFunction*> ptrs;
  for (const auto& p : areas) ptrs.push_back(&p);
  const std::vector<cplx> ones(ptrs.size(), 1.0);
  return linear_combination(ptrs, ones, policy);
}

double principal_minor_sum(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw std::invalid_argument("principal_minor_sum: matrix is not square");
  double total = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = i + 1; j < rho.rows(); ++j) total += (rho(i, i) * rho(j, j) - rho(i, j) * rho(j, i)).real();
  return total;
}

double s2_from_eigenvalues(std::span<const double> lambda) {
  double total = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) total += lambda[i] * lambda[j];
  return total;
}

PurityEntropies renyi2_and_linear_entropy(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw std::invalid_argument("renyi2_and_linear_entropy: matrix is not square");
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  double purity = 0.0;
  for (const auto& v : rho.entries()) purity += std::norm(v);
  if (!(purity > 0.0 && purity <= 1.0 + 1e-10)) {
    std::ostringstream os;
    os.precision(17);
    os << "Tr rho^2 = " << purity << " is outside (0, 1]";
    throw std::domain_error(os.str());
  }
  return {purity, -std::log2(purity), 1.0 - purity};
}

double renyi2_from_determinant(double q) { return -std::log2(1.0 - 2.0 * q); }

}  // namespace qctf
