#include "qctf/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "qctf/entanglement.hpp"

namespace qctf {

void TimeGrid::validate() const {
  if (!std::isfinite(t0) || !std::isfinite(t1)) throw std::invalid_argument("time grid: t0 and t1 must be finite");
  if (t0 > t1) throw std::invalid_argument("time grid: t0 must not exceed t1");
  if (steps < 1) throw std::invalid_argument("time grid: steps must be at least 1");
}

std::vector<double> TimeGrid::samples() const {
  validate();
  std::vector<double> ts(steps + 1);
  const double dt = (t1 - t0) / static_cast<double>(steps);
  for (std::size_t i = 0; i <= steps; ++i) ts[i] = t0 + dt * static_cast<double>(i);
  ts.back() = t1;
  return ts;
}

namespace {

StateVector evolve_overlaps(const EigenDecomposition& eig, std::span<const cplx> c, double t) {
  const std::size_t dim = eig.dim();
  std::vector<cplx> out(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const cplx ck = c[k] * std::polar(1.0, -eig.values[k] * t);
    for (std::size_t i = 0; i < dim; ++i) out[i] += ck * eig.vectors(i, k);
  }
  return StateVector(std::move(out));
}

}  // namespace

StateVector evolve(const EigenDecomposition& eig, const StateVector& psi0, double t) {
  if (psi0.size() != eig.dim()) throw std::invalid_argument("evolve: state dimension does not match the Hamiltonian");
  return evolve_overlaps(eig, with_overlaps(eig, psi0).overlaps, t);
}

double determinant_2x2(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("determinant_2x2: matrix is not 2x2");
  return (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
}

std::vector<OracleSample> oracle_measure(const EigenDecomposition& eig, const StateVector& psi0,
                                         const Bipartition& part, const TimeGrid& grid) {
  validate_bipartition(part, eig.dim());
  const auto ts = grid.samples();
  if (psi0.size() != eig.dim()) throw std::invalid_argument("oracle: state dimension does not match the Hamiltonian");
  const auto c = with_overlaps(eig, psi0).overlaps;
  std::vector<OracleSample> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const auto rho = partial_trace(evolve_overlaps(eig, c, t), part, Keep::M);
    OracleSample s;
    s.t = t;
    if (part.n == 2) {
      s.q = determinant_2x2(rho);
    } else {
      const auto lambda = hermitian_eigenvalues(rho);
      s.q = s2_from_eigenvalues(lambda);
    }
    const auto ent = renyi2_and_linear_entropy(rho);
    s.renyi2 = ent.renyi2;
    s.purity = ent.purity;
    out.push_back(s);
  }
  return out;
}

double column_minor_measure(const StateVector& psi, const Bipartition& part) {
  validate_bipartition(part, psi.size());
  if (part.n != 2) throw std::invalid_argument("column_minor_measure: subsystem M must be two-level (n = 2)");
  double total = 0.0;
  for (std::size_t i = 0; i < part.d; ++i)
    for (std::size_t j = i + 1; j < part.d; ++j) {
      const cplx det = psi[part.index(0, i)] * psi[part.index(1, j)] - psi[part.index(0, j)] * psi[part.index(1, i)];
      total += std::norm(det);
    }
  return total;
}

}  // namespace qctf
