#include "qctf/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qctf/kernels.hpp"

namespace qctf {

namespace {

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

bool term_less(const PoleTerm& a, const PoleTerm& b) {
  if (a.omega != b.omega) return a.omega < b.omega;
  if (a.residue.real() != b.residue.real()) return a.residue.real() < b.residue.real();
  return a.residue.imag() < b.residue.imag();
}

double merge_tolerance(std::span<const PoleTerm> terms, const CanonicalPolicy& policy) {
  double max_omega = 0.0;
  for (const auto& t : terms) max_omega = std::max(max_omega, std::abs(t.omega));
  return policy.merge_rel * (1.0 + max_omega);
}

// Sort, merge frequency clusters (|r|-weighted mean frequency, summed residue)
// and drop residues at or below drop_rel * scale.
std::vector<PoleTerm> canonicalize(std::vector<PoleTerm> terms, const CanonicalPolicy& policy, double scale) {
  std::erase_if(terms, [](const PoleTerm& t) { return t.residue == cplx{}; });
  if (terms.empty()) return terms;
  const double tol = merge_tolerance(terms, policy);
  std::sort(terms.begin(), terms.end(), term_less);
  const double cutoff = policy.drop_rel * scale;

  std::vector<PoleTerm> out;
  std::size_t i = 0;
  while (i < terms.size()) {
    const double anchor = terms[i].omega;
    cplx sum{};
    double weight = 0.0, weighted = 0.0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].omega - anchor <= tol; ++j) {
      const double w = std::abs(terms[j].residue);
      sum += terms[j].residue;
      weight += w;
      weighted += w * terms[j].omega;
    }
    if (std::abs(sum) > cutoff) {
      const double omega = j - i == 1 ? anchor : weighted / weight;
      out.push_back({omega, sum});
    }
    i = j;
  }
  return out;
}

double abs_sum_of(std::span<const PoleTerm> terms) {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.residue);
  return s;
}

}  // namespace

PoleResidueFunction PoleResidueFunction::from_terms(std::vector<PoleTerm> terms, const CanonicalPolicy& policy) {
  const double scale = abs_sum_of(terms);
  return from_terms(std::move(terms), policy, scale);
}

PoleResidueFunction PoleResidueFunction::from_terms(std::vector<PoleTerm> terms, const CanonicalPolicy& policy,
                                                    double reference_scale) {
  const double scale = reference_scale;
  PoleResidueFunction f;
  f.terms_ = canonicalize(std::move(terms), policy, scale);
  return f;
}

PoleResidueFunction PoleResidueFunction::pole(double omega, cplx residue) {
  PoleResidueFunction f;
  if (residue != cplx{}) f.terms_.push_back({omega, residue});
  return f;
}

double PoleResidueFunction::abs_sum() const { return abs_sum_of(terms_); }

cplx PoleResidueFunction::total() const {
  cplx s{};
  for (const auto& t : terms_) s += t.residue;
  return s;
}

PoleResidueFunction star_convolve(const PoleResidueFunction& f, const PoleResidueFunction& g,
                                  const CanonicalPolicy& policy) {
  return star_convolve_pruned(f, g, 0.0, policy);
}

PoleResidueFunction star_convolve_pruned(const PoleResidueFunction& f, const PoleResidueFunction& g,
                                         double prune_abs, const CanonicalPolicy& policy) {
  std::vector<PoleTerm> terms;
  terms.reserve(f.size() * g.size());
  double scale = 0.0;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      const cplx r = mul(a.residue, b.residue);
      const double mag = std::abs(r);
      if (mag < prune_abs) continue;
      scale += mag;
      terms.push_back({a.omega + b.omega, r});
    }
  }
  return PoleResidueFunction::from_terms(std::move(terms), policy, scale);
}

PoleResidueFunction conjugate_dual(const PoleResidueFunction& f) {
  std::vector<PoleTerm> terms;
  terms.reserve(f.size());
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) terms.push_back({-it->omega, std::conj(it->residue)});
  // Negation reverses the order and keeps clusters apart; no re-merge needed.
  return PoleResidueFunction::from_terms(std::move(terms), CanonicalPolicy{0.0, 0.0});
}

PoleResidueFunction linear_combination(std::span<const PoleResidueFunction* const> fs, std::span<const cplx> alphas,
                                       const CanonicalPolicy& policy) {
  if (fs.size() != alphas.size()) throw std::invalid_argument("linear_combination: size mismatch");
  std::vector<PoleTerm> terms;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (alphas[k] == cplx{}) continue;
    for (const auto& t : fs[k]->terms()) terms.push_back({t.omega, mul(alphas[k], t.residue)});
  }
  return PoleResidueFunction::from_terms(std::move(terms), policy);
}

PoleResidueFunction add(const PoleResidueFunction& f, const PoleResidueFunction& g, const CanonicalPolicy& policy) {
  const PoleResidueFunction* fs[] = {&f, &g};
  const cplx alphas[] = {1.0, 1.0};
  return linear_combination(fs, alphas, policy);
}

PoleResidueFunction scale(const PoleResidueFunction& f, cplx alpha, const CanonicalPolicy& policy) {
  const PoleResidueFunction* fs[] = {&f};
  const cplx alphas[] = {alpha};
  return linear_combination(fs, alphas, policy);
}

PoleResidueFunction operator+(const PoleResidueFunction& f, const PoleResidueFunction& g) { return add(f, g); }

PoleResidueFunction operator-(const PoleResidueFunction& f, const PoleResidueFunction& g) {
  const PoleResidueFunction* fs[] = {&f, &g};
  const cplx alphas[] = {1.0, -1.0};
  return linear_combination(fs, alphas);
}

cplx eval_time(const PoleResidueFunction& f, double t) {
  double re = 0.0, im = 0.0;
  for (const auto& term : f.terms()) {
    const double phase = term.omega * t;
    const double c = std::cos(phase), s = std::sin(phase);
    // r * (c - i s)
    re += term.residue.real() * c + term.residue.imag() * s;
    im += term.residue.imag() * c - term.residue.real() * s;
  }
  return {re, im};
}

std::vector<cplx> eval_time(const PoleResidueFunction& f, std::span<const double> times) {
  std::vector<cplx> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = eval_time(f, times[i]);
  return out;
}

PoleResidueFunction sum_self_star(std::span<const PoleResidueFunction* const> fs, const CanonicalPolicy& policy) {
  // Shared frequency grid over every input pole.
  struct Entry {
    double omega;
    std::uint32_t owner;
    cplx residue;
  };
  std::vector<Entry> entries;
  double scale = 0.0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const double a = fs[k]->abs_sum();
    scale += a * a;
    for (const auto& t : fs[k]->terms()) entries.push_back({t.omega, static_cast<std::uint32_t>(k), t.residue});
  }
  if (entries.empty()) return {};

  std::vector<std::uint32_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return entries[x].omega < entries[y].omega; });
  double max_omega = 0.0;
  for (const auto& e : entries) max_omega = std::max(max_omega, std::abs(e.omega));
  const double tol = policy.merge_rel * (1.0 + max_omega);

  std::vector<double> grid;
  std::vector<std::uint32_t> slot(entries.size());
  for (std::size_t i = 0; i < order.size();) {
    const double anchor = entries[order[i]].omega;
    double sum = 0.0;
    std::size_t j = i;
    for (; j < order.size() && entries[order[j]].omega - anchor <= tol; ++j) {
      sum += entries[order[j]].omega;
      slot[order[j]] = static_cast<std::uint32_t>(grid.size());
    }
    grid.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  const std::size_t m = grid.size();

  // Sparse rows: grid slot -> residue, per input function.
  std::vector<std::vector<std::pair<std::uint32_t, cplx>>> rows(fs.size());
  for (std::size_t e = 0; e < entries.size(); ++e) rows[entries[e].owner].push_back({slot[e], entries[e].residue});

  std::vector<PoleTerm> terms;
  constexpr std::size_t kDenseLimit = 2048;
  if (m <= kDenseLimit) {
    // S[a][b] = sum_k F_k[a] conj(F_k[b]) at frequency grid[a] - grid[b].
    ComplexMatrix acc(m, m);
    std::vector<cplx> dense(m);
    for (const auto& row : rows) {
      if (row.empty()) continue;
      if (row.size() * 8 > m) {
        std::fill(dense.begin(), dense.end(), cplx{});
        for (const auto& [g, r] : row) dense[g] += r;
        for (const auto& [g, r] : row) kernels::axpy_conj(r, dense, acc.row(g));
      } else {
        for (const auto& [ga, ra] : row)
          for (const auto& [gb, rb] : row) acc(ga, gb) += mul(ra, std::conj(rb));
      }
    }
    terms.reserve(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (acc(a, b) != cplx{}) terms.push_back({grid[a] - grid[b], acc(a, b)});
  } else {
    for (const auto& row : rows)
      for (const auto& [ga, ra] : row)
        for (const auto& [gb, rb] : row) terms.push_back({grid[ga] - grid[gb], mul(ra, std::conj(rb))});
  }
  // Drop threshold relative to the magnitudes that entered the accumulation,
  // so cancellations between input functions are removed.
  return PoleResidueFunction::from_terms(std::move(terms), policy, scale);
}

bool same_poles(const PoleResidueFunction& f, const PoleResidueFunction& g, double residue_tol,
                const CanonicalPolicy& policy) {
  if (f.size() != g.size()) return false;
  double max_omega = 0.0;
  for (const auto& t : f.terms()) max_omega = std::max(max_omega, std::abs(t.omega));
  for (const auto& t : g.terms()) max_omega = std::max(max_omega, std::abs(t.omega));
  const double tol = policy.merge_rel * (1.0 + max_omega);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f.terms()[i].omega - g.terms()[i].omega) > tol) return false;
    if (std::abs(f.terms()[i].residue - g.terms()[i].residue) > residue_tol) return false;
  }
  return true;
}

}  // namespace qctf
