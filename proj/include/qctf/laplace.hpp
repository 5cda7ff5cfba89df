#pragma once

// Finite pole-residue functions F(s) = sum_j r_j / (s + i Omega_j) with every
// pole on the imaginary axis. The inverse Laplace transform is exact:
//   f(t) = sum_j r_j exp(-i Omega_j t).
//
// Instances are canonical: frequencies strictly increasing, clusters of
// frequencies closer than merge_rel * (1 + max|Omega|) merged into one pole
// (residues summed), and residues with |r| <= drop_rel * sum|r| removed, where
// the sum runs over the terms that went into the canonicalization.

#include <span>
#include <vector>

#include "qctf/linalg.hpp"

namespace qctf {

struct PoleTerm {
  double omega = 0.0;
  cplx residue{};

  friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

struct CanonicalPolicy {
  double merge_rel = 1e-9;
  double drop_rel = 1e-14;
};

class PoleResidueFunction {
 public:
  PoleResidueFunction() = default;

  /// Canonicalizes an arbitrary term list.
  static PoleResidueFunction from_terms(std::vector<PoleTerm> terms, const CanonicalPolicy& policy = {});
  /// Same, with the drop threshold taken relative to `reference_scale`
  /// instead of the input's own sum|r|.
  static PoleResidueFunction from_terms(std::vector<PoleTerm> terms, const CanonicalPolicy& policy,
                                        double reference_scale);
  /// Single pole; zero residue gives the zero function.
  static PoleResidueFunction pole(double omega, cplx residue);
  /// Time-domain constant c (pole at Omega = 0).
  static PoleResidueFunction constant(cplx c) { return pole(0.0, c); }

  std::span<const PoleTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// sum_j |r_j|
  double abs_sum() const;
  /// f(0) = sum_j r_j
  cplx total() const;

  friend bool operator==(const PoleResidueFunction&, const PoleResidueFunction&) = default;

 private:
  std::vector<PoleTerm> terms_;
};

/// Time-domain product: poles add, residues multiply.
PoleResidueFunction star_convolve(const PoleResidueFunction& f, const PoleResidueFunction& g,
                                  const CanonicalPolicy& policy = {});
/// Same, skipping residue products with |r1 r2| < prune_abs before merging.
PoleResidueFunction star_convolve_pruned(const PoleResidueFunction& f, const PoleResidueFunction& g,
                                         double prune_abs, const CanonicalPolicy& policy = {});

/// F*(s*): the transform of the complex-conjugated signal, {(-Omega, conj r)}.
PoleResidueFunction conjugate_dual(const PoleResidueFunction& f);

PoleResidueFunction add(const PoleResidueFunction& f, const PoleResidueFunction& g, const CanonicalPolicy& policy = {});
PoleResidueFunction scale(const PoleResidueFunction& f, cplx alpha, const CanonicalPolicy& policy = {});

/// sum_k alpha_k F_k, canonicalized once.
PoleResidueFunction linear_combination(std::span<const PoleResidueFunction* const> fs, std::span<const cplx> alphas,
                                       const CanonicalPolicy& policy = {});

PoleResidueFunction operator+(const PoleResidueFunction& f, const PoleResidueFunction& g);
PoleResidueFunction operator-(const PoleResidueFunction& f, const PoleResidueFunction& g);

/// f(t) = sum_j r_j exp(-i Omega_j t)
cplx eval_time(const PoleResidueFunction& f, double t);
std::vector<cplx> eval_time(const PoleResidueFunction& f, std::span<const double> times);

/// sum_k F_k (star) conj_dual(F_k), computed on a shared frequency grid. This is
/// the residue contraction that pairs equal Laurent exponents of a QCTF with
/// those of its conjugated-argument partner.
PoleResidueFunction sum_self_star(std::span<const PoleResidueFunction* const> fs, const CanonicalPolicy& policy = {});

/// True if both functions have the same number of poles, frequencies agree
/// within the merge tolerance and residues within `residue_tol`.
bool same_poles(const PoleResidueFunction& f, const PoleResidueFunction& g, double residue_tol,
                const CanonicalPolicy& policy = {});

}  // namespace qctf
