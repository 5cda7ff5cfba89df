#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qctf/entanglement.hpp"
#include "qctf/models.hpp"
#include "qctf/random.hpp"

using namespace qctf;

namespace {

// |u ^ v|^2 from the antisymmetric tensor (u_i v_j - u_j v_i)/sqrt2.
double wedge_bruteforce(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) s += 0.5 * std::norm(u[i] * v[j] - u[j] * v[i]);
  return s;
}

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<cplx> v(n);
  for (auto& x : v) x = rng.complex_normal();
  return v;
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("local overlaps: completeness and reconstruction") {
  const auto s = testref::random_system(2, 3, 5);
  const auto mb = random_unitary(2, 6);
  const auto ov = local_overlaps(s.eig, s.part, mb);
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t kp = 0; kp < 6; ++kp) {
      const cplx sum = ov(0, 0, k, kp) + ov(1, 1, k, kp);
      CHECK(std::abs(sum - (k == kp ? 1.0 : 0.0)) <= 1e-10);
    }
  // |k> = sum_a |a> (x) |a k>.
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t i = 0; i < 3; ++i) {
        cplx v = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
          cplx slice = 0.0;
          for (std::size_t mm = 0; mm < 2; ++mm) slice += std::conj(mb(mm, a)) * s.eig.vectors(mm * 3 + i, k);
          v += mb(m, a) * slice;
        }
        CHECK(std::abs(v - s.eig.vectors(m * 3 + i, k)) <= 1e-12);
      }
  CHECK_THROWS_AS(local_overlaps(s.eig, s.part, ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("local overlaps of separable eigenmodes") {
  const auto z = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
  const auto hr = build_random_hermitian(3, 2);
  const auto h = kron(z, ComplexMatrix::identity(3)) + kron(ComplexMatrix::identity(2), hr);
  const auto s = testref::make_system(h, random_state(6, 1), Bipartition{2, 3, {}});
  const auto ov = local_overlaps(s.eig, s.part, ComplexMatrix::identity(2));
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(ov(0, 1, k, k)) <= 1e-12);
}

TEST_CASE("eigenmode measure") {
  SUBCASE("eigenstate input collapses to one constant") {
    const auto s = testref::random_system(2, 2, 9);
    const std::size_t k0 = 1;
    const StateVector psi(s.eig.vectors.column(k0));
    const auto mb = ComplexMatrix::identity(2);
    const auto q = qctf_measure_eigenmode(s.eig, psi, s.part, mb);
    const auto ov = local_overlaps(s.eig, s.part, mb);
    const cplx expect = ov(0, 0, k0, k0) * ov(1, 1, k0, k0) - std::norm(ov(0, 1, k0, k0));
    REQUIRE(q.size() == 1);
    CHECK(std::abs(q.terms()[0].omega) <= 1e-12);
    CHECK(std::abs(q.terms()[0].residue - expect) <= 1e-12);
  }
  SUBCASE("product state of a non-interacting system") {
    const auto x = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    const auto h = kron(x, ComplexMatrix::identity(2)) + kron(ComplexMatrix::identity(2), 0.3 * x);
    const auto s = testref::make_system(h, StateVector({1.0, 0.0, 0.0, 0.0}), Bipartition{2, 2, {}});
    const auto q = qctf_measure_eigenmode(s.eig, s.psi, s.part, ComplexMatrix::identity(2));
    for (double t : testref::linspace(0.0, 5.0, 11)) CHECK(std::abs(eval_time(q, t)) <= 1e-13);
  }
  SUBCASE("two-site Heisenberg from |up down> over 200 points") {
    const auto part = chain_bipartition(2, {0});
    const auto s =
        testref::make_system(build_heisenberg_xxz(2, 1.0, 1.0, false), make_initial_state("up,down", part), part);
    const auto q = qctf_measure_eigenmode(s.eig, s.psi, s.part, ComplexMatrix::identity(2));
    for (double t : testref::linspace(0.0, 10.0, 200)) {
      const double oracle = testref::det2(testref::reduced(testref::evolve(s.h, s.psi, t), 2, 2));
      CHECK(std::abs(eval_time(q, t) - oracle) <= 1e-10);
      CHECK(std::abs(eval_time(q, t) - std::pow(std::sin(t), 2) / 4.0) <= 1e-12);
    }
    // Closed form: 1/8 - cos(2t)/8.
    REQUIRE(q.size() == 3);
    CHECK(std::abs(q.terms()[1].residue - 0.125) <= 1e-14);
    CHECK(std::abs(q.terms()[0].omega + 2.0) <= 1e-12);
  }
  SUBCASE("output is conjugate-symmetric") {
    const auto s = testref::random_system(2, 3, 10);
    const auto q = qctf_measure_eigenmode(s.eig, s.psi, s.part, random_unitary(2, 1));
    CHECK(same_poles(q, conjugate_dual(q), 1e-13));
  }
  CHECK_THROWS_AS(qctf_measure_eigenmode(testref::random_system(3, 2, 1).eig, random_state(6, 1),
                                         Bipartition{3, 2, {}}, ComplexMatrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("eigenmode and residue paths give the same poles") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = testref::random_system(2, 3, seed);
    const auto mb = random_unitary(2, seed + 4);
    const auto a = qctf_measure_eigenmode(s.eig, s.psi, s.part, mb);
    const auto b = residue_entanglement(qctf_offdiag(s.eig, s.psi, s.part, mb));
    CHECK(same_poles(a, b, 1e-12));
  }
}

TEST_CASE("marginals") {
  const double r = 1.0 / std::numbers::sqrt2;
  const Bipartition part{2, 2, {}};
  const auto m = marginals(StateVector({r, 0.0, 0.0, r}), part, ComplexMatrix::identity(2));
  CHECK(m.vectors[0] == std::vector<cplx>{r, 0.0});
  CHECK(m.vectors[1] == std::vector<cplx>{0.0, r});
  CHECK(geometric_measure(m) == doctest::Approx(0.25).epsilon(1e-15));

  const auto prod = make_initial_state("random_product(seed=4)", Bipartition{3, 4, {}});
  const auto mp = marginals(prod, Bipartition{3, 4, {}}, random_unitary(3, 8));
  CHECK(std::abs(geometric_measure(mp)) <= 1e-15);

  const auto psi = random_state(15, 3);
  const auto mr = marginals(psi, Bipartition{5, 3, {}}, random_unitary(5, 3));
  double total = 0.0;
  for (const auto& v : mr.vectors)
    for (const auto& x : v) total += std::norm(x);
  CHECK(std::abs(total - 1.0) <= 1e-12);
  CHECK_THROWS_AS(marginals(psi, Bipartition{4, 4, {}}, ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("wedge areas") {
  CHECK(wedge_area_sq(std::vector<cplx>{1, 0, 0}, std::vector<cplx>{0, 1, 0}) == 1.0);
  const auto u = random_vector(5, 1);
  std::vector<cplx> v = u;
  for (auto& x : v) x *= cplx(0.3, -2.0);
  CHECK(std::abs(wedge_area_sq(u, v)) <= 1e-12);
  for (std::uint64_t seed = 2; seed < 12; ++seed) {
    const auto a = random_vector(6, seed), b = random_vector(6, seed + 50);
    const double w = wedge_area_sq(a, b);
    CHECK(std::abs(w - wedge_bruteforce(a, b)) <= 1e-12 * (1.0 + w));
    CHECK(w >= -1e-14);
    double na = 0, nb = 0;
    for (auto x : a) na += std::norm(x);
    for (auto x : b) nb += std::norm(x);
    CHECK(w <= na * nb * (1 + 1e-15));
  }
  CHECK_THROWS_AS(wedge_area_sq(std::vector<cplx>{1}, std::vector<cplx>{1, 2}), std::invalid_argument);
}

TEST_CASE("geometric measure equals s2 of the reduced state") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto s = testref::random_system(3, 3, seed);
    const double t = 0.37 * static_cast<double>(seed);
    const auto psi_t = testref::evolve(s.h, s.psi, t);
    const auto rho = testref::reduced(psi_t, 3, 3);
    const double g = geometric_measure(marginals(psi_t, s.part, ComplexMatrix::identity(3)));
    CHECK(std::abs(g - testref::s2(rho)) <= 1e-10);
    const double g_rot = geometric_measure(marginals(psi_t, s.part, random_unitary(3, seed)));
    CHECK(std::abs(g - g_rot) <= 1e-10);
    CHECK(std::abs(principal_minor_sum(rho) - testref::s2(rho)) <= 1e-12);
    CHECK(std::abs(s2_from_eigenvalues(hermitian_eigenvalues(rho)) - testref::s2(rho)) <= 1e-12);
  }
}

TEST_CASE("Laplace-domain wedge expression evaluates to s2") {
  const auto s = testref::random_system(3, 2, 19);
  const auto q = geometric_measure_laplace(marginals_laplace(s.eig, s.psi, s.part, random_unitary(3, 4)));
  for (double t : testref::linspace(0.0, 4.0, 12)) {
    const double s2 = testref::s2(testref::reduced(testref::evolve(s.h, s.psi, t), 3, 2));
    CHECK(std::abs(eval_time(q, t) - s2) <= 1e-10);
  }
}

TEST_CASE("principal minors") {
  CHECK(principal_minor_sum(0.5 * ComplexMatrix::identity(2)) == doctest::Approx(0.25));
  const auto psi = random_state(4, 2);
  CHECK(std::abs(principal_minor_sum(outer(psi.amplitudes(), psi.amplitudes()))) <= 1e-15);
  ComplexMatrix d(3, 3);
  d(0, 0) = 0.5;
  d(1, 1) = 1.0 / 3.0;
  d(2, 2) = 1.0 / 6.0;
  CHECK(std::abs(principal_minor_sum(d) - 11.0 / 36.0) <= 1e-15);
  CHECK_THROWS_AS(principal_minor_sum(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("s2 from eigenvalues") {
  CHECK(s2_from_eigenvalues(std::vector<double>{1, 0, 0, 0}) == 0.0);
  CHECK(s2_from_eigenvalues(std::vector<double>{0.5, 0.5}) == 0.25);
  for (int n = 2; n <= 8; ++n) {
    const std::vector<double> u(n, 1.0 / n);
    CHECK(std::abs(s2_from_eigenvalues(u) - (n - 1.0) / (2.0 * n)) <= 1e-15);
  }
}

TEST_CASE("Renyi-2 and linear entropy") {
  const auto psi = random_state(3, 5);
  const auto pure = renyi2_and_linear_entropy(outer(psi.amplitudes(), psi.amplitudes()));
  CHECK(std::abs(pure.renyi2) <= 1e-14);
  CHECK(std::abs(pure.linear) <= 1e-14);
  const auto mixed = renyi2_and_linear_entropy(0.5 * ComplexMatrix::identity(2));
  CHECK(mixed.renyi2 == doctest::Approx(1.0));
  CHECK(mixed.linear == doctest::Approx(0.5));
  CHECK(std::abs(renyi2_from_determinant(0.1) - 0.32192809488736235) <= 1e-15);
  CHECK_THROWS_AS(renyi2_and_linear_entropy(ComplexMatrix(2, 2)), std::domain_error);
  CHECK_THROWS_AS(renyi2_and_linear_entropy(ComplexMatrix::identity(2)), std::domain_error);

  // For a qubit, S2 = -log2(1 - 2 det rho), increasing in det rho.
  double prev = -1.0;
  for (double p = 0.0; p <= 0.5; p += 0.05) {
    ComplexMatrix rho(2, 2);
    rho(0, 0) = p;
    rho(1, 1) = 1 - p;
    const double q = testref::det2(rho);
    const auto e = renyi2_and_linear_entropy(rho);
    if (p > 0.0) CHECK(std::abs(e.renyi2 - renyi2_from_determinant(q)) <= 1e-12);
    CHECK(renyi2_from_determinant(q) > prev);
    prev = renyi2_from_determinant(q);
  }
}

}  // TEST_SUITE
