#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qctf/eigen.hpp"
#include "qctf/models.hpp"

using namespace qctf;

namespace {

void check_spectrum(const ComplexMatrix& h, std::vector<double> expected, double tol) {
  const auto vals = hermitian_eigenvalues(h);
  std::sort(expected.begin(), expected.end());
  REQUIRE(vals.size() == expected.size());
  for (std::size_t i = 0; i < vals.size(); ++i) CHECK(std::abs(vals[i] - expected[i]) <= tol);
}

bool is_hermitian(const ComplexMatrix& h, double tol) { return hermiticity_violation(h).worst <= tol; }

}  // namespace

TEST_SUITE("models") {

TEST_CASE("two-site Heisenberg: singlet and triplet") {
  check_spectrum(build_heisenberg_xxz(2, 1.0, 1.0, false), {-0.75, 0.25, 0.25, 0.25}, 1e-12);
  // The periodic closing bond coincides with the single bond for two sites.
  CHECK(build_heisenberg_xxz(2, 1.0, 1.0, true) == build_heisenberg_xxz(2, 1.0, 1.0, false));
}

TEST_CASE("zero coupling gives the zero matrix") {
  const auto h = build_heisenberg_xxz(2, 0.0, 1.0, false);
  CHECK(h.max_abs() == 0.0);
}

TEST_CASE("open XX chain spectrum is symmetric under E -> -E") {
  auto vals = hermitian_eigenvalues(build_heisenberg_xxz(3, 1.0, 0.0, false));
  auto neg = vals;
  for (auto& v : neg) v = -v;
  std::sort(neg.begin(), neg.end());
  for (std::size_t i = 0; i < vals.size(); ++i) CHECK(std::abs(vals[i] - neg[i]) <= 1e-12);
}

TEST_CASE("XXZ matrix elements follow S = sigma/2") {
  // |up down> <-> |down up> hopping amplitude J/2; diagonal J delta / 4 * (+-1).
  const auto h = build_heisenberg_xxz(2, 2.0, 3.0, false);
  CHECK(h(1, 2) == cplx(1.0, 0.0));
  CHECK(h(0, 0) == cplx(1.5, 0.0));
  CHECK(h(1, 1) == cplx(-1.5, 0.0));
}

TEST_CASE("transverse Ising spectra") {
  const auto h = build_transverse_ising(2, 1.0, 0.0, false);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(h(i, j) == cplx{});
  check_spectrum(h, {-0.25, -0.25, 0.25, 0.25}, 1e-12);
  // Free spins in a field: -h sum Sx, levels -3/2..3/2 with multiplicities 1,3,3,1.
  check_spectrum(build_transverse_ising(3, 0.0, 1.0, false), {-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5}, 1e-12);
}

TEST_CASE("site count is range checked") {
  CHECK_THROWS_AS(build_heisenberg_xxz(1, 1.0, 1.0, false), std::invalid_argument);
  CHECK_THROWS_AS(build_heisenberg_xxz(11, 1.0, 1.0, false), std::invalid_argument);
  CHECK_THROWS_AS(build_transverse_ising(0, 1.0, 1.0, false), std::invalid_argument);
  CHECK_THROWS_AS(build_random_hermitian(1, 3), std::invalid_argument);
}

TEST_CASE("builders produce Hermitian matrices") {
  for (int sites = 2; sites <= 6; ++sites) {
    CHECK(is_hermitian(build_heisenberg_xxz(sites, 0.7, -1.3, true), 1e-12));
    CHECK(is_hermitian(build_transverse_ising(sites, 1.1, 0.4, true), 1e-12));
  }
  CHECK(is_hermitian(build_random_hermitian(2, 99), 1e-15));
  CHECK(is_hermitian(build_random_hermitian(16, 7), 1e-15));
}

TEST_CASE("random Hermitian is reproducible") {
  CHECK(build_random_hermitian(8, 42) == build_random_hermitian(8, 42));
  CHECK(!(build_random_hermitian(8, 42) == build_random_hermitian(8, 43)));
  const auto e = hermitian_eigendecompose(build_random_hermitian(16, 7));
  CHECK(e.dim() == 16);
}

TEST_CASE("chain bipartition and M-major permutation") {
  const auto part = chain_bipartition(3, {2});
  CHECK(part.n == 2);
  CHECK(part.d == 4);
  const auto perm = m_major_permutation(3, {2});
  // chain index of |s0 s1 s2> is s0*4 + s1*2 + s2; M-major puts s2 first.
  for (std::size_t c = 0; c < 8; ++c) {
    const std::size_t s0 = c >> 2, s1 = (c >> 1) & 1, s2 = c & 1;
    CHECK(perm[c] == s2 * 4 + s0 * 2 + s1);
  }
  CHECK_THROWS_AS(chain_bipartition(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(chain_bipartition(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(chain_bipartition(3, {}), std::invalid_argument);
}

TEST_CASE("permutation preserves the spectrum") {
  const auto h = build_heisenberg_xxz(4, 1.0, 0.5, false);
  const auto p = permute_basis(h, m_major_permutation(4, {2, 0}));
  const auto a = hermitian_eigenvalues(h), b = hermitian_eigenvalues(p);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
}

TEST_CASE("per-site initial states") {
  const auto part = chain_bipartition(2, {0});
  const auto s = make_initial_state("up,down", part);
  // M = site 0 up (i_M = 0), R = site 1 down (i_R = 1).
  for (std::size_t i = 0; i < 4; ++i) CHECK(s[i] == (i == 0 * part.d + 1 ? cplx(1.0) : cplx{}));

  const auto plus = make_initial_state("+,0", part);
  CHECK(std::abs(plus[0] - 1.0 / std::numbers::sqrt2) <= 1e-15);
  CHECK(std::abs(plus[2] - 1.0 / std::numbers::sqrt2) <= 1e-15);
}

TEST_CASE("Bell, GHZ and Neel descriptors") {
  const double r = 1.0 / std::numbers::sqrt2;
  const auto bell = make_initial_state("bell(0,1)", chain_bipartition(2, {0}));
  CHECK(std::abs(bell[0] - r) <= 1e-15);
  CHECK(std::abs(bell[3] - r) <= 1e-15);
  CHECK(bell[1] == cplx{});
  CHECK(bell[2] == cplx{});

  const auto ghz = make_initial_state("ghz", chain_bipartition(3, {1}));
  CHECK(std::abs(ghz[0] - r) <= 1e-15);
  CHECK(std::abs(ghz[7] - r) <= 1e-15);

  // Neel on 4 sites is |0101> in chain order; with M = {1} it is i_M = 1, R = |001>.
  const auto neel = make_initial_state("neel", chain_bipartition(4, {1}));
  CHECK(neel[1 * 8 + 1] == cplx(1.0));
}

TEST_CASE("random descriptors are normalized and seeded") {
  const Bipartition part{2, 4, {}};
  const auto a = make_initial_state("random(seed=3)", part);
  CHECK(std::abs(a.norm() - 1.0) <= 1e-12);
  CHECK(a == make_initial_state("random(seed=3)", part));
  const auto p = make_initial_state("random_product(seed=5)", part);
  CHECK(std::abs(p.norm() - 1.0) <= 1e-12);
  CHECK(std::abs(testref::det2(testref::reduced(p, 2, 4))) <= 1e-15);
  const auto c = make_initial_state("random_product(seed=5)", chain_bipartition(3, {0}));
  CHECK(std::abs(testref::det2(testref::reduced(c, 2, 4))) <= 1e-15);
}

TEST_CASE("malformed descriptors are rejected") {
  const auto part = chain_bipartition(2, {0});
  CHECK_THROWS_AS(make_initial_state("up", part), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("up,sideways", part), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("random(seed=x)", part), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("bell(0,0)", part), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("basis(9)", part), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("neel", Bipartition{2, 2, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state("", part), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), std::invalid_argument);
}

}  // TEST_SUITE
