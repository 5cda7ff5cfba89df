#include <doctest.h>

#include <string>
#include <vector>

#include "qctf/kernels.hpp"
#include "qctf/random.hpp"

using qctf::cplx;
namespace kernels = qctf::kernels;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
  qctf::SplitMix64 rng(seed);
  std::vector<cplx> v(n);
  for (auto& x : v) x = rng.complex_normal();
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar reference kernels") {
  const auto& s = kernels::scalar();
  const std::vector<cplx> x = {{1, 2}, {3, -1}};
  const std::vector<cplx> y = {{0, 1}, {2, 2}};
  // conj(1+2i)(i) + conj(3-i)(2+2i) = (2+i) + (4+8i)
  CHECK(s.dotc(x.data(), y.data(), 2) == cplx(6, 9));
  CHECK(s.norm2(x.data(), 2) == doctest::Approx(15.0));

  std::vector<cplx> z = y;
  s.axpy(cplx(0, 1), x.data(), z.data(), 2);
  CHECK(z[0] == cplx(-2, 2));
  CHECK(z[1] == cplx(3, 5));

  z = y;
  s.axpy_conj(cplx(2, 0), x.data(), z.data(), 2);
  CHECK(z[0] == cplx(2, -3));
  CHECK(z[1] == cplx(8, 4));

  std::vector<cplx> a = x, b = y;
  s.rot(0.0, 1.0, 1.0, 0.0, a.data(), b.data(), 2);  // swap
  CHECK(a == y);
  CHECK(b == x);
}

TEST_CASE("active table is one of the compiled variants") {
  const auto& active = kernels::active();
  const bool is_scalar = &active == &kernels::scalar();
  const bool is_avx2 = kernels::avx2() != nullptr && &active == kernels::avx2();
  CHECK((is_scalar || is_avx2));
  MESSAGE("active kernels: " << std::string(active.name));
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const auto* v = kernels::avx2();
  if (!v) {
    MESSAGE("AVX2 variant unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto& s = kernels::scalar();
  for (std::size_t n = 0; n <= 37; ++n) {
    CAPTURE(n);
    const auto x = random_vector(n, 100 + n);
    const auto y = random_vector(n, 200 + n);
    double scale = 1.0;
    for (const auto& e : x) scale += std::norm(e);
    for (const auto& e : y) scale += std::norm(e);

    CHECK(std::abs(s.dotc(x.data(), y.data(), n) - v->dotc(x.data(), y.data(), n)) <= 1e-13 * scale);
    CHECK(std::abs(s.norm2(x.data(), n) - v->norm2(x.data(), n)) <= 1e-13 * scale);

    const cplx alpha(0.3, -1.7);
    auto y1 = y, y2 = y;
    s.axpy(alpha, x.data(), y1.data(), n);
    v->axpy(alpha, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) <= 1e-14 * scale);

    y1 = y, y2 = y;
    s.axpy_conj(alpha, x.data(), y1.data(), n);
    v->axpy_conj(alpha, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) <= 1e-14 * scale);

    auto a1 = x, b1 = y, a2 = x, b2 = y;
    const cplx ra(0.6, 0.1), rb(-0.2, 0.7), rc(0.5, -0.5), re(0.9, 0.0);
    s.rot(ra, rb, rc, re, a1.data(), b1.data(), n);
    v->rot(ra, rb, rc, re, a2.data(), b2.data(), n);
    CHECK(max_diff(a1, a2) <= 1e-14 * scale);
    CHECK(max_diff(b1, b2) <= 1e-14 * scale);
  }
}

}  // TEST_SUITE
