// Compiled with -mavx2 -mfma; only reached through the runtime dispatch table.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace qctf::kernels::detail {

namespace {

// One __m256d holds two interleaved complex numbers: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_reim(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a * v with a broadcast as (ar, ai)
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_reim(v)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

const __m256d kConjMask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);

}  // namespace

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);              // xr*yr, xi*yi
    acc_im = _mm256_fmadd_pd(xv, swap_reim(yv), acc_im);   // xr*yi, xi*yr
  }
  double re = hsum(acc_re);
  alignas(32) double t[4];
  _mm256_store_pd(t, acc_im);
  double im = (t[0] - t[1]) + (t[2] - t[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, load2(x + i))));
  }
  if (i < n) axpy_scalar(a, x + i, y + i, n - i);
}

void axpy_conj_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xc = _mm256_xor_pd(load2(x + i), kConjMask);
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, xc)));
  }
  if (i < n) axpy_conj_scalar(a, x + i, y + i, n - i);
}

double norm2_avx2(const cplx* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void rot_avx2(cplx a, cplx b, cplx c, cplx e, cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d er = _mm256_set1_pd(e.real()), ei = _mm256_set1_pd(e.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul(ar, ai, xv), cmul(br, bi, yv)));
    store2(y + i, _mm256_add_pd(cmul(cr, ci, xv), cmul(er, ei, yv)));
  }
  if (i < n) rot_scalar(a, b, c, e, x + i, y + i, n - i);
}

}  // namespace qctf::kernels::detail
