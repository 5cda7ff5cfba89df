#pragma once

// Complex inner-loop kernels. Every kernel has a portable scalar reference
// implementation; on x86-64 an AVX2/FMA variant is compiled as well and picked
// at runtime when the CPU supports it. Setting QCTF_FORCE_SCALAR=1 in the
// environment pins the scalar table.
//
// All vectors are interleaved std::complex<double> arrays.

#include <complex>
#include <cstddef>
#include <span>

namespace qctf::kernels {

using cplx = std::complex<double>;

struct Table {
  const char* name;
  /// sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  /// y_i += a * x_i
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  /// sum_i |x_i|^2
  double (*norm2)(const cplx* x, std::size_t n);
  /// (x_i, y_i) <- (a x_i + b y_i, c x_i + e y_i)
  void (*rot)(cplx a, cplx b, cplx c, cplx e, cplx* x, cplx* y, std::size_t n);
  /// y_i += a * conj(x_i)
  void (*axpy_conj)(cplx a, const cplx* x, cplx* y, std::size_t n);
};

const Table& scalar();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2/FMA.
const Table* avx2();
/// The table selected for this process (decided once, on first use).
const Table& active();

inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotc(x.data(), y.data(), x.size());
}
inline void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void axpy_conj(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy_conj(a, x.data(), y.data(), x.size());
}
inline double norm2(std::span<const cplx> x) { return active().norm2(x.data(), x.size()); }
inline void rot(cplx a, cplx b, cplx c, cplx e, std::span<cplx> x, std::span<cplx> y) {
  active().rot(a, b, c, e, x.data(), y.data(), x.size());
}

}  // namespace qctf::kernels
