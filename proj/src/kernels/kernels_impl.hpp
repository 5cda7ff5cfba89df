#pragma once

#include "qctf/kernels.hpp"

namespace qctf::kernels::detail {

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n);
void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n);
void axpy_conj_scalar(cplx a, const cplx* x, cplx* y, std::size_t n);
double norm2_scalar(const cplx* x, std::size_t n);
void rot_scalar(cplx a, cplx b, cplx c, cplx e, cplx* x, cplx* y, std::size_t n);

#ifdef QCTF_HAVE_AVX2
cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n);
void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n);
void axpy_conj_avx2(cplx a, const cplx* x, cplx* y, std::size_t n);
double norm2_avx2(const cplx* x, std::size_t n);
void rot_avx2(cplx a, cplx b, cplx c, cplx e, cplx* x, cplx* y, std::size_t n);
#endif

}  // namespace qctf::kernels::detail
