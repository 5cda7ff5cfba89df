#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace qctf::kernels {

namespace {

const Table kScalar{"scalar", detail::dotc_scalar, detail::axpy_scalar, detail::norm2_scalar,
                    detail::rot_scalar, detail::axpy_conj_scalar};

#ifdef QCTF_HAVE_AVX2
const Table kAvx2{"avx2", detail::dotc_avx2, detail::axpy_avx2, detail::norm2_avx2,
                  detail::rot_avx2, detail::axpy_conj_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

bool scalar_forced() {
  const char* env = std::getenv("QCTF_FORCE_SCALAR");
  return env != nullptr && std::strcmp(env, "") != 0 && std::strcmp(env, "0") != 0;
}

}  // namespace

const Table& scalar() { return kScalar; }

const Table* avx2() {
#ifdef QCTF_HAVE_AVX2
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table& chosen = []() -> const Table& {
    if (!scalar_forced()) {
      if (const Table* t = avx2()) return *t;
    }
    return kScalar;
  }();
  return chosen;
}

}  // namespace qctf::kernels
