#include <cstdlib>
#include <cstring>

#include "hypertest/kernels.hpp"

namespace hypertest::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Ops& resolve() {
  const char* force = std::getenv("HYPERTEST_KERNEL");
  if (force != nullptr) {
    if (std::strcmp(force, "scalar") == 0) return scalar();
    if (std::strcmp(force, "avx2") == 0) {
      const Ops* v = avx2();
      if (v == nullptr || !cpu_has_avx2())
        fail_invalid("HYPERTEST_KERNEL=avx2 requested but AVX2 is unavailable");
      return *v;
    }
    fail_invalid(std::string("unknown HYPERTEST_KERNEL value: ") + force);
  }
  if (cpu_has_avx2()) {
    const Ops* v = avx2();
    if (v != nullptr) return *v;
  }
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& chosen = resolve();
  return chosen;
}

}  // namespace hypertest::kernels
