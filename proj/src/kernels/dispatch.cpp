#include <cstdlib>
#include <string>

#include "smib/kernels.hpp"

namespace smib::kernels {

const KernelTable* avx2_table() {
#if defined(SMIB_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = [] () -> const KernelTable& {
    if (const char* env = std::getenv("SMIB_SIMD"); env != nullptr && std::string(env) == "scalar") {
      return scalar_table();
    }
    if (const auto* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return table;
}

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "?";
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (const auto* t = avx2_table()) out.push_back(t);
  return out;
}

}  // namespace smib::kernels
