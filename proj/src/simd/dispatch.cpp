#include <cstdlib>
#include <string_view>

#include "fock/simd/kernels.hpp"

namespace fock::simd {

namespace {

const KernelTable& select() {
  const char* env = std::getenv("FOCK_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace fock::simd
