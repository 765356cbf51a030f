#include <cstdlib>
#include <string>

#include "quadsg/kernels.hpp"

namespace quadsg::kernels {

#if defined(QUADSG_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif
#if defined(QUADSG_HAVE_NEON)
const KernelSet& neon_kernels();
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelSet* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#if defined(QUADSG_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
      return nullptr;
    case Isa::neon:
#if defined(QUADSG_HAVE_NEON)
      // Advanced SIMD is mandatory on AArch64.
      return &neon_kernels();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> sets;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (const KernelSet* k = kernels_for(isa)) sets.push_back(k);
  }
  return sets;
}

namespace {

const KernelSet& select() {
  if (const char* env = std::getenv("QUADSG_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa)) {
        const KernelSet* k = kernels_for(isa);
        return k ? *k : scalar_kernels();
      }
    }
  }
  return *available().back();
}

}  // namespace

const KernelSet& active() {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace quadsg::kernels
