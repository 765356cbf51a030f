// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "quadsg/kernels.hpp"

namespace quadsg::kernels {
namespace {

constexpr std::size_t kLanes32 = 8;
constexpr std::size_t kBytes = 32;

void min_plus_gather_avx2(const std::int32_t* values, std::size_t start, std::int64_t first_index,
                          std::int64_t last_index, std::span<std::int32_t> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes32;
  // Index-major: each i streams one contiguous run of the prefix.
  for (std::int64_t i = first_index; i <= last_index; ++i) {
    const auto tri = static_cast<std::size_t>(i * (i - 1) / 2);
    const std::int32_t* src = values + (start - tri);
    const auto cost = static_cast<std::int32_t>(i);
    const __m256i vcost = _mm256_set1_epi32(cost);
    for (std::size_t j = 0; j < vec_end; j += kLanes32) {
      auto* dst = reinterpret_cast<__m256i*>(out.data() + j);
      const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      _mm256_storeu_si256(dst, _mm256_min_epi32(_mm256_loadu_si256(dst), _mm256_add_epi32(prev, vcost)));
    }
    for (std::size_t j = vec_end; j < n; ++j) out[j] = std::min(out[j], src[j] + cost);
  }
}

void or_shift_avx2(std::span<std::uint8_t> bits, std::size_t shift) {
  if (shift == 0 || shift >= bits.size()) return;
  const std::size_t limit = bits.size() - shift;
  std::size_t s = 0;
  // A chunk may only read bytes that earlier chunks have finished writing.
  if (shift >= kBytes) {
    std::uint8_t* base = bits.data();
    for (; s + kBytes <= limit; s += kBytes) {
      const __m256i src = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + s));
      auto* dst = reinterpret_cast<__m256i*>(base + s + shift);
      _mm256_storeu_si256(dst, _mm256_or_si256(_mm256_loadu_si256(dst), src));
    }
  }
  for (; s < limit; ++s) {
    bits[s + shift] |= bits[s];
  }
}

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet set{Isa::avx2, &min_plus_gather_avx2, &or_shift_avx2};
  return set;
}

}  // namespace quadsg::kernels
