#include <arm_neon.h>

#include <algorithm>

#include "quadsg/kernels.hpp"

namespace quadsg::kernels {
namespace {

constexpr std::size_t kLanes32 = 4;
constexpr std::size_t kBytes = 16;

void min_plus_gather_neon(const std::int32_t* values, std::size_t start, std::int64_t first_index,
                          std::int64_t last_index, std::span<std::int32_t> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes32;
  for (std::int64_t i = first_index; i <= last_index; ++i) {
    const auto tri = static_cast<std::size_t>(i * (i - 1) / 2);
    const std::int32_t* src = values + (start - tri);
    const auto cost = static_cast<std::int32_t>(i);
    const int32x4_t vcost = vdupq_n_s32(cost);
    for (std::size_t j = 0; j < vec_end; j += kLanes32) {
      const int32x4_t prev = vld1q_s32(src + j);
      vst1q_s32(out.data() + j, vminq_s32(vld1q_s32(out.data() + j), vaddq_s32(prev, vcost)));
    }
    for (std::size_t j = vec_end; j < n; ++j) out[j] = std::min(out[j], src[j] + cost);
  }
}

void or_shift_neon(std::span<std::uint8_t> bits, std::size_t shift) {
  if (shift == 0 || shift >= bits.size()) return;
  const std::size_t limit = bits.size() - shift;
  std::size_t s = 0;
  if (shift >= kBytes) {
    std::uint8_t* base = bits.data();
    for (; s + kBytes <= limit; s += kBytes) {
      const uint8x16_t src = vld1q_u8(base + s);
      vst1q_u8(base + s + shift, vorrq_u8(vld1q_u8(base + s + shift), src));
    }
  }
  for (; s < limit; ++s) {
    bits[s + shift] |= bits[s];
  }
}

}  // namespace

const KernelSet& neon_kernels() {
  static const KernelSet set{Isa::neon, &min_plus_gather_neon, &or_shift_neon};
  return set;
}

}  // namespace quadsg::kernels
