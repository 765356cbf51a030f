#include <algorithm>

#include "quadsg/kernels.hpp"

namespace quadsg::kernels {
namespace {

void min_plus_gather_scalar(const std::int32_t* values, std::size_t start, std::int64_t first_index,
                            std::int64_t last_index, std::span<std::int32_t> out) {
  for (std::int64_t i = first_index; i <= last_index; ++i) {
    const auto tri = static_cast<std::size_t>(i * (i - 1) / 2);
    const std::int32_t* src = values + (start - tri);
    const auto cost = static_cast<std::int32_t>(i);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = std::min(out[j], src[j] + cost);
    }
  }
}

void or_shift_scalar(std::span<std::uint8_t> bits, std::size_t shift) {
  if (shift == 0 || shift >= bits.size()) return;
  const std::size_t limit = bits.size() - shift;
  for (std::size_t s = 0; s < limit; ++s) {
    bits[s + shift] |= bits[s];
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{Isa::scalar, &min_plus_gather_scalar, &or_shift_scalar};
  return set;
}

}  // namespace quadsg::kernels
