#pragma once
// Data-parallel inner loops shared by the mu table builder and the
// membership DP. Every kernel has a portable scalar reference; vector
// variants are picked at runtime and must match it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace quadsg::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Function table for one instruction set.
struct KernelSet {
  Isa isa;

  /// For j in [0, out.size()) and every index i in [first_index, last_index]:
  ///   out[j] = min(out[j], values[start + j - C(i,2)] + i).
  /// Requires C(first_index, 2) >= out.size() and C(last_index, 2) <= start,
  /// so every read lands in the finished prefix values[0, start).
  void (*min_plus_gather)(const std::int32_t* values, std::size_t start, std::int64_t first_index,
                          std::int64_t last_index, std::span<std::int32_t> out);

  /// Forward reachability closure under one generator:
  ///   for s = 0 .. size - shift - 1 (ascending): bits[s + shift] |= bits[s].
  /// Ascending order means a value can be reused any number of times.
  void (*or_shift)(std::span<std::uint8_t> bits, std::size_t shift);
};

const KernelSet& scalar_kernels();

/// Kernel set for `isa`, or nullptr when not compiled in or not supported
/// by the running CPU.
const KernelSet* kernels_for(Isa isa);

/// Best available set. QUADSG_ISA=scalar|avx2|neon in the environment
/// restricts the choice (an unavailable request falls back to scalar).
const KernelSet& active();

/// Every set usable on this machine, scalar first.
std::vector<const KernelSet*> available();

}  // namespace quadsg::kernels
