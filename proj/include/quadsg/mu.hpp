#pragma once
// The mu sequence: mu(n) is the least index-sum over all ways of writing n
// as a sum of triangular numbers C(i, 2), i >= 2. Equivalently the least m
// with (m, n) in the monoid T generated by z_i = (i, C(i, 2)).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "quadsg/kernels.hpp"

namespace quadsg {

/// C(i, 2) = i(i - 1)/2. Throws OverflowError rather than wrapping.
std::int64_t triangular(std::int64_t i);

/// f(x) = (1 + sqrt(8x + 1))/2, the inverse of C(., 2) on the positive integers.
double f_of(double x);

/// Largest i >= 1 with C(i, 2) <= n, found in exact integer arithmetic.
std::int64_t triangular_root(std::int64_t n);

/// Memoized mu(0..n_max). Immutable once built; safe to share between threads.
///
/// Values are held as 32-bit integers so eight fit in one AVX2 register.
/// mu(n) <= 3 f(n/3) keeps them far below 2^31 for any table that fits in memory;
/// the public accessors widen to 64 bits.
class MuTable {
 public:
  enum class Method {
    /// Literal recursion mu(n) = min_i mu(n - C(i,2)) + i, one n at a time.
    recursion,
    /// Same recursion evaluated 256 n at a time through the kernel set,
    /// skipping indices that the lower bound f and the upper bounds below
    /// rule out for the whole block.
    blocked,
  };

  explicit MuTable(std::int64_t n_max, Method method = Method::blocked);
  MuTable(std::int64_t n_max, const kernels::KernelSet& kernels);

  /// Adopts externally supplied values (e.g. a memo file). Performs structural
  /// checks only: size, mu(0) = 0, non-negativity, and mu(C(i,2)) = i.
  static MuTable from_values(std::span<const std::int64_t> values);

  std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  std::int64_t operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }
  std::int64_t at(std::int64_t n) const;
  std::span<const std::int32_t> raw() const { return values_; }

  /// Returns *this when large enough, else a freshly built wider table.
  MuTable extended_to(std::int64_t n_max) const;

  friend bool operator==(const MuTable&, const MuTable&) = default;

 private:
  MuTable() = default;
  void build_recursion(std::int64_t n_max);
  void build_blocked(std::int64_t n_max, const kernels::KernelSet& kernels);

  std::vector<std::int32_t> values_;
};

/// mu(n) from `table`; throws std::out_of_range past table.n_max().
std::int64_t mu(std::int64_t n, const MuTable& table);

/// Exhaustive depth-first search over multisets of triangular parts. Shares no
/// code with MuTable. Refuses n > kMuOracleLimit.
inline constexpr std::int64_t kMuOracleLimit = 10'000;
std::int64_t mu_oracle(std::int64_t n);

/// mu(n) >= f(n), n >= 1.
double lower_bound(std::int64_t n);
/// mu(n) <= 3 f(n/3), from the three-triangular-numbers theorem.
double gauss_bound(std::int64_t n);
/// mu(n) <= f(n) + 3 f((f(n) - 2)/3), n >= 1.
double combined_bound(std::int64_t n);

struct BoundProfile {
  std::int64_t n;
  std::int64_t mu;
  double lower;
  double gauss;
  double combined;
};

/// One row per n = 1..n_max. `table` must cover n_max.
std::vector<BoundProfile> bound_profiles(std::int64_t n_max, const MuTable& table);

/// CSV with header `n,mu,lower,gauss,combined`.
void write_bounds_csv(std::ostream& out, std::span<const BoundProfile> rows);

}  // namespace quadsg
