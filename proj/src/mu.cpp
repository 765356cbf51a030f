#include "quadsg/mu.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "quadsg/errors.hpp"

namespace quadsg {

namespace {

// Upper limit on table entries (4 GiB of int32).
constexpr std::int64_t kMaxTableEntries = std::int64_t{1} << 30;
constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::max() / 2;
// Values computed per pass. Each gathered index then reads one contiguous
// 1 KiB run of the finished prefix.
constexpr std::size_t kBlock = 256;
// First index whose triangular number reaches past a whole block.
constexpr std::int64_t kFirstGatherIndex = 24;
static_assert(kFirstGatherIndex * (kFirstGatherIndex - 1) / 2 >= static_cast<std::int64_t>(kBlock));

void check_table_size(std::int64_t n_max) {
  if (n_max < 0) throw DomainError("mu table size must be non-negative");
  if (n_max >= kMaxTableEntries) {
    throw CapacityError("mu table of " + std::to_string(n_max) + " entries exceeds the memory budget");
  }
}

}  // namespace

std::int64_t triangular(std::int64_t i) {
  if (i < 0) throw DomainError("triangular: index must be non-negative");
  // Halve the even factor first so only the true result has to fit.
  return (i % 2 == 0) ? checked_mul(i / 2, i - 1) : checked_mul(i, (i - 1) / 2);
}

double f_of(double x) {
  if (!(x >= 0.0)) throw DomainError("f: argument must be >= 0");
  return (1.0 + std::sqrt(8.0 * x + 1.0)) / 2.0;
}

std::int64_t triangular_root(std::int64_t n) {
  if (n < 0) throw DomainError("triangular_root: argument must be >= 0");
  auto i = static_cast<std::int64_t>(f_of(static_cast<double>(n)));
  i = std::max<std::int64_t>(i, 1);
  while (triangular(i) > n) --i;
  while (triangular(i + 1) <= n) ++i;
  return i;
}

MuTable::MuTable(std::int64_t n_max, Method method) {
  if (method == Method::recursion) {
    build_recursion(n_max);
  } else {
    build_blocked(n_max, kernels::active());
  }
}

MuTable::MuTable(std::int64_t n_max, const kernels::KernelSet& kernels) { build_blocked(n_max, kernels); }

// The i = 1 term (C(1,2) = 0) would give mu(n) + 1 and can never be the
// minimum, so every loop starts at i = 2.
void MuTable::build_recursion(std::int64_t n_max) {
  check_table_size(n_max);
  values_.assign(static_cast<std::size_t>(n_max) + 1, kUnset);
  values_[0] = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int32_t best = kUnset;
    for (std::int64_t i = 2;; ++i) {
      const std::int64_t tri = i * (i - 1) / 2;
      if (tri > n) break;
      best = std::min(best, values_[static_cast<std::size_t>(n - tri)] + static_cast<std::int32_t>(i));
    }
    values_[static_cast<std::size_t>(n)] = best;
  }
}

void MuTable::build_blocked(std::int64_t n_max, const kernels::KernelSet& kernels) {
  check_table_size(n_max);
  const auto size = static_cast<std::size_t>(n_max) + 1;
  values_.assign(size, kUnset);
  values_[0] = 0;

  auto finish = [this](std::int64_t n, std::int32_t best, std::int64_t from, std::int64_t to) {
    for (std::int64_t i = from; i <= to; ++i) {
      const std::int64_t tri = i * (i - 1) / 2;
      if (tri > n) break;
      best = std::min(best, values_[static_cast<std::size_t>(n - tri)] + static_cast<std::int32_t>(i));
    }
    values_[static_cast<std::size_t>(n)] = best;
  };

  // Short prefix one value at a time, so every block below has all gather
  // indices available.
  constexpr std::int64_t kPrefix = 64;
  const std::int64_t prefix_end = std::min<std::int64_t>(n_max, kPrefix - 1);
  for (std::int64_t n = 1; n <= prefix_end; ++n) {
    finish(n, kUnset, 2, n + 1);
  }

  std::array<std::int32_t, kBlock> acc{};
  for (std::int64_t start = kPrefix; start <= n_max; start += static_cast<std::int64_t>(kBlock)) {
    const std::size_t lanes = std::min<std::size_t>(kBlock, static_cast<std::size_t>(n_max - start + 1));
    std::span<std::int32_t> out(acc.data(), lanes);
    std::fill(out.begin(), out.end(), kUnset);

    const std::int64_t gather_last = triangular_root(start);
    if (gather_last >= kFirstGatherIndex) {
      // Index i can only win for some lane if i + f(start - C(i,2)) stays
      // under the block's upper bound. That expression is concave in i, so
      // the useful indices form a prefix and a suffix of the gather window.
      const std::int64_t end = start + static_cast<std::int64_t>(lanes) - 1;
      const double cap = std::floor(std::min(gauss_bound(end), combined_bound(end)) + 1e-9) + 1e-6;
      auto useful = [start, cap](std::int64_t i) {
        const std::int64_t rest = start - i * (i - 1) / 2;
        return static_cast<double>(i) + (rest == 0 ? 0.0 : f_of(static_cast<double>(rest))) <= cap;
      };
      std::int64_t lo_end = kFirstGatherIndex;
      while (lo_end <= gather_last && useful(lo_end)) ++lo_end;
      std::int64_t hi_begin = gather_last;
      while (hi_begin >= lo_end && useful(hi_begin)) --hi_begin;
      if (lo_end > kFirstGatherIndex) {
        kernels.min_plus_gather(values_.data(), static_cast<std::size_t>(start), kFirstGatherIndex, lo_end - 1, out);
      }
      if (hi_begin < gather_last) {
        kernels.min_plus_gather(values_.data(), static_cast<std::size_t>(start), hi_begin + 1, gather_last, out);
      }
    }
    // Indices below the gather window read inside this block; indices above it
    // only become admissible for the later lanes.
    for (std::size_t j = 0; j < lanes; ++j) {
      const std::int64_t n = start + static_cast<std::int64_t>(j);
      std::int32_t best = out[j];
      for (std::int64_t i = 2; i < kFirstGatherIndex && i * (i - 1) / 2 <= n; ++i) {
        best = std::min(best, values_[static_cast<std::size_t>(n - i * (i - 1) / 2)] + static_cast<std::int32_t>(i));
      }
      finish(n, best, std::max(gather_last + 1, kFirstGatherIndex), n + 1);
    }
  }
}

MuTable MuTable::from_values(std::span<const std::int64_t> values) {
  if (values.empty()) throw DomainError("mu table must contain mu(0)");
  check_table_size(static_cast<std::int64_t>(values.size()) - 1);
  if (values[0] != 0) throw DomainError("mu table: mu(0) must be 0");
  MuTable t;
  t.values_.reserve(values.size());
  for (std::int64_t v : values) {
    if (v < 0 || v >= kUnset) throw DomainError("mu table: value out of range");
    t.values_.push_back(static_cast<std::int32_t>(v));
  }
  const std::int64_t n_max = t.n_max();
  for (std::int64_t i = 2; triangular(i) <= n_max; ++i) {
    if (t[triangular(i)] != i) throw DomainError("mu table: mu(C(i,2)) != i at i = " + std::to_string(i));
  }
  return t;
}

std::int64_t MuTable::at(std::int64_t n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("mu(" + std::to_string(n) + ") outside table 0.." + std::to_string(n_max()));
  }
  return (*this)[n];
}

MuTable MuTable::extended_to(std::int64_t n_max) const {
  if (n_max <= this->n_max()) return *this;
  return MuTable(n_max);
}

std::int64_t mu(std::int64_t n, const MuTable& table) { return table.at(n); }

namespace {

// Depth-first over non-increasing part indices, so each multiset is visited
// once. The only pruning is exact: a branch is cut when even the cheapest
// fractional completion (every remaining unit at the rate 2/(i-1) of the
// largest allowed index) cannot beat the best found.
struct PartitionSearch {
  std::int64_t best;

  void run(std::int64_t remaining, std::int64_t max_index, std::int64_t weight) {
    if (remaining == 0) {
      best = std::min(best, weight);
      return;
    }
    if (weight >= best) return;
    const std::int64_t rate_den = max_index - 1;
    const std::int64_t floor_cost = (2 * remaining + rate_den - 1) / rate_den;
    if (weight + floor_cost >= best) return;
    for (std::int64_t i = max_index; i >= 2; --i) {
      const std::int64_t part = i * (i - 1) / 2;
      if (part > remaining) continue;
      run(remaining - part, i, weight + i);
    }
  }
};

}  // namespace

std::int64_t mu_oracle(std::int64_t n) {
  if (n < 0) throw DomainError("mu_oracle: n must be >= 0");
  if (n > kMuOracleLimit) {
    throw DomainError("mu_oracle: n = " + std::to_string(n) + " exceeds the oracle limit " +
                      std::to_string(kMuOracleLimit));
  }
  if (n == 0) return 0;
  std::int64_t top = 2;
  while ((top + 1) * top / 2 <= n) ++top;
  // n ones (index 2 each) is always a valid partition.
  PartitionSearch search{2 * n + 1};
  search.run(n, top, 0);
  return search.best;
}

double lower_bound(std::int64_t n) {
  if (n < 1) throw DomainError("lower bound is stated for n >= 1");
  return f_of(static_cast<double>(n));
}

double gauss_bound(std::int64_t n) {
  if (n < 0) throw DomainError("gauss bound: n must be >= 0");
  return 3.0 * f_of(static_cast<double>(n) / 3.0);
}

double combined_bound(std::int64_t n) {
  if (n < 1) throw DomainError("combined bound is stated for n >= 1");
  const double fn = f_of(static_cast<double>(n));
  return fn + 3.0 * f_of((fn - 2.0) / 3.0);
}

std::vector<BoundProfile> bound_profiles(std::int64_t n_max, const MuTable& table) {
  if (n_max < 1) throw DomainError("bounds: n_max must be >= 1");
  std::vector<BoundProfile> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    rows.push_back({n, table.at(n), lower_bound(n), gauss_bound(n), combined_bound(n)});
  }
  return rows;
}

void write_bounds_csv(std::ostream& out, std::span<const BoundProfile> rows) {
  out << "n,mu,lower,gauss,combined\n";
  char buf[128];
  for (const BoundProfile& r : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%.12g,%.12g,%.12g\n", static_cast<long long>(r.n),
                  static_cast<long long>(r.mu), r.lower, r.gauss, r.combined);
    out << buf;
  }
}

}  // namespace quadsg
