#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "quadsg/semigroup.hpp"

namespace quadsg {

struct MinimalGeneratorSet {
  std::int64_t a;
  std::int64_t b;
  std::vector<std::int64_t> indices;   // ascending n with y_n minimal
  std::vector<std::int64_t> elements;  // y_n for each index

  friend bool operator==(const MinimalGeneratorSet&, const MinimalGeneratorSet&) = default;
};

/// For each exceptional pair, the one index n with C(n,2) > a whose
/// generator is still minimal.
struct ExceptionalGenerator {
  std::int64_t a;
  std::int64_t b;
  std::int64_t n;
};

inline constexpr std::array<ExceptionalGenerator, 8> kExceptionalGenerators{{
    {29, 1, 11},
    {45, 1, 13},
    {47, 1, 14},
    {50, 1, 14},
    {55, 1, 15},
    {67, 1, 16},
    {73, 1, 17},
    {79, 1, 18},
}};

/// Largest n >= 1 with C(n, 2) < a; equals ceil(f(a)) - 1. Exact integers.
std::int64_t count_small_generators(std::int64_t a);

/// Decides minimality of y_n from n, a and b alone:
///   C(n,2) < a            -> minimal
///   n > a or a | C(n,2)   -> not minimal (covers C(n,2) = a)
///   C(n,2) > a            -> minimal only for an exceptional pair's extra index
/// Requires nontrivial S and n >= 1.
bool is_minimal_closed(const QuadraticSemigroup& s, std::int64_t n);

/// Closed-form minimal generating set: the indices accepted by is_minimal_closed.
MinimalGeneratorSet minimal_generators_closed(const QuadraticSemigroup& s);

/// Walks n = 1 .. a + extra_window and keeps y_n when it is not reachable
/// from the generators already kept. Uses only a coin-problem DP.
MinimalGeneratorSet minimal_generators_oracle(const QuadraticSemigroup& s, std::int64_t extra_window = 5);
MinimalGeneratorSet minimal_generators_oracle(const QuadraticSemigroup& s, std::int64_t extra_window,
                                              const kernels::KernelSet& kernels);

/// ceil(f(a)) on the eight exceptional pairs, ceil(f(a)) - 1 otherwise;
/// 1 for the trivial semigroup N0.
std::int64_t embedding_dimension(std::int64_t a, std::int64_t b);

/// sum c_i y_i == y_n, exactly. Every index must be below n.
bool verify_decomposition(const QuadraticSemigroup& s, std::int64_t n,
                          const std::map<std::int64_t, std::int64_t>& coefficients);

}  // namespace quadsg
