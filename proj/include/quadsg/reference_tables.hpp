#pragma once
// Reference tables reproduced by the searches and certificate checks.

#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace quadsg::tables {

/// Coefficients c_i of y_n = sum c_i y_i, keyed by generator index.
using Decomposition = std::map<std::int64_t, std::int64_t>;

/// m a + n b = value = y_{y_index} in S(a, 1) with m = mu(n) - 1.
struct MuExceptionRow {
  std::int64_t a;
  std::int64_t n;
  std::int64_t mu_n;
  std::int64_t m;
  std::int64_t value;
  std::int64_t y_index;
};

/// (a, n) hit by the embedding search; y_n decomposes in S(a, 1).
struct EmbeddingEqRow {
  std::int64_t a;
  std::int64_t n;
  Decomposition decomposition;
};

/// (a, n) with C(n,2) mod a exceptional. A missing decomposition marks the
/// one extra minimal generator of that pair.
struct ExceptionalGeneratorRow {
  std::int64_t a;
  std::int64_t n;
  std::optional<Decomposition> decomposition;
};

std::span<const MuExceptionRow> mu_exception_rows();           // 8 rows
std::span<const EmbeddingEqRow> embedding_eq_rows();           // 30 rows
std::span<const ExceptionalGeneratorRow> exceptional_generator_rows();  // 18 rows

}  // namespace quadsg::tables
