#pragma once
// Exhaustive searches behind the exceptional cases, the numeric analysis of
// the bound-gap function g(a), and replay of the reference certificates.

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quadsg/mu.hpp"

namespace quadsg {

enum class SearchId { mu_drop, embedding_eq };

std::string_view search_name(SearchId id);

/// 2 <= mu(n) - mu(n + a) <= 4 with 3 <= n < a.
struct MuDropHit {
  std::int64_t a;
  std::int64_t n;
  std::int64_t mu_n;
  std::int64_t mu_n_plus_a;
  std::int64_t drop;

  friend auto operator<=>(const MuDropHit&, const MuDropHit&) = default;
};

/// n + 1 = mu(C(n,2) mod a).
struct EmbeddingEqHit {
  std::int64_t a;
  std::int64_t n;
  std::int64_t binom;
  std::int64_t residue;
  std::int64_t mu_residue;

  friend auto operator<=>(const EmbeddingEqHit&, const EmbeddingEqHit&) = default;
};

template <typename Hit>
struct SearchReport {
  SearchId id;
  std::int64_t a_max;
  bool raw = false;
  std::vector<Hit> hits;  // sorted by (a, n)
  std::chrono::duration<double> elapsed{};
};

/// 0 means one worker per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Needs table.n_max() >= 2 a_max - 1. Requires a_max >= 4.
SearchReport<MuDropHit> search_mu_drop(std::int64_t a_max, const MuTable& table, unsigned threads = 1);
SearchReport<MuDropHit> search_mu_drop(std::int64_t a_max, unsigned threads = 1);

/// Default: 1 <= n <= a <= a_max with a < C(n,2) <= C(a,2), a not dividing
/// C(n,2). `raw` drops the side constraints and keeps only the equation.
/// Needs table.n_max() >= a_max - 1. Requires a_max >= 2.
SearchReport<EmbeddingEqHit> search_embedding_eq(std::int64_t a_max, bool raw, const MuTable& table,
                                                 unsigned threads = 1);
SearchReport<EmbeddingEqHit> search_embedding_eq(std::int64_t a_max, bool raw = false, unsigned threads = 1);

/// g(a) = f(a-1) - f(2a-1) + 3 f((f(a-1) - 2)/3), defined for a >= 2.
double g_of(double a);

/// Bisection for g(x) = target on [lo, hi]; throws DomainError unless
/// g(lo) - target and g(hi) - target have opposite signs (or one is zero).
double g_solve(double target, double lo, double hi);

/// Golden-section search for the interior maximum of g on [lo, hi].
/// Returns (argmax, g(argmax)).
std::pair<double, double> g_local_max(double lo, double hi);

struct GAnalysis {
  double local_max_location;
  double local_max_value;
  double root_at_2;
  double root_at_1;
};

/// Peak on (10, 200), g = 2 on (100, 600), g = 1 on (100, 1000).
GAnalysis analyze_g();

struct Certificate {
  std::string table;
  std::string row;
  bool pass;
  std::string detail;
};

/// Each exceptional (a, n): m a + n = y_k, that value is in S(a, 1), and
/// (m - 1) a + n is not.
std::vector<Certificate> mu_exception_certificates();

/// The 18 rows over the exceptional pairs: listed decompositions check out,
/// and each blank row's y_n is confirmed minimal by the oracle. Also checks
/// that the row set equals the (a, n) list recomputed from the exceptional
/// residues.
std::vector<Certificate> exceptional_generator_certificates();

/// Both of the above.
std::vector<Certificate> exception_certificates();

/// The 30 decompositions listed for the embedding search hits.
std::vector<Certificate> embedding_eq_certificates();

/// (a, n) pairs with a < C(n,2) <= C(a,2) whose residue C(n,2) mod a is the
/// exceptional n of (a, 1, n).
std::vector<std::pair<std::int64_t, std::int64_t>> exceptional_generator_candidates();

}  // namespace quadsg
