#pragma once
// Apery set, Frobenius number and genus of S(a, b), each available through
// the mu closed form and through brute-force membership tables.

#include <cstdint>
#include <optional>
#include <vector>

#include "quadsg/mu.hpp"
#include "quadsg/semigroup.hpp"

namespace quadsg {

/// Ap(S, modulus): elements[k] is the least member of S congruent to k.
struct AperySet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> elements;

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Element for residue n b mod a is mu_{a,b}(n) a + n b, with mu_{a,b} taken
/// from mu_ab_closed. Trivial S gives {0} modulo 1.
AperySet apery_closed(const QuadraticSemigroup& s, const MuTable& table);

/// Least table member in each residue class.
AperySet apery_oracle(Membership& oracle);
AperySet apery_oracle(const QuadraticSemigroup& s);

/// max Ap - a. N0 has Frobenius number -1.
std::int64_t frobenius(const QuadraticSemigroup& s, const MuTable& table);
std::int64_t frobenius(const AperySet& apery);
/// Largest gap in the membership table.
std::int64_t frobenius_oracle(Membership& oracle);

/// sum_{n<a} mu_{a,b}(n) + (a-1)(b-1)/2, all in integers.
std::int64_t genus(const QuadraticSemigroup& s, const MuTable& table);
/// (sum Ap)/m - (m-1)/2, checked for exact divisibility.
std::int64_t genus(const AperySet& apery);
/// Number of gaps in the membership table.
std::int64_t genus_oracle(Membership& oracle);

struct BoundPair {
  double lower;
  double upper;
  /// False on the eight exceptional pairs, where the bounds are not proved.
  bool asserted;
};

double frobenius_lower_formula(std::int64_t a, std::int64_t b);
double frobenius_upper_formula(std::int64_t a, std::int64_t b);
double genus_lower_formula(std::int64_t a, std::int64_t b);
double genus_upper_formula(std::int64_t a, std::int64_t b);

/// Requires a >= 2, b >= 1.
BoundPair frobenius_bounds(std::int64_t a, std::int64_t b);
BoundPair genus_bounds(std::int64_t a, std::int64_t b);

struct InvariantSummary {
  std::int64_t a;
  std::int64_t b;
  bool trivial;
  bool exceptional;
  std::int64_t frobenius;
  std::int64_t genus;
  std::optional<BoundPair> frobenius_bounds;
  std::optional<BoundPair> genus_bounds;
};

InvariantSummary summarize(const QuadraticSemigroup& s, const MuTable& table);

/// Slack used when comparing an exact integer to a real bound.
inline constexpr double kBoundSlack = 1e-9;

}  // namespace quadsg
