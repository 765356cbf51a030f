#include "quadsg/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quadsg/errors.hpp"

namespace quadsg {

AperySet apery_closed(const QuadraticSemigroup& s, const MuTable& table) {
  if (s.trivial()) return {1, {0}};
  const std::int64_t a = s.a();
  AperySet ap{a, std::vector<std::int64_t>(static_cast<std::size_t>(a), 0)};
  for (std::int64_t n = 0; n < a; ++n) {
    const std::int64_t w = project(mu_ab_closed(s, n, table), n, s);
    ap.elements[static_cast<std::size_t>(floor_mod(checked_mul(n, s.b()), a))] = w;
  }
  return ap;
}

AperySet apery_oracle(Membership& oracle) {
  const QuadraticSemigroup& s = oracle.semigroup();
  if (s.trivial()) return {1, {0}};
  const std::int64_t a = s.a();
  AperySet ap{a, std::vector<std::int64_t>(static_cast<std::size_t>(a), -1)};
  std::int64_t found = 0;
  const MembershipTable& t = oracle.table();
  for (std::int64_t x = 0; x <= t.bound && found < a; ++x) {
    if (!t.reachable[static_cast<std::size_t>(x)]) continue;
    auto& slot = ap.elements[static_cast<std::size_t>(x % a)];
    if (slot < 0) {
      slot = x;
      ++found;
    }
  }
  if (found != a) throw DomainError("apery_oracle: membership table does not cover every residue");
  return ap;
}

AperySet apery_oracle(const QuadraticSemigroup& s) {
  Membership oracle(s);
  return apery_oracle(oracle);
}

std::int64_t frobenius(const AperySet& apery) {
  return *std::max_element(apery.elements.begin(), apery.elements.end()) - apery.modulus;
}

std::int64_t frobenius(const QuadraticSemigroup& s, const MuTable& table) {
  return frobenius(apery_closed(s, table));
}

std::int64_t frobenius_oracle(Membership& oracle) {
  const MembershipTable& t = oracle.table();
  for (std::int64_t x = t.bound; x >= 0; --x) {
    if (!t.reachable[static_cast<std::size_t>(x)]) return x;
  }
  return -1;
}

std::int64_t genus(const QuadraticSemigroup& s, const MuTable& table) {
  if (s.trivial()) return 0;
  const std::int64_t a = s.a();
  std::int64_t sum = 0;
  for (std::int64_t n = 0; n < a; ++n) sum = checked_add(sum, mu_ab_closed(s, n, table));
  // gcd(a, b) = 1 rules out a and b both even, so (a-1)(b-1) is even.
  return checked_add(sum, checked_mul(a - 1, s.b() - 1) / 2);
}

std::int64_t genus(const AperySet& apery) {
  const std::int64_t m = apery.modulus;
  std::int64_t sum = 0;
  for (std::int64_t w : apery.elements) sum = checked_add(sum, w);
  // g = (2 sum - m(m-1)) / (2m)
  const std::int64_t num = checked_sub(checked_mul(2, sum), checked_mul(m, m - 1));
  if (num % (2 * m) != 0) throw DomainError("genus: Apery sum is not consistent with a numerical semigroup");
  return num / (2 * m);
}

std::int64_t genus_oracle(Membership& oracle) {
  const MembershipTable& t = oracle.table();
  return std::count(t.reachable.begin(), t.reachable.end(), std::uint8_t{0});
}

namespace {

void require_bound_domain(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 1) throw DomainError("bounds are stated for a >= 2 and b >= 1");
}

double shared_term(std::int64_t a, std::int64_t b) {
  return static_cast<double>(a) * static_cast<double>(b) - static_cast<double>(a) - static_cast<double>(b);
}

double genus_offset(std::int64_t a, std::int64_t b) {
  return static_cast<double>((a - 1) * (b - 1)) / 2.0;
}

}  // namespace

double frobenius_lower_formula(std::int64_t a, std::int64_t b) {
  require_bound_domain(a, b);
  const auto ad = static_cast<double>(a);
  return ad / 2.0 * (1.0 + std::sqrt(8.0 * ad - 7.0)) + shared_term(a, b);
}

double frobenius_upper_formula(std::int64_t a, std::int64_t b) {
  require_bound_domain(a, b);
  const auto ad = static_cast<double>(a);
  return ad / 2.0 * (3.0 + std::sqrt(24.0 * ad - 15.0)) + shared_term(a, b);
}

double genus_lower_formula(std::int64_t a, std::int64_t b) {
  require_bound_domain(a, b);
  const auto ad = static_cast<double>(a);
  return (std::pow(8.0 * ad - 7.0, 1.5) + 12.0 * ad - 13.0) / 24.0 + genus_offset(a, b);
}

double genus_upper_formula(std::int64_t a, std::int64_t b) {
  require_bound_domain(a, b);
  const auto ad = static_cast<double>(a);
  return (std::sqrt(3.0) * std::pow(8.0 * ad + 3.0, 1.5) + 36.0 * ad - 36.0 - 11.0 * std::sqrt(33.0)) / 24.0 +
         genus_offset(a, b);
}

BoundPair frobenius_bounds(std::int64_t a, std::int64_t b) {
  return {frobenius_lower_formula(a, b), frobenius_upper_formula(a, b), !is_exceptional_pair(a, b)};
}

BoundPair genus_bounds(std::int64_t a, std::int64_t b) {
  return {genus_lower_formula(a, b), genus_upper_formula(a, b), !is_exceptional_pair(a, b)};
}

InvariantSummary summarize(const QuadraticSemigroup& s, const MuTable& table) {
  InvariantSummary out{s.a(), s.b(), s.trivial(), is_exceptional_pair(s.a(), s.b()), -1, 0, std::nullopt,
                       std::nullopt};
  if (s.trivial()) return out;
  out.frobenius = frobenius(s, table);
  out.genus = genus(s, table);
  out.frobenius_bounds = frobenius_bounds(s.a(), s.b());
  out.genus_bounds = genus_bounds(s.a(), s.b());
  return out;
}

}  // namespace quadsg
