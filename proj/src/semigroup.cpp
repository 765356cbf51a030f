#include "quadsg/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quadsg/errors.hpp"
#include "quadsg/invariants.hpp"

namespace quadsg {

std::int64_t QuadraticSemigroup::generator(std::int64_t n) const {
  if (n < 0) throw DomainError("generator index must be >= 0");
  return checked_add(checked_mul(n, a_), checked_mul(triangular(n), b_));
}

QuadraticSemigroup make_semigroup(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw DomainError("a and b must be non-negative");
  if (a == 0 && b == 0) throw DomainError("S(0,0) = {0} is not a numerical semigroup");
  if (std::gcd(a, b) != 1) {
    throw NotANumericalSemigroup("gcd(a,b) must be 1 (gcd(" + std::to_string(a) + "," + std::to_string(b) +
                                 ") = " + std::to_string(std::gcd(a, b)) + ")");
  }
  return QuadraticSemigroup(a, b, a <= 1 || b == 0);
}

bool is_exceptional_triple(std::int64_t a, std::int64_t b, std::int64_t n) {
  return std::any_of(kExceptionTriples.begin(), kExceptionTriples.end(),
                     [&](const ExceptionTriple& t) { return t.a == a && t.b == b && t.n == n; });
}

bool is_exceptional_pair(std::int64_t a, std::int64_t b) {
  return std::any_of(kExceptionTriples.begin(), kExceptionTriples.end(),
                     [&](const ExceptionTriple& t) { return t.a == a && t.b == b; });
}

MembershipTable membership_table(const QuadraticSemigroup& s, std::int64_t bound,
                                 const kernels::KernelSet& kernels) {
  if (bound < 0) throw DomainError("membership bound must be >= 0");
  if (bound > kMaxMembershipBound) {
    throw CapacityError("membership table bound " + std::to_string(bound) + " exceeds the memory budget");
  }
  MembershipTable t;
  t.bound = bound;
  t.reachable.assign(static_cast<std::size_t>(bound) + 1, 0);
  t.reachable[0] = 1;
  // y_n is strictly increasing once it is positive.
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t y = s.generator(n);
    if (y > bound) break;
    if (y == 0) continue;
    kernels.or_shift(t.reachable, static_cast<std::size_t>(y));
  }
  return t;
}

MembershipTable membership_table(const QuadraticSemigroup& s, std::int64_t bound) {
  return membership_table(s, bound, kernels::active());
}

std::int64_t default_membership_bound(const QuadraticSemigroup& s) {
  if (s.trivial()) return 2;
  const double upper = frobenius_upper_formula(s.a(), s.b());
  return checked_add(static_cast<std::int64_t>(std::ceil(upper)), s.a() + 1);
}

Membership::Membership(QuadraticSemigroup s) : s_(s) {
  std::int64_t bound = default_membership_bound(s_);
  table_ = membership_table(s_, bound);
  while (!saturated()) {
    bound = checked_mul(bound, 2);
    table_ = membership_table(s_, bound);
  }
}

bool Membership::saturated() const {
  const std::int64_t run = s_.trivial() ? 1 : s_.a();
  if (table_.bound + 1 < run) return false;
  const auto begin = table_.reachable.end() - run;
  return std::all_of(begin, table_.reachable.end(), [](std::uint8_t v) { return v != 0; });
}

void Membership::ensure(std::int64_t bound) {
  if (bound <= table_.bound) return;
  table_ = membership_table(s_, std::max(bound, checked_mul(table_.bound, 2)));
}

bool Membership::contains(std::int64_t x) {
  if (x < 0) return false;
  if (x <= table_.bound) return table_.reachable[static_cast<std::size_t>(x)] != 0;
  // With the top a entries present, adding copies of a = y_1 covers everything above.
  if (saturated()) return true;
  ensure(x);
  return table_.contains(x);
}

bool lift_contains(std::int64_t m, std::int64_t n, const MuTable& table) {
  if (m < 0 || n < 0) return false;
  return table.at(n) <= m;
}

std::int64_t project(std::int64_t m, std::int64_t n, const QuadraticSemigroup& s) {
  return checked_add(checked_mul(m, s.a()), checked_mul(n, s.b()));
}

namespace {

void require_nontrivial(const QuadraticSemigroup& s, const char* what) {
  if (s.trivial()) throw DomainError(std::string(what) + " requires a nontrivial semigroup (a >= 2, b >= 1)");
}

}  // namespace

std::int64_t mu_ab_oracle(Membership& oracle, std::int64_t n) {
  const QuadraticSemigroup& s = oracle.semigroup();
  require_nontrivial(s, "mu_ab_oracle");
  const std::int64_t nb = checked_mul(n, s.b());
  std::int64_t m = ceil_div(-nb, s.a());
  while (!oracle.contains(checked_add(checked_mul(m, s.a()), nb))) ++m;
  return m;
}

std::int64_t mu_ab_oracle(const QuadraticSemigroup& s, std::int64_t n) {
  Membership oracle(s);
  return mu_ab_oracle(oracle, n);
}

std::int64_t mu_ab_shift(Membership& oracle, std::int64_t n, std::int64_t i) {
  const QuadraticSemigroup& s = oracle.semigroup();
  require_nontrivial(s, "mu_ab_shift");
  const std::int64_t total = checked_add(n, checked_mul(i, s.a()));
  const std::int64_t r = floor_mod(total, s.a());
  const std::int64_t q = floor_div(total, s.a());
  return checked_sub(mu_ab_oracle(oracle, r), checked_mul(q, s.b()));
}

std::int64_t mu_ab_closed(const QuadraticSemigroup& s, std::int64_t n, const MuTable& table) {
  require_nontrivial(s, "mu_ab_closed");
  if (n < 0 || n >= s.a()) {
    throw DomainError("mu_ab_closed needs 0 <= n < a; reduce with the shift identity first");
  }
  const std::int64_t base = table.at(n);
  return is_exceptional_triple(s.a(), s.b(), n) ? base - 1 : base;
}

std::int64_t mu_ab(const QuadraticSemigroup& s, std::int64_t n, const MuTable& table) {
  require_nontrivial(s, "mu_ab");
  const std::int64_t r = floor_mod(n, s.a());
  const std::int64_t q = floor_div(n, s.a());
  return checked_sub(mu_ab_closed(s, r, table), checked_mul(q, s.b()));
}

}  // namespace quadsg
