#pragma once
// S(a, b) = < y_n = n a + C(n, 2) b : n >= 0 >, the numerical semigroup
// generated by the quadratic sequence with first difference a + b n.

#include <array>
#include <cstdint>
#include <vector>

#include "quadsg/mu.hpp"

namespace quadsg {

class QuadraticSemigroup {
 public:
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// a <= 1 or b = 0: the semigroup is all of N0.
  bool trivial() const { return trivial_; }

  /// y_n = n a + C(n, 2) b.
  std::int64_t generator(std::int64_t n) const;

  friend bool operator==(const QuadraticSemigroup&, const QuadraticSemigroup&) = default;

 private:
  friend QuadraticSemigroup make_semigroup(std::int64_t a, std::int64_t b);
  QuadraticSemigroup(std::int64_t a, std::int64_t b, bool trivial) : a_(a), b_(b), trivial_(trivial) {}

  std::int64_t a_;
  std::int64_t b_;
  bool trivial_;
};

/// Throws DomainError for negative input or (0, 0), NotANumericalSemigroup
/// when gcd(a, b) != 1.
QuadraticSemigroup make_semigroup(std::int64_t a, std::int64_t b);

inline std::int64_t generator(const QuadraticSemigroup& s, std::int64_t n) { return s.generator(n); }

/// The eight (a, b, n) with mu_{a,b}(n) = mu(n) - 1 for 0 <= n < a.
struct ExceptionTriple {
  std::int64_t a;
  std::int64_t b;
  std::int64_t n;
};

inline constexpr std::array<ExceptionTriple, 8> kExceptionTriples{{
    {29, 1, 26},
    {45, 1, 33},
    {47, 1, 44},
    {50, 1, 41},
    {55, 1, 50},
    {67, 1, 53},
    {73, 1, 63},
    {79, 1, 74},
}};

bool is_exceptional_triple(std::int64_t a, std::int64_t b, std::int64_t n);
bool is_exceptional_pair(std::int64_t a, std::int64_t b);

/// Reachability of 0..bound from the generators, by forward DP.
struct MembershipTable {
  std::int64_t bound = 0;
  std::vector<std::uint8_t> reachable;

  bool contains(std::int64_t x) const {
    return x >= 0 && x <= bound && reachable[static_cast<std::size_t>(x)] != 0;
  }
};

inline constexpr std::int64_t kMaxMembershipBound = std::int64_t{1} << 31;

/// Uses every generator y_n <= bound, with no minimality pruning.
/// Throws CapacityError above kMaxMembershipBound.
MembershipTable membership_table(const QuadraticSemigroup& s, std::int64_t bound);
MembershipTable membership_table(const QuadraticSemigroup& s, std::int64_t bound,
                                 const kernels::KernelSet& kernels);

/// ceil(F_upper(a, b)) + a + 1 for nontrivial S, large enough to hold the
/// whole Apery set of a.
std::int64_t default_membership_bound(const QuadraticSemigroup& s);

/// Brute-force membership oracle that grows its table on demand. Owned by a
/// single thread; give each worker its own instance.
class Membership {
 public:
  /// Starts at default_membership_bound and doubles until the top a entries
  /// are all members (then every larger integer is one too).
  explicit Membership(QuadraticSemigroup s);

  const QuadraticSemigroup& semigroup() const { return s_; }
  const MembershipTable& table() const { return table_; }

  /// Exact for every x >= 0; negative x is never a member.
  bool contains(std::int64_t x);

  /// Grow the table to cover at least `bound`.
  void ensure(std::int64_t bound);

  /// True when the top `a` table entries are all members, which certifies
  /// that every gap lies inside the table.
  bool saturated() const;

 private:
  QuadraticSemigroup s_;
  MembershipTable table_;
};

inline bool contains(Membership& oracle, std::int64_t x) { return oracle.contains(x); }

/// (m, n) in T, i.e. mu(n) <= m. `table` must cover n.
bool lift_contains(std::int64_t m, std::int64_t n, const MuTable& table);

/// phi_{a,b}(m, n) = m a + n b.
std::int64_t project(std::int64_t m, std::int64_t n, const QuadraticSemigroup& s);

/// Least integer m with m a + n b in S, by scanning m upward from the first
/// value that makes m a + n b non-negative. Any integer n.
std::int64_t mu_ab_oracle(Membership& oracle, std::int64_t n);
std::int64_t mu_ab_oracle(const QuadraticSemigroup& s, std::int64_t n);

/// mu_{a,b}(n + i a), reduced to a residue r in [0, a) and shifted:
/// mu_{a,b}(r) - q b where n + i a = r + q a.
std::int64_t mu_ab_shift(Membership& oracle, std::int64_t n, std::int64_t i);

/// mu(n), lowered by one on the eight exceptional triples. Requires a
/// nontrivial S and 0 <= n < a.
std::int64_t mu_ab_closed(const QuadraticSemigroup& s, std::int64_t n, const MuTable& table);

/// Closed form extended to every integer n through the shift identity.
std::int64_t mu_ab(const QuadraticSemigroup& s, std::int64_t n, const MuTable& table);

}  // namespace quadsg
