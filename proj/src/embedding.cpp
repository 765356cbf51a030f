#include "quadsg/embedding.hpp"

#include <algorithm>
#include <string>

#include "quadsg/errors.hpp"

namespace quadsg {

std::int64_t count_small_generators(std::int64_t a) {
  if (a < 1) throw DomainError("count_small_generators: a must be >= 1");
  std::int64_t n = 1;
  while (triangular(n + 1) < a) ++n;
  return n;
}

bool is_minimal_closed(const QuadraticSemigroup& s, std::int64_t n) {
  if (s.trivial()) throw DomainError("is_minimal_closed requires a nontrivial semigroup");
  if (n < 1) throw DomainError("is_minimal_closed: n must be >= 1");
  const std::int64_t a = s.a();
  const std::int64_t tri = triangular(n);
  if (tri < a) return true;
  if (n > a || tri % a == 0) return false;
  return std::any_of(kExceptionalGenerators.begin(), kExceptionalGenerators.end(),
                     [&](const ExceptionalGenerator& g) { return g.a == a && g.b == s.b() && g.n == n; });
}

MinimalGeneratorSet minimal_generators_closed(const QuadraticSemigroup& s) {
  if (s.trivial()) throw DomainError("minimal_generators_closed requires a nontrivial semigroup");
  MinimalGeneratorSet out{s.a(), s.b(), {}, {}};
  for (std::int64_t n = 1; n <= s.a(); ++n) {
    if (is_minimal_closed(s, n)) {
      out.indices.push_back(n);
      out.elements.push_back(s.generator(n));
    }
  }
  return out;
}

MinimalGeneratorSet minimal_generators_oracle(const QuadraticSemigroup& s, std::int64_t extra_window,
                                              const kernels::KernelSet& kernels) {
  if (s.trivial()) throw DomainError("minimal_generators_oracle requires a nontrivial semigroup");
  if (extra_window < 0) throw DomainError("extra_window must be >= 0");
  const std::int64_t last = checked_add(s.a(), extra_window);
  const std::int64_t bound = s.generator(last);
  if (bound > kMaxMembershipBound) {
    throw CapacityError("generator y_" + std::to_string(last) + " = " + std::to_string(bound) +
                        " exceeds the membership memory budget");
  }
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  MinimalGeneratorSet out{s.a(), s.b(), {}, {}};
  // After processing index n the table is exactly the monoid generated by
  // y_1..y_n (restricted to 0..bound); non-minimal generators add nothing.
  for (std::int64_t n = 1; n <= last; ++n) {
    const std::int64_t y = s.generator(n);
    if (reach[static_cast<std::size_t>(y)]) continue;
    out.indices.push_back(n);
    out.elements.push_back(y);
    kernels.or_shift(reach, static_cast<std::size_t>(y));
  }
  return out;
}

MinimalGeneratorSet minimal_generators_oracle(const QuadraticSemigroup& s, std::int64_t extra_window) {
  return minimal_generators_oracle(s, extra_window, kernels::active());
}

std::int64_t embedding_dimension(std::int64_t a, std::int64_t b) {
  const QuadraticSemigroup s = make_semigroup(a, b);
  if (s.trivial()) return 1;
  const std::int64_t base = count_small_generators(a);
  return is_exceptional_pair(a, b) ? base + 1 : base;
}

bool verify_decomposition(const QuadraticSemigroup& s, std::int64_t n,
                          const std::map<std::int64_t, std::int64_t>& coefficients) {
  std::int64_t sum = 0;
  for (const auto& [index, count] : coefficients) {
    if (index < 0 || index >= n) {
      throw DomainError("decomposition index " + std::to_string(index) + " is not below n = " + std::to_string(n));
    }
    if (count < 0) throw DomainError("decomposition coefficients must be non-negative");
    sum = checked_add(sum, checked_mul(count, s.generator(index)));
  }
  return sum == s.generator(n);
}

}  // namespace quadsg
