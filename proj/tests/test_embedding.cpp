#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quadsg/embedding.hpp"
#include "quadsg/errors.hpp"
#include "quadsg/mu.hpp"
#include "quadsg/reference_tables.hpp"

using namespace quadsg;

TEST_CASE("count of small generators") {
  for (std::int64_t a = 1; a <= 5000; ++a) {
    const std::int64_t want = static_cast<std::int64_t>(std::ceil(f_of(static_cast<double>(a)))) - 1;
    REQUIRE(count_small_generators(a) == want);
  }
  CHECK_THROWS_AS(count_small_generators(0), DomainError);
}

TEST_CASE("embedding dimension examples") {
  CHECK(embedding_dimension(29, 1) == 9);
  CHECK(embedding_dimension(2, 1) == 2);
  CHECK(embedding_dimension(10, 3) == 4);
  CHECK(embedding_dimension(1, 1) == 1);
  CHECK_THROWS_AS(embedding_dimension(6, 4), NotANumericalSemigroup);
}

TEST_CASE("closed form equals the coin-problem oracle") {
  for (auto [a, b] : oracle::coprime_grid(2, 120, 1, 4)) {
    CAPTURE(a);
    CAPTURE(b);
    const auto s = make_semigroup(a, b);
    const auto want = minimal_generators_oracle(s);
    REQUIRE(minimal_generators_closed(s) == want);
    REQUIRE(embedding_dimension(a, b) == static_cast<std::int64_t>(want.indices.size()));
  }
}

TEST_CASE("the extra generator of each exceptional pair") {
  for (const auto& g : kExceptionalGenerators) {
    const auto s = make_semigroup(g.a, g.b);
    CHECK(is_minimal_closed(s, g.n));
    CHECK(triangular(g.n) > g.a);
    const auto set = minimal_generators_oracle(s, 10);
    CHECK(set.indices.back() == g.n);
    CHECK(embedding_dimension(g.a, g.b) == count_small_generators(g.a) + 1);
  }
}

TEST_CASE("decomposition checks") {
  const auto s = make_semigroup(29, 1);
  CHECK(verify_decomposition(make_semigroup(2, 1), 4, {{2, 1}, {3, 1}}));  // 14 = 5 + 9
  CHECK_FALSE(verify_decomposition(s, 11, {{1, 1}}));
  CHECK_THROWS_AS(verify_decomposition(s, 5, {{5, 1}}), DomainError);
  CHECK_THROWS_AS(verify_decomposition(s, 5, {{1, -1}}), DomainError);

  for (const auto& row : tables::embedding_eq_rows()) {
    REQUIRE(verify_decomposition(make_semigroup(row.a, 1), row.n, row.decomposition));
  }
  std::size_t blanks = 0;
  for (const auto& row : tables::exceptional_generator_rows()) {
    if (row.decomposition) {
      REQUIRE(verify_decomposition(make_semigroup(row.a, 1), row.n, *row.decomposition));
    } else {
      ++blanks;
    }
  }
  CHECK(blanks == kExceptionalGenerators.size());
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(minimal_generators_oracle(make_semigroup(1, 2)), DomainError);
  CHECK_THROWS_AS(minimal_generators_oracle(make_semigroup(5, 2), -1), DomainError);
  CHECK_THROWS_AS(is_minimal_closed(make_semigroup(5, 2), 0), DomainError);
}
