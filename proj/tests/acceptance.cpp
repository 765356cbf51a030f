// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exit status is non-zero when any line fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quadsg/embedding.hpp"
#include "quadsg/invariants.hpp"
#include "quadsg/mu.hpp"
#include "quadsg/reference_tables.hpp"
#include "quadsg/search.hpp"
#include "quadsg/semigroup.hpp"

using namespace quadsg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_grid(std::int64_t a_hi, std::int64_t b_hi) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 2; a <= a_hi; ++a) {
    for (std::int64_t b = 1; b <= b_hi; ++b) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome ac1() {
  const MuTable t(triangular(2000));
  Outcome o;
  o.ok = t[0] == 0 && t[1] == 2 && t[2] == 4;
  std::int64_t bad = 0;
  for (std::int64_t i = 2; i <= 2000; ++i) bad += t[triangular(i)] != i;
  o.ok = o.ok && bad == 0;
  o.detail = "mu(0..2)=" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
             "; mu(C(i,2))!=i for " + std::to_string(bad) + " of i=2..2000";
  return o;
}

Outcome ac2() {
  const MuTable t(300, MuTable::Method::recursion);
  std::int64_t bad = 0;
  for (std::int64_t n = 0; n <= 300; ++n) bad += mu_oracle(n) != t[n];
  return {bad == 0, std::to_string(bad) + " mismatches over n<=300"};
}

Outcome ac3() {
  const MuTable t(2000);
  std::int64_t bad = 0;
  double tightest = 1e9;
  for (std::int64_t n = 1; n <= 2000; ++n) {
    const double m = static_cast<double>(t[n]);
    const double upper = std::min(gauss_bound(n), combined_bound(n));
    bad += !(lower_bound(n) <= m + kBoundSlack && m <= upper + kBoundSlack);
    tightest = std::min(tightest, upper - m);
  }
  return {bad == 0, std::to_string(bad) + " violations; min upper slack " + fmt("%.4f", tightest)};
}

Outcome ac4() {
  const auto r = search_mu_drop(485);
  std::set<std::pair<std::int64_t, std::int64_t>> got, want;
  bool drops = true;
  for (const auto& h : r.hits) {
    got.emplace(h.a, h.n);
    drops = drops && h.drop == 2;
  }
  for (const auto& e : kExceptionTriples) want.emplace(e.a, e.n);
  return {got == want && drops && r.hits.size() == 8,
          std::to_string(r.hits.size()) + " hits, all drop 2: " + (drops ? "yes" : "no")};
}

Outcome ac5() {
  const auto certs = mu_exception_certificates();
  std::size_t pass = 0;
  for (const auto& c : certs) pass += c.pass;
  // Spot check of the first row by hand.
  Membership m(make_semigroup(29, 1));
  const bool spot = 12 * 29 + 26 * 1 == 374 && make_semigroup(29, 1).generator(11) == 374 && m.contains(374) &&
                    !m.contains(345);
  return {certs.size() == 8 && pass == 8 && spot, std::to_string(pass) + "/" + std::to_string(certs.size()) +
                                                      " rows verified; 374 in S(29,1), 345 not"};
}

Outcome ac6() {
  const MuTable t(200);
  std::int64_t checked = 0, bad = 0;
  for (auto [a, b] : coprime_grid(100, 5)) {
    const auto s = make_semigroup(a, b);
    Membership m(s);
    for (std::int64_t n = 0; n < a; ++n, ++checked) bad += mu_ab_closed(s, n, t) != mu_ab_oracle(m, n);
  }
  return {bad == 0, std::to_string(checked) + " (a,b,n) checked, " + std::to_string(bad) + " mismatches"};
}

Outcome ac7() {
  const MuTable t(200);
  std::int64_t pairs = 0, bad = 0, exceptional = 0;
  for (auto [a, b] : coprime_grid(100, 5)) {
    const auto s = make_semigroup(a, b);
    Membership m(s);
    ++pairs;
    exceptional += is_exceptional_pair(a, b);
    bad += apery_closed(s, t) != apery_oracle(m);
    bad += frobenius(s, t) != frobenius_oracle(m);
    bad += genus(s, t) != genus_oracle(m);
  }
  const auto s21 = make_semigroup(2, 1);
  const bool example =
      apery_closed(s21, t) == AperySet{2, {0, 5}} && frobenius(s21, t) == 3 && genus(s21, t) == 2;
  return {bad == 0 && example && exceptional == 8,
          std::to_string(pairs) + " pairs (" + std::to_string(exceptional) + " exceptional), " +
              std::to_string(bad) + " mismatches; S(2,1): Ap={0,5}, F=3, g=2 " + (example ? "ok" : "WRONG")};
}

Outcome ac8() {
  const MuTable t(200);
  std::int64_t pairs = 0, bad = 0;
  for (auto [a, b] : coprime_grid(100, 5)) {
    if (is_exceptional_pair(a, b)) continue;
    ++pairs;
    const auto s = make_semigroup(a, b);
    const double f = static_cast<double>(frobenius(s, t));
    const double g = static_cast<double>(genus(s, t));
    const auto fb = frobenius_bounds(a, b);
    const auto gb = genus_bounds(a, b);
    bad += !(fb.lower <= f + kBoundSlack && f <= fb.upper + kBoundSlack);
    bad += !(gb.lower <= g + kBoundSlack && g <= gb.upper + kBoundSlack);
  }
  const double f21 = static_cast<double>(frobenius(make_semigroup(2, 1), t));
  const bool tight = std::abs(f21 - frobenius_lower_formula(2, 1)) <= kBoundSlack && f21 == 3.0;
  return {bad == 0 && tight, std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                                 " violations; F(S(2,1))=3=lower bound " + (tight ? "ok" : "WRONG")};
}

Outcome ac9() {
  std::int64_t pairs = 0, bad = 0;
  for (auto [a, b] : coprime_grid(120, 4)) {
    ++pairs;
    const auto oracle = minimal_generators_oracle(make_semigroup(a, b));
    bad += embedding_dimension(a, b) != static_cast<std::int64_t>(oracle.indices.size());
  }
  const std::int64_t e29 = embedding_dimension(29, 1);
  const std::int64_t ceil_f29 = static_cast<std::int64_t>(std::ceil(f_of(29.0)));
  const std::int64_t e2 = embedding_dimension(2, 1);
  return {bad == 0 && e29 == 9 && e29 == ceil_f29 && e2 == 2,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches; e(S(29,1))=" +
              std::to_string(e29) + " (ceil f(29)=" + std::to_string(ceil_f29) + "), e(S(2,1))=" + std::to_string(e2)};
}

Outcome ac10() {
  const auto r = search_embedding_eq(655);
  const auto rows = tables::embedding_eq_rows();
  bool same = r.hits.size() == rows.size();
  for (std::size_t i = 0; same && i < rows.size(); ++i) same = r.hits[i].a == rows[i].a && r.hits[i].n == rows[i].n;
  std::size_t certs = 0, pass = 0;
  for (const auto& c : embedding_eq_certificates()) ++certs, pass += c.pass;
  for (const auto& c : exceptional_generator_certificates()) ++certs, pass += c.pass;
  const bool ends = !r.hits.empty() && r.hits.front().a == 10 && r.hits.front().n == 6 && r.hits.back().a == 236 &&
                    r.hits.back().n == 31;
  return {same && ends && pass == certs, std::to_string(r.hits.size()) + " hits match the table; " +
                                             std::to_string(pass) + "/" + std::to_string(certs) +
                                             " decompositions verified"};
}

// Reference roots from an independent 30-digit solve of the same formula.
constexpr double kRootAt2 = 485.935675367987;
constexpr double kRootAt1 = 655.268618845828;

Outcome ac11() {
  const auto [x, y] = g_local_max(10.0, 200.0);
  const double r2 = g_solve(2.0, 100.0, 600.0);
  const double r1 = g_solve(1.0, 100.0, 1000.0);
  const bool peak = std::abs(x - 52.15) <= 0.05 && std::abs(y - 4.59) <= 0.02;
  const bool roots = std::abs(r2 - kRootAt2) <= 1e-6 && std::abs(r1 - kRootAt1) <= 1e-6;
  // The quoted crossing points 485.92 and 655.24 are accurate in g, not in a:
  // g there is within 0.01 of the target even though the true roots sit
  // 0.016 and 0.029 further right.
  const bool quoted = std::abs(g_of(485.92) - 2.0) <= 0.01 && std::abs(g_of(655.24) - 1.0) <= 0.01;
  std::ostringstream d;
  d << "max at " << fmt("%.4f", x) << " value " << fmt("%.4f", y) << "; g=2 at " << fmt("%.6f", r2) << " (quoted 485.92, off "
    << fmt("%.3f", r2 - 485.92) << "); g=1 at " << fmt("%.6f", r1) << " (quoted 655.24, off " << fmt("%.3f", r1 - 655.24)
    << "); |g(485.92)-2|=" << fmt("%.1e", std::abs(g_of(485.92) - 2.0)) << ", |g(655.24)-1|="
    << fmt("%.1e", std::abs(g_of(655.24) - 1.0));
  return {peak && roots && quoted, d.str()};
}

Outcome ac12() {
  const MuTable t(400);
  bool ok = true;
  std::ostringstream d;
  for (std::int64_t a : {50, 100, 200, 400}) {
    const auto s = make_semigroup(a, 1);
    const double scale = std::pow(static_cast<double>(a), 1.5);
    const double fr = static_cast<double>(frobenius(s, t)) / scale;
    const double gr = static_cast<double>(genus(s, t)) / scale;
    ok = ok && fr >= 0.4 && fr <= 2.5 && gr >= 0.4 && gr <= 2.5;
    d << "a=" << a << " F/a^1.5=" << fmt("%.3f", fr) << " g/a^1.5=" << fmt("%.3f", gr) << "; ";
  }
  std::string detail = d.str();
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "mu base values", 1.0, ac1},
      {"AC2", "recursion vs partition DFS", 30.0, ac2},
      {"AC3", "mu bound sandwich", 1.0, ac3},
      {"AC4", "mu-drop search", 5.0, ac4},
      {"AC5", "exception certificates", 5.0, ac5},
      {"AC6", "mu_ab closed form", 60.0, ac6},
      {"AC7", "Apery/Frobenius/genus", 120.0, ac7},
      {"AC8", "F and g bounds", 10.0, ac8},
      {"AC9", "embedding dimension", 120.0, ac9},
      {"AC10", "embedding search", 10.0, ac10},
      {"AC11", "g(a) analysis", 1.0, ac11},
      {"AC12", "asymptotic ratios", 30.0, ac12},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs <= c.limit_s;
    failed += !pass;
    std::printf("%-4s %s  %-28s %8.3fs / %gs  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
