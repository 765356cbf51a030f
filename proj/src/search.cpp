#include "quadsg/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "quadsg/embedding.hpp"
#include "quadsg/errors.hpp"
#include "quadsg/reference_tables.hpp"
#include "quadsg/semigroup.hpp"

namespace quadsg {

std::string_view search_name(SearchId id) {
  return id == SearchId::mu_drop ? "mu-drop" : "embedding-eq";
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Worker t scans a = first + t, first + t + threads, ...; the merged hit list
// is sorted, so the result does not depend on the thread count.
template <typename Hit, typename ScanOne>
std::vector<Hit> parallel_scan(std::int64_t first, std::int64_t last, unsigned threads, ScanOne scan_one) {
  threads = resolve_threads(threads);
  std::vector<std::vector<Hit>> partial(threads);
  auto work = [&](unsigned t) {
    for (std::int64_t a = first + t; a <= last; a += threads) scan_one(a, partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<Hit> hits;
  for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace

SearchReport<MuDropHit> search_mu_drop(std::int64_t a_max, const MuTable& table, unsigned threads) {
  if (a_max < 4) throw DomainError("search mu-drop: a_max must be >= 4");
  if (table.n_max() < 2 * a_max - 1) throw DomainError("search mu-drop: mu table must reach 2 a_max - 1");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport<MuDropHit> report{SearchId::mu_drop, a_max, false, {}};
  report.hits = parallel_scan<MuDropHit>(4, a_max, threads, [&](std::int64_t a, std::vector<MuDropHit>& out) {
    for (std::int64_t n = 3; n < a; ++n) {
      const std::int64_t drop = table[n] - table[n + a];
      if (drop >= 2 && drop <= 4) out.push_back({a, n, table[n], table[n + a], drop});
    }
  });
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

SearchReport<MuDropHit> search_mu_drop(std::int64_t a_max, unsigned threads) {
  if (a_max < 4) throw DomainError("search mu-drop: a_max must be >= 4");
  return search_mu_drop(a_max, MuTable(2 * a_max - 1), threads);
}

SearchReport<EmbeddingEqHit> search_embedding_eq(std::int64_t a_max, bool raw, const MuTable& table,
                                                 unsigned threads) {
  if (a_max < 2) throw DomainError("search embedding-eq: a_max must be >= 2");
  if (table.n_max() < a_max - 1) throw DomainError("search embedding-eq: mu table must reach a_max - 1");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport<EmbeddingEqHit> report{SearchId::embedding_eq, a_max, raw, {}};
  report.hits =
      parallel_scan<EmbeddingEqHit>(1, a_max, threads, [&](std::int64_t a, std::vector<EmbeddingEqHit>& out) {
        const std::int64_t top = triangular(a);
        for (std::int64_t n = 1; n <= a; ++n) {
          const std::int64_t binom = triangular(n);
          if (!raw && (binom <= a || binom > top || binom % a == 0)) continue;
          const std::int64_t residue = binom % a;
          if (n + 1 == table[residue]) out.push_back({a, n, binom, residue, table[residue]});
        }
      });
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

SearchReport<EmbeddingEqHit> search_embedding_eq(std::int64_t a_max, bool raw, unsigned threads) {
  if (a_max < 2) throw DomainError("search embedding-eq: a_max must be >= 2");
  return search_embedding_eq(a_max, raw, MuTable(a_max), threads);
}

double g_of(double a) {
  if (!(a >= 2.0)) throw DomainError("g(a) is defined for a >= 2");
  const double fa1 = f_of(a - 1.0);
  return fa1 - f_of(2.0 * a - 1.0) + 3.0 * f_of((fa1 - 2.0) / 3.0);
}

double g_solve(double target, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("g_solve: bracket must satisfy lo < hi");
  double f_lo = g_of(lo) - target;
  const double f_hi = g_of(hi) - target;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) throw DomainError("g_solve: g - target does not change sign on the bracket");
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = g_of(mid) - target;
    if (f_mid == 0.0 || (hi - lo) < 1e-13 * std::max(1.0, std::abs(mid))) break;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

std::pair<double, double> g_local_max(double lo, double hi) {
  if (!(lo < hi) || lo < 2.0) throw DomainError("g_local_max: need 2 <= lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g_of(x1);
  double g2 = g_of(x2);
  while (hi - lo > 1e-7) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g_of(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g_of(x1);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, g_of(x)};
}

GAnalysis analyze_g() {
  const auto [x, gx] = g_local_max(10.0, 200.0);
  return {x, gx, g_solve(2.0, 100.0, 600.0), g_solve(1.0, 100.0, 1000.0)};
}

namespace {

std::string pair_label(std::int64_t a, std::int64_t n) {
  return "a=" + std::to_string(a) + " n=" + std::to_string(n);
}

std::string describe(const tables::Decomposition& d, std::int64_t n) {
  std::ostringstream os;
  os << "y_" << n << " =";
  bool first = true;
  for (const auto& [index, count] : d) {
    os << (first ? " " : " + ");
    if (count != 1) os << count;
    os << "y_" << index;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<Certificate> mu_exception_certificates() {
  const MuTable table(200);
  std::vector<Certificate> out;
  for (const tables::MuExceptionRow& row : tables::mu_exception_rows()) {
    const QuadraticSemigroup s = make_semigroup(row.a, 1);
    Membership oracle(s);
    const std::int64_t value = project(row.m, row.n, s);
    const std::int64_t below = project(row.m - 1, row.n, s);
    const bool ok = table[row.n] == row.mu_n && row.m == row.mu_n - 1 && value == row.value &&
                    s.generator(row.y_index) == value && oracle.contains(value) && !oracle.contains(below);
    std::ostringstream detail;
    detail << row.m << "*" << row.a << "+" << row.n << "*1=" << value << "=y_" << row.y_index << "; " << value
           << (oracle.contains(value) ? " in S" : " NOT in S") << "; " << below
           << (oracle.contains(below) ? " in S" : " not in S") << "; mu(" << row.n << ")=" << table[row.n];
    out.push_back({"mu-exceptions", pair_label(row.a, row.n), ok, detail.str()});
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> exceptional_generator_candidates() {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const ExceptionTriple& t : kExceptionTriples) {
    for (std::int64_t n = 1; n <= t.a; ++n) {
      const std::int64_t binom = triangular(n);
      if (binom > t.a && binom <= triangular(t.a) && binom % t.a == t.n) out.emplace_back(t.a, n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Certificate> exceptional_generator_certificates() {
  std::vector<Certificate> out;
  std::vector<std::pair<std::int64_t, std::int64_t>> listed;
  for (const tables::ExceptionalGeneratorRow& row : tables::exceptional_generator_rows()) {
    listed.emplace_back(row.a, row.n);
    const QuadraticSemigroup s = make_semigroup(row.a, 1);
    if (row.decomposition) {
      const bool ok = verify_decomposition(s, row.n, *row.decomposition);
      out.push_back({"exceptional-generators", pair_label(row.a, row.n), ok, describe(*row.decomposition, row.n)});
    } else {
      const MinimalGeneratorSet gens = minimal_generators_oracle(s);
      const bool ok = std::binary_search(gens.indices.begin(), gens.indices.end(), row.n);
      out.push_back({"exceptional-generators", pair_label(row.a, row.n), ok,
                     "y_" + std::to_string(row.n) + "=" + std::to_string(s.generator(row.n)) +
                         (ok ? " is minimal (oracle)" : " is NOT minimal (oracle)")});
    }
  }
  std::sort(listed.begin(), listed.end());
  const bool same = listed == exceptional_generator_candidates();
  out.push_back({"exceptional-generators", "row set", same,
                 same ? "rows equal the recomputed candidate list" : "rows differ from the recomputed candidate list"});
  return out;
}

std::vector<Certificate> exception_certificates() {
  std::vector<Certificate> out = mu_exception_certificates();
  std::vector<Certificate> more = exceptional_generator_certificates();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::vector<Certificate> embedding_eq_certificates() {
  std::vector<Certificate> out;
  for (const tables::EmbeddingEqRow& row : tables::embedding_eq_rows()) {
    const QuadraticSemigroup s = make_semigroup(row.a, 1);
    const bool ok = verify_decomposition(s, row.n, row.decomposition);
    out.push_back({"embedding-eq", pair_label(row.a, row.n), ok, describe(row.decomposition, row.n)});
  }
  return out;
}

}  // namespace quadsg
