#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "quadsg/embedding.hpp"
#include "quadsg/errors.hpp"
#include "quadsg/invariants.hpp"
#include "quadsg/memo.hpp"
#include "quadsg/mu.hpp"
#include "quadsg/reference_tables.hpp"
#include "quadsg/search.hpp"
#include "quadsg/semigroup.hpp"

namespace quadsg::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kDefaultMuDropScale = 485;
constexpr std::int64_t kDefaultEmbeddingScale = 655;
constexpr std::int64_t kDefaultBoundsScale = 2000;
constexpr std::int64_t kMaxGrid = 500;

/// Thrown when a replay or certificate check fails.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json bounds_json(const std::optional<BoundPair>& b) {
  if (!b) return nullptr;
  return json{{"lower", b->lower}, {"upper", b->upper}, {"asserted", b->asserted}};
}

json summary_json(const InvariantSummary& s) {
  return json{{"a", s.a},
              {"b", s.b},
              {"trivial", s.trivial},
              {"exceptional", s.exceptional},
              {"frobenius", s.frobenius},
              {"genus", s.genus},
              {"frobenius_bounds", bounds_json(s.frobenius_bounds)},
              {"genus_bounds", bounds_json(s.genus_bounds)}};
}

json apery_json(const AperySet& ap) { return json{{"modulus", ap.modulus}, {"elements", ap.elements}}; }

struct Options {
  std::string format;
  std::int64_t n = -1;
  std::int64_t n_max = -1;
  std::int64_t a = -1;
  std::int64_t b = -1;
  std::int64_t k = 10;
  std::int64_t a_max = -1;
  std::int64_t b_max = -1;
  std::int64_t m_max = 50;
  std::int64_t grid_n_max = 50;
  double step = 0.5;
  bool oracle = false;
  bool certify = false;
  bool raw = false;
  bool all = false;
  bool exceptions = false;
  bool tables = false;
  bool searches = false;
  unsigned threads = 0;
  std::string search_kind;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int mu() {
    if (o.n >= 0) {
      const std::int64_t v = o.oracle ? mu_oracle(o.n) : quadsg::mu(o.n, memo::load_or_build(o.n));
      if (o.format == "json") {
        out_ << json{{"n", o.n}, {"mu", v}}.dump() << "\n";
      } else {
        out_ << v << "\n";
      }
      return kExitOk;
    }
    if (o.n_max < 0) throw DomainError("mu: give --n or --n-max");
    const MuTable table = memo::load_or_build(o.n_max);
    if (o.format == "json") {
      std::vector<std::int64_t> values;
      for (std::int64_t n = 0; n <= o.n_max; ++n) values.push_back(table[n]);
      out_ << json{{"n_max", o.n_max}, {"values", values}}.dump() << "\n";
    } else {
      out_ << "n,mu\n";
      for (std::int64_t n = 0; n <= o.n_max; ++n) out_ << n << "," << table[n] << "\n";
    }
    return kExitOk;
  }

  int bounds() {
    const std::int64_t n_max = o.n_max < 0 ? kDefaultBoundsScale : o.n_max;
    const auto rows = bound_profiles(n_max, memo::load_or_build(n_max));
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"mu", r.mu}, {"lower", r.lower}, {"gauss", r.gauss}, {"combined", r.combined}});
      }
      out_ << arr.dump() << "\n";
    } else {
      write_bounds_csv(out_, rows);
    }
    return kExitOk;
  }

  int semigroup() {
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    if (o.k < 0) throw DomainError("--k must be >= 0");
    std::vector<std::int64_t> gens;
    for (std::int64_t n = 0; n <= o.k; ++n) gens.push_back(s.generator(n));
    if (o.format == "plain") {
      out_ << "S(" << s.a() << "," << s.b() << ")" << (s.trivial() ? " = N0" : "") << "\n";
      for (std::size_t n = 0; n < gens.size(); ++n) out_ << "y_" << n << " = " << gens[n] << "\n";
    } else {
      out_ << json{{"a", s.a()}, {"b", s.b()}, {"trivial", s.trivial()}, {"generators", gens}}.dump() << "\n";
    }
    return kExitOk;
  }

  AperySet apery_for(const QuadraticSemigroup& s) {
    if (o.oracle) {
      Membership oracle(s);
      return apery_oracle(oracle);
    }
    return apery_closed(s, memo::load_or_build(std::max<std::int64_t>(s.a(), 1)));
  }

  int apery() {
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    const AperySet ap = apery_for(s);
    if (o.format == "json") {
      out_ << apery_json(ap).dump() << "\n";
    } else if (o.format == "csv") {
      out_ << "residue,element\n";
      for (std::size_t r = 0; r < ap.elements.size(); ++r) out_ << r << "," << ap.elements[r] << "\n";
    } else {
      std::vector<std::int64_t> sorted = ap.elements;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) out_ << (i ? " " : "") << sorted[i];
      out_ << "\n";
    }
    return kExitOk;
  }

  int frobenius_cmd() {
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    std::int64_t f;
    if (o.oracle) {
      Membership oracle(s);
      f = frobenius_oracle(oracle);
    } else {
      f = frobenius(s, memo::load_or_build(std::max<std::int64_t>(s.a(), 1)));
    }
    emit_scalar("frobenius", f);
    return kExitOk;
  }

  int genus_cmd() {
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    std::int64_t g;
    if (o.oracle) {
      Membership oracle(s);
      g = genus_oracle(oracle);
    } else {
      g = genus(s, memo::load_or_build(std::max<std::int64_t>(s.a(), 1)));
    }
    emit_scalar("genus", g);
    return kExitOk;
  }

  int invariants() {
    if (o.a_max >= 0) return invariants_sweep();
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    const InvariantSummary sum = summarize(s, memo::load_or_build(std::max<std::int64_t>(s.a(), 1)));
    if (o.format == "plain") {
      out_ << "frobenius " << sum.frobenius << "\ngenus " << sum.genus << "\n";
      if (sum.frobenius_bounds) {
        out_ << "frobenius_bounds " << fmt_real(sum.frobenius_bounds->lower) << " "
             << fmt_real(sum.frobenius_bounds->upper) << "\n";
        out_ << "genus_bounds " << fmt_real(sum.genus_bounds->lower) << " " << fmt_real(sum.genus_bounds->upper)
             << "\n";
      }
    } else {
      out_ << summary_json(sum).dump() << "\n";
    }
    return kExitOk;
  }

  int invariants_sweep() {
    const std::int64_t b_max = o.b_max < 1 ? 5 : o.b_max;
    if (o.a_max < 2) throw DomainError("--a-max must be >= 2");
    const MuTable table = memo::load_or_build(o.a_max);
    out_ << "a,b,frobenius,genus,F_lo,F_hi,g_lo,g_hi\n";
    for (std::int64_t a = 2; a <= o.a_max; ++a) {
      for (std::int64_t b = 1; b <= b_max; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const InvariantSummary s = summarize(make_semigroup(a, b), table);
        out_ << a << "," << b << "," << s.frobenius << "," << s.genus << "," << fmt_real(s.frobenius_bounds->lower)
             << "," << fmt_real(s.frobenius_bounds->upper) << "," << fmt_real(s.genus_bounds->lower) << ","
             << fmt_real(s.genus_bounds->upper) << "\n";
      }
    }
    return kExitOk;
  }

  int embedding() {
    if (o.certify) return certify_tables(/*tables=*/true, /*exceptions=*/true);
    const QuadraticSemigroup s = make_semigroup(o.a, o.b);
    json doc{{"a", s.a()}, {"b", s.b()}};
    std::int64_t dim = embedding_dimension(s.a(), s.b());
    std::vector<std::int64_t> indices;
    std::vector<std::int64_t> elements;
    if (s.trivial()) {
      elements = {1};
    } else {
      const MinimalGeneratorSet set = o.oracle ? minimal_generators_oracle(s) : minimal_generators_closed(s);
      indices = set.indices;
      elements = set.elements;
      if (o.oracle) dim = static_cast<std::int64_t>(set.indices.size());
    }
    if (o.format == "json") {
      doc["dimension"] = dim;
      doc["indices"] = indices;
      doc["elements"] = elements;
      doc["method"] = o.oracle ? "oracle" : "closed";
      out_ << doc.dump() << "\n";
    } else {
      out_ << "dimension " << dim << "\nindices";
      for (auto i : indices) out_ << " " << i;
      out_ << "\nelements";
      for (auto e : elements) out_ << " " << e;
      out_ << "\n";
    }
    return kExitOk;
  }

  int search() {
    if (o.search_kind == "mu-drop") {
      const std::int64_t a_max = o.a_max < 0 ? kDefaultMuDropScale : o.a_max;
      if (a_max < 4) throw DomainError("search mu-drop: --a-max must be >= 4");
      const auto report = search_mu_drop(a_max, memo::load_or_build(2 * a_max - 1), o.threads);
      if (o.format == "json") {
        json hits = json::array();
        for (const auto& h : report.hits) {
          hits.push_back({{"a", h.a}, {"n", h.n}, {"mu_n", h.mu_n}, {"mu_n_plus_a", h.mu_n_plus_a}, {"drop", h.drop}});
        }
        out_ << json{{"search", "mu-drop"}, {"a_max", a_max}, {"hits", hits}, {"elapsed_s", report.elapsed.count()}}
                    .dump()
             << "\n";
      } else {
        out_ << "a,n,mu_n,mu_n_plus_a,drop\n";
        for (const auto& h : report.hits) {
          out_ << h.a << "," << h.n << "," << h.mu_n << "," << h.mu_n_plus_a << "," << h.drop << "\n";
        }
      }
      return kExitOk;
    }
    const std::int64_t a_max = o.a_max < 0 ? kDefaultEmbeddingScale : o.a_max;
    if (a_max < 2) throw DomainError("search embedding-eq: --a-max must be >= 2");
    const auto report = search_embedding_eq(a_max, o.raw, memo::load_or_build(a_max), o.threads);
    if (o.format == "json") {
      json hits = json::array();
      for (const auto& h : report.hits) {
        hits.push_back({{"a", h.a}, {"n", h.n}, {"binom", h.binom}, {"residue", h.residue}, {"mu_residue", h.mu_residue}});
      }
      out_ << json{{"search", "embedding-eq"}, {"a_max", a_max}, {"raw", o.raw}, {"hits", hits},
                   {"elapsed_s", report.elapsed.count()}}
                  .dump()
           << "\n";
    } else {
      out_ << "a,n,binom,residue,mu_residue\n";
      for (const auto& h : report.hits) {
        out_ << h.a << "," << h.n << "," << h.binom << "," << h.residue << "," << h.mu_residue << "\n";
      }
    }
    if (o.raw) {
      std::set<std::pair<std::int64_t, std::int64_t>> listed;
      for (const auto& row : tables::embedding_eq_rows()) {
        if (row.a <= a_max) listed.emplace(row.a, row.n);
      }
      std::size_t extra = 0;
      for (const auto& h : report.hits) {
        if (!listed.count({h.a, h.n})) {
          err_ << "raw hit outside the reference table: a=" << h.a << " n=" << h.n << "\n";
          ++extra;
        }
      }
      err_ << "raw search: " << report.hits.size() << " hits, " << extra << " outside the reference table\n";
    }
    return kExitOk;
  }

  int g_analysis() {
    if (o.format == "csv") {
      if (!(o.step > 0.0)) throw DomainError("--step must be positive");
      out_ << "a,g\n";
      for (double a = 2.0; a <= 1000.0 + 1e-9; a += o.step) out_ << fmt_real(a) << "," << fmt_real(g_of(a)) << "\n";
      return kExitOk;
    }
    const GAnalysis g = analyze_g();
    if (o.format == "json") {
      out_ << json{{"local_max_location", g.local_max_location},
                   {"local_max_value", g.local_max_value},
                   {"root_at_2", g.root_at_2},
                   {"root_at_1", g.root_at_1}}
                  .dump()
           << "\n";
    } else {
      out_ << "local_max_location " << fmt_real(g.local_max_location) << "\nlocal_max_value "
           << fmt_real(g.local_max_value) << "\nroot_at_2 " << fmt_real(g.root_at_2) << "\nroot_at_1 "
           << fmt_real(g.root_at_1) << "\n";
    }
    return kExitOk;
  }

  int certify() {
    const bool everything = o.all || !(o.exceptions || o.tables || o.searches);
    bool ok = true;
    if (everything || o.exceptions) ok &= report(exception_certificates());
    if (everything || o.tables) ok &= report(embedding_eq_certificates());
    if (everything || o.searches) ok &= report(search_certificates());
    if (everything) ok &= report(embedding_dimension_certificates());
    out_ << (ok ? "certify: PASS" : "certify: FAIL") << "\n";
    if (!ok) throw VerificationFailure("certification failed");
    return kExitOk;
  }

  int certify_tables(bool tables, bool exceptions) {
    bool ok = true;
    if (exceptions) ok &= report(exceptional_generator_certificates());
    if (tables) ok &= report(embedding_eq_certificates());
    out_ << (ok ? "certify: PASS" : "certify: FAIL") << "\n";
    if (!ok) throw VerificationFailure("certification failed");
    return kExitOk;
  }

  int tgrid() {
    if (o.m_max < 1 || o.grid_n_max < 1 || o.m_max > kMaxGrid || o.grid_n_max > kMaxGrid) {
      throw DomainError("tgrid: grid dimensions must be in 1..500");
    }
    const MuTable table = memo::load_or_build(o.grid_n_max);
    out_ << "m,n,in_T\n";
    for (std::int64_t n = 0; n < o.grid_n_max; ++n) {
      for (std::int64_t m = 0; m < o.m_max; ++m) {
        out_ << m << "," << n << "," << (lift_contains(m, n, table) ? "true" : "false") << "\n";
      }
    }
    return kExitOk;
  }

  Options o;

 private:
  void emit_scalar(const char* key, std::int64_t v) {
    if (o.format == "json") {
      out_ << json{{"a", o.a}, {"b", o.b}, {key, v}}.dump() << "\n";
    } else {
      out_ << v << "\n";
    }
  }

  bool report(const std::vector<Certificate>& certs) {
    bool ok = true;
    std::string table;
    std::size_t passed = 0;
    for (const Certificate& c : certs) {
      out_ << (c.pass ? "PASS " : "FAIL ") << c.table << " " << c.row << ": " << c.detail << "\n";
      ok &= c.pass;
      passed += c.pass ? 1 : 0;
      table = c.table;
    }
    out_ << "# " << table << ": " << passed << "/" << certs.size() << " passed\n";
    return ok;
  }

  std::vector<Certificate> search_certificates() {
    std::vector<Certificate> out;
    {
      const auto r = search_mu_drop(kDefaultMuDropScale, memo::load_or_build(2 * kDefaultMuDropScale - 1), o.threads);
      std::vector<std::pair<std::int64_t, std::int64_t>> got;
      bool drops_two = true;
      for (const auto& h : r.hits) {
        got.emplace_back(h.a, h.n);
        drops_two &= h.drop == 2;
      }
      std::vector<std::pair<std::int64_t, std::int64_t>> want;
      for (const auto& t : kExceptionTriples) want.emplace_back(t.a, t.n);
      out.push_back({"searches", "mu-drop a_max=485", got == want && drops_two,
                     std::to_string(r.hits.size()) + " hits, all drop 2: " + (drops_two ? "yes" : "no")});
    }
    {
      const auto r = search_embedding_eq(kDefaultEmbeddingScale, false, memo::load_or_build(kDefaultEmbeddingScale),
                                         o.threads);
      std::vector<std::pair<std::int64_t, std::int64_t>> got;
      for (const auto& h : r.hits) got.emplace_back(h.a, h.n);
      std::vector<std::pair<std::int64_t, std::int64_t>> want;
      for (const auto& row : tables::embedding_eq_rows()) want.emplace_back(row.a, row.n);
      out.push_back({"searches", "embedding-eq a_max=655", got == want, std::to_string(r.hits.size()) + " hits"});
    }
    return out;
  }

  std::vector<Certificate> embedding_dimension_certificates() {
    std::vector<Certificate> out;
    for (const auto& t : kExceptionTriples) {
      const QuadraticSemigroup s = make_semigroup(t.a, t.b);
      const auto oracle = minimal_generators_oracle(s);
      const std::int64_t closed = embedding_dimension(t.a, t.b);
      const bool ok = closed == static_cast<std::int64_t>(oracle.indices.size()) &&
                      closed == count_small_generators(t.a) + 1;
      out.push_back({"embedding-dimension", "a=" + std::to_string(t.a) + " b=1", ok,
                     "e=" + std::to_string(closed) + ", oracle " + std::to_string(oracle.indices.size())});
    }
    return out;
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  Options& o = runner.o;
  std::function<int()> action;

  CLI::App app{"Invariants of numerical semigroups generated by quadratic sequences with initial term zero",
               "quadsg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::map<std::string, std::string> default_format;
  auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
    default_format[sub->get_name()] = allowed.front();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto ab_opts = [&o](CLI::App* sub, bool required) {
    auto* a = sub->add_option("--a", o.a, "Multiplicity a (first difference a + b n)");
    auto* b = sub->add_option("--b", o.b, "Second difference b");
    if (required) {
      a->required();
      b->required();
    }
  };

  auto* mu_cmd = app.add_subcommand("mu", "mu(n): least index-sum of a triangular partition of n");
  mu_cmd->add_option("--n", o.n, "Single argument")->check(CLI::NonNegativeNumber);
  mu_cmd->add_option("--n-max", o.n_max, "Dump mu(0..n_max)")->check(CLI::NonNegativeNumber);
  mu_cmd->add_flag("--oracle", o.oracle, "Use the exhaustive partition search (n <= 10000)");
  format_opt(mu_cmd, {"plain", "csv", "json"});
  mu_cmd->callback([&] { action = [&] { return runner.mu(); }; });

  auto* bounds_cmd = app.add_subcommand("bounds", "mu(n) with its lower, Gauss and combined bounds");
  bounds_cmd->add_option("--n-max", o.n_max, "Largest n (default 2000)")->check(CLI::PositiveNumber);
  format_opt(bounds_cmd, {"csv", "json"});
  bounds_cmd->callback([&] { action = [&] { return runner.bounds(); }; });

  auto* sg_cmd = app.add_subcommand("semigroup", "Describe S(a,b) and its first generators");
  ab_opts(sg_cmd, true);
  sg_cmd->add_option("--k", o.k, "Emit generators y_0..y_k (default 10)");
  format_opt(sg_cmd, {"json", "plain"});
  sg_cmd->callback([&] { action = [&] { return runner.semigroup(); }; });

  auto add_invariant_cmd = [&](const char* name, const char* help, std::function<int()> fn,
                               std::vector<std::string> formats) {
    auto* sub = app.add_subcommand(name, help);
    ab_opts(sub, true);
    sub->add_flag("--oracle", o.oracle, "Use the brute-force membership table");
    format_opt(sub, std::move(formats));
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  add_invariant_cmd("apery", "Apery set of a in S(a,b)", [&] { return runner.apery(); }, {"plain", "json", "csv"});
  add_invariant_cmd("frobenius", "Frobenius number of S(a,b)", [&] { return runner.frobenius_cmd(); },
                    {"plain", "json"});
  add_invariant_cmd("genus", "Genus of S(a,b)", [&] { return runner.genus_cmd(); }, {"plain", "json"});

  auto* inv_cmd = app.add_subcommand("invariants", "Frobenius number, genus and their bounds");
  ab_opts(inv_cmd, false);
  inv_cmd->add_option("--a-max", o.a_max, "Sweep 2 <= a <= a_max (CSV)");
  inv_cmd->add_option("--b-max", o.b_max, "Sweep 1 <= b <= b_max (default 5)");
  format_opt(inv_cmd, {"json", "plain", "csv"});
  inv_cmd->callback([&] {
    if (o.a_max >= 0) default_format["invariants"] = "csv";
    if (o.a_max < 0 && (o.a < 0 || o.b < 0)) throw CLI::ValidationError("invariants", "give --a and --b, or --a-max");
    action = [&] { return runner.invariants(); };
  });

  auto* emb_cmd = app.add_subcommand("embedding", "Embedding dimension and minimal generators");
  ab_opts(emb_cmd, false);
  emb_cmd->add_flag("--oracle", o.oracle, "Use the coin-problem DP instead of the closed form");
  emb_cmd->add_flag("--certify", o.certify, "Replay both decomposition tables");
  format_opt(emb_cmd, {"plain", "json"});
  emb_cmd->callback([&] {
    if (!o.certify && (o.a < 0 || o.b < 0)) throw CLI::ValidationError("embedding", "give --a and --b, or --certify");
    action = [&] { return runner.embedding(); };
  });

  auto* search_cmd = app.add_subcommand("search", "Replicate the exhaustive searches");
  search_cmd->add_option("kind", o.search_kind, "mu-drop | embedding-eq")
      ->required()
      ->check(CLI::IsMember({"mu-drop", "embedding-eq"}));
  search_cmd->add_option("--a-max", o.a_max, "Upper limit on a (default 485 / 655)");
  search_cmd->add_flag("--raw", o.raw, "embedding-eq: keep only the equation, report hits outside the table");
  search_cmd->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  format_opt(search_cmd, {"csv", "json"});
  search_cmd->callback([&] { action = [&] { return runner.search(); }; });

  auto* g_cmd = app.add_subcommand("g-analysis", "Peak and level crossings of g(a)");
  g_cmd->add_option("--step", o.step, "Sampling step for --format csv (default 0.5)");
  format_opt(g_cmd, {"plain", "json", "csv"});
  g_cmd->callback([&] { action = [&] { return runner.g_analysis(); }; });

  auto* cert_cmd = app.add_subcommand("certify", "Replay the reference tables and searches");
  cert_cmd->add_flag("--all", o.all, "Everything (default)");
  cert_cmd->add_flag("--exceptions", o.exceptions, "Exceptional mu values and generators");
  cert_cmd->add_flag("--tables", o.tables, "Embedding-search decompositions");
  cert_cmd->add_flag("--searches", o.searches, "Both searches at full scale");
  cert_cmd->add_option("--threads", o.threads, "Worker threads for the searches");
  cert_cmd->callback([&] { action = [&] { return runner.certify(); }; });

  auto* tgrid_cmd = app.add_subcommand("tgrid", "Membership of (m, n) in the lifted monoid T");
  tgrid_cmd->add_option("--m-max", o.m_max, "Columns m = 0..m_max-1 (default 50, at most 500)");
  tgrid_cmd->add_option("--n-max", o.grid_n_max, "Rows n = 0..n_max-1 (default 50, at most 500)");
  tgrid_cmd->callback([&] { action = [&] { return runner.tgrid(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (o.format.empty()) {
    const auto chosen = app.get_subcommands();
    if (!chosen.empty()) o.format = default_format[chosen.front()->get_name()];
  }

  try {
    return action();
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("quadsg");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return run(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace quadsg::cli
