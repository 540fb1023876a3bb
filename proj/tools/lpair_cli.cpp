// lpair: command-line driver for zero scans, the explicit formula, the
// family statistics, Euler-product constants and the progression variance.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lpair/arith.hpp"
#include "lpair/constants.hpp"
#include "lpair/error.hpp"
#include "lpair/lfun.hpp"
#include "lpair/parallel.hpp"
#include "lpair/simplezeros.hpp"
#include "lpair/stats.hpp"
#include "lpair/zero_cache.hpp"

namespace {

using namespace lpair;
using Cell = std::variant<std::string, double, long long>;

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw std::logic_error("table row width");
    rows_.push_back(std::move(row));
  }

  void print(std::ostream& os, bool as_json) const {
    if (as_json) {
      for (const auto& r : rows_) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.size(); ++i)
          std::visit([&](const auto& v) { j[header_[i]] = v; }, r[i]);
        os << j.dump() << '\n';
      }
      return;
    }
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv(r[i]);
      os << '\n';
    }
  }

 private:
  static std::string csv(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) {
      if (s->find_first_of(",\"\n") == std::string::npos) return *s;
      std::string q = "\"";
      for (char ch : *s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    if (const auto* d = std::get_if<double>(&c)) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", *d);
      return buf;
    }
    return std::to_string(std::get<long long>(c));
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

struct Globals {
  bool json = false;
  unsigned jobs = default_jobs();
  bool build_cache = false;
  std::string cache_dir;
  std::string output;
};

std::string character_id(const DirichletCharacter& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.generator_exponents().size(); ++i)
    s += (i ? ";" : "") + std::to_string(chi.generator_exponents()[i]);
  return s.empty() ? "-" : s;
}

ZeroCache open_cache(const Globals& g) {
  return ZeroCache(g.cache_dir.empty() ? ZeroCache::default_directory() : std::filesystem::path(g.cache_dir));
}

void emit(const Globals& g, const Table& t) {
  if (g.output.empty()) {
    t.print(std::cout, g.json);
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ConfigError("cannot open output file " + g.output);
  t.print(out, g.json);
}

Cell stat_kind(const StatResult& r) { return to_string(r.kind); }

// ---- subcommands ------------------------------------------------------------

void run_zeros(const Globals& g, double Q, std::uint32_t single_q, double T) {
  ZeroCache cache = open_cache(g);
  ZeroSource src = cache.source(true, g.jobs);
  std::vector<std::uint32_t> moduli;
  if (single_q) {
    moduli.push_back(single_q);
  } else {
    const SmoothWeight W = SmoothWeight::bump();
    for (auto q = static_cast<std::uint32_t>(std::ceil(Q)); q <= static_cast<std::uint32_t>(2 * Q); ++q)
      if (W(q / Q) != 0.0) moduli.push_back(q);
  }
  Table t({"q", "character", "conductor", "parity", "T_max", "zeros", "expected", "slack", "complete"});
  for (const std::uint32_t q : moduli)
    for (const auto& cz : src(q, T))
      t.add({static_cast<long long>(q), character_id(cz.chi), static_cast<long long>(cz.chi.conductor()),
             static_cast<long long>(cz.chi.parity()), cz.scan.T, static_cast<long long>(cz.scan.zeros.size()),
             cz.scan.expected, cz.scan.slack, std::string(cz.scan.complete ? "true" : "false")});
  emit(g, t);
}

void run_explicit(const Globals& g, std::uint32_t q, double X, double T) {
  ZeroCache cache = open_cache(g);
  const auto zeros = cache.source(g.build_cache, g.jobs)(q, T);
  const ArithmeticTables tables(static_cast<std::uint32_t>(std::max(100.0, 10.0 * X)));
  const TestFunction phi = TestFunction::sinc_squared();
  Table t({"q", "character", "X", "T_max", "zero_sum_re", "zero_sum_im", "prime_re", "prime_im", "conductor_term",
           "residual", "archimedean", "complete_residual", "tail"});
  for (const auto& cz : zeros) {
    const LFunctionData data(cz.chi);
    const ExplicitFormula e = explicit_formula(tables, data, X, phi, cz.scan, T);
    t.add({static_cast<long long>(q), character_id(cz.chi), X, T, e.zero_side.real(), e.zero_side.imag(),
           e.prime.real(), e.prime.imag(), e.conductor, e.residual, e.archimedean, e.complete_residual, e.zero_tail});
  }
  emit(g, t);
}

Family load_family(const Globals& g, double Q, double T) {
  ZeroCache cache = open_cache(g);
  return build_family(Q, SmoothWeight::bump(), T, cache.source(g.build_cache, g.jobs));
}

void run_pair_correlation(const Globals& g, double Q, const std::vector<double>& alphas, double T) {
  const Family fam = load_family(g, Q, T);
  const FamilySums sums(fam, TestFunction::sinc_squared(), g.jobs);
  PairCorrConfig cfg;
  cfg.Q = Q;
  cfg.T_max = T;
  Table t({"kind", "Q", "alpha", "value", "truncation_budget", "wall_time", "prediction", "band"});
  const StatResult n = sums.n_phi();
  const double asym = cfg.W.hat_at_one() * euler_product(ProductKind::A0, 1000000).corrected.real() * Q *
                      std::log(Q) * cfg.phi.hat_l2();
  t.add({stat_kind(n), Q, 0.0, n.value, n.truncation_budget, n.wall_time, asym, 0.0});
  for (const double a : alphas) {
    cfg.alpha = a;
    cfg.validate();
    const StatResult f = sums.f_phi(a);
    const Prediction p = pair_correlation_prediction(cfg);
    t.add({stat_kind(f), Q, a, f.value, f.truncation_budget, f.wall_time, p.result.value, p.band});
  }
  emit(g, t);
}

void run_s_decomposition(const Globals& g, double Q, double X) {
  PairCorrConfig cfg;
  cfg.Q = Q;
  cfg.alpha = std::log(X) / std::log(Q);
  const auto limit = static_cast<std::uint32_t>(std::max({100.0, 2.0 * Q + 1.0, 8.0 * X}));
  const ArithmeticTables tables(limit);
  const SDecomposition s = s_decomposition(tables, cfg, true, g.jobs);
  const double main = s_diag_main_term(cfg);
  Table t({"kind", "Q", "alpha", "value", "truncation_budget", "wall_time", "route_i", "main_term"});
  t.add({stat_kind(s.total), Q, cfg.alpha, s.total.value, 0.0, s.total.wall_time, s.route_i, 0.0});
  t.add({stat_kind(s.diagonal), Q, cfg.alpha, s.diagonal.value, 0.0, s.diagonal.wall_time, 0.0, main});
  t.add({stat_kind(s.offdiagonal), Q, cfg.alpha, s.offdiagonal.value, 0.0, s.offdiagonal.wall_time, 0.0, 0.0});
  emit(g, t);
}

void run_constants(const Globals& g) {
  Table t({"name", "value", "truncation", "tail_bound", "wall_time"});
  auto timed = [](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto v = fn();
    return std::make_pair(v, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  constexpr std::uint32_t P = 1000000;
  constexpr std::uint32_t D = 10000000;
  const auto [a0, ta] = timed([] { return euler_product(ProductKind::A0, P); });
  t.add({std::string("A0"), a0.corrected.real(), double(P), a0.corrected_bound, ta});
  const auto [k0, tk] = timed([] { return euler_product(ProductKind::K, P, 0.0); });
  t.add({std::string("K(0)"), k0.corrected.real(), double(P), k0.corrected_bound, tk});
  const auto [g1, tg] = timed([] { return euler_product(ProductKind::g, P, 1.0); });
  t.add({std::string("g(1)"), g1.corrected.real(), double(P), g1.corrected_bound, tg});
  const auto [its, ti] = timed([] { return inverse_totient_series(D); });
  t.add({std::string("inverse_totient_sum"), its.value, double(D), its.tail_bound, ti});
  const auto [oz, to] = timed([] { return ozluk_constant(D, P); });
  t.add({std::string("ozluk"), oz.value, double(D), oz.bound, to});
  emit(g, t);
}

void run_simple_zeros(const Globals& g, double Q, double alpha, double T) {
  const Family fam = load_family(g, Q, T);
  const TestFunction phi = TestFunction::sinc_squared();
  const KernelSpec spec(alpha);
  const SimpleZeroBound b = simple_zero_bound(fam, phi, spec);
  Table t({"Q", "alpha", "empirical", "asymptotic", "simple_proportion", "N_phi", "budget"});
  t.add({Q, alpha, b.empirical, b.asymptotic, b.simple_proportion, b.n_phi, b.budget});
  emit(g, t);
}

void run_bdh(const Globals& g, std::uint32_t x, std::uint32_t Q) {
  const ArithmeticTables tables(std::max({x, Q, 2u}));
  const StatResult m = bdh_variance(tables, x, Q, g.jobs);
  const double norm = static_cast<double>(x) * Q * std::log(static_cast<double>(x));
  Table t({"kind", "x", "Q", "value", "ratio", "wall_time"});
  t.add({stat_kind(m), static_cast<long long>(x), static_cast<long long>(Q), m.value, m.value / norm, m.wall_time});
  emit(g, t);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw CLI::ValidationError("--alphas", "not a number: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--alphas", "empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpair: zeros of Dirichlet L-functions and their pair correlation"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON lines instead of CSV");
  app.add_option("--jobs", g.jobs, "Worker threads (default: logical cores)")->check(CLI::PositiveNumber);
  app.add_flag("--build-cache", g.build_cache, "Scan and store zeros missing from the cache");
  app.add_option("--cache-dir", g.cache_dir, "Zero cache directory (default: $LPAIR_ZERO_CACHE)");
  app.add_option("--output", g.output, "Write the table to this file instead of stdout");

  double Q = 25, T = 200, X = 5, alpha = 1.9;
  std::uint32_t q = 0, xi = 10000, Qi = 1000;
  std::string alphas = "0.25,0.5,0.75";

  auto* zeros = app.add_subcommand("zeros", "Scan and cache zeros of every primitive character in the family");
  zeros->add_option("--Q", Q, "Family scale (moduli with W(q/Q) > 0)");
  zeros->add_option("--q", q, "A single modulus instead of a family");
  zeros->add_option("--Tmax", T, "Height")->check(CLI::Range(1.0, kMaxHeight));

  auto* ef = app.add_subcommand("explicit-formula", "Explicit-formula residual for every primitive character mod q");
  ef->add_option("--q", q, "Modulus")->required();
  ef->add_option("--X", X, "X")->required();
  double T_ef = 500;
  ef->add_option("--Tmax", T_ef, "Zero-sum height");

  auto* pc = app.add_subcommand("pair-correlation", "N_Phi(Q) and F_Phi(Q^alpha) with the asymptotic prediction");
  pc->add_option("--Q", Q, "Family scale")->required();
  pc->add_option("--alphas", alphas, "Comma-separated alpha values");
  pc->add_option("--Tmax", T, "Zero-sum height");

  auto* sd = app.add_subcommand("s-decomposition", "S = S_D + S_N by the two routes");
  sd->add_option("--Q", Q, "Family scale")->required();
  sd->add_option("--X", X, "X")->required();

  auto* cs = app.add_subcommand("constants", "Euler-product constants");

  auto* sz = app.add_subcommand("simple-zeros", "Lower bound for the weighted proportion of simple zeros");
  sz->add_option("--Q", Q, "Family scale")->required();
  sz->add_option("--alpha", alpha, "Fejer kernel alpha in (1, 2]");
  sz->add_option("--Tmax", T, "Zero-sum height");

  auto* bdh = app.add_subcommand("bdh", "Mean square of psi(x; q, a) - x/phi(q)");
  bdh->add_option("--x", xi, "x")->required();
  bdh->add_option("--Q", Qi, "Q")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*zeros) {
      if (q == 0 && !(Q > 1.0)) throw ConfigError("zeros: need --Q > 1 or --q");
      run_zeros(g, Q, q, T);
    } else if (*ef) {
      run_explicit(g, q, X, T_ef);
    } else if (*pc) {
      run_pair_correlation(g, Q, parse_list(alphas), T);
    } else if (*sd) {
      run_s_decomposition(g, Q, X);
    } else if (*cs) {
      run_constants(g);
    } else if (*sz) {
      run_simple_zeros(g, Q, alpha, T);
    } else if (*bdh) {
      run_bdh(g, xi, Qi);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "lpair: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
