// weilzeta command-line front end.

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/explicit_formula.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/motive.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/weil.hpp"
#include "weilzeta/zeta.hpp"

namespace wz = weilzeta;
using wz::cli::Json;
using wz::cli::Report;

namespace {

struct Common {
  std::string format;
  unsigned workers = 0;  // 0: WEIL_WORKERS or 1
  std::uint64_t work_limit = wz::variety::CountOptions{}.work_limit;
  std::string method = "auto";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wz::Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned default_workers() {
  const char* env = std::getenv("WEIL_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) throw wz::Error("invalid WEIL_WORKERS: " + std::string(env));
  return static_cast<unsigned>(v);
}

wz::variety::CountOptions count_options(const Common& c) {
  wz::variety::CountOptions o;
  o.workers = c.workers ? c.workers : default_workers();
  o.work_limit = c.work_limit;
  if (c.method == "auto") o.method = wz::variety::CountMethod::automatic;
  else if (c.method == "exhaustive") o.method = wz::variety::CountMethod::exhaustive;
  else if (c.method == "fibre") o.method = wz::variety::CountMethod::fibre;
  else throw wz::Error("unknown counting method: " + c.method);
  return o;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw wz::Error("integer overflow: " + std::to_string(b) + "^" + std::to_string(e));
    r *= b;
  }
  return r;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string file;
  std::uint32_t p = 0;
  std::optional<unsigned> n;
  unsigned n_max = 1;
  bool projective = false;
};

Report run_count(const CountArgs& a, const Common& c) {
  const auto sys = wz::variety::parse_system(read_file(a.file), a.projective);
  const auto opts = count_options(c);
  const unsigned lo = a.n ? *a.n : 1, hi = a.n ? *a.n : a.n_max;
  if (lo == 0) throw wz::Error("n must be at least 1");
  Report r;
  r.add_meta("command", "count");
  r.add_meta("p", a.p);
  r.add_meta("variables", sys.num_vars());
  r.add_meta("equations", sys.polys().size());
  r.add_meta("space", a.projective ? "projective" : "affine");
  r.columns = {"n", "q", "count"};
  for (unsigned n = lo; n <= hi; ++n) {
    const auto f = wz::ff::make_field(a.p, n);
    const auto count = a.projective ? wz::variety::count_projective_variety(sys, f, opts)
                                    : wz::variety::count_affine(sys, f, opts);
    r.rows.push_back({n, f.order(), count});
  }
  return r;
}

struct PredictArgs {
  std::uint32_t p = 0;
  std::int64_t n1 = 0;
  unsigned n_max = 12;
  std::string file;
};

Report run_predict(const PredictArgs& a, const Common& c) {
  if (!wz::ff::is_prime(a.p)) throw wz::Error("not prime: " + std::to_string(a.p));
  const auto alpha = wz::weil::hasse_alpha(a.p, a.n1);
  std::optional<wz::variety::PolySystem> sys;
  if (!a.file.empty()) sys = wz::variety::parse_system(read_file(a.file));
  const auto opts = count_options(c);

  Report r;
  r.add_meta("command", "predict");
  r.add_meta("p", a.p);
  r.add_meta("N1", a.n1);
  r.add_meta("trace", alpha.trace);
  r.add_meta("alpha", wz::format_complex(alpha.alpha));
  r.add_meta("hasse_bound_holds", true);  // hasse_alpha rejects |a| > 2 sqrt(p)
  r.columns = {"n", "q", "alpha_n", "alpha_n_sum", "correction", "predicted"};
  if (sys) r.columns.insert(r.columns.end(), {"brute_force", "match"});
  bool all_match = true;
  for (unsigned n = 1; n <= a.n_max; ++n) {
    std::vector<Json> row{n, ipow(a.p, n), wz::format_complex(wz::weil::alpha_power(alpha, n)),
                          wz::weil::power_sum(alpha, n), wz::weil::correction_term(alpha, n),
                          wz::weil::predict_affine_count(alpha, n)};
    if (sys) {
      const auto brute = wz::variety::count_affine(*sys, wz::ff::make_field(a.p, n), opts);
      const bool match = static_cast<std::int64_t>(brute) == wz::weil::predict_affine_count(alpha, n);
      all_match &= match;
      row.insert(row.end(), {brute, match});
    }
    r.rows.push_back(std::move(row));
  }
  if (sys) r.add_meta("all_match", all_match);
  return r;
}

struct ZetaArgs {
  std::uint32_t p = 0;
  unsigned genus = 1;
  std::vector<std::uint64_t> counts;
  std::string file;
  unsigned n_max = 0;  // 0: 2 genus + 4
  bool projective = false;
  unsigned at_infinity = 1;
};

Report run_zeta(const ZetaArgs& a, const Common& c) {
  if (!wz::ff::is_prime(a.p)) throw wz::Error("not prime: " + std::to_string(a.p));
  if (a.genus == 0) throw wz::Error("invalid genus: must be at least 1");
  wz::variety::CountSequence seq{a.p, a.counts, true};
  if (!a.file.empty()) {
    if (!a.counts.empty()) throw wz::Error("give either --counts or a curve file, not both");
    const unsigned n_max = a.n_max ? a.n_max : 2 * a.genus + 4;
    const auto sys = wz::variety::parse_system(read_file(a.file), a.projective);
    seq = wz::variety::count_sequence(sys, a.p, n_max, count_options(c));
    if (!a.projective) {
      for (auto& v : seq.counts) v += a.at_infinity;
    }
    seq.projective = true;
  } else if (a.counts.empty()) {
    throw wz::Error("insufficient counts: give --counts or a curve file");
  }
  const auto series = wz::zeta::zeta_series(seq);
  const auto z = wz::zeta::rational_reconstruct(series, 2 * a.genus, wz::zeta::curve_denominator(a.p), a.p);

  Report r;
  r.add_meta("command", "zeta");
  r.add_meta("q", a.p);
  r.add_meta("genus", a.genus);
  r.add_meta("counts_used", seq.counts.size());
  r.add_meta("zeta", wz::zeta::format_rational_zeta(z));
  r.add_meta("numerator", wz::zeta::format_poly(z.numerator));
  r.add_meta("denominator", wz::zeta::format_poly(z.denominator));
  bool rh = true;
  double worst = 0.0;
  r.columns = {"kind", "weight", "root", "re", "im", "modulus"};
  auto add_roots = [&](const wz::zeta::WeightTable& table, const char* kind) {
    for (const auto& [k, roots] : table) {
      const auto check = wz::weil::verify_weil_rh(roots, static_cast<double>(a.p), k);
      rh &= check.holds;
      worst = std::max(worst, check.max_deviation);
      for (const auto& root : roots) {
        r.rows.push_back({kind, k, wz::format_complex(root), root.real(), root.imag(), std::abs(root)});
      }
    }
  };
  add_roots(z.numerator_roots, "zero");
  add_roots(z.denominator_roots, "pole");
  r.add_meta("rh_holds", rh);
  r.add_meta("rh_max_relative_deviation", worst);
  return r;
}

struct MotiveArgs {
  std::string expr;
  std::uint64_t q = 0;
  unsigned n_max = 3;
};

Report run_motive(const MotiveArgs& a) {
  const auto m = wz::motive::parse_motive(a.expr, a.q);
  Report r;
  r.add_meta("command", "motive");
  r.add_meta("q", a.q);
  r.add_meta("expression", a.expr);
  r.add_meta("rank", m.rank());
  for (const auto& [k, roots] : m.pieces()) {
    std::string list = "[";
    for (std::size_t i = 0; i < roots.size(); ++i) list += (i ? ", " : "") + wz::format_complex(roots[i]);
    r.add_meta("weight " + std::to_string(k), list + "]");
  }
  r.columns = {"n", "count"};
  for (unsigned n = 1; n <= a.n_max; ++n) r.rows.push_back({n, wz::motive::point_count(m, n)});
  return r;
}

struct PspaceArgs {
  unsigned dim = 1;
  std::uint64_t q = 0;
  unsigned n_max = 1;
};

Report run_pspace(const PspaceArgs& a, const Common& c) {
  const auto [p, e] = wz::ff::split_prime_power(a.q);
  Report r;
  r.add_meta("command", "pspace");
  r.add_meta("dim", a.dim);
  r.add_meta("q", a.q);
  r.columns = {"n", "field_size", "count", "closed_form"};
  for (unsigned n = 1; n <= a.n_max; ++n) {
    const auto f = wz::ff::make_field(p, e * n);
    std::uint64_t closed = 0;
    for (unsigned k = 0; k <= a.dim; ++k) closed += ipow(f.order(), k);
    r.rows.push_back({n, f.order(), wz::variety::count_projective_space(a.dim, f, count_options(c)), closed});
  }
  return r;
}

struct PiArgs {
  std::string zeros = WEILZETA_DEFAULT_ZERO_FILE;
  std::size_t K = 13;
  double x_min = 2.0, x_max = 20.0, step = 0.5;
};

Report run_pi(const PiArgs& a) {
  if (!(a.step > 0)) throw wz::Error("step must be positive");
  if (!(a.x_min >= 2) || a.x_max < a.x_min) throw wz::Error("need 2 <= x-min <= x-max");
  if (a.x_max > 1e8) throw wz::Error("x-max beyond sieve range (1e8)");
  const auto zeros = wz::primes::load_zeros(a.zeros);
  const wz::primes::PrimeCounter pc(static_cast<std::uint64_t>(std::floor(a.x_max)));
  Report r;
  r.add_meta("command", "pi");
  r.add_meta("K", a.K);
  r.add_meta("zeros_available", zeros.size());
  r.columns = {"x", "pi", "li", "approx"};
  const auto steps = static_cast<std::uint64_t>(std::floor((a.x_max - a.x_min) / a.step + 1e-9));
  for (std::uint64_t i = 0; i <= steps; ++i) {
    const double x = a.x_min + static_cast<double>(i) * a.step;
    r.rows.push_back(
        {x, wz::primes::sieve_pi(x, pc), wz::primes::li(x), wz::primes::riemann_approx(x, zeros, a.K)});
  }
  return r;
}

Report run_reformat(const std::string& from) {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return wz::cli::parse_report(buf.str(), wz::cli::parse_format(from));
}

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts, Frobenius eigenvalues, zeta functions, motives and prime counting."};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "csv | json | table (default: table on a terminal, else csv)")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--workers", common.workers, "counting threads (default: WEIL_WORKERS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--work-limit", common.work_limit, "maximum enumerated tuples per count");
  app.add_option("--method", common.method, "auto | exhaustive | fibre")
      ->check(CLI::IsMember({"auto", "exhaustive", "fibre"}));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "point counts of a polynomial system over F_{p^n}");
  count->add_option("file", count_args.file, "polynomial system file")->required();
  count->add_option("--p", count_args.p, "characteristic")->required();
  auto* n_opt = count->add_option("--n", count_args.n, "single extension degree");
  count->add_option("--n-max", count_args.n_max, "count n = 1..n-max")->excludes(n_opt);
  count->add_flag("--projective", count_args.projective, "homogeneous system, count in projective space");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Frobenius eigenvalue from N1 and predicted counts");
  predict->add_option("--p", predict_args.p, "prime")->required();
  predict->add_option("--N1", predict_args.n1, "affine count over F_p")->required();
  predict->add_option("--n-max", predict_args.n_max, "rows n = 1..n-max")->capture_default_str();
  predict->add_option("--file", predict_args.file, "affine curve file for brute-force comparison");

  ZetaArgs zeta_args;
  auto* zeta = app.add_subcommand("zeta", "rational zeta function of a curve over F_p");
  zeta->add_option("--p", zeta_args.p, "prime")->required();
  zeta->add_option("--genus", zeta_args.genus, "curve genus")->capture_default_str();
  zeta->add_option("--counts", zeta_args.counts, "projective counts N_1,N_2,...")->delimiter(',');
  zeta->add_option("file", zeta_args.file, "curve file (counted for n = 1..n-max)");
  zeta->add_option("--n-max", zeta_args.n_max, "counts to take from the file (default 2 genus + 4)");
  zeta->add_flag("--projective", zeta_args.projective, "curve file is homogeneous");
  zeta->add_option("--at-infinity", zeta_args.at_infinity, "points at infinity added to affine counts")
      ->capture_default_str();

  MotiveArgs motive_args;
  auto* motive = app.add_subcommand("motive", "weight-graded eigenvalues and point counts of a motive");
  motive->add_option("expr", motive_args.expr, "e.g. 'P^2', '1 + L^2', 'elliptic a=-2 p=2'")->required();
  motive->add_option("--q", motive_args.q, "base field size")->required();
  motive->add_option("--n-max", motive_args.n_max, "counts for n = 1..n-max")->capture_default_str();

  PspaceArgs pspace_args;
  auto* pspace = app.add_subcommand("pspace", "points of P^dim over F_{q^n}");
  pspace->add_option("--dim", pspace_args.dim, "dimension")->required();
  pspace->add_option("--q", pspace_args.q, "base field size")->required();
  pspace->add_option("--n-max", pspace_args.n_max, "rows n = 1..n-max")->capture_default_str();

  PiArgs pi_args;
  auto* pi = app.add_subcommand("pi", "pi(x), li(x) and the explicit formula with K zero pairs");
  pi->add_option("--zeros", pi_args.zeros, "zero ordinate file")->capture_default_str();
  pi->add_option("--K", pi_args.K, "zero pairs")->capture_default_str();
  pi->add_option("--x-min", pi_args.x_min)->capture_default_str();
  pi->add_option("--x-max", pi_args.x_max)->capture_default_str();
  pi->add_option("--step", pi_args.step)->capture_default_str();

  std::string reformat_from = "csv";
  auto* reformat = app.add_subcommand("reformat", "read a csv or json report on stdin and emit it again");
  reformat->add_option("--from", reformat_from, "input format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "weilzeta: error: " << one_line(e.what()) << '\n';
    return e.get_exit_code() ? e.get_exit_code() : 2;
  }

  try {
    Report report;
    if (*count) report = run_count(count_args, common);
    else if (*predict) report = run_predict(predict_args, common);
    else if (*zeta) report = run_zeta(zeta_args, common);
    else if (*motive) report = run_motive(motive_args);
    else if (*pspace) report = run_pspace(pspace_args, common);
    else if (*pi) report = run_pi(pi_args);
    else report = run_reformat(reformat_from);

    wz::cli::Format format;
    if (!common.format.empty()) format = wz::cli::parse_format(common.format);
    else if (*reformat) format = wz::cli::parse_format(reformat_from);
    else format = isatty(STDOUT_FILENO) ? wz::cli::Format::table : wz::cli::Format::csv;

    std::ostringstream out;
    wz::cli::emit(report, format, out);
    std::cout << out.str();
    std::cout.flush();
    return std::cout ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "weilzeta: error: " << one_line(e.what()) << '\n';
    return 1;
  }
}
