// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Criteria 1-9 each build a text report; criterion 10
// requires those reports to be byte-identical across runs and worker counts.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weilzeta/error.hpp"
#include "weilzeta/explicit_formula.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/motive.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/weil.hpp"
#include "weilzeta/zeta.hpp"

namespace wz = weilzeta;
using wz::Complex;

namespace {

// Pinned tolerances.
constexpr double kCurveRootTol = 1e-9;       // criterion 5, | |alpha| - sqrt 2 |
constexpr double kGenus2RootTol = 1e-6;      // criterion 6
constexpr double kMaxErrK13 = 1.0;           // criterion 8
constexpr double kOracleTol = 1e-6;          // criterion 8, RMS against the mpmath oracle
constexpr double kRhRatioCap = 1.5;          // criterion 9
constexpr double kRhOracleSup = 0.34898255456272875;
constexpr double kRhOracleTol = 1e-9;
constexpr double kBudget1 = 60.0, kBudget3 = 10.0, kBudget8 = 30.0, kBudget9 = 10.0;  // seconds

const char* kEllipticCurve = "y^2 + y = x^3 + x";
const char* kGenus2Curve = "y^2 + y = x^5";

// Golden data.
const std::vector<std::uint64_t> kGoldenCounts{4, 4, 4, 24, 24, 64, 144, 224, 544, 1024, 1984, 4224};
const std::vector<std::int64_t> kGoldenCorrections{2, 0, -4, 8, -8, 0, 16, -32, 32, 0};
// reference alpha^n column, n = 1..10; its n = 9 entry is the conjugate of the exact
// alpha^9 = 16 alpha = -16 + 16i.
const std::vector<Complex> kReferenceAlphaPowers{{-1, 1}, {0, -2}, {2, 2},     {-4, 0},   {4, -4},
                                               {0, 8},  {-8, -8}, {16, 0}, {-16, -16}, {0, -32}};
const std::vector<std::int64_t> kReferenceAlphaSums{-2, 0, 4, -8, 8, 0, -16, 32, -32, 0};
// mpmath oracle (tests/oracles/explicit_formula_oracle.py --full)
const std::vector<double> kOracleRms{0.5478404620304418, 0.30467328179636616, 0.18846944632095874, 0.12887682997826888};

struct Outcome {
  bool pass = false;
  std::string summary;
  std::string report;
  double seconds = 0.0;
};

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string num(Complex z) { return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i"; }

wz::variety::CountOptions opts(unsigned workers, wz::variety::CountMethod m = wz::variety::CountMethod::automatic) {
  wz::variety::CountOptions o;
  o.workers = workers;
  o.method = m;
  return o;
}

std::vector<std::uint64_t> affine_counts(const char* curve, std::uint32_t p, unsigned n_max, unsigned workers,
                                         wz::variety::CountMethod m) {
  const auto sys = wz::variety::parse_system(curve);
  std::vector<std::uint64_t> out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(wz::variety::count_affine(sys, wz::ff::make_field(p, n), opts(workers, m)));
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1(unsigned workers) {
  Outcome o;
  const auto counts = affine_counts(kEllipticCurve, 2, 12, workers, wz::variety::CountMethod::exhaustive);
  std::ostringstream r;
  for (auto c : counts) r << c << ' ';
  o.report = r.str();
  o.pass = counts == kGoldenCounts;
  o.summary = "exhaustive affine counts of y^2 + y = x^3 + x over F_2^n, n = 1..12: " + o.report;
  return o;
}

Outcome criterion2(unsigned workers) {
  Outcome o;
  const auto counts = affine_counts(kEllipticCurve, 2, 10, workers, wz::variety::CountMethod::exhaustive);
  const auto alpha = wz::weil::hasse_alpha(2, static_cast<std::int64_t>(counts[0]));
  std::ostringstream r;
  bool ok = alpha.alpha == Complex(-1, 1);
  std::vector<unsigned> conjugated;
  for (unsigned n = 1; n <= 10; ++n) {
    const std::int64_t by_subtraction = static_cast<std::int64_t>(counts[n - 1]) - (std::int64_t{1} << n);
    const std::int64_t by_recurrence = wz::weil::correction_term(alpha, n);
    const Complex power = wz::weil::alpha_power(alpha, n);
    const std::int64_t sum = wz::weil::power_sum(alpha, n);
    ok &= by_subtraction == kGoldenCorrections[n - 1] && by_recurrence == kGoldenCorrections[n - 1];
    ok &= sum == kReferenceAlphaSums[n - 1] && 2 * power.real() == static_cast<double>(sum);
    if (power != kReferenceAlphaPowers[n - 1]) {
      // only a conjugated entry with the right real part is tolerated, and it is reported
      ok &= power == std::conj(kReferenceAlphaPowers[n - 1]);
      conjugated.push_back(n);
    }
    r << n << ' ' << num(power) << ' ' << sum << ' ' << by_subtraction << ' ' << by_recurrence << '\n';
  }
  ok &= conjugated == std::vector<unsigned>{9};
  o.report = r.str();
  o.pass = ok;
  o.summary = "corrections (2, 0, -4, 8, -8, 0, 16, -32, 32, 0) by subtraction and by recurrence; alpha = -1 + i;"
              " alpha^4 = " + wz::format_complex(wz::weil::alpha_power(alpha, 4)) + ", alpha^4 + conj = " +
              std::to_string(wz::weil::power_sum(alpha, 4)) + "; alpha^n column matches except n = 9, where the"
              " tabulated -16 - 16i is the conjugate of the exact -16 + 16i (sum -32 agrees)";
  return o;
}

Outcome criterion3(unsigned workers) {
  Outcome o;
  std::ostringstream r;
  bool ok = true;
  std::size_t curves = 0, exhaustive_checks = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    std::vector<wz::ff::Field> fields;
    for (unsigned n = 1; n <= 4; ++n) fields.push_back(wz::ff::make_field(p, n));
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        if ((4ull * a * a * a + 27ull * b * b) % p == 0) continue;
        ++curves;
        const std::string eq = "y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b);
        const auto sys = wz::variety::parse_system(eq);
        const auto n1 = static_cast<std::int64_t>(wz::variety::count_affine(sys, fields[0], opts(workers)));
        const std::int64_t trace = static_cast<std::int64_t>(p) - n1;
        ok &= trace * trace <= 4 * static_cast<std::int64_t>(p);
        const auto alpha = wz::weil::hasse_alpha(p, n1);
        r << p << ' ' << a << ' ' << b << ':';
        for (unsigned n = 1; n <= 4; ++n) {
          const auto brute = static_cast<std::int64_t>(wz::variety::count_affine(sys, fields[n - 1], opts(workers)));
          ok &= brute == wz::weil::predict_affine_count(alpha, n);
          if (n <= 2) {
            // the fibre counter against plain enumeration
            const auto plain = wz::variety::count_affine(sys, fields[n - 1], opts(workers, wz::variety::CountMethod::exhaustive));
            ok &= static_cast<std::int64_t>(plain) == brute;
            ++exhaustive_checks;
          }
          r << ' ' << brute;
        }
        r << '\n';
      }
    }
  }
  o.report = r.str();
  o.pass = ok && curves > 0;
  o.summary = std::to_string(curves) + " nonsingular curves y^2 = x^3 + ax + b, p in {3,5,7,11,13}: Hasse bound holds and"
              " predictions match counts for n = 1..4 (" + std::to_string(exhaustive_checks) +
              " counts re-checked by full enumeration)";
  return o;
}

Outcome criterion4(unsigned workers) {
  Outcome o;
  std::ostringstream r;
  bool ok = true;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto [p, e] = wz::ff::split_prime_power(q);
    const auto f = wz::ff::make_field(p, e);
    std::uint64_t closed = 0, pw = 1;
    for (unsigned dim = 0; dim <= 3; ++dim, pw *= q) {
      closed += pw;
      const auto count = wz::variety::count_projective_space(dim, f, opts(workers));
      ok &= count == closed;
      r << q << ' ' << dim << ' ' << count << '\n';
    }
  }
  o.report = r.str();
  o.pass = ok;
  o.summary = "enumerated #P^dim(F_q) = 1 + q + ... + q^dim for dim <= 3, q in {2,3,4,5,7,8,9}";
  return o;
}

Outcome criterion5(unsigned workers) {
  Outcome o;
  auto counts = affine_counts(kEllipticCurve, 2, 12, workers, wz::variety::CountMethod::exhaustive);
  for (auto& c : counts) c += 1;  // the point at infinity
  const auto series = wz::zeta::zeta_series({2, counts, true});
  const auto z = wz::zeta::rational_reconstruct(series, 2, wz::zeta::curve_denominator(2), 2);
  bool ok = z.numerator == wz::zeta::IntPoly{1, 2, 2} && z.denominator == wz::zeta::IntPoly{1, -3, 2};
  double worst = 0.0;
  const auto& roots = z.numerator_roots.at(1);
  ok &= z.numerator_roots.size() == 1 && roots.size() == 2;
  for (const auto& a : roots) worst = std::max(worst, std::abs(std::abs(a) - std::sqrt(2.0)));
  ok &= worst <= kCurveRootTol;
  const auto again = wz::zeta::expand_rational(z.numerator, z.denominator, 12);
  ok &= series.order() == 12 && again == series;
  std::ostringstream r;
  r << wz::zeta::format_rational_zeta(z) << '\n';
  for (const auto& c : series.coeffs) r << c << ' ';
  r << '\n';
  for (const auto& a : roots) r << num(a) << ' ';
  o.report = r.str();
  o.pass = ok;
  o.summary = "Z(t) = " + wz::zeta::format_rational_zeta(z) + "; max | |alpha| - sqrt 2 | = " + num(worst) +
              " (tol 1e-9); re-expansion equals the series through t^12";
  return o;
}

Outcome criterion6(unsigned workers) {
  Outcome o;
  auto counts = affine_counts(kGenus2Curve, 2, 4, workers, wz::variety::CountMethod::exhaustive);
  for (auto& c : counts) c += 1;
  const auto w = wz::weil::weil_numbers_from_counts(2, 2, {2, {counts[0], counts[1]}, true});
  const auto n3 = wz::weil::predict_curve_count(w, 3), n4 = wz::weil::predict_curve_count(w, 4);
  bool ok = n3 == static_cast<std::int64_t>(counts[2]) && n4 == static_cast<std::int64_t>(counts[3]);
  double worst = 0.0;
  for (const auto& a : w.roots) worst = std::max(worst, std::abs(std::abs(a) - std::sqrt(2.0)));
  ok &= w.roots.size() == 4 && worst <= kGenus2RootTol;
  std::ostringstream r;
  for (auto c : counts) r << c << ' ';
  r << "| ";
  for (auto b : w.numerator) r << b << ' ';
  o.report = r.str();
  o.pass = ok;
  o.summary = "y^2 + y = x^5: numerator from N1 = " + std::to_string(counts[0]) + ", N2 = " + std::to_string(counts[1]) +
              " predicts N3 = " + std::to_string(n3) + ", N4 = " + std::to_string(n4) +
              " (brute force " + std::to_string(counts[2]) + ", " + std::to_string(counts[3]) +
              "); max | |alpha| - sqrt 2 | = " + num(worst);
  return o;
}

Outcome criterion7(unsigned workers) {
  Outcome o;
  std::ostringstream r;
  bool ok = true;
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto [p, e] = wz::ff::split_prime_power(q);
    for (unsigned d = 0; d <= 3; ++d) {
      const auto m = wz::motive::motive_of_projective_space(d, q);
      for (unsigned n = 1; n <= 3; ++n) {
        const auto enumerated = wz::variety::count_projective_space(d, wz::ff::make_field(p, e * n), opts(workers));
        ok &= wz::motive::point_count(m, n) == static_cast<std::int64_t>(enumerated);
        r << enumerated << ' ';
      }
    }
  }
  r << '\n';
  const auto counts = affine_counts(kEllipticCurve, 2, 12, workers, wz::variety::CountMethod::exhaustive);
  const auto e = wz::motive::motive_of_elliptic_curve(wz::weil::alpha_from_trace(2, -2));
  for (unsigned n = 1; n <= 12; ++n) {
    const auto c = wz::motive::point_count(e, n);
    ok &= c == static_cast<std::int64_t>(counts[n - 1]) + 1;
    r << c << ' ';
  }
  r << '\n';

  std::mt19937_64 rng(20260101);
  std::size_t pairs = 0;
  for (std::uint64_t q : {2u, 3u, 5u, 4u}) {
    const auto [p, ex] = wz::ff::split_prime_power(q);
    const auto bound = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(p))));
    std::uniform_int_distribution<std::int64_t> trace(-bound, bound);
    std::uniform_int_distribution<unsigned> pick(0, 3);
    auto random_motive = [&] {
      wz::motive::Motive m = wz::motive::motive_of_projective_space(pick(rng) % 3, q);
      if (ex == 1 && pick(rng) >= 2) m = wz::motive::direct_sum(m, wz::motive::motive_of_elliptic_curve(
                                                                          wz::weil::alpha_from_trace(p, trace(rng))));
      if (pick(rng) == 3) m = wz::motive::tensor(m, wz::motive::Motive::lefschetz(q, 1));
      if (pick(rng) == 0) m = wz::motive::direct_sum(m, wz::motive::Motive::unit(q));
      return m;
    };
    for (int t = 0; t < 25; ++t, ++pairs) {
      const auto a = random_motive(), b = random_motive();
      const auto sum = wz::motive::direct_sum(a, b), prod = wz::motive::tensor(a, b);
      for (unsigned n = 1; n <= 3; ++n) {
        const auto ca = wz::motive::point_count(a, n), cb = wz::motive::point_count(b, n);
        ok &= wz::motive::point_count(sum, n) == ca + cb;
        ok &= wz::motive::point_count(prod, n) == ca * cb;
        r << ca << ' ' << cb << ' ';
      }
    }
  }
  o.report = r.str();
  o.pass = ok && pairs == 100;
  o.summary = "h(P^d) counts equal enumeration (d <= 3, n <= 3, q in {2,3,4,5}); h(E) for alpha = -1 + i equals"
              " brute force + 1 for n = 1..12; additivity and multiplicativity exact on " + std::to_string(pairs) +
              " random pairs";
  return o;
}

Outcome criterion8(unsigned) {
  Outcome o;
  const auto zeros = wz::primes::load_zeros(WEILZETA_ZERO_FILE);
  const wz::primes::PrimeCounter pc(230);
  const std::vector<std::size_t> ks{0, 13, 50, 118};
  std::vector<double> sq(ks.size(), 0.0);
  double max13 = 0.0;
  std::size_t points = 0;
  for (double x = 2.5; x <= 230.0; x += 1.0, ++points) {
    const auto approx = wz::primes::riemann_approx_multi(x, zeros, ks);
    const double pi = static_cast<double>(wz::primes::sieve_pi(x, pc));
    for (std::size_t i = 0; i < ks.size(); ++i) sq[i] += (approx[i] - pi) * (approx[i] - pi);
    if (x <= 20.0) max13 = std::max(max13, std::abs(approx[1] - pi));
  }
  std::vector<double> rms;
  for (double s : sq) rms.push_back(std::sqrt(s / static_cast<double>(points)));
  bool ok = max13 <= kMaxErrK13;
  bool oracle = true;
  for (std::size_t i = 0; i < rms.size(); ++i) {
    if (i) ok &= rms[i] < rms[i - 1];
    oracle &= std::abs(rms[i] - kOracleRms[i]) <= kOracleTol;
  }
  ok &= oracle;
  std::ostringstream r;
  r << num(max13);
  for (double v : rms) r << ' ' << num(v);
  o.report = r.str();
  o.pass = ok;
  std::ostringstream s;
  s << std::setprecision(6) << "K = 13 max |err| on x = 2.5..19.5 is " << max13 << " (<= 1.0); RMS on x = 2.5..229.5 for K = 0, 13, 50, 118: "
    << rms[0] << ", " << rms[1] << ", " << rms[2] << ", " << rms[3] << " (strictly decreasing; oracle agreement within 1e-6: "
    << (oracle ? "yes" : "no") << ")";
  o.summary = s.str();
  return o;
}

Outcome criterion9(unsigned) {
  Outcome o;
  const wz::primes::PrimeCounter pc(100000);
  const double r4 = wz::primes::rh_bound_ratio(10000, pc);
  const double r5 = wz::primes::rh_bound_ratio(100000, pc);
  o.pass = std::isfinite(r5) && r5 <= kRhRatioCap && r5 <= r4 + kRhOracleTol && std::abs(r5 - kRhOracleSup) <= kRhOracleTol;
  o.report = num(r4) + ' ' + num(r5);
  std::ostringstream s;
  s << std::setprecision(12) << "rh_bound_ratio(1e4) = " << r4 << ", rh_bound_ratio(1e5) = " << r5
    << " (<= 1.5, no increase, oracle sup 0.348982554563)";
  o.summary = s.str();
  return o;
}

using Criterion = std::function<Outcome(unsigned)>;

std::vector<Outcome> run_all(const std::vector<Criterion>& criteria, unsigned workers) {
  std::vector<Outcome> out;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c(workers);
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("error: ") + e.what();
      o.report = o.summary;
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                        criterion6, criterion7, criterion8, criterion9};
  auto first = run_all(criteria, 1);
  // runtime budgets apply to the single-worker run
  const double budgets[] = {kBudget1, 0, kBudget3, 0, 0, 0, 0, kBudget8, kBudget9};
  bool all = true;
  for (std::size_t i = 0; i < first.size(); ++i) {
    auto& o = first[i];
    if (budgets[i] > 0 && o.seconds > budgets[i]) {
      o.pass = false;
      o.summary += "; exceeded the " + num(budgets[i]) + " s budget";
    }
    all &= o.pass;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << o.seconds;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " [" << t.str()
              << " s]" << std::endl;
  }

  bool same = true;
  std::string detail;
  double worker8_c1 = 0.0;
  for (unsigned workers : {1u, 2u, 4u, 8u}) {
    const auto again = run_all(criteria, workers);
    if (workers == 8) worker8_c1 = again[0].seconds;
    for (std::size_t i = 0; i < again.size(); ++i) {
      if (again[i].report != first[i].report) {
        same = false;
        detail += " criterion " + std::to_string(i + 1) + " differs at " + std::to_string(workers) + " workers;";
      }
    }
  }
  all &= same;
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << worker8_c1;
  std::cout << "criterion 10: " << (same ? "PASS" : "FAIL")
            << "  reports of criteria 1-9 byte-identical across a repeat run and workers {1, 2, 4, 8}"
            << (same ? "" : ":" + detail) << " [criterion 1 with 8 workers: " << t.str() << " s]" << std::endl;
  return all ? 0 : 1;
}
