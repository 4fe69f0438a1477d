#include "weilzeta/weil.hpp"

#include <cmath>
#include <string>

#include "weilzeta/error.hpp"

namespace weilzeta::weil {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("integer overflow in count prediction");
  return static_cast<std::int64_t>(v);
}

std::int64_t ipow(std::int64_t base, unsigned e) {
  i128 r = 1;
  for (unsigned i = 0; i < e; ++i) r = narrow(r * base);
  return static_cast<std::int64_t>(r);
}

}  // namespace

FrobeniusAlpha alpha_from_trace(std::uint32_t p, std::int64_t trace) {
  const i128 disc = i128{4} * p - i128{trace} * trace;
  if (disc < 0) throw Error("not an elliptic-curve count: |a| > 2 sqrt(p) for a = " + std::to_string(trace));
  FrobeniusAlpha out;
  out.p = p;
  out.trace = trace;
  out.alpha = Complex(static_cast<double>(trace) / 2.0, std::sqrt(static_cast<double>(disc)) / 2.0);
  return out;
}

FrobeniusAlpha hasse_alpha(std::uint32_t p, std::int64_t n1_affine) {
  return alpha_from_trace(p, static_cast<std::int64_t>(p) - n1_affine);
}

std::int64_t power_sum(const FrobeniusAlpha& alpha, unsigned n) {
  std::int64_t prev = 2, cur = alpha.trace;  // s_0, s_1
  if (n == 0) return prev;
  for (unsigned k = 2; k <= n; ++k) {
    const std::int64_t next = narrow(i128{alpha.trace} * cur - i128{alpha.p} * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t predict_affine_count(const FrobeniusAlpha& alpha, unsigned n) {
  return narrow(i128{ipow(alpha.p, n)} - power_sum(alpha, n));
}

Complex alpha_power(const FrobeniusAlpha& alpha, unsigned n) {
  std::int64_t a_n = 0, b_n = 1;  // alpha^0 = 0 alpha + 1
  for (unsigned k = 0; k < n; ++k) {
    const std::int64_t next_a = narrow(i128{alpha.trace} * a_n + b_n);
    b_n = narrow(-i128{alpha.p} * a_n);
    a_n = next_a;
  }
  const double disc = 4.0 * alpha.p - static_cast<double>(alpha.trace) * static_cast<double>(alpha.trace);
  const double re = (static_cast<double>(i128{a_n} * alpha.trace + 2 * i128{b_n})) / 2.0;
  return {re, static_cast<double>(a_n) * std::sqrt(disc) / 2.0};
}

std::int64_t correction_term(const FrobeniusAlpha& alpha, unsigned n) { return -power_sum(alpha, n); }

std::vector<std::int64_t> power_sums_from_numerator(std::span<const std::int64_t> b, unsigned count) {
  // s_k = -k b_k - sum_{i=1}^{k-1} b_i s_(k-i), b_k = 0 beyond the degree
  auto coeff = [&](unsigned k) -> std::int64_t { return k < b.size() ? b[k] : 0; };
  std::vector<std::int64_t> s(count + 1, 0);
  for (unsigned k = 1; k <= count; ++k) {
    i128 acc = -i128{k} * coeff(k);
    for (unsigned i = 1; i < k; ++i) acc -= i128{coeff(i)} * s[k - i];
    s[k] = narrow(acc);
  }
  s.erase(s.begin());
  return s;
}

WeilNumbers weil_numbers_from_counts(std::uint32_t p, unsigned genus, const variety::CountSequence& counts) {
  if (genus == 0) throw Error("invalid genus: must be at least 1");
  if (!counts.projective) throw Error("inconsistent counts: projective counts required");
  if (counts.counts.size() < genus) {
    throw Error("insufficient counts: need N_1..N_" + std::to_string(genus));
  }
  std::vector<std::int64_t> s(genus + 1, 0);
  for (unsigned n = 1; n <= genus; ++n) {
    s[n] = narrow(i128{ipow(p, n)} + 1 - static_cast<i128>(counts.counts[n - 1]));
  }
  // j b_j = -sum_{i=1}^{j} s_i b_(j-i)
  std::vector<std::int64_t> b(2 * genus + 1, 0);
  b[0] = 1;
  for (unsigned j = 1; j <= genus; ++j) {
    i128 acc = 0;
    for (unsigned i = 1; i <= j; ++i) acc -= i128{s[i]} * b[j - i];
    if (acc % j != 0) throw Error("inconsistent counts: Newton identity gives a non-integer coefficient");
    b[j] = narrow(acc / j);
  }
  for (unsigned j = 0; j < genus; ++j) b[2 * genus - j] = narrow(i128{ipow(p, genus - j)} * b[j]);

  std::vector<double> coeffs(b.begin(), b.end());
  const RootSet rs = reciprocal_roots(coeffs);
  if (rs.max_residual > 1e-8) throw Error("inconsistent counts: root residual too large");
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  for (const auto& r : rs.roots) {
    if (std::abs(std::abs(r) - sqrt_p) > 1e-6) throw Error("Weil bound violated");
  }
  return WeilNumbers{p, genus, std::move(b), rs.roots};
}

std::int64_t predict_curve_count(const WeilNumbers& w, unsigned n) {
  if (n == 0) throw Error("prediction needs n >= 1");
  const auto s = power_sums_from_numerator(w.numerator, n);
  return narrow(i128{ipow(w.p, n)} + 1 - s[n - 1]);
}

RhCheck verify_weil_rh(std::span<const Complex> roots, double p, unsigned weight) {
  const double target = std::pow(p, weight / 2.0);
  RhCheck out{true, 0.0};
  for (const auto& r : roots) {
    const double dev = std::abs(std::abs(r) - target) / target;
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  out.holds = out.max_deviation <= 1e-9;
  return out;
}

}  // namespace weilzeta::weil
