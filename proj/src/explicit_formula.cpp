#include "weilzeta/explicit_formula.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "weilzeta/error.hpp"

namespace weilzeta::primes {

namespace {

// 20-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::array<double, 20> nodes{};
  std::array<double, 20> weights{};

  GaussRule() {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      nodes[k] = -x[i];
      weights[k++] = w[i];
      nodes[k] = x[i];
      weights[k++] = w[i];
    }
  }
};

const GaussRule& rule() {
  static const GaussRule r;
  return r;
}

template <class F>
auto composite(F&& f, double a, double b, unsigned panels) -> decltype(f(a)) {
  using R = decltype(f(a));
  const GaussRule& g = rule();
  const double h = (b - a) / panels;
  R total{};
  for (unsigned p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    R acc{};
    for (std::size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * f(mid + 0.5 * h * g.nodes[i]);
    total += acc * (0.5 * h);
  }
  return total;
}

// E1(s0) = int_{s0}^inf e^-s / s ds for real s0 > 0, with s = e^w.
double e1_real(double s0, unsigned panels) {
  const double w0 = std::log(s0);
  const double w1 = std::log(std::max(s0, 1.0) + 60.0);
  return composite([](double w) { return std::exp(-std::exp(w)); }, w0, w1, panels);
}

// (1/ln(1+u) + 1/ln(1-u)), the symmetric pairing around t = 1
double symmetric_kernel(double u) {
  if (u < 1e-4) return 1.0 + u * u / 12.0;
  return 1.0 / std::log1p(u) + 1.0 / std::log1p(-u);
}

// int_y^inf dt / (t (t^2 - 1) ln t) with t = e^s
double trivial_zero_term(double y) {
  const double s0 = std::log(y);
  return composite([](double s) { return 1.0 / (std::expm1(2.0 * s) * s); }, s0, s0 + 40.0, 40);
}

}  // namespace

// ---------------------------------------------------------------------------

ZeroTable::ZeroTable(std::vector<double> ordinates) : ordinates_(std::move(ordinates)) {
  if (ordinates_.empty()) throw Error("no zeros");
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] > 0)) throw Error("zero ordinates must be positive");
    if (i > 0 && !(ordinates_[i] > ordinates_[i - 1])) throw Error("not increasing at entry " + std::to_string(i + 1));
  }
  if (std::abs(ordinates_[0] - 14.13) > 0.01) throw Error("anchor check failed: first ordinate is not near 14.13");
}

ZeroTable parse_zeros(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw Error("parse error at line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
    }
    values.push_back(v);
  }
  return ZeroTable(std::move(values));
}

ZeroTable load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read zero file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_zeros(buf.str());
}

PrimeCounter::PrimeCounter(std::uint64_t limit) : limit_(limit), prime_(limit + 1, 1), prefix_(limit + 1, 0) {
  prime_[0] = 0;
  if (limit >= 1) prime_[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!prime_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) prime_[j] = 0;
  }
  std::uint32_t running = 0;
  for (std::uint64_t i = 0; i <= limit; ++i) prefix_[i] = running += prime_[i];
}

std::uint64_t PrimeCounter::pi(std::uint64_t n) const {
  if (n > limit_) throw Error("beyond sieve limit: " + std::to_string(n) + " > " + std::to_string(limit_));
  return prefix_[n];
}

std::uint64_t sieve_pi(double x, const PrimeCounter& pc) {
  if (x < 2) return 0;
  if (x > static_cast<double>(pc.limit())) throw Error("beyond sieve limit");
  return pc.pi(static_cast<std::uint64_t>(std::floor(x)));
}

int mobius(std::uint64_t m) {
  if (m == 0) throw Error("mobius of 0");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    m /= d;
    if (m % d == 0) return 0;
    sign = -sign;
  }
  return m > 1 ? -sign : sign;
}

double li(double x, unsigned panels) {
  if (!(x > 0)) throw Error("li domain: x must be positive");
  if (x == 1.0) throw Error("divergent: li(1)");
  if (x < 1.0) return -e1_real(-std::log(x), panels);
  const double delta = std::min(0.5, x - 1.0);
  const double left = -e1_real(-std::log1p(-delta), panels);
  const double mid = composite(symmetric_kernel, 0.0, delta, panels);
  double right = 0.0;
  if (x > 1.0 + delta) {
    // t = e^s, s = e^w
    right = composite([](double w) { return std::exp(std::exp(w)); }, std::log(std::log1p(delta)),
                      std::log(std::log(x)), panels);
  }
  return left + mid + right;
}

std::complex<double> exponential_integral(std::complex<double> z) {
  if (std::abs(z.imag()) < 1.0) throw Error("exponential_integral: ray quadrature needs |Im z| >= 1");
  // E1(w) = e^-w int_0^inf e^-u / (w + u) du, w = -z; tail beyond u = 60 is below e^-60
  const std::complex<double> w = -z;
  const std::complex<double> body =
      composite([w](double u) { return std::exp(-u) / (w + u); }, 0.0, 60.0, 30);
  const std::complex<double> e1 = std::exp(-w) * body;
  const double sign = z.imag() > 0 ? 1.0 : -1.0;
  return -e1 + std::complex<double>(0.0, sign * std::numbers::pi);
}

std::complex<double> li_power(double y, double t) {
  return exponential_integral(std::complex<double>(0.5, t) * std::log(y));
}

std::vector<double> riemann_approx_multi(double x, const ZeroTable& zeros, std::span<const std::size_t> Ks) {
  if (!(x >= 2)) throw Error("riemann_approx needs x >= 2");
  std::size_t max_k = 0;
  for (auto k : Ks) max_k = std::max(max_k, k);
  if (max_k > zeros.size()) {
    throw Error("K exceeds the zero table: " + std::to_string(max_k) + " > " + std::to_string(zeros.size()));
  }
  std::vector<double> out(Ks.size(), 0.0);
  const auto t = zeros.ordinates();
  std::vector<double> prefix(max_k + 1, 0.0);
  for (unsigned m = 1; std::ldexp(1.0, static_cast<int>(m)) <= x; ++m) {
    const int mu = mobius(m);
    if (mu == 0) continue;
    const double y = m == 1 ? x : std::pow(x, 1.0 / m);
    const double base = li(y) - std::numbers::ln2 + trivial_zero_term(y);
    // fixed-order accumulation of the zero corrections
    for (std::size_t j = 0; j < max_k; ++j) prefix[j + 1] = prefix[j] + 2.0 * li_power(y, t[j]).real();
    for (std::size_t i = 0; i < Ks.size(); ++i) out[i] += mu / static_cast<double>(m) * (base - prefix[Ks[i]]);
  }
  return out;
}

double riemann_approx(double x, const ZeroTable& zeros, std::size_t K) {
  const std::size_t ks[] = {K};
  return riemann_approx_multi(x, zeros, ks)[0];
}

double rh_bound_ratio(std::uint64_t range_max, const PrimeCounter& pc) {
  if (range_max < 3) throw Error("rh_bound_ratio needs range_max >= 3");
  if (range_max > pc.limit()) throw Error("beyond sieve limit");
  double li_n = li(3.0);
  double best = 0.0;
  for (std::uint64_t n = 3; n <= range_max; ++n) {
    if (n > 3) {
      const double a = static_cast<double>(n - 1);
      li_n += composite([](double s) { return 1.0 / std::log(s); }, a, a + 1.0, 1);
    }
    const double nd = static_cast<double>(n);
    const double r = std::abs(static_cast<double>(pc.pi(n)) - li_n) / (std::sqrt(nd) * std::log(nd));
    best = std::max(best, r);
  }
  return best;
}

}  // namespace weilzeta::primes
