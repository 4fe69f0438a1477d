#include "weilzeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unsupported/Eigen/Polynomials>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

using LComplex = std::complex<long double>;

struct Eval {
  LComplex value, derivative;
  long double scale;  // sum |c_i| |z|^i
};

Eval evaluate(std::span<const double> c, LComplex z) {
  Eval e{0, 0, 0};
  const long double mod = std::abs(z);
  long double pw = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    e.derivative = e.derivative * z + e.value;
    e.value = e.value * z + static_cast<long double>(c[i]);
  }
  for (std::size_t i = 0; i < c.size(); ++i, pw *= mod) e.scale += std::abs(static_cast<long double>(c[i])) * pw;
  return e;
}

double relative_residual(std::span<const double> c, LComplex z) {
  const Eval e = evaluate(c, z);
  return e.scale == 0 ? 0.0 : static_cast<double>(std::abs(e.value) / e.scale);
}

LComplex polish(std::span<const double> c, LComplex z) {
  double best = relative_residual(c, z);
  for (int it = 0; it < 8 && best > 0; ++it) {
    const Eval e = evaluate(c, z);
    if (e.derivative == LComplex(0)) break;
    const LComplex next = z - e.value / e.derivative;
    const double r = relative_residual(c, next);
    if (!(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

}  // namespace

RootSet polynomial_roots(std::span<const double> coeffs_in) {
  std::vector<double> c(coeffs_in.begin(), coeffs_in.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw Error("zero polynomial has no finite root set");
  RootSet out;
  const std::size_t degree = c.size() - 1;
  if (degree == 0) return out;

  std::vector<LComplex> raw;
  if (degree == 1) {
    raw.emplace_back(-static_cast<long double>(c[0]) / c[1]);
  } else {
    Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = c[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(v);
    for (const auto& r : solver.roots()) raw.push_back(polish(c, LComplex(r.real(), r.imag())));
  }

  // Pair each upper-half-plane root with the nearest remaining lower one.
  std::sort(raw.begin(), raw.end(), [](const LComplex& a, const LComplex& b) { return a.imag() > b.imag(); });
  std::vector<bool> used(raw.size(), false);
  std::vector<LComplex> fixed;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const LComplex r = raw[i];
    const long double tiny = 1e-12L * std::max<long double>(1, std::abs(r));
    if (std::abs(r.imag()) <= tiny) {
      fixed.emplace_back(r.real(), 0);
      continue;
    }
    std::size_t best = raw.size();
    long double best_d = 0;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      const long double d = std::abs(raw[j] - std::conj(r));
      if (best == raw.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == raw.size() || best_d > 1e-6L * std::max<long double>(1, std::abs(r))) {
      fixed.push_back(r);  // real coefficients make this unreachable up to rounding
      continue;
    }
    used[best] = true;
    const LComplex m = (r + std::conj(raw[best])) / 2.0L;
    fixed.push_back(m);
    fixed.push_back(std::conj(m));
  }

  for (const auto& r : fixed) {
    out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    out.max_residual = std::max(out.max_residual, relative_residual(c, r));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Complex& a, const Complex& b) {
    if (a.imag() != b.imag()) return a.imag() > b.imag();
    return a.real() < b.real();
  });
  return out;
}

RootSet reciprocal_roots(std::span<const double> coeffs) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty() || c.front() == 0.0) throw Error("reciprocal roots need a nonzero constant term");
  std::reverse(c.begin(), c.end());
  // the reversed polynomial has leading coefficient c_0; divide through
  const double lead = c.back();
  for (auto& v : c) v /= lead;
  return polynomial_roots(c);
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no negative zero
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::string format_complex(Complex z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) return format_number(re);
  std::string out = re == 0.0 ? "" : format_number(re);
  if (re != 0.0) out += im < 0 ? " - " : " + ";
  else if (im < 0) out += "-";
  const double mag = std::abs(im);
  if (mag != 1.0) out += format_number(mag);
  return out + "i";
}

}  // namespace weilzeta
