#include "weilzeta/zeta.hpp"

#include <cmath>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta::zeta {

PowerSeries zeta_series(const variety::CountSequence& counts) {
  if (counts.counts.empty()) throw Error("empty count sequence");
  const std::size_t m = counts.counts.size();
  // log Z = sum a_k t^k with a_k = N_k / k
  std::vector<Rational> log_terms(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) log_terms[k] = Rational(Integer(counts.counts[k - 1]), Integer(k));

  // formal exp: c_0 = 1, j c_j = sum_{k=1}^{j} k a_k c_(j-k)
  PowerSeries out;
  out.coeffs.assign(m + 1, 0);
  out.coeffs[0] = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= j; ++k) acc += Rational(Integer(k)) * log_terms[k] * out.coeffs[j - k];
    out.coeffs[j] = acc / Rational(Integer(j));
  }
  return out;
}

PowerSeries expand_rational(const IntPoly& num, const IntPoly& den, std::size_t order) {
  if (den.empty() || den[0] == 0) throw Error("denominator must have a nonzero constant term");
  PowerSeries out;
  out.coeffs.assign(order + 1, 0);
  const Rational d0(den[0]);
  for (std::size_t j = 0; j <= order; ++j) {
    Rational acc = j < num.size() ? Rational(num[j]) : Rational(0);
    for (std::size_t i = 1; i <= j && i < den.size(); ++i) acc -= Rational(den[i]) * out.coeffs[j - i];
    out.coeffs[j] = acc / d0;
  }
  return out;
}

IntPoly curve_denominator(std::uint64_t q) { return {Integer(1), -Integer(q + 1), Integer(q)}; }

IntPoly projective_space_denominator(unsigned dim, std::uint64_t q) {
  IntPoly out{Integer(1)};
  Integer qk = 1;
  for (unsigned k = 0; k <= dim; ++k, qk *= q) {
    IntPoly next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i];
      next[i + 1] -= out[i] * qk;
    }
    out = std::move(next);
  }
  return out;
}

unsigned assign_weight(Complex alpha, std::uint64_t q) {
  const double mod = std::abs(alpha);
  const double qd = static_cast<double>(q);
  int found = -1;
  for (unsigned k = 0; k <= 128; ++k) {
    const double target = std::pow(qd, k / 2.0);
    if (std::abs(mod - target) < 0.1 * target) {
      if (found >= 0) throw Error("ambiguous weight for a reciprocal root");
      found = static_cast<int>(k);
    }
    if (target > 2 * mod) break;
  }
  if (found < 0) throw Error("ambiguous weight: reciprocal root of modulus " + std::to_string(mod) + " fits no weight");
  return static_cast<unsigned>(found);
}

namespace {

WeightTable graded_roots(const IntPoly& poly, std::uint64_t q) {
  std::vector<double> coeffs;
  for (const auto& c : poly) coeffs.push_back(c.convert_to<double>());
  WeightTable table;
  for (const auto& r : reciprocal_roots(coeffs).roots) table[assign_weight(r, q)].push_back(r);
  return table;
}

}  // namespace

RationalZeta rational_reconstruct(const PowerSeries& s, unsigned num_degree, const IntPoly& den, std::uint64_t q) {
  if (den.empty()) throw Error("empty denominator");
  const std::size_t den_degree = den.size() - 1;
  if (s.coeffs.empty() || s.order() < num_degree + den_degree + 2) {
    throw Error("insufficient or inconsistent counts: series order too small for the declared shape");
  }
  // P = s * den mod t^(m+1); the first num_degree+1 entries are P, the rest must vanish
  std::vector<Rational> prod(s.coeffs.size(), 0);
  for (std::size_t j = 0; j < prod.size(); ++j) {
    for (std::size_t i = 0; i <= j && i < den.size(); ++i) prod[j] += Rational(den[i]) * s.coeffs[j - i];
  }
  RationalZeta out;
  out.q = q;
  out.denominator = den;
  for (std::size_t j = 0; j <= num_degree; ++j) {
    if (denominator(prod[j]) != 1) throw Error("not rational of declared shape: non-integer numerator coefficient");
    out.numerator.push_back(numerator(prod[j]));
  }
  for (std::size_t j = num_degree + 1; j < prod.size(); ++j) {
    if (prod[j] != 0) throw Error("insufficient or inconsistent counts: series does not match the declared shape");
  }
  while (out.numerator.size() > 1 && out.numerator.back() == 0) out.numerator.pop_back();
  out.numerator_roots = graded_roots(out.numerator, q);
  out.denominator_roots = graded_roots(out.denominator, q);
  return out;
}

WeightTable RationalZeta::weight_table() const {
  WeightTable table;
  for (const auto& [k, roots] : numerator_roots) {
    if (k % 2 == 0) throw Error("zero of zeta at even weight " + std::to_string(k));
    table[k] = roots;
  }
  for (const auto& [k, roots] : denominator_roots) {
    if (k % 2 == 1) throw Error("pole of zeta at odd weight " + std::to_string(k));
    table[k] = roots;
  }
  return table;
}

std::int64_t trace_formula_count(const WeightTable& table, unsigned n) {
  using LComplex = std::complex<long double>;
  LComplex total = 0;
  for (const auto& [k, roots] : table) {
    LComplex piece = 0;
    for (const auto& r : roots) {
      LComplex base(r.real(), r.imag()), pw = 1;
      for (unsigned e = n; e; e >>= 1) {
        if (e & 1) pw *= base;
        base *= base;
      }
      piece += pw;
    }
    total += (k % 2 == 0) ? piece : -piece;
  }
  const long double rounded = std::round(total.real());
  if (std::abs(total.imag()) > 1e-6L || std::abs(total.real() - rounded) > 1e-6L) {
    throw Error("non-integral trace sum");
  }
  if (std::abs(rounded) > 9.2e18L) throw Error("integer overflow in trace sum");
  return static_cast<std::int64_t>(rounded);
}

std::string format_poly(const IntPoly& p, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer mag = abs(p[i]);
    if (first) out << (p[i] < 0 ? "-" : "");
    else out << (p[i] < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

std::string format_rational_zeta(const RationalZeta& z) {
  std::ostringstream out;
  out << '(' << format_poly(z.numerator) << ") / ";
  if (z.denominator == curve_denominator(z.q)) {
    out << "((1 - t)(1 - " << z.q << "t))";
  } else {
    out << '(' << format_poly(z.denominator) << ')';
  }
  return out.str();
}

}  // namespace weilzeta::zeta
