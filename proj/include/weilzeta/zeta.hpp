#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weilzeta/roots.hpp"
#include "weilzeta/variety.hpp"

namespace weilzeta::zeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Weight k -> multiset of Frobenius eigenvalues of weight k.
using WeightTable = std::map<unsigned, std::vector<Complex>>;

// Truncated formal power series c_0 + c_1 t + ... + c_m t^m.
struct PowerSeries {
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const PowerSeries&) const = default;
};

using IntPoly = std::vector<Integer>;  // coefficient i multiplies t^i

struct RationalZeta {
  std::uint64_t q = 0;  // base field size the weights refer to
  IntPoly numerator;
  IntPoly denominator;
  WeightTable numerator_roots;    // zeros of Z, odd weights for curves
  WeightTable denominator_roots;  // poles of Z, even weights

  // Signed trace-formula table: numerator roots at odd weights, denominator
  // roots at even weights. Throws if a root sits at the wrong parity.
  WeightTable weight_table() const;
};

// exp(sum_{n=1}^{m} N_n t^n / n), truncated at t^m.
PowerSeries zeta_series(const variety::CountSequence& counts);

// Expansion of num/den to order m; den(0) must be nonzero.
PowerSeries expand_rational(const IntPoly& num, const IntPoly& den, std::size_t order);

// (1 - t)(1 - q t)
IntPoly curve_denominator(std::uint64_t q);

// prod_{k=0}^{dim} (1 - q^k t)
IntPoly projective_space_denominator(unsigned dim, std::uint64_t q);

// Numerator P of degree num_degree with s = P / den, verified against every
// remaining series coefficient, plus the weight-graded reciprocal roots.
RationalZeta rational_reconstruct(const PowerSeries& s, unsigned num_degree, const IntPoly& den, std::uint64_t q);

// Weight k with | |alpha| - q^(k/2) | < 0.1 q^(k/2); throws when none fits.
unsigned assign_weight(Complex alpha, std::uint64_t q);

// sum_k (-1)^k sum_i alpha_ik^n, required to be within 1e-6 of an integer.
std::int64_t trace_formula_count(const WeightTable& table, unsigned n);

std::string format_poly(const IntPoly& p, char var = 't');

// "P(t) / ((1 - t)(1 - q t))" style rendering of a reconstructed curve zeta.
std::string format_rational_zeta(const RationalZeta& z);

}  // namespace weilzeta::zeta
