#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weilzeta/roots.hpp"
#include "weilzeta/variety.hpp"

namespace weilzeta::weil {

// Frobenius eigenvalue of an elliptic curve over F_p; trace = alpha + conj(alpha).
struct FrobeniusAlpha {
  Complex alpha;
  std::uint32_t p = 0;
  std::int64_t trace = 0;
};

// Frobenius eigenvalues of a genus-g curve over F_p together with the integer
// zeta numerator 1 + b_1 t + ... + b_2g t^2g they come from.
struct WeilNumbers {
  std::uint32_t p = 0;
  unsigned genus = 0;
  std::vector<std::int64_t> numerator;
  std::vector<Complex> roots;
};

// a = p - N_1, alpha = (a + i sqrt(4p - a^2)) / 2.
FrobeniusAlpha hasse_alpha(std::uint32_t p, std::int64_t n1_affine);
FrobeniusAlpha alpha_from_trace(std::uint32_t p, std::int64_t trace);

// alpha^n + conj(alpha)^n by s_n = a s_(n-1) - p s_(n-2), s_0 = 2, s_1 = a.
std::int64_t power_sum(const FrobeniusAlpha& alpha, unsigned n);

// p^n - alpha^n - conj(alpha)^n
std::int64_t predict_affine_count(const FrobeniusAlpha& alpha, unsigned n);

// alpha^n from the exact reduction alpha^n = A_n alpha + B_n (alpha^2 = a alpha - p).
Complex alpha_power(const FrobeniusAlpha& alpha, unsigned n);

// -(alpha^n + conj(alpha)^n)
std::int64_t correction_term(const FrobeniusAlpha& alpha, unsigned n);

// Newton's identities on s_n = p^n + 1 - N_n (n <= g) plus the functional
// equation b_(2g-j) = p^(g-j) b_j, then the 2g reciprocal roots.
WeilNumbers weil_numbers_from_counts(std::uint32_t p, unsigned genus, const variety::CountSequence& counts);

// Projective point count p^n + 1 - sum alpha_i^n, exact from the numerator.
std::int64_t predict_curve_count(const WeilNumbers& w, unsigned n);

// Power sums of the reciprocal roots of 1 + b_1 t + ... + b_d t^d, s_1..s_count.
std::vector<std::int64_t> power_sums_from_numerator(std::span<const std::int64_t> b, unsigned count);

struct RhCheck {
  bool holds = false;
  double max_deviation = 0.0;  // max | |alpha| - p^(k/2) | / p^(k/2)
};

RhCheck verify_weil_rh(std::span<const Complex> roots, double p, unsigned weight);

}  // namespace weilzeta::weil
