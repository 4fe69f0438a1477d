#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace weilzeta {

using Complex = std::complex<double>;

struct RootSet {
  std::vector<Complex> roots;
  double max_residual = 0.0;  // largest |f(r)| / sum |c_i| |r|^i over the roots
};

// Roots of c_0 + c_1 z + ... + c_d z^d (c_d != 0, trailing zeros ignored).
// Companion-matrix eigenvalues refined by Newton steps; conjugate pairs are
// made exactly conjugate and the result is ordered by descending imaginary
// part, then ascending real part.
RootSet polynomial_roots(std::span<const double> coeffs);

// The alpha_i with 1 + c_1 t + ... + c_d t^d = prod (1 - alpha_i t); c_0 must be nonzero.
RootSet reciprocal_roots(std::span<const double> coeffs);

// 12 significant digits, no negative zero, unit imaginary parts bare: "2", "-1 + i", "-3i".
std::string format_number(double v);
std::string format_complex(Complex z);

}  // namespace weilzeta
