#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace weilzeta::primes {

// Imaginary parts t_j of nontrivial zeta zeros 1/2 + i t_j, strictly
// increasing, first entry within 0.01 of 14.13.
class ZeroTable {
 public:
  explicit ZeroTable(std::vector<double> ordinates);

  std::span<const double> ordinates() const { return ordinates_; }
  std::size_t size() const { return ordinates_.size(); }

 private:
  std::vector<double> ordinates_;
};

// One decimal ordinate per line, '#' starts a comment.
ZeroTable parse_zeros(std::string_view text);
ZeroTable load_zeros(const std::filesystem::path& path);

// Sieve of Eratosthenes up to `limit` with prefix counts.
class PrimeCounter {
 public:
  explicit PrimeCounter(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const { return n <= limit_ && prime_[n]; }
  std::uint64_t pi(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> prime_;
  std::vector<std::uint32_t> prefix_;
};

// Number of primes <= floor(x).
std::uint64_t sieve_pi(double x, const PrimeCounter& pc);

int mobius(std::uint64_t m);

inline constexpr unsigned kDefaultPanels = 64;

// Principal value of the integral of 1/ln t over (0, x). The singularity at
// t = 1 is handled by pairing 1 - u with 1 + u. `panels` sets the number of
// 20-point Gauss-Legendre panels per sub-integral.
double li(double x, unsigned panels = kDefaultPanels);

// Ei(z) for Im z != 0, via E1(-z) integrated along the horizontal ray from -z.
std::complex<double> exponential_integral(std::complex<double> z);

// li(y^rho) for rho = 1/2 + i t, taken as Ei(rho ln y).
std::complex<double> li_power(double y, double t);

// Riemann's explicit formula for pi_0(x) truncated at K zero pairs:
// sum_{m} mu(m)/m f(x^(1/m)) over m with x^(1/m) >= 2, where
// f(y) = li(y) - sum_j 2 Re li(y^rho_j) - ln 2 + int_y^inf dt/(t(t^2-1) ln t).
double riemann_approx(double x, const ZeroTable& zeros, std::size_t K);

// The same value for several K at once (each K <= zeros.size()).
std::vector<double> riemann_approx_multi(double x, const ZeroTable& zeros, std::span<const std::size_t> Ks);

// sup over 3 <= n <= range_max of |pi(n) - li(n)| / (sqrt(n) ln n).
double rh_bound_ratio(std::uint64_t range_max, const PrimeCounter& pc);

}  // namespace weilzeta::primes
