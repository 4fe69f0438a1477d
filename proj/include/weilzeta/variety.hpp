#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weilzeta/finite_field.hpp"

namespace weilzeta::variety {

using Exponents = std::vector<unsigned>;

// Integer-coefficient polynomial; zero coefficients are never stored.
struct Polynomial {
  std::map<Exponents, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous() const;
  void add_term(const Exponents& e, std::int64_t c);
};

class PolySystem {
 public:
  PolySystem(unsigned num_vars, std::vector<Polynomial> polys, bool homogeneous = false);

  unsigned num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  bool homogeneous() const { return homogeneous_; }

 private:
  unsigned num_vars_;
  std::vector<Polynomial> polys_;
  bool homogeneous_;
};

// One polynomial per line; "lhs = rhs" means lhs - rhs. Variables are x1..xk,
// with x, y, z accepted as aliases of x1, x2, x3 when k <= 3. '#' starts a
// comment. Implicit multiplication ("3x^2y") is accepted.
PolySystem parse_system(std::string_view text, bool homogeneous = false);
Polynomial parse_polynomial(std::string_view line, unsigned num_vars);

std::string to_string(const Polynomial& poly, unsigned num_vars);

struct CountSequence {
  std::uint32_t p = 0;
  std::vector<std::uint64_t> counts;  // counts[j-1] = N_j over F_{p^j}
  bool projective = false;
};

enum class CountMethod {
  automatic,   // whichever is cheaper per fibre given q and the last-variable degree
  exhaustive,  // evaluate at every point of F_q^k
  fibre,       // enumerate F_q^(k-1), count roots of the last-variable fibre
};

struct CountOptions {
  unsigned workers = 1;
  std::uint64_t work_limit = std::uint64_t{1} << 28;  // enumerated tuples
  CountMethod method = CountMethod::automatic;
};

std::uint64_t count_affine(const PolySystem& sys, const ff::Field& field, const CountOptions& opts = {});

// 1 + q + ... + q^dim by enumeration of normalised representatives; the
// result is checked against the closed form.
std::uint64_t count_projective_space(unsigned dim, const ff::Field& field, const CountOptions& opts = {});

// Points of P^(k-1) (k = num_vars) whose normalised representative (first
// nonzero coordinate equal to 1) satisfies every polynomial.
std::uint64_t count_projective_variety(const PolySystem& sys, const ff::Field& field,
                                       const CountOptions& opts = {});

// N_j for j = 1..n_max over F_{p^j}, affine or projective by the system flag.
CountSequence count_sequence(const PolySystem& sys, std::uint32_t p, unsigned n_max,
                             const CountOptions& opts = {});

}  // namespace weilzeta::variety
