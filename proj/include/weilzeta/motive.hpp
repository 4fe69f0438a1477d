#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "weilzeta/weil.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta::motive {

using zeta::WeightTable;

// A pure motive over F_q represented by its weight-graded Frobenius
// eigenvalues. Construction enforces conjugate closure of every piece and
// purity |alpha| = q^(k/2) to relative precision 1e-9.
class Motive {
 public:
  explicit Motive(std::uint64_t base_q, WeightTable pieces = {});

  static Motive zero(std::uint64_t q) { return Motive(q); }
  static Motive unit(std::uint64_t q);                          // h(1)
  static Motive lefschetz(std::uint64_t q, unsigned power = 1);  // L^(tensor power)

  std::uint64_t base() const { return q_; }
  const WeightTable& pieces() const { return pieces_; }
  std::size_t rank() const;

 private:
  std::uint64_t q_;
  WeightTable pieces_;
};

Motive direct_sum(const Motive& a, const Motive& b);
Motive tensor(const Motive& a, const Motive& b);

// h(P^dim) = h(1) + L + ... + L^dim
Motive motive_of_projective_space(unsigned dim, std::uint64_t q);

// h(E) with pieces {0: {1}, 1: {alpha, conj alpha}, 2: {p}}
Motive motive_of_elliptic_curve(const weil::FrobeniusAlpha& alpha);

// Signed trace count over F_(q^n).
std::int64_t point_count(const Motive& m, unsigned n);

// Lines "weight k: [e1, e2, ...]".
std::string to_string(const Motive& m);

// Expression over F_q: terms joined by '+' (direct sum) and '*' (tensor),
// parentheses, and atoms "0", "1", "h(1)", "L", "L^k", "P^n",
// "elliptic a=<trace> [p=<prime>]".
Motive parse_motive(std::string_view expr, std::uint64_t q);

}  // namespace weilzeta::motive
