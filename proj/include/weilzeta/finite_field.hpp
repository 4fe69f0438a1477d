#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "weilzeta/error.hpp"

namespace weilzeta::ff {

// Dense polynomial over F_p, coefficient i multiplies x^i. Kept trimmed
// (no trailing zeros) by the helpers below; the zero polynomial is empty.
using PrimePoly = std::vector<std::uint32_t>;

// Largest field order accepted for construction and enumeration.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 26;

bool is_prime(std::uint64_t n);

// Rabin's test: f monic of degree n is irreducible over F_p iff
// x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

std::string to_string(const PrimePoly& f, char var = 'x');

// F_q with q = p^n, realised as F_p[x] / (modulus). Elements are addressed by
// a packed code: the coefficient vector (c_0, ..., c_{n-1}) maps to
// sum c_i p^i. A Field is an immutable shared handle; copies are cheap and
// safe to use from several threads.
class Field {
 public:
  using Code = std::uint32_t;

  // Smallest monic irreducible modulus, coefficients compared from the
  // constant term upward.
  static Field make(std::uint32_t p, unsigned n);
  static Field with_modulus(std::uint32_t p, PrimePoly modulus);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  const PrimePoly& modulus() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code from_integer(std::int64_t v) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws on zero
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;

  std::vector<std::uint32_t> coeffs(Code c) const;
  Code encode(std::span<const std::uint32_t> coeffs) const;

  // Same p, n and modulus.
  bool operator==(const Field& other) const;

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Field make_field(std::uint32_t p, unsigned n);

class Element {
 public:
  Element(Field field, std::span<const std::uint32_t> coeffs);
  static Element from_code(Field field, Field::Code code);

  const Field& field() const { return field_; }
  Field::Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element pow(std::uint64_t e) const;
  Element inverse() const;

  bool operator==(const Element& o) const { return field_ == o.field_ && code_ == o.code_; }

 private:
  Element(Field field, Field::Code code) : field_(std::move(field)), code_(code) {}
  const Field& checked(const Element& o) const;

  Field field_;
  Field::Code code_;
};

enum class Op { add, sub, mul, div };

Element arith(const Element& a, const Element& b, Op op);
Element arith_pow(const Element& a, std::uint64_t exponent);

// All q elements, coefficient vectors (c_0, ..., c_{n-1}) in lexicographic order.
std::vector<Element> enumerate(const Field& field);

// Decompose q = p^n; throws if q is not a prime power.
std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q);

}  // namespace weilzeta::ff
