#include "weilzeta/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace weilzeta::ff {

namespace {

using u64 = std::uint64_t;

// Fields at or below this order get exp/log tables for multiplication.
constexpr u64 kTableLimit = u64{1} << 20;

u64 inv_mod_prime(u64 a, u64 p) {
  // a^(p-2) mod p
  u64 result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  trim(a);
  return a;
}

// Remainder of a modulo f (f nonzero).
PrimePoly poly_rem(PrimePoly a, const PrimePoly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = inv_mod_prime(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const u64 factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + u64{a[i]} * b[j]) % p;
  }
  PrimePoly out(prod.begin(), prod.end());
  return poly_rem(std::move(out), f, p);
}

PrimePoly poly_powmod(PrimePoly base, u64 e, const PrimePoly& f, u64 p) {
  PrimePoly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return poly_rem(std::move(result), f, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const PrimePoly& f_in, std::uint32_t p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  // cheap rejection: a root in F_p means a linear factor
  if (f[0] == 0) return false;
  if (p <= 64) {
    for (u64 a = 1; a < p; ++a) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * a + f[i]) % p;
      if (v == 0) return false;
    }
  }
  const PrimePoly x{0, 1};

  // frob[k] = x^(p^k) mod f
  std::vector<PrimePoly> frob{poly_rem(x, f, p)};
  for (unsigned k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));

  if (!poly_sub(frob[n], poly_rem(x, f, p), p).empty()) return false;
  for (u64 r : prime_factors(n)) {
    PrimePoly h = poly_sub(frob[n / r], x, p);
    PrimePoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::string to_string(const PrimePoly& f, char var) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i]) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || f[i] != 1) out << f[i];
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned n = 0;
  u64 q = 0;
  PrimePoly modulus;
  u64 modulus_bits = 0;  // p == 2 only
  std::vector<u64> p_pow;
  std::vector<Code> exp_table;         // 2(q-1) entries
  std::vector<std::uint32_t> log_table;

  PrimePoly to_poly(Code c) const {
    PrimePoly f(n);
    for (unsigned i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    trim(f);
    return f;
  }

  Code from_poly(const PrimePoly& f) const {
    u64 c = 0;
    for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
    return static_cast<Code>(c);
  }

  Code slow_mul(Code a, Code b) const {
    if (p == 2) {
      u64 prod = 0, aa = a;
      for (u64 bb = b; bb; bb >>= 1, aa <<= 1) {
        if (bb & 1) prod ^= aa;
      }
      for (int bit = 2 * static_cast<int>(n) - 2; bit >= static_cast<int>(n); --bit) {
        if (prod >> bit & 1) prod ^= modulus_bits << (bit - n);
      }
      return static_cast<Code>(prod);
    }
    return from_poly(poly_mulmod(to_poly(a), to_poly(b), modulus, p));
  }

  Code slow_pow(Code a, u64 e) const {
    Code result = 1;
    while (e) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    if (q > kTableLimit || q <= 2) return;
    const u64 order = q - 1;
    const auto factors = prime_factors(order);
    Code gen = 0;
    for (Code g = 2; g < q && !gen; ++g) {
      if (std::all_of(factors.begin(), factors.end(),
                      [&](u64 r) { return slow_pow(g, order / r) != 1; })) {
        gen = g;
      }
    }
    if (order == 1) gen = 1;
    exp_table.resize(2 * order);
    log_table.assign(q, 0);
    Code cur = 1;
    for (u64 i = 0; i < order; ++i) {
      exp_table[i] = exp_table[i + order] = cur;
      log_table[cur] = static_cast<std::uint32_t>(i);
      cur = slow_mul(cur, gen);
    }
  }
};

Field Field::with_modulus(std::uint32_t p, PrimePoly modulus) {
  if (!is_prime(p)) throw Error("not prime: " + std::to_string(p));
  trim(modulus);
  if (modulus.size() < 2) throw Error("invalid modulus: degree must be at least 1");
  const unsigned n = static_cast<unsigned>(modulus.size() - 1);
  u64 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error("field too large: p^n exceeds 2^26");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error("invalid modulus: coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw Error("invalid modulus: not monic irreducible");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = q;
  impl->modulus = std::move(modulus);
  if (p == 2) {
    for (std::size_t i = 0; i < impl->modulus.size(); ++i) impl->modulus_bits |= u64{impl->modulus[i]} << i;
  }
  impl->p_pow.resize(n + 1);
  impl->p_pow[0] = 1;
  for (unsigned i = 1; i <= n; ++i) impl->p_pow[i] = impl->p_pow[i - 1] * p;
  impl->build_tables();
  return Field(std::move(impl));
}

Field Field::make(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw Error("not prime: " + std::to_string(p));
  if (n == 0) throw Error("invalid degree: n must be at least 1");
  u64 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error("field too large: p^n exceeds 2^26");
  }
  // Candidates (c_0, ..., c_{n-1}) in lexicographic order, c_0 most significant.
  PrimePoly f(n + 1, 0);
  f[n] = 1;
  for (u64 idx = 0; idx < q; ++idx) {
    u64 rest = idx;
    for (unsigned i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return with_modulus(p, f);
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

Field make_field(std::uint32_t p, unsigned n) { return Field::make(p, n); }

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->n; }
std::uint64_t Field::order() const { return impl_->q; }
const PrimePoly& Field::modulus() const { return impl_->modulus; }

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus;
}

Field::Code Field::from_integer(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  return static_cast<Code>(((v % p) + p) % p);
}

Field::Code Field::add(Code a, Code b) const {
  const Impl& f = *impl_;
  if (f.p == 2) return a ^ b;
  if (f.n == 1) return static_cast<Code>((u64{a} + b) % f.p);
  Code r = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    Code s = a % f.p + b % f.p;
    if (s >= f.p) s -= f.p;
    r += static_cast<Code>(s * f.p_pow[i]);
    a /= f.p;
    b /= f.p;
  }
  return r;
}

Field::Code Field::neg(Code a) const {
  const Impl& f = *impl_;
  if (f.p == 2) return a;
  if (f.n == 1) return a == 0 ? 0 : f.p - a;
  Code r = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    const Code d = a % f.p;
    r += static_cast<Code>((d == 0 ? 0 : f.p - d) * f.p_pow[i]);
    a /= f.p;
  }
  return r;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const Impl& f = *impl_;
  if (!f.exp_table.empty()) return f.exp_table[u64{f.log_table[a]} + f.log_table[b]];
  if (f.n == 1) return static_cast<Code>(u64{a} * b % f.p);
  return f.slow_mul(a, b);
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw Error("zero divisor");
  const Impl& f = *impl_;
  const u64 p = f.p;
  // Extended Euclid on (modulus, a): track s with s * a = r (mod modulus).
  PrimePoly r0 = f.modulus, r1 = f.to_poly(a);
  PrimePoly s0{}, s1{1};
  while (r1.size() > 1) {
    // one long-division step sequence: q = r0 / r1
    PrimePoly quot(r0.size() - r1.size() + 1, 0);
    PrimePoly rem = r0;
    const u64 lead_inv = inv_mod_prime(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::size_t shift = rem.size() - r1.size();
      const u64 factor = rem.back() * lead_inv % p;
      quot[shift] = static_cast<std::uint32_t>(factor);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - factor * r1[i] % p) % p);
      }
      trim(rem);
    }
    trim(quot);
    // s_next = s0 - quot * s1
    PrimePoly qs = quot.empty() || s1.empty() ? PrimePoly{} : PrimePoly(quot.size() + s1.size() - 1, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) {
        qs[i + j] = static_cast<std::uint32_t>((qs[i + j] + u64{quot[i]} * s1[j]) % p);
      }
    }
    PrimePoly s2 = poly_sub(s0, qs, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const u64 c_inv = inv_mod_prime(r1[0], p);
  for (auto& c : s1) c = static_cast<std::uint32_t>(c * c_inv % p);
  s1 = poly_rem(std::move(s1), f.modulus, p);
  return f.from_poly(s1);
}

Field::Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Field::Code Field::pow(Code a, std::uint64_t e) const {
  const Impl& f = *impl_;
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!f.exp_table.empty()) {
    const u64 order = f.q - 1;
    return f.exp_table[static_cast<u64>((static_cast<unsigned __int128>(f.log_table[a]) * e) % order)];
  }
  Code result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return result;
}

std::vector<std::uint32_t> Field::coeffs(Code c) const {
  std::vector<std::uint32_t> out(impl_->n);
  for (auto& d : out) {
    d = c % impl_->p;
    c /= impl_->p;
  }
  return out;
}

Field::Code Field::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != impl_->n) throw Error("invalid element: expected " + std::to_string(impl_->n) + " coefficients");
  u64 c = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= impl_->p) throw Error("invalid element: coefficient out of range");
    c = c * impl_->p + coeffs[i];
  }
  return static_cast<Code>(c);
}

Element::Element(Field field, std::span<const std::uint32_t> coeffs)
    : field_(std::move(field)), code_(field_.encode(coeffs)) {}

Element Element::from_code(Field field, Field::Code code) {
  if (code >= field.order()) throw Error("invalid element: code out of range");
  return Element(std::move(field), code);
}

const Field& Element::checked(const Element& o) const {
  if (!(field_ == o.field_)) throw Error("field mismatch");
  return field_;
}

Element Element::operator+(const Element& o) const { return Element(field_, checked(o).add(code_, o.code_)); }
Element Element::operator-(const Element& o) const { return Element(field_, checked(o).sub(code_, o.code_)); }
Element Element::operator*(const Element& o) const { return Element(field_, checked(o).mul(code_, o.code_)); }
Element Element::operator/(const Element& o) const { return Element(field_, checked(o).div(code_, o.code_)); }
Element Element::operator-() const { return Element(field_, field_.neg(code_)); }
Element Element::pow(std::uint64_t e) const { return Element(field_, field_.pow(code_, e)); }
Element Element::inverse() const { return Element(field_, field_.inv(code_)); }

Element arith(const Element& a, const Element& b, Op op) {
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div: return a / b;
  }
  throw Error("unknown operation");
}

Element arith_pow(const Element& a, std::uint64_t exponent) { return a.pow(exponent); }

std::vector<Element> enumerate(const Field& field) {
  const unsigned n = field.degree();
  const std::uint32_t p = field.characteristic();
  std::vector<Element> out;
  out.reserve(field.order());
  std::vector<std::uint32_t> digits(n, 0);
  for (u64 idx = 0; idx < field.order(); ++idx) {
    out.push_back(Element(field, digits));
    // odometer, last coefficient fastest
    for (unsigned i = n; i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 2) throw Error("not a prime power: " + std::to_string(q));
  const auto factors = prime_factors(q);
  if (factors.size() != 1 || factors[0] > 0xffffffffu) throw Error("not a prime power: " + std::to_string(q));
  unsigned n = 0;
  for (u64 r = q; r > 1; r /= factors[0]) ++n;
  return {static_cast<std::uint32_t>(factors[0]), n};
}

}  // namespace weilzeta::ff
