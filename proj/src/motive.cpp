#include "weilzeta/motive.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "weilzeta/error.hpp"
#include "weilzeta/finite_field.hpp"

namespace weilzeta::motive {

namespace {

constexpr double kPurityTolerance = 1e-9;

bool conjugate_closed(const std::vector<Complex>& roots, double scale) {
  const double tol = 1e-9 * std::max(1.0, scale);
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(roots[i].imag()) <= tol) continue;
    bool matched = false;
    for (std::size_t j = 0; j < roots.size() && !matched; ++j) {
      if (!used[j] && std::abs(roots[j] - std::conj(roots[i])) <= tol) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

Motive::Motive(std::uint64_t base_q, WeightTable pieces) : q_(base_q), pieces_(std::move(pieces)) {
  ff::split_prime_power(q_);  // throws unless q is a prime power
  for (auto it = pieces_.begin(); it != pieces_.end();) {
    if (it->second.empty()) {
      it = pieces_.erase(it);
      continue;
    }
    const double target = std::pow(static_cast<double>(q_), it->first / 2.0);
    for (const auto& a : it->second) {
      if (std::abs(std::abs(a) - target) > kPurityTolerance * target) {
        throw Error("purity violated: eigenvalue of modulus " + format_number(std::abs(a)) + " in weight " +
                    std::to_string(it->first));
      }
    }
    if (!conjugate_closed(it->second, target)) {
      throw Error("weight " + std::to_string(it->first) + " piece is not closed under conjugation");
    }
    ++it;
  }
}

Motive Motive::unit(std::uint64_t q) { return Motive(q, {{0, {Complex(1, 0)}}}); }

Motive Motive::lefschetz(std::uint64_t q, unsigned power) {
  return Motive(q, {{2 * power, {Complex(std::pow(static_cast<double>(q), power), 0)}}});
}

std::size_t Motive::rank() const {
  std::size_t r = 0;
  for (const auto& [k, roots] : pieces_) r += roots.size();
  return r;
}

Motive direct_sum(const Motive& a, const Motive& b) {
  if (a.base() != b.base()) throw Error("base mismatch: motives over different fields");
  WeightTable out = a.pieces();
  for (const auto& [k, roots] : b.pieces()) out[k].insert(out[k].end(), roots.begin(), roots.end());
  return Motive(a.base(), std::move(out));
}

Motive tensor(const Motive& a, const Motive& b) {
  if (a.base() != b.base()) throw Error("base mismatch: motives over different fields");
  WeightTable out;
  for (const auto& [j, ra] : a.pieces()) {
    for (const auto& [k, rb] : b.pieces()) {
      auto& dst = out[j + k];
      for (const auto& x : ra) {
        for (const auto& y : rb) dst.push_back(x * y);
      }
    }
  }
  return Motive(a.base(), std::move(out));
}

Motive motive_of_projective_space(unsigned dim, std::uint64_t q) {
  Motive m = Motive::unit(q);
  for (unsigned k = 1; k <= dim; ++k) m = direct_sum(m, Motive::lefschetz(q, k));
  return m;
}

Motive motive_of_elliptic_curve(const weil::FrobeniusAlpha& alpha) {
  return Motive(alpha.p, {{0, {Complex(1, 0)}},
                          {1, {alpha.alpha, std::conj(alpha.alpha)}},
                          {2, {Complex(alpha.p, 0)}}});
}

std::int64_t point_count(const Motive& m, unsigned n) {
  if (n == 0) throw Error("point count needs n >= 1");
  return zeta::trace_formula_count(m.pieces(), n);
}

std::string to_string(const Motive& m) {
  std::ostringstream out;
  if (m.pieces().empty()) out << "(zero motive)\n";
  for (const auto& [k, roots] : m.pieces()) {
    out << "weight " << k << ": [";
    for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? ", " : "") << format_complex(roots[i]);
    out << "]\n";
  }
  return out.str();
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, std::uint64_t q) : s_(s), q_(q) {}

  Motive parse() {
    Motive m = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw Error("motive expression: " + why); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* begin = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  unsigned exponent() {
    const std::int64_t v = integer();
    if (v < 0 || v > 64) fail("exponent out of range");
    return static_cast<unsigned>(v);
  }

  Motive sum() {
    Motive m = product();
    while (accept("+")) m = direct_sum(m, product());
    return m;
  }

  Motive product() {
    Motive m = atom();
    while (accept("*")) m = tensor(m, atom());
    return m;
  }

  Motive atom() {
    if (accept("(")) {
      Motive m = sum();
      if (!accept(")")) fail("missing ')'");
      return m;
    }
    if (accept("h(1)")) return Motive::unit(q_);
    if (accept("elliptic")) return elliptic();
    if (accept("P^")) return motive_of_projective_space(exponent(), q_);
    if (accept("L")) return Motive::lefschetz(q_, accept("^") ? exponent() : 1);
    if (accept("0")) return Motive::zero(q_);
    if (accept("1")) return Motive::unit(q_);
    fail("expected a motive");
  }

  Motive elliptic() {
    std::int64_t trace = 0;
    std::uint64_t p = q_;
    bool have_trace = false;
    for (;;) {
      if (accept("a=")) {
        trace = integer();
        have_trace = true;
      } else if (accept("p=")) {
        const std::int64_t v = integer();
        if (v < 2) fail("p must be prime");
        p = static_cast<std::uint64_t>(v);
      } else {
        break;
      }
    }
    if (!have_trace) fail("elliptic needs a=<trace>");
    if (p != q_) throw Error("base mismatch: elliptic p=" + std::to_string(p) + " but q=" + std::to_string(q_));
    if (!ff::is_prime(p)) throw Error("not prime: " + std::to_string(p));
    return motive_of_elliptic_curve(weil::alpha_from_trace(static_cast<std::uint32_t>(p), trace));
  }

  std::string_view s_;
  std::uint64_t q_;
  std::size_t pos_ = 0;
};

}  // namespace

Motive parse_motive(std::string_view expr, std::uint64_t q) { return ExprParser(expr, q).parse(); }

}  // namespace weilzeta::motive
