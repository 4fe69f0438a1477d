#include "weilzeta/variety.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

namespace weilzeta::variety {

using ff::Field;
using Code = Field::Code;

// ---------------------------------------------------------------------------
// Integer polynomials

void Polynomial::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (inserted) return;
  if (__builtin_add_overflow(it->second, c, &it->second)) throw Error("coefficient overflow");
  if (it->second == 0) terms.erase(it);
}

bool Polynomial::is_homogeneous() const {
  if (terms.empty()) return true;
  auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  const unsigned d = degree(terms.begin()->first);
  return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return degree(t.first) == d; });
}

PolySystem::PolySystem(unsigned num_vars, std::vector<Polynomial> polys, bool homogeneous)
    : num_vars_(num_vars), polys_(std::move(polys)), homogeneous_(homogeneous) {
  if (num_vars_ == 0) throw Error("invalid system: at least one variable required");
  for (const auto& poly : polys_) {
    for (const auto& [e, c] : poly.terms) {
      if (e.size() != num_vars_) throw Error("invalid system: exponent vector length mismatch");
    }
    if (homogeneous_ && !poly.is_homogeneous()) throw Error("not homogeneous");
  }
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      std::int64_t c;
      if (__builtin_mul_overflow(ca, cb, &c)) throw Error("coefficient overflow");
      out.add_term(e, c);
    }
  }
  return out;
}

Polynomial scaled(Polynomial a, std::int64_t s) {
  Polynomial out;
  for (const auto& [e, c] : a.terms) {
    std::int64_t v;
    if (__builtin_mul_overflow(c, s, &v)) throw Error("coefficient overflow");
    out.add_term(e, v);
  }
  return out;
}

Polynomial plus(Polynomial a, const Polynomial& b) {
  for (const auto& [e, c] : b.terms) a.add_term(e, c);
  return a;
}

Polynomial constant(std::int64_t c, unsigned nv) {
  Polynomial out;
  out.add_term(Exponents(nv, 0), c);
  return out;
}

struct Token {
  enum Kind { number, variable, op, end } kind;
  std::int64_t value = 0;  // number literal or variable index
  char symbol = 0;
};

// Variable index for an identifier, or -1 if it is not one.
int variable_index(std::string_view id) {
  if (id == "x") return 0;
  if (id == "y") return 1;
  if (id == "z") return 2;
  if (id.size() >= 2 && id[0] == 'x' &&
      std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int k = std::stoi(std::string(id.substr(1)));
    if (k >= 1) return k - 1;
  }
  return -1;
}

std::vector<Token> tokenize(std::string_view line, bool& used_alias) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, line[i] - '0', &v)) {
          throw Error("parse error: integer literal too large");
        }
        ++i;
      }
      out.push_back({Token::number, v});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      // x, y, z are single letters; x<digits> is an indexed variable
      std::size_t j = i + 1;
      if (c == 'x') {
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      const std::string_view id = line.substr(i, j - i);
      const int idx = variable_index(id);
      if (idx < 0) throw Error("parse error: unknown variable '" + std::string(id) + "'");
      if (id.size() == 1) used_alias = true;
      out.push_back({Token::variable, idx});
      i = j;
    } else if (std::string_view("+-*^()=").find(c) != std::string_view::npos) {
      out.push_back({Token::op, 0, c});
      ++i;
    } else {
      throw Error(std::string("parse error: unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::end});
  return out;
}

constexpr std::int64_t kMaxExponent = 1000;

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, unsigned nv) : toks_(tokens), nv_(nv) {}

  Polynomial parse_line() {
    Polynomial lhs = expr();
    if (accept('=')) {
      Polynomial rhs = expr();
      lhs = plus(std::move(lhs), scaled(std::move(rhs), -1));
    }
    if (peek().kind != Token::end) throw Error("parse error: trailing input");
    return lhs;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(char op) {
    if (peek().kind == Token::op && peek().symbol == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = scaled(std::move(acc), -1);
    for (;;) {
      if (accept('+')) acc = plus(std::move(acc), term());
      else if (accept('-')) acc = plus(std::move(acc), scaled(term(), -1));
      else return acc;
    }
  }

  bool starts_factor() const {
    const Token& t = peek();
    return t.kind == Token::number || t.kind == Token::variable || (t.kind == Token::op && t.symbol == '(');
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) acc = multiply(acc, factor());
      else if (starts_factor()) acc = multiply(acc, factor());
      else return acc;
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      const Token& t = peek();
      if (t.kind != Token::number) throw Error("parse error: exponent must be a nonnegative integer");
      if (t.value > kMaxExponent) throw Error("parse error: exponent too large");
      ++pos_;
      Polynomial result = constant(1, nv_);
      for (std::int64_t k = 0; k < t.value; ++k) result = multiply(result, base);
      return result;
    }
    return base;
  }

  Polynomial primary() {
    const Token t = peek();
    if (t.kind == Token::number) {
      ++pos_;
      return constant(t.value, nv_);
    }
    if (t.kind == Token::variable) {
      ++pos_;
      Exponents e(nv_, 0);
      e[static_cast<std::size_t>(t.value)] = 1;
      Polynomial out;
      out.add_term(e, 1);
      return out;
    }
    if (accept('(')) {
      Polynomial inner = expr();
      if (!accept(')')) throw Error("parse error: missing ')'");
      return inner;
    }
    throw Error("parse error: expected a number, variable or '('");
  }

  const std::vector<Token>& toks_;
  unsigned nv_;
  std::size_t pos_ = 0;
};

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  std::string s(line.substr(0, hash));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

Polynomial parse_polynomial(std::string_view line, unsigned num_vars) {
  bool alias = false;
  auto toks = tokenize(line, alias);
  for (const auto& t : toks) {
    if (t.kind == Token::variable && t.value >= static_cast<std::int64_t>(num_vars)) {
      throw Error("parse error: variable index exceeds " + std::to_string(num_vars));
    }
  }
  return Parser(toks, num_vars).parse_line();
}

PolySystem parse_system(std::string_view text, bool homogeneous) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool alias = false;
  std::int64_t max_index = -1;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    lines.push_back(tokenize(line, alias));
    for (const auto& t : lines.back()) {
      if (t.kind == Token::variable) max_index = std::max(max_index, t.value);
    }
  }
  if (lines.empty()) throw Error("parse error: no polynomials");
  const unsigned nv = static_cast<unsigned>(std::max<std::int64_t>(max_index + 1, 1));
  if (alias && nv > 3) throw Error("parse error: aliases x, y, z only allowed with at most 3 variables");
  std::vector<Polynomial> polys;
  for (const auto& toks : lines) polys.push_back(Parser(toks, nv).parse_line());
  return PolySystem(nv, std::move(polys), homogeneous);
}

std::string to_string(const Polynomial& poly, unsigned num_vars) {
  if (poly.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool monomial = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
    std::int64_t mag = c < 0 ? -c : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (!monomial || mag != 1) out << mag;
    bool need_star = !monomial || mag != 1;
    for (unsigned v = 0; v < num_vars; ++v) {
      if (!e[v]) continue;
      if (need_star) out << '*';
      need_star = true;
      if (num_vars <= 3) out << "xyz"[v];
      else out << 'x' << (v + 1);
      if (e[v] > 1) out << '^' << e[v];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Counting over F_q

namespace {

struct FieldTerm {
  Exponents exps;
  Code coeff;
};

// Polynomial with F_q coefficients over nv variables.
struct FieldPoly {
  std::vector<FieldTerm> terms;
};

struct FieldSystem {
  unsigned nv = 0;
  std::vector<FieldPoly> polys;
};

FieldSystem compile(const PolySystem& sys, const Field& f) {
  FieldSystem out{sys.num_vars(), {}};
  for (const auto& poly : sys.polys()) {
    FieldPoly fp;
    for (const auto& [e, c] : poly.terms) {
      const Code code = f.from_integer(c);
      if (code != 0) fp.terms.push_back({e, code});
    }
    out.polys.push_back(std::move(fp));
  }
  return out;
}

// Projective stratum `lead`: coordinates before `lead` are 0, coordinate
// `lead` is 1, the remaining ones are free.
FieldSystem restrict_to_stratum(const FieldSystem& sys, unsigned lead, const Field& f) {
  FieldSystem out{sys.nv - lead - 1, {}};
  for (const auto& poly : sys.polys) {
    std::map<Exponents, Code> acc;
    for (const auto& t : poly.terms) {
      if (std::any_of(t.exps.begin(), t.exps.begin() + lead, [](unsigned k) { return k > 0; })) continue;
      Exponents rest(t.exps.begin() + lead + 1, t.exps.end());
      auto [it, inserted] = acc.emplace(std::move(rest), t.coeff);
      if (!inserted) it->second = f.add(it->second, t.coeff);
    }
    FieldPoly fp;
    for (auto& [e, c] : acc) {
      if (c != 0) fp.terms.push_back({e, c});
    }
    out.polys.push_back(std::move(fp));
  }
  return out;
}

// Univariate polynomial over F_q in the last variable, coefficients by degree.
using UPoly = std::vector<Code>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly urem(UPoly a, const UPoly& m, const Field& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Code lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const Code factor = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    trim(a);
  }
  return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, const Field& f) {
  if (a.empty() || b.empty()) return {};
  UPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  return urem(std::move(prod), m, f);
}

UPoly ugcd(UPoly a, UPoly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Number of distinct roots in F_q of a nonzero polynomial g.
std::uint64_t distinct_roots(UPoly g, const Field& f) {
  trim(g);
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return 0;
  if (deg == 1) return 1;
  if (deg == 2 && f.characteristic() != 2) {
    // b^2 - 4ac and its quadratic character
    const Code disc = f.sub(f.mul(g[1], g[1]), f.mul(f.from_integer(4), f.mul(g[2], g[0])));
    if (disc == 0) return 1;
    return f.pow(disc, (f.order() - 1) / 2) == 1 ? 2 : 0;
  }
  // gcd(g, y^q - y) has exactly the distinct F_q-roots of g as roots.
  UPoly h = urem(UPoly{0, 1}, g, f);
  UPoly base = h;
  UPoly result{1};
  for (std::uint64_t e = f.order(); e; e >>= 1) {
    if (e & 1) result = umulmod(result, base, g, f);
    if (e > 1) base = umulmod(base, base, g, f);
  }
  // result = y^q mod g; subtract y
  if (result.size() < 2) result.resize(2, 0);
  result[1] = f.sub(result[1], 1);
  trim(result);
  if (result.empty()) return deg;  // g divides y^q - y
  return ugcd(std::move(g), std::move(result), f).size() - 1;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

// Counts the zeros of `sys` in F_q^nv.
class AffineCounter {
 public:
  AffineCounter(const FieldSystem& sys, const Field& f, const CountOptions& opts)
      : sys_(sys), f_(f), opts_(opts), q_(f.order()) {
    if (sys_.nv == 0) return;
    const unsigned last = sys_.nv - 1;
    // Split each polynomial by the degree in the last variable.
    for (const auto& poly : sys_.polys) {
      Split split;
      for (const auto& t : poly.terms) {
        const unsigned d = t.exps[last];
        if (split.by_degree.size() <= d) split.by_degree.resize(d + 1);
        split.by_degree[d].push_back(t);
        if (last > 0) max_exp_ = std::max(max_exp_, *std::max_element(t.exps.begin(), t.exps.begin() + last));
      }
      splits_.push_back(std::move(split));
    }
    // pow_[e][v] = v^e for the outer variables, when it fits
    if ((std::uint64_t{max_exp_} + 1) * q_ > kPowTableLimit) return;
    pow_.assign(max_exp_ + 1, std::vector<Code>(q_));
    for (unsigned e = 0; e <= max_exp_; ++e) {
      for (std::uint64_t v = 0; v < q_; ++v) pow_[e][v] = f_.pow(static_cast<Code>(v), e);
    }
  }

  std::uint64_t run() const {
    if (sys_.nv == 0) {
      // constants only
      for (const auto& poly : sys_.polys) {
        if (!poly.terms.empty()) return 0;
      }
      return 1;
    }
    bool exhaustive = opts_.method == CountMethod::exhaustive;
    if (opts_.method == CountMethod::automatic) {
      // per-fibre cost: q Horner evaluations against a y^q mod g powering
      std::uint64_t d = 0;
      for (const auto& split : splits_) d = std::max<std::uint64_t>(d, split.by_degree.size());
      const std::uint64_t log_q = std::bit_width(q_);
      exhaustive = q_ * d <= 2 * d * d * log_q;
    }
    const unsigned outer_vars = sys_.nv - 1;
    const std::uint64_t tuples = checked_pow(q_, exhaustive ? sys_.nv : outer_vars, opts_.work_limit);
    if (tuples > opts_.work_limit) throw Error("search space too large");
    const std::uint64_t outer = checked_pow(q_, outer_vars, opts_.work_limit);

    const unsigned workers = std::max(1u, std::min<unsigned>(opts_.workers, static_cast<unsigned>(outer)));
    std::vector<std::uint64_t> partial(workers, 0);
    auto chunk = [&](unsigned w) {
      const std::uint64_t lo = outer * w / workers, hi = outer * (w + 1) / workers;
      partial[w] = count_range(lo, hi, exhaustive);
    };
    if (workers == 1) {
      chunk(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
    }
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }

 private:
  static constexpr std::uint64_t kPowTableLimit = std::uint64_t{1} << 22;

  Code power(Code v, unsigned e) const { return pow_.empty() ? f_.pow(v, e) : pow_[e][v]; }

  struct Split {
    std::vector<std::vector<FieldTerm>> by_degree;
  };

  std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi, bool exhaustive) const {
    const unsigned outer_vars = sys_.nv - 1;
    std::vector<Code> point(outer_vars, 0);
    std::vector<UPoly> fibres(splits_.size());
    std::uint64_t total = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned v = outer_vars; v-- > 0;) {
        point[v] = static_cast<Code>(rest % q_);
        rest /= q_;
      }
      for (std::size_t k = 0; k < splits_.size(); ++k) fibre_at(splits_[k], point, fibres[k]);
      total += exhaustive ? count_fibre_exhaustive(fibres) : count_fibre_roots(fibres);
    }
    return total;
  }

  void fibre_at(const Split& split, const std::vector<Code>& point, UPoly& out) const {
    out.assign(split.by_degree.size(), 0);
    for (std::size_t d = 0; d < split.by_degree.size(); ++d) {
      Code acc = 0;
      for (const auto& t : split.by_degree[d]) {
        Code m = t.coeff;
        for (std::size_t v = 0; v < point.size() && m; ++v) {
          if (t.exps[v]) m = f_.mul(m, power(point[v], t.exps[v]));
        }
        acc = f_.add(acc, m);
      }
      out[d] = acc;
    }
    trim(out);
  }

  std::uint64_t count_fibre_exhaustive(const std::vector<UPoly>& fibres) const {
    std::uint64_t n = 0;
    for (std::uint64_t y = 0; y < q_; ++y) {
      bool all_zero = true;
      for (const auto& g : fibres) {
        Code acc = 0;
        for (std::size_t d = g.size(); d-- > 0;) acc = f_.add(f_.mul(acc, static_cast<Code>(y)), g[d]);
        if (acc != 0) {
          all_zero = false;
          break;
        }
      }
      n += all_zero;
    }
    return n;
  }

  std::uint64_t count_fibre_roots(const std::vector<UPoly>& fibres) const {
    UPoly common;
    for (const auto& g : fibres) {
      if (g.empty()) continue;
      common = common.empty() ? g : ugcd(common, g, f_);
      if (common.size() == 1) return 0;
    }
    if (common.empty()) return q_;
    return distinct_roots(std::move(common), f_);
  }

  const FieldSystem& sys_;
  const Field& f_;
  const CountOptions& opts_;
  std::uint64_t q_;
  std::vector<Split> splits_;
  unsigned max_exp_ = 0;
  std::vector<std::vector<Code>> pow_;
};

std::uint64_t count_projective(const FieldSystem& sys, const Field& f, const CountOptions& opts) {
  std::uint64_t total = 0;
  for (unsigned lead = 0; lead < sys.nv; ++lead) {
    const FieldSystem stratum = restrict_to_stratum(sys, lead, f);
    total += AffineCounter(stratum, f, opts).run();
  }
  return total;
}

}  // namespace

std::uint64_t count_affine(const PolySystem& sys, const Field& field, const CountOptions& opts) {
  const FieldSystem compiled = compile(sys, field);
  return AffineCounter(compiled, field, opts).run();
}

std::uint64_t count_projective_variety(const PolySystem& sys, const Field& field, const CountOptions& opts) {
  if (!sys.homogeneous()) throw Error("not homogeneous: system is not flagged projective");
  return count_projective(compile(sys, field), field, opts);
}

std::uint64_t count_projective_space(unsigned dim, const Field& field, const CountOptions& opts) {
  const FieldSystem empty{dim + 1, {}};
  const std::uint64_t counted = count_projective(empty, field, opts);
  std::uint64_t closed = 0, term = 1;
  for (unsigned k = 0; k <= dim; ++k, term *= field.order()) closed += term;
  if (counted != closed) throw std::logic_error("projective space enumeration disagrees with closed form");
  return counted;
}

CountSequence count_sequence(const PolySystem& sys, std::uint32_t p, unsigned n_max, const CountOptions& opts) {
  CountSequence out{p, {}, sys.homogeneous()};
  for (unsigned n = 1; n <= n_max; ++n) {
    const Field f = ff::make_field(p, n);
    out.counts.push_back(sys.homogeneous() ? count_projective_variety(sys, f, opts) : count_affine(sys, f, opts));
  }
  return out;
}

}  // namespace weilzeta::variety
