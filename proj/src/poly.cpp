#include "arrmi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "arrmi/error.hpp"

namespace arrmi {

Poly Poly::constant(const Rat& c, MonomialOrder order) {
  return monomial(Monomial::one(), c, order);
}

Poly Poly::monomial(const Monomial& m, const Rat& c, MonomialOrder order) {
  Poly p(order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(Var v, MonomialOrder order) { return monomial(Monomial::var(v), 1, order); }

Poly Poly::from_terms(std::vector<Term> terms, MonomialOrder order) {
  Poly p(order);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  const auto order = order_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
    if (merged.back().coef == 0) merged.pop_back();
  }
  terms_ = std::move(merged);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Poly::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.involves(v); });
}

Poly Poly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Poly p(order);
  p.terms_ = terms_;
  p.normalize();
  return p;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coef() == 1) return *this;
  const Rat inv = 1 / leading_coef();
  return *this * inv;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly Poly::operator+(const Poly& q) const {
  const Poly& rhs = q.order_ == order_ ? q : q.with_order(order_);
  Poly out(order_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    int c = a == terms_.end() ? -1 : b == rhs.terms_.end() ? 1 : order_.compare(a->mono, b->mono);
    if (c > 0) {
      out.terms_.push_back(*a++);
    } else if (c < 0) {
      out.terms_.push_back(*b++);
    } else {
      Rat s = a->coef + b->coef;
      if (s != 0) out.terms_.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

Poly Poly::operator-(const Poly& q) const { return *this + (-q); }

Poly Poly::operator*(const Poly& q) const {
  if (is_zero() || q.is_zero()) return Poly(order_);
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(terms_.size() * q.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return from_terms(std::move(terms), order_);
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(order_);
  Poly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Poly Poly::times_term(const Monomial& m, const Rat& c) const {
  if (c == 0) return Poly(order_);
  Poly p(order_);
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the term order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(1, order_);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& q) const {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const Poly& d = q.order_ == order_ ? q : q.with_order(order_);
  Poly rem = *this;
  std::vector<Term> quotient;
  // If q | p then every remainder is (quotient part)*q, whose leading term
  // is divisible by LT(q).
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!d.leading_monomial().divides(lt.mono)) return std::nullopt;
    Monomial m = d.leading_monomial().divided_into(lt.mono);
    Rat c = lt.coef / d.leading_coef();
    rem = rem - d.times_term(m, c);
    quotient.push_back({m, std::move(c)});
  }
  return from_terms(std::move(quotient), order_);
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[static_cast<int>(v)] -= 1;
    terms.push_back({m, t.coef * e});
  }
  return from_terms(std::move(terms), order_);
}

Poly Poly::substitute(Var v, const Rat& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[v];
    m.exp[static_cast<int>(v)] = 0;
    Rat c = t.coef;
    if (e > 0) {
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      pw.canonicalize();
      c *= pw;
    }
    terms.push_back({m, std::move(c)});
  }
  return from_terms(std::move(terms), order_);
}

Rat Poly::evaluate(const std::array<Rat, 3>& xyz) const {
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (int i = 0; i < 3; ++i)
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= xyz[i];
    if (t.mono.exp[3] != 0) throw Error(ErrorCode::InvalidArgument, "cannot evaluate a polynomial in t");
    total += v;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coef < 0;
    const Rat mag = neg ? Rat(-t.coef) : t.coef;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += arrmi::to_string(mag);
    } else {
      if (mag != 1) out += arrmi::to_string(mag) + "*";
      out += t.mono.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, MonomialOrder order) : s_(text), order_(order) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "polynomial parse error at column " + std::to_string(pos_ + 1) +
                                      ": " + msg + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(unsigned(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      return Poly::constant(parse_rat(s_.substr(start, pos_ - start)), order_);
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (c == var_name(static_cast<Var>(i))) {
        ++pos_;
        return Poly::variable(static_cast<Var>(i), order_);
      }
    }
    fail(std::string("unknown symbol '") + c + "'");
  }

  std::string_view s_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, MonomialOrder order) { return Parser(text, order).run(); }

}  // namespace arrmi
