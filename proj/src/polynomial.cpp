#include "germcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace germ {

namespace {
// descending canonical order
bool term_before(const Term& a, const Term& b) {
  return Monomial::cmp_degrevlex(a.mono, b.mono) > 0;
}
}  // namespace

Polynomial Polynomial::constant(Ring ring, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int i, unsigned power) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index");
  Polynomial p(ring);
  if (power == 0) return constant(ring, 1);
  p.terms_.push_back({Monomial::variable(ring->nvars(), i, power), Rational(1)});
  return p;
}

Polynomial Polynomial::term(Ring ring, Monomial m, Rational c) {
  Polynomial p(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const Term& t : terms)
    if (t.mono.nvars() != p.ring_->nvars())
      throw std::invalid_argument("monomial arity mismatch");
  std::sort(terms.begin(), terms.end(), term_before);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::cmp_degrevlex(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::map<Monomial, Rational> acc;
  for (const Term& s : a.terms())
    for (const Term& t : b.terms()) {
      Monomial m = s.mono.times(t.mono);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), s.coeff * t.coeff);
      } else {
        it->second += s.coeff * t.coeff;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a fixed monomial preserves the degrevlex order of terms
  for (const Term& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base(*this);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars()) throw std::out_of_range("variable index");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    unsigned e = t.mono.exp(var);
    if (!e) continue;
    std::vector<unsigned> exps;
    exps.reserve(static_cast<size_t>(nvars()));
    for (int i = 0; i < nvars(); ++i) exps.push_back(t.mono.exp(i));
    exps[static_cast<size_t>(var)] -= 1;
    out.push_back({Monomial::from_exponents(exps), t.coeff * Rational(static_cast<long>(e))});
  }
  return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rational sum(0);
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < t.mono.exp(i); ++k) v *= point[static_cast<size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::in_ring(const Ring& target, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars())
    throw std::invalid_argument("variable map arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<unsigned> exps(static_cast<size_t>(target->nvars()), 0);
    for (int i = 0; i < nvars(); ++i) {
      int j = var_map[static_cast<size_t>(i)];
      if (j < 0 || j >= target->nvars()) throw std::out_of_range("variable map entry");
      exps[static_cast<size_t>(j)] += t.mono.exp(i);
    }
    out.push_back({Monomial::from_exponents(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    bool wrote_coeff = false;
    if (t.mono.is_one() || !c.is_one()) {
      os << c.str();
      wrote_coeff = true;
    }
    bool first_var = true;
    for (int i = 0; i < nvars(); ++i) {
      unsigned e = t.mono.exp(i);
      if (!e) continue;
      if (wrote_coeff || !first_var) os << "*";
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
      first_var = false;
      wrote_coeff = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  int col() const { return static_cast<int>(pos) + 1; }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

struct Parser {
  Lexer lx;
  const Ring& ring;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.col()); }

  unsigned long parse_uint() {
    lx.skip_ws();
    if (lx.pos >= lx.s.size() || !isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      fail("expected a number");
    unsigned long v = 0;
    while (lx.pos < lx.s.size() && isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
      if (v > 100000000UL) fail("number literal too large");
      v = v * 10 + static_cast<unsigned long>(lx.s[lx.pos] - '0');
      ++lx.pos;
    }
    return v;
  }

  Polynomial parse_base() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.pos;
      Polynomial p = parse_expr();
      if (!lx.accept(')')) fail("expected ')'");
      return p;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      int at = lx.col();
      unsigned long num = parse_uint();
      if (lx.peek() == '/') {
        ++lx.pos;
        unsigned long den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", at);
        return Polynomial::constant(
            ring, Rational(static_cast<long>(num), static_cast<long>(den)));
      }
      return Polynomial::constant(ring, Rational(static_cast<long>(num)));
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int at = lx.col();
      std::string name;
      while (lx.pos < lx.s.size() &&
             (isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
        name += lx.s[lx.pos++];
      auto idx = ring->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", at);
      return Polynomial::variable(ring, *idx);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (lx.accept('^')) {
      unsigned long e = parse_uint();
      if (e > 65535) fail("exponent exceeds 16 bits");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    while (lx.accept('*')) p = p * parse_factor();
    return p;
  }

  Polynomial parse_expr() {
    bool neg = false;
    if (lx.accept('-'))
      neg = true;
    else
      lx.accept('+');
    Polynomial p = parse_term();
    if (neg) p = -p;
    while (true) {
      char c = lx.peek();
      if (c == '+') {
        ++lx.pos;
        p += parse_term();
      } else if (c == '-') {
        ++lx.pos;
        p -= parse_term();
      } else {
        return p;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Parser p{Lexer{text}, ring};
  if (p.lx.eof()) throw ParseError("empty polynomial", 1);
  Polynomial r = p.parse_expr();
  if (!p.lx.eof()) p.fail("trailing input");
  return r;
}

}  // namespace germ
