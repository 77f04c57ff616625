#include "chowbound/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace chowbound {

Monomial Monomial::variable(unsigned index, unsigned exponent) {
  if (index == 0) throw std::invalid_argument("Monomial: variable indices start at 1");
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(index, exponent);
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<unsigned, unsigned>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Monomial m;
  for (const auto& [idx, exp] : pairs) {
    if (idx == 0) throw std::invalid_argument("Monomial: variable indices start at 1");
    if (exp == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == idx)
      m.entries_.back().second += exp;
    else
      m.entries_.emplace_back(idx, exp);
  }
  return m;
}

unsigned long long Monomial::weight() const {
  unsigned long long w = 0;
  for (const auto& [idx, exp] : entries_) w += static_cast<unsigned long long>(idx) * exp;
  return w;
}

unsigned Monomial::exponent_of(unsigned index) const {
  for (const auto& [idx, exp] : entries_)
    if (idx == index) return exp;
  return 0;
}

unsigned Monomial::max_variable_index() const {
  return entries_.empty() ? 0 : entries_.back().first;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  auto wa = weight(), wb = o.weight();
  if (wa != wb) return wa <=> wb;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first != b->first) {
      // The monomial owning the smaller index has a positive exponent where
      // the other has zero, so it sorts first.
      return a->first < b->first ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a->second != b->second)
      // Larger exponent at the shared index sorts first.
      return b->second <=> a->second;
    ++a;
    ++b;
  }
  if (a != entries_.end()) return std::strong_ordering::less;
  if (b != o.entries_.end()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(char letter) const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [idx, exp] : entries_) {
    if (!s.empty()) s += '*';
    s += letter;
    s += std::to_string(idx);
    if (exp > 1) {
      s += '^';
      s += std::to_string(exp);
    }
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [idx, exp] : entries_) {
    h = (h ^ idx) * 1099511628211ull;
    h = (h ^ exp) * 1099511628211ull;
  }
  return h;
}

GradedPoly GradedPoly::constant(unsigned truncation, Rational c) {
  GradedPoly p(truncation);
  p.add_term(Monomial(), c);
  return p;
}

GradedPoly GradedPoly::variable(unsigned truncation, unsigned index, unsigned exponent) {
  GradedPoly p(truncation);
  p.add_term(Monomial::variable(index, exponent), Rational(1));
  return p;
}

GradedPoly GradedPoly::from_terms(unsigned truncation,
                                  std::vector<std::pair<Monomial, Rational>> terms) {
  GradedPoly p(truncation);
  for (auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || m.weight() > truncation_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(truncation_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

namespace {

void require_same_truncation(const GradedPoly& a, const GradedPoly& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("GradedPoly: mismatched truncations " +
                                std::to_string(a.truncation()) + " and " +
                                std::to_string(b.truncation()));
}

}  // namespace

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same_truncation(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same_truncation(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  require_same_truncation(*this, o);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [ma, ca] : terms_) {
    unsigned long long wa = ma.weight();
    // o.terms_ ascends by weight, so stop once the product would overflow
    // the truncation.
    for (const auto& [mb, cb] : o.terms_) {
      if (wa + mb.weight() > truncation_) break;
      Rational prod = ca * cb;
      auto [it, inserted] = acc.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  GradedPoly out(truncation_);
  std::vector<std::pair<Monomial, Rational>> flat;
  flat.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) flat.emplace_back(std::move(m), std::move(c));
  std::sort(flat.begin(), flat.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [m, c] : flat) out.terms_.emplace(std::move(m), std::move(c));
  return out;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly out(truncation_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

GradedPoly GradedPoly::invert_unit() const {
  Rational c0 = constant_term();
  if (c0.is_zero())
    throw std::invalid_argument("GradedPoly: inverse requires a nonzero constant term");
  // 1/f = (1/c0) * sum u^m with u = 1 - f/c0, a nilpotent element.
  GradedPoly u = one(truncation_) - scaled(c0.inverse());
  GradedPoly sum = one(truncation_);
  GradedPoly power = one(truncation_);
  for (unsigned m = 1; m <= truncation_; ++m) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.scaled(c0.inverse());
}

GradedPoly GradedPoly::exp_series() const {
  if (!constant_term().is_zero())
    throw std::invalid_argument("GradedPoly: exp requires a zero constant term");
  GradedPoly sum = one(truncation_);
  GradedPoly power = one(truncation_);
  Rational inv_factorial(1);
  for (unsigned m = 1; m <= truncation_; ++m) {
    power = power * *this;
    if (power.is_zero()) break;
    inv_factorial /= Rational(m);
    sum += power.scaled(inv_factorial);
  }
  return sum;
}

GradedPoly GradedPoly::log_series() const {
  if (!(constant_term() == Rational(1)))
    throw std::invalid_argument("GradedPoly: log requires constant term 1");
  GradedPoly u = *this - one(truncation_);
  GradedPoly sum = zero(truncation_);
  GradedPoly power = one(truncation_);
  for (unsigned m = 1; m <= truncation_; ++m) {
    power = power * u;
    if (power.is_zero()) break;
    Rational coeff(m % 2 == 1 ? 1 : -1, m);
    sum += power.scaled(coeff);
  }
  return sum;
}

GradedPoly GradedPoly::sign_involution() const {
  GradedPoly out(truncation_);
  for (const auto& [m, c] : terms_)
    out.terms_.emplace(m, m.weight() % 2 == 0 ? c : -c);
  return out;
}

GradedPoly GradedPoly::component(unsigned w) const {
  if (w > truncation_)
    throw std::invalid_argument("GradedPoly: component weight exceeds truncation");
  GradedPoly out(truncation_);
  for (const auto& [m, c] : terms_)
    if (m.weight() == w) out.terms_.emplace(m, c);
  return out;
}

GradedPoly GradedPoly::truncated(unsigned new_truncation) const {
  GradedPoly out(new_truncation);
  for (const auto& [m, c] : terms_) {
    if (m.weight() > new_truncation) break;
    out.terms_.emplace(m, c);
  }
  return out;
}

GradedPoly GradedPoly::substitute(const std::map<unsigned, GradedPoly>& images) const {
  for (const auto& [idx, img] : images)
    if (img.truncation() != truncation_)
      throw std::invalid_argument("GradedPoly: substitution image truncation mismatch");
  GradedPoly out(truncation_);
  for (const auto& [m, c] : terms_) {
    GradedPoly term = constant(truncation_, c);
    for (const auto& [idx, exp] : m.entries()) {
      auto it = images.find(idx);
      const GradedPoly img =
          it == images.end() ? variable(truncation_, idx) : it->second;
      term = term * chowbound::pow(img, exp);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

GradedPoly GradedPoly::remap_variables(const std::function<unsigned(unsigned)>& f,
                                       unsigned new_truncation) const {
  GradedPoly out(new_truncation);
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    pairs.reserve(m.entries().size());
    for (const auto& [idx, exp] : m.entries()) pairs.emplace_back(f(idx), exp);
    out.add_term(Monomial::from_pairs(std::move(pairs)), c);
  }
  return out;
}

std::string GradedPoly::to_string(char letter) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    for (const auto& [idx, exp] : m.entries()) {
      s += '*';
      s += letter;
      s += std::to_string(idx);
      if (exp > 1) {
        s += '^';
        s += std::to_string(exp);
      }
    }
  }
  return s;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  char letter;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  unsigned long long parse_uint() {
    skip_ws();
    if (!peek_digit()) throw std::invalid_argument("GradedPoly: expected a number at position " +
                                                   std::to_string(pos));
    unsigned long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long long>(text[pos] - '0');
      if (v > 1'000'000'000ull) throw std::invalid_argument("GradedPoly: number too large");
      ++pos;
    }
    return v;
  }

  BigInt parse_bigint() {
    skip_ws();
    if (!peek_digit()) throw std::invalid_argument("GradedPoly: expected a number at position " +
                                                   std::to_string(pos));
    BigInt v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  Rational parse_rational(bool negative) {
    BigInt num = parse_bigint();
    BigInt den = 1;
    if (eat('/')) den = parse_bigint();
    Rational q(num, den);
    return negative ? -q : q;
  }

  Monomial parse_factor() {
    skip_ws();
    if (pos >= text.size() || text[pos] != letter)
      throw std::invalid_argument(std::string("GradedPoly: expected variable letter '") + letter +
                                  "' at position " + std::to_string(pos));
    ++pos;
    unsigned idx = static_cast<unsigned>(parse_uint());
    unsigned exp = 1;
    if (eat('^')) exp = static_cast<unsigned>(parse_uint());
    return Monomial::variable(idx, exp);
  }

  // term := rational ('*' factor)* | factor ('*' factor)*
  std::pair<Monomial, Rational> parse_term(bool negative) {
    skip_ws();
    Rational coeff(1);
    Monomial mono;
    if (peek_digit()) {
      coeff = parse_rational(negative);
      while (eat('*')) mono = mono * parse_factor();
    } else {
      if (negative) coeff = Rational(-1);
      mono = parse_factor();
      while (eat('*')) mono = mono * parse_factor();
    }
    return {mono, coeff};
  }
};

}  // namespace

GradedPoly GradedPoly::parse(std::string_view text, unsigned truncation, char letter) {
  Parser p{text, 0, letter};
  GradedPoly out(truncation);
  p.skip_ws();
  if (p.pos == text.size()) throw std::invalid_argument("GradedPoly: empty input");
  bool negative = p.eat('-');
  auto [m, c] = p.parse_term(negative);
  if (m.weight() > truncation)
    throw std::invalid_argument("GradedPoly: term of weight " + std::to_string(m.weight()) +
                                " exceeds truncation " + std::to_string(truncation));
  out.add_term(m, c);
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) break;
    bool neg;
    if (p.eat('+'))
      neg = p.eat('-');
    else if (p.eat('-'))
      neg = true;
    else
      throw std::invalid_argument("GradedPoly: expected '+' or '-' at position " +
                                  std::to_string(p.pos));
    auto [m2, c2] = p.parse_term(neg);
    if (m2.weight() > truncation)
      throw std::invalid_argument("GradedPoly: term of weight " + std::to_string(m2.weight()) +
                                  " exceeds truncation " + std::to_string(truncation));
    out.add_term(m2, c2);
  }
  return out;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  // Equality through the smaller truncation: agreeing where both are defined.
  unsigned n = std::min(truncation_, o.truncation_);
  auto a = terms_.begin(), b = o.terms_.begin();
  while (true) {
    while (a != terms_.end() && a->first.weight() > n) ++a;
    while (b != o.terms_.end() && b->first.weight() > n) ++b;
    if (a == terms_.end() || b == o.terms_.end()) break;
    if (!(a->first == b->first) || !(a->second == b->second)) return false;
    ++a;
    ++b;
  }
  return a == terms_.end() && b == o.terms_.end();
}

GradedPoly pow(const GradedPoly& base, unsigned e) {
  GradedPoly result = GradedPoly::one(base.truncation());
  for (unsigned i = 0; i < e; ++i) {
    result = result * base;
    if (result.is_zero()) break;
  }
  return result;
}

std::string pretty_string(const GradedPoly& p, char letter) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (s.empty()) {
      if (a.sign() < 0) {
        s += '-';
        a = -a;
      }
    } else {
      s += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    bool unit = a == Rational(1) && !m.is_one();
    if (!unit) s += a.to_string();
    if (!m.is_one()) {
      if (!unit) s += '*';
      s += m.to_string(letter);
    }
  }
  return s;
}

}  // namespace chowbound
