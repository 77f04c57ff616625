#include "chowbound/root_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chowbound {

RootPoly::RootPoly(unsigned var_count, unsigned max_degree)
    : var_count_(var_count), max_degree_(max_degree) {
  if (var_count == 0) throw std::invalid_argument("RootPoly: need at least one variable");
}

RootPoly RootPoly::zero(unsigned var_count, unsigned max_degree) {
  return RootPoly(var_count, max_degree);
}

RootPoly RootPoly::one(unsigned var_count, unsigned max_degree) {
  RootPoly p(var_count, max_degree);
  p.add_term(std::vector<unsigned>(var_count, 0), Rational(1));
  return p;
}

RootPoly RootPoly::variable(unsigned var_count, unsigned max_degree, unsigned var) {
  if (var >= var_count) throw std::invalid_argument("RootPoly: variable out of range");
  RootPoly p(var_count, max_degree);
  std::vector<unsigned> e(var_count, 0);
  e[var] = 1;
  p.add_term(e, Rational(1));
  return p;
}

RootPoly RootPoly::from_series(unsigned var_count, unsigned max_degree,
                               const std::vector<Rational>& series, unsigned var) {
  if (var >= var_count) throw std::invalid_argument("RootPoly: variable out of range");
  RootPoly p(var_count, max_degree);
  std::vector<unsigned> e(var_count, 0);
  for (unsigned d = 0; d < series.size() && d <= max_degree; ++d) {
    e[var] = d;
    p.add_term(e, series[d]);
  }
  return p;
}

RootPoly RootPoly::elementary_symmetric(unsigned var_count, unsigned max_degree, unsigned i) {
  RootPoly p(var_count, max_degree);
  if (i > var_count) return p;
  // Iterate over i-subsets of the variables.
  std::vector<unsigned> pick(i);
  std::iota(pick.begin(), pick.end(), 0);
  if (i == 0) return one(var_count, max_degree);
  while (true) {
    std::vector<unsigned> e(var_count, 0);
    for (unsigned v : pick) e[v] = 1;
    p.add_term(e, Rational(1));
    // next combination
    int pos = static_cast<int>(i) - 1;
    while (pos >= 0 && pick[pos] == var_count - i + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (unsigned j = pos + 1; j < i; ++j) pick[j] = pick[j - 1] + 1;
  }
  return p;
}

void RootPoly::add_term(const std::vector<unsigned>& exponents, const Rational& c) {
  if (c.is_zero()) return;
  unsigned long long deg = 0;
  for (unsigned e : exponents) deg += e;
  if (deg > max_degree_) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RootPoly RootPoly::operator+(const RootPoly& o) const {
  if (var_count_ != o.var_count_ || max_degree_ != o.max_degree_)
    throw std::invalid_argument("RootPoly: mismatched shapes");
  RootPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

RootPoly RootPoly::operator-(const RootPoly& o) const {
  if (var_count_ != o.var_count_ || max_degree_ != o.max_degree_)
    throw std::invalid_argument("RootPoly: mismatched shapes");
  RootPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

RootPoly RootPoly::operator*(const RootPoly& o) const {
  if (var_count_ != o.var_count_ || max_degree_ != o.max_degree_)
    throw std::invalid_argument("RootPoly: mismatched shapes");
  RootPoly out(var_count_, max_degree_);
  std::vector<unsigned> e(var_count_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (unsigned v = 0; v < var_count_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

RootPoly RootPoly::scaled(const Rational& c) const {
  RootPoly out(var_count_, max_degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

GradedPoly reduce_symmetric_to_chern(const RootPoly& p, unsigned truncation) {
  unsigned m = p.var_count();
  // Cache the elementary symmetric polynomials once.
  std::vector<RootPoly> elem;
  elem.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i)
    elem.push_back(RootPoly::elementary_symmetric(m, p.max_degree(), i));

  GradedPoly out(truncation);
  RootPoly rest = p;
  while (!rest.is_zero()) {
    // Lex-leading term (largest exponent vector); for a symmetric polynomial
    // its exponents are non-increasing, so e-product elimination applies.
    const auto& [lead, coeff] = *rest.terms().rbegin();
    for (unsigned v = 0; v + 1 < m; ++v)
      if (lead[v] < lead[v + 1])
        throw std::invalid_argument(
            "reduce_symmetric_to_chern: leading term is not dominant; polynomial not symmetric");
    // prod_i e_i^{lead[i] - lead[i+1]} has the same leading term.
    RootPoly product = RootPoly::one(m, p.max_degree());
    std::vector<std::pair<Monomial, Rational>> chern_term;
    Monomial mono;
    for (unsigned v = 0; v < m; ++v) {
      unsigned next = v + 1 < m ? lead[v + 1] : 0;
      unsigned rep = lead[v] - next;
      for (unsigned r = 0; r < rep; ++r) product = product * elem[v + 1];
      if (rep > 0) mono = mono * Monomial::variable(v + 1, rep);
    }
    if (mono.weight() <= truncation)
      out += GradedPoly::from_terms(truncation, {{mono, coeff}});
    rest = rest - product.scaled(coeff);
  }
  return out;
}

std::vector<Rational> oracle_todd_series(unsigned max_degree) {
  // x/(1 - e^{-x}) by direct long division of power series: if
  // (1 - e^{-x})/x = sum a_j x^j with a_j = (-1)^j/(j+1)!, solve
  // sum_k q_k x^k * sum_j a_j x^j = 1 term by term.
  std::vector<Rational> a(max_degree + 1);
  Rational inv_fact(1);
  for (unsigned j = 0; j <= max_degree; ++j) {
    inv_fact /= Rational(j + 1);
    a[j] = j % 2 == 0 ? inv_fact : -inv_fact;
  }
  std::vector<Rational> q(max_degree + 1);
  q[0] = Rational(1);
  for (unsigned k = 1; k <= max_degree; ++k) {
    Rational sum;
    for (unsigned j = 1; j <= k; ++j) sum += a[j] * q[k - j];
    q[k] = -sum;  // a[0] = 1
  }
  return q;
}

std::vector<Rational> oracle_exp_series(unsigned max_degree) {
  std::vector<Rational> e(max_degree + 1);
  e[0] = Rational(1);
  Rational inv_fact(1);
  for (unsigned j = 1; j <= max_degree; ++j) {
    inv_fact /= Rational(j);
    e[j] = inv_fact;
  }
  return e;
}

GradedPoly oracle_todd(unsigned rank, unsigned truncation) {
  std::vector<Rational> q = oracle_todd_series(truncation);
  RootPoly prod = RootPoly::one(rank, truncation);
  for (unsigned v = 0; v < rank; ++v)
    prod = prod * RootPoly::from_series(rank, truncation, q, v);
  return reduce_symmetric_to_chern(prod, truncation);
}

GradedPoly oracle_chern_character(unsigned rank, unsigned truncation) {
  std::vector<Rational> e = oracle_exp_series(truncation);
  RootPoly sum = RootPoly::zero(rank, truncation);
  for (unsigned v = 0; v < rank; ++v)
    sum = sum + RootPoly::from_series(rank, truncation, e, v);
  return reduce_symmetric_to_chern(sum, truncation);
}

GradedPoly oracle_power_sum(unsigned k, unsigned rank, unsigned truncation) {
  RootPoly sum = RootPoly::zero(rank, truncation);
  std::vector<Rational> mono(k + 1);
  mono[k] = Rational(1);
  for (unsigned v = 0; v < rank; ++v)
    sum = sum + RootPoly::from_series(rank, truncation, mono, v);
  return reduce_symmetric_to_chern(sum, truncation);
}

GradedPoly oracle_todd_dual_side(unsigned rank, unsigned truncation) {
  std::vector<Rational> q = oracle_todd_series(truncation);
  // Q(-x): flip the sign of odd coefficients.
  std::vector<Rational> qneg = q;
  for (unsigned j = 1; j < qneg.size(); j += 2) qneg[j] = -qneg[j];
  std::vector<Rational> e = oracle_exp_series(truncation);
  RootPoly prod = RootPoly::one(rank, truncation);
  for (unsigned v = 0; v < rank; ++v) {
    prod = prod * RootPoly::from_series(rank, truncation, e, v);
    prod = prod * RootPoly::from_series(rank, truncation, qneg, v);
  }
  return reduce_symmetric_to_chern(prod, truncation);
}

}  // namespace chowbound
