#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chowbound/monomial.hpp"
#include "chowbound/rational.hpp"

namespace chowbound {

// Element of Q[c_1, c_2, ...]/(weight > N): a sparse polynomial with every
// monomial of weight at most the truncation N. All binary operations require
// equal truncations; equality compares through the smaller truncation.
class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedPoly(unsigned truncation) : truncation_(truncation) {}

  static GradedPoly zero(unsigned truncation) { return GradedPoly(truncation); }
  static GradedPoly one(unsigned truncation) { return constant(truncation, Rational(1)); }
  static GradedPoly constant(unsigned truncation, Rational c);
  static GradedPoly variable(unsigned truncation, unsigned index, unsigned exponent = 1);
  static GradedPoly from_terms(unsigned truncation, std::vector<std::pair<Monomial, Rational>> terms);

  unsigned truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const { return coefficient(Monomial()); }
  Rational coefficient(const Monomial& m) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

  GradedPoly scaled(const Rational& c) const;

  // Multiplicative inverse; requires a nonzero constant term.
  GradedPoly invert_unit() const;

  // exp of a polynomial with zero constant term (finite sum: the argument is
  // nilpotent in the truncated ring).
  GradedPoly exp_series() const;

  // log of a polynomial with constant term 1.
  GradedPoly log_series() const;

  // c_i -> (-1)^i c_i, i.e. scales each weight-w component by (-1)^w. This is
  // dualization on total Chern classes.
  GradedPoly sign_involution() const;

  // Homogeneous component of weight w (0 <= w <= truncation).
  GradedPoly component(unsigned w) const;

  // Copy with a different truncation; terms above the new bound are dropped.
  GradedPoly truncated(unsigned new_truncation) const;

  // Substitute polynomials for variables; indices missing from the map stay
  // themselves. Images must share the target truncation.
  GradedPoly substitute(const std::map<unsigned, GradedPoly>& images) const;

  // Re-index variables through f (injective on the indices in use); weights
  // change accordingly, so the caller supplies the result truncation.
  GradedPoly remap_variables(const std::function<unsigned(unsigned)>& f,
                             unsigned new_truncation) const;

  // Emits the canonical text form: terms in the canonical order joined by
  // " + ", each term "<rational>" or "<rational>*c3^2*c5". Zero is "0".
  std::string to_string(char letter = 'c') const;

  // Parses the grammar  poly := term ('+' term)* ,
  // term := rational ('*' factor)* , factor := letter index ('^' exponent)? .
  // Also accepts '-' as a term separator and coefficient-less factors.
  static GradedPoly parse(std::string_view text, unsigned truncation, char letter = 'c');

  bool operator==(const GradedPoly& o) const;

 private:
  unsigned truncation_;
  TermMap terms_;

  void add_term(const Monomial& m, const Rational& c);
};

GradedPoly pow(const GradedPoly& base, unsigned e);

// Human-readable rendering: " - " separators for negative terms, unit
// coefficients suppressed before variables ("-N2", "1/2*N2^2 - 1/2*N4").
// parse() accepts this form too, but only to_string() round-trips exactly.
std::string pretty_string(const GradedPoly& p, char letter = 'c');

}  // namespace chowbound
