#pragma once

#include <map>
#include <vector>

#include "chowbound/graded_poly.hpp"
#include "chowbound/rational.hpp"

namespace chowbound {

// Brute-force splitting-principle engine: characteristic classes expanded in
// m explicit weight-1 Chern roots and reduced back to elementary symmetric
// classes by leading-term elimination. Exponential in m, intended for m <= 8;
// deliberately shares nothing with the power-sum route beyond the value types,
// so the two act as independent witnesses for each other.
class RootPoly {
 public:
  RootPoly(unsigned var_count, unsigned max_degree);

  static RootPoly zero(unsigned var_count, unsigned max_degree);
  static RootPoly one(unsigned var_count, unsigned max_degree);
  static RootPoly variable(unsigned var_count, unsigned max_degree, unsigned var);
  // f(x_var) for a one-variable series f given by coefficients.
  static RootPoly from_series(unsigned var_count, unsigned max_degree,
                              const std::vector<Rational>& series, unsigned var);
  static RootPoly elementary_symmetric(unsigned var_count, unsigned max_degree, unsigned i);

  unsigned var_count() const { return var_count_; }
  unsigned max_degree() const { return max_degree_; }
  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RootPoly operator+(const RootPoly& o) const;
  RootPoly operator-(const RootPoly& o) const;
  RootPoly operator*(const RootPoly& o) const;
  RootPoly scaled(const Rational& c) const;

  void add_term(const std::vector<unsigned>& exponents, const Rational& c);

 private:
  unsigned var_count_;
  unsigned max_degree_;
  // exponent vector (length var_count) -> coefficient; total degree bounded.
  std::map<std::vector<unsigned>, Rational> terms_;
};

// Rewrites a symmetric RootPoly in elementary symmetric polynomials, with
// e_i becoming the ring variable c_i. Throws if the input is not symmetric.
GradedPoly reduce_symmetric_to_chern(const RootPoly& p, unsigned truncation);

// Independent constructions of the main classes.
GradedPoly oracle_todd(unsigned rank, unsigned truncation);
GradedPoly oracle_chern_character(unsigned rank, unsigned truncation);
GradedPoly oracle_power_sum(unsigned k, unsigned rank, unsigned truncation);
// Right-hand side of the duality identity: exp(x_1+...+x_m) * prod Q(-x_j).
GradedPoly oracle_todd_dual_side(unsigned rank, unsigned truncation);

// One-variable series used by the oracle, built directly from factorials
// (not from the MultiplicativeSequence machinery).
std::vector<Rational> oracle_todd_series(unsigned max_degree);
std::vector<Rational> oracle_exp_series(unsigned max_degree);

}  // namespace chowbound
