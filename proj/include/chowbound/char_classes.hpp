#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowbound/graded_poly.hpp"
#include "chowbound/rational.hpp"

namespace chowbound {

// A bundle for the purposes of this ring: a rank and a working truncation.
// The label only tags output; two specs with different labels are otherwise
// interchangeable, and generic Chern variables c_i are shared.
struct BundleSpec {
  unsigned rank = 0;
  unsigned truncation = 0;
  std::string label = "E";
};

// Total Chern class of a generic bundle: 1 + c_1 + ... + c_min(rank, N).
GradedPoly total_chern_generic(const BundleSpec& bundle);

// A multiplicative sequence, determined by its one-variable characteristic
// power series q(x) = q_0 + q_1 x + ... with q_0 = 1.
class MultiplicativeSequence {
 public:
  static MultiplicativeSequence todd(unsigned max_degree);
  static MultiplicativeSequence from_series(std::string name, std::vector<Rational> series);

  const std::string& name() const { return name_; }
  // q_0 .. q_N of the characteristic series.
  const std::vector<Rational>& series() const { return series_; }

  // Evaluates the sequence on a total Chern class (constant term must be 1):
  // writes log q as a series in power sums, converts power sums to the Chern
  // components of `total_chern` by the Newton recurrence, and exponentiates.
  GradedPoly apply_to_total_chern(const GradedPoly& total_chern) const;

 private:
  std::string name_;
  std::vector<Rational> series_;
};

// Newton power sum p_k of a rank-r bundle as a polynomial in c_1..c_min(r,N):
//   p_k = sum_{j=1}^{k-1} (-1)^{j-1} c_j p_{k-j} + (-1)^{k-1} k c_k.
GradedPoly newton_from_chern(unsigned k, unsigned rank, unsigned truncation);

// Inverse direction: c_k expressed in power-sum variables (variable i stands
// for p_i), via e_k = (1/k) sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j. Zero when
// k exceeds the rank.
GradedPoly chern_from_newton(unsigned k, unsigned rank, unsigned truncation);

// Todd class of a generic bundle of the given rank, exact coefficients.
GradedPoly todd_class(const BundleSpec& bundle);

// Todd class of any unit total Chern class (constant term 1); the engine
// behind todd_class, exposed for multiplicativity checks on formal units.
GradedPoly todd_from_total_chern(const GradedPoly& total_chern);

// Chern character: rank + sum_k p_k / k!.
GradedPoly chern_character(const BundleSpec& bundle);

// Chern character of any unit total class with an explicit rank term; the
// engine behind chern_character, exposed for additivity checks.
GradedPoly chern_character_from_total_chern(const GradedPoly& total_chern,
                                            const Rational& rank_term);

// ch(det E) = exp(c_1).
GradedPoly chern_character_of_determinant(unsigned truncation);

// Total Chern class of E + E^dual for a rank-g bundle E with Chern roots in
// the variables c_1..c_g (the de Rham bundle pattern). Odd components vanish.
GradedPoly derham_total_chern(unsigned g, unsigned truncation);

// c_{2i}(E + E^dual) written in Newton classes of E: the result lives in
// variables of even index where index 2j stands for the power sum N_{2j}(E),
// carrying weight 2j. Equals (-1)^i times the k=i elementary-to-power-sum
// conversion with every index doubled.
GradedPoly derham_chern_in_newton(unsigned i, unsigned g);

struct DualityReport {
  unsigned rank = 0;
  unsigned truncation = 0;
  bool equal = false;
  std::optional<unsigned> first_differing_weight;
  GradedPoly lhs{0};  // Td(E)
  GradedPoly rhs{0};  // ch(det E) * Td(E^dual)
};

// Checks Td(E) = ch(det E) * Td(E^dual) for a generic rank-r bundle.
DualityReport verify_todd_det_duality(unsigned rank, unsigned truncation);

struct HirzebruchReport {
  unsigned i = 0;
  Rational coeff_c2i;     // coefficient of c_{2i} in Td_{2i}
  Rational coeff_c1_pow;  // coefficient of c_1^{2i} in Td_{2i}
  Rational expected;      // B_{2i} / (2i)!
  bool all_equal = false;
  bool nonzero = false;
};

// The linear-coefficient fact behind the nonvanishing argument: in Td_{2i}
// the coefficients of c_{2i} and of c_1^{2i} agree and equal B_{2i}/(2i)!,
// which is nonzero.
HirzebruchReport verify_hirzebruch_coefficient(unsigned i, unsigned max_degree = 16);

// Coefficient of c_12^2 in the weight-24 part of the Todd class of a generic
// rank-24 bundle.
Rational todd24_c12sq_coefficient();

// Coefficient of an arbitrary monomial in the weight-`degree` part of the
// Todd class of a generic bundle of the given rank.
Rational todd_coefficient(unsigned degree, const Monomial& m, unsigned rank);

}  // namespace chowbound
