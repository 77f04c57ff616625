#pragma once

#include <string>
#include <vector>

#include "chowbound/arith.hpp"
#include "chowbound/rational.hpp"

namespace chowbound {

// Largest index served by bernoulli(); guards against accidental runaway
// computations, not a mathematical limit.
inline constexpr unsigned kBernoulliMaxIndex = 200;

// Bernoulli number B_n in the convention B_1 = -1/2, computed from the
// defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and cached.
Rational bernoulli(unsigned n);

// Exact table B_0..B_max for bulk access.
class BernoulliTable {
 public:
  explicit BernoulliTable(unsigned max_index);
  unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }
  const Rational& at(unsigned n) const;

 private:
  std::vector<Rational> values_;
};

// The integer n_k = 2^{3+v} * prod ell^{1+v_ell(k)} over odd primes ell with
// (ell-1) | 2k, where v = v_2(k). Three equivalent descriptions are
// implemented so they can cross-check each other.
FactoredInt nk_formula(unsigned k);

// n_k as the denominator of B_{2k} / (-4k).
BigInt nk_denominator(unsigned k);

// gcd of p^{2k} - 1 over the first `prime_count` primes p > 2k + 1.
BigInt nk_gcd_sample(unsigned k, unsigned prime_count);

struct NkCrossCheck {
  unsigned k = 0;
  FactoredInt formula;
  BigInt denominator;
  BigInt gcd_sample;
  bool gcd_stabilized = false;  // unchanged over the last 10 of 50 primes
  bool agree = false;           // all three routes equal
};

// Computes all three routes (50 sample primes) and records agreement. A
// disagreement is reported in the record, not patched over.
NkCrossCheck nk_cross_validated(unsigned k);

// prod of primes p with (p-1) | 2k; equals the denominator of B_{2k}.
BigInt von_staudt_clausen_denominator(unsigned k);

}  // namespace chowbound
