#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "chowbound/bernoulli.hpp"

using namespace chowbound;

TEST_CASE("Bernoulli numbers, exact values") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(14) == Rational(7, 6));
  CHECK(bernoulli(16) == Rational(-3617, 510));
  CHECK(bernoulli(18) == Rational(43867, 798));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  CHECK(bernoulli(22) == Rational(854513, 138));
  CHECK(bernoulli(24) == Rational(-236364091, 2730));
  CHECK(bernoulli(26) == Rational(8553103, 6));
  CHECK(bernoulli(28) == Rational(BigInt("-23749461029"), 870));
  CHECK_THROWS_AS(bernoulli(kBernoulliMaxIndex + 1), std::invalid_argument);
}

TEST_CASE("odd Bernoulli numbers vanish beyond B_1") {
  for (unsigned k = 1; k <= 50; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
}

TEST_CASE("BernoulliTable matches the scalar function") {
  BernoulliTable t(40);
  CHECK(t.max_index() == 40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(t.at(n) == bernoulli(n));
  CHECK_THROWS_AS(t.at(41), std::invalid_argument);
}

TEST_CASE("n_k table, k = 1..14") {
  const std::vector<long long> table = {24,    240,   504,   480,  264,   65520, 24,
                                        16320, 28728, 13200, 552,  131040, 24,   6960};
  for (unsigned k = 1; k <= 14; ++k) {
    FactoredInt nk = nk_formula(k);
    CHECK(nk.value == table[k - 1]);
    CHECK(nk_denominator(k) == table[k - 1]);
  }
  CHECK(nk_formula(13).to_string() == "2^3 * 3");
  CHECK(nk_formula(14).to_string() == "2^4 * 3 * 5 * 29");
  CHECK(nk_formula(6).to_string() == "2^4 * 3^2 * 5 * 7 * 13");
}

TEST_CASE("three routes to n_k agree and the gcd stabilizes") {
  for (unsigned k = 1; k <= 40; ++k) {
    NkCrossCheck rec = nk_cross_validated(k);
    CHECK(rec.agree);
    CHECK(rec.gcd_stabilized);
    CHECK(rec.formula.value == rec.denominator);
    CHECK(rec.formula.value == rec.gcd_sample);
  }
}

TEST_CASE("n_k divides p^{2k} - 1 for primes beyond 2k + 1") {
  for (unsigned k : {1u, 5u, 13u, 14u, 20u}) {
    BigInt nk = nk_denominator(k);
    BigInt p = next_prime_above(2 * k + 1);
    for (int count = 0; count < 5; ++count, p = next_prime_above(p)) {
      BigInt pw = 1;
      for (unsigned j = 0; j < 2 * k; ++j) pw *= p;
      CHECK((pw - 1) % nk == 0);
    }
  }
}

TEST_CASE("von Staudt-Clausen: denominator of B_{2k} is the product of p with (p-1) | 2k") {
  for (unsigned k = 1; k <= 60; ++k)
    CHECK(von_staudt_clausen_denominator(k) == bernoulli(2 * k).denominator());
  CHECK(von_staudt_clausen_denominator(1) == 6);
  CHECK(von_staudt_clausen_denominator(6) == 2730);
}

TEST_CASE("n_k against the Bernoulli denominator definition") {
  // n_k = denom(B_2k / (-4k)): the formula route must factor exactly that
  for (unsigned k = 1; k <= 30; ++k) {
    FactoredInt f = nk_formula(k);
    Rational q = bernoulli(2 * k) / Rational(BigInt(-4) * BigInt(k));
    CHECK(f.value == q.denominator());
  }
}

TEST_CASE("guard rails on runaway indices") {
  CHECK_THROWS_AS(nk_formula(600000), std::invalid_argument);
  CHECK_THROWS_AS(von_staudt_clausen_denominator(600000), std::invalid_argument);
}
