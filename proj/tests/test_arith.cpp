#include <doctest.h>

#include <cstdlib>
#include <map>
#include <stdexcept>

#include "chowbound/arith.hpp"

using namespace chowbound;

TEST_CASE("valuation of integers and rationals") {
  CHECK(valuation(BigInt(24), 2) == Valuation(3));
  CHECK(valuation(BigInt(24), 3) == Valuation(1));
  CHECK(valuation(BigInt(240), 5) == Valuation(1));
  CHECK(valuation(BigInt(7), 2) == Valuation(0));
  CHECK(valuation(BigInt(0), 2).is_infinite());
  CHECK(valuation(BigInt(-24), 2) == Valuation(3));

  CHECK(valuation(Rational(1, 6), 3) == Valuation(-1));
  CHECK(valuation(Rational(1, 6), 2) == Valuation(-1));
  CHECK(valuation(Rational(-691, 2730), 691) == Valuation(1));
  CHECK(valuation(Rational(-691, 2730), 7) == Valuation(-1));
  CHECK(valuation(Rational(0), 5).is_infinite());

  CHECK(valuation_of_nonzero(BigInt(1), 2) == 0);
  CHECK_THROWS_AS(valuation(BigInt(24), 4), std::invalid_argument);
}

TEST_CASE("Valuation ordering treats infinity as largest") {
  CHECK(Valuation(3) < Valuation::infinity());
  CHECK_FALSE(Valuation::infinity() < Valuation(1000000));
  CHECK_FALSE(Valuation::infinity() < Valuation::infinity());
  CHECK(Valuation::infinity() == Valuation::infinity());
  CHECK(Valuation(2) < Valuation(3));
  CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
  CHECK(Valuation::infinity().to_string() == "inf");
  CHECK(Valuation(-1).to_string() == "-1");
}

TEST_CASE("primality on the constants the bounds rely on") {
  CHECK(is_prime(BigInt(2)));
  CHECK(is_prime(BigInt(691)));
  CHECK(is_prime(BigInt(3617)));
  CHECK(is_prime(BigInt(43867)));
  CHECK(is_prime(BigInt(657931)));
  CHECK(is_prime(BigInt(2294797)));
  CHECK(is_prime(BigInt("9349")));
  CHECK(is_prime(BigInt("362903")));
  CHECK_FALSE(is_prime(BigInt(1)));
  CHECK_FALSE(is_prime(BigInt(0)));
  CHECK_FALSE(is_prime(BigInt(-7)));
  CHECK_FALSE(is_prime(BigInt(691 * 3617)));
  CHECK_FALSE(is_prime(BigInt("1000000000100000000002379")));
  CHECK(is_prime(BigInt("1000000000039")));
  // strong pseudoprime to several small bases, composite
  CHECK_FALSE(is_prime(BigInt("3215031751")));
}

TEST_CASE("factor certifies the Bernoulli numerators") {
  auto expect = [](const BigInt& n, std::map<BigInt, unsigned> f) {
    FactoredInt got = factor(n);
    CHECK(got.value == n);
    CHECK(got.factors == f);
  };
  expect(174611, {{283, 1}, {617, 1}});
  expect(854513, {{11, 1}, {131, 1}, {593, 1}});
  expect(236364091, {{103, 1}, {2294797, 1}});
  expect(8553103, {{13, 1}, {657931, 1}});
  expect(BigInt("23749461029"), {{7, 1}, {9349, 1}, {362903, 1}});
  expect(1, {});
  expect(2, {{2, 1}});
  expect(1024, {{2, 10}});
  CHECK_THROWS_AS(factor(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(factor(BigInt(-6)), std::invalid_argument);
}

TEST_CASE("factor handles a semiprime beyond the trial range") {
  BigInt n = BigInt("1000000000039") * BigInt("1000000000061");
  FactoredInt f = factor(n);
  CHECK(f.value == n);
  CHECK(f.factors.size() == 2);
  CHECK(f.factors.at(BigInt("1000000000039")) == 1);
  CHECK(f.factors.at(BigInt("1000000000061")) == 1);
}

TEST_CASE("rho budget exhaustion reports the partial result") {
  BigInt n = BigInt("1000000000039") * BigInt("1000000000061") * 7;
  FactorOptions opts;
  opts.max_rho_iterations = 8;
  try {
    factor(n, opts);
    FAIL("expected partial_factorization_error");
  } catch (const partial_factorization_error& e) {
    CHECK(e.partial_result.factors.at(7) == 1);
    CHECK(e.unfactored_cofactor == n / 7);
    CHECK(e.partial_result.value * e.unfactored_cofactor == n);
  }
}

TEST_CASE("FactoredInt validates its certificate") {
  CHECK_THROWS_AS(FactoredInt::from_parts(12, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(FactoredInt::from_parts(16, {{4, 2}}), std::invalid_argument);
  CHECK_NOTHROW(FactoredInt::from_parts(12, {{2, 2}, {3, 1}}));

  FactoredInt f = FactoredInt::one();
  f.multiply_prime_power(2, 3).multiply_prime_power(3, 1);
  CHECK(f.value == 24);
  CHECK(f.to_string() == "2^3 * 3");
  CHECK(f.to_string("*") == "2^3*3");
  f.multiply_prime_power(5, 0);
  CHECK(f.value == 24);
  CHECK(FactoredInt::one().to_string() == "1");

  FactoredInt g = FactoredInt::from_parts(10, {{2, 1}, {5, 1}});
  f.multiply(g);
  CHECK(f.value == 240);
  CHECK(f.factors == std::map<BigInt, unsigned>{{2, 4}, {3, 1}, {5, 1}});
}

TEST_CASE("factor_power_minus_one splits along cyclotomic values") {
  FactorOptions opts = FactorOptions::defaults();
  FactoredInt a = factor_power_minus_one(2, 2, opts);
  CHECK(a.value == 3);
  CHECK(a.factors == std::map<BigInt, unsigned>{{3, 1}});

  FactoredInt b = factor_power_minus_one(3, 4, opts);
  CHECK(b.value == 80);
  CHECK(b.factors == std::map<BigInt, unsigned>{{2, 4}, {5, 1}});

  FactoredInt c = factor_power_minus_one(5, 2, opts);
  CHECK(c.value == 24);
  CHECK(c.factors == std::map<BigInt, unsigned>{{2, 3}, {3, 1}});

  // p^24 - 1 has nine cyclotomic pieces; the product must reassemble exactly
  FactoredInt d = factor_power_minus_one(7, 24, opts);
  BigInt expected = 1;
  for (int t = 0; t < 24; ++t) expected *= 7;
  CHECK(d.value == expected - 1);
  BigInt prod = 1;
  for (const auto& [p, e] : d.factors) {
    CHECK(is_prime(p));
    for (unsigned j = 0; j < e; ++j) prod *= p;
  }
  CHECK(prod == d.value);
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(1129, 691) == 6);
  CHECK(multiplicative_order(1087, 691) == 690);
  CHECK(multiplicative_order(1, 5) == 1);
  CHECK_THROWS_AS(multiplicative_order(7, 14), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(691, 691), std::invalid_argument);
}

TEST_CASE("order-6 residues mod 691") {
  // the first primes whose 2i-th power hits 1 mod 691 for i = 3
  int count = 0;
  std::vector<BigInt> hits;
  for (BigInt p = 2; p < 5600 && count < 5; p = next_prime_above(p)) {
    if (p % 691 == 0) continue;
    BigInt r = powm(p, 6, BigInt(691));
    if (r == 1) {
      hits.push_back(p);
      ++count;
    }
  }
  CHECK(hits == std::vector<BigInt>{1129, 1381, 3709, 4583, 5527});

  // exactly gcd(6, 690) = 6 sixth roots of unity mod 691
  int solutions = 0;
  for (BigInt x = 1; x < 691; ++x)
    if (powm(x, 6, BigInt(691)) == 1) ++solutions;
  CHECK(solutions == 6);
  CHECK(gcd(BigInt(6), BigInt(690)) == 6);
}

TEST_CASE("factorial_factored matches Legendre exponents") {
  FactoredInt f = factorial_factored(10);
  CHECK(f.value == 3628800);
  CHECK(f.factors == std::map<BigInt, unsigned>{{2, 8}, {3, 4}, {5, 2}, {7, 1}});
  CHECK(factorial_factored(0).value == 1);
  CHECK(factorial_factored(1).value == 1);
  CHECK(factorial(12) == 479001600);
  CHECK(factorial_factored(12).value == factorial(12));
}

TEST_CASE("next_prime_above and small_primes") {
  CHECK(next_prime_above(1) == 2);
  CHECK(next_prime_above(2) == 3);
  CHECK(next_prime_above(24) == 29);
  CHECK(next_prime_above(689) == 691);
  const auto& sp = small_primes();
  CHECK(sp.front() == 2);
  CHECK(sp.back() > 999000);
  CHECK(sp.back() < 1000000);
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
}

TEST_CASE("FactorOptions reads the effort override from the environment") {
  CHECK(FactorOptions{}.max_rho_iterations == (1u << 26));
  setenv("CHOWBOUND_FACTOR_EFFORT", "12345", 1);
  CHECK(FactorOptions::defaults().max_rho_iterations == 12345);
  unsetenv("CHOWBOUND_FACTOR_EFFORT");
  CHECK(FactorOptions::defaults().max_rho_iterations == (1u << 26));
}
