#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "chowbound/graded_poly.hpp"

using namespace chowbound;

namespace {

GradedPoly sparse_a(unsigned n) {
  // 1 + 2*c1 + 1/3*c2*c3 + 5*c7
  GradedPoly p = GradedPoly::one(n);
  p += GradedPoly::variable(n, 1).scaled(Rational(2));
  p += GradedPoly::from_terms(n, {{Monomial::from_pairs({{2, 1}, {3, 1}}), Rational(1, 3)}});
  p += GradedPoly::variable(n, 7).scaled(Rational(5));
  return p;
}

GradedPoly sparse_b(unsigned n) {
  // -1/2 + c1^2 - 7*c4 + 1/6*c2^3
  GradedPoly p = GradedPoly::constant(n, Rational(-1, 2));
  p += GradedPoly::variable(n, 1, 2);
  p -= GradedPoly::variable(n, 4).scaled(Rational(7));
  p += GradedPoly::from_terms(n, {{Monomial::from_pairs({{2, 3}}), Rational(1, 6)}});
  return p;
}

GradedPoly sparse_c(unsigned n) {
  // c3 - 2/5*c1*c5 + c2
  GradedPoly p = GradedPoly::variable(n, 3);
  p -= GradedPoly::from_terms(n, {{Monomial::from_pairs({{1, 1}, {5, 1}}), Rational(2, 5)}});
  p += GradedPoly::variable(n, 2);
  return p;
}

}  // namespace

TEST_CASE("monomial order: ascending weight, smaller index first inside a weight") {
  Monomial one;
  Monomial c1 = Monomial::variable(1);
  Monomial c1sq = Monomial::variable(1, 2);
  Monomial c2 = Monomial::variable(2);
  Monomial c2sq = Monomial::variable(2, 2);
  Monomial c4 = Monomial::variable(4);
  Monomial c1c3 = Monomial::from_pairs({{1, 1}, {3, 1}});

  CHECK(one < c1);
  CHECK(c1 < c1sq);
  CHECK(c1sq < c2);
  CHECK(c2sq < c4);
  CHECK(c1c3 < c2sq);
  CHECK(Monomial::from_pairs({{1, 4}}) < c1c3);
  CHECK(c1sq.weight() == 2);
  CHECK(c1c3.weight() == 4);
  CHECK(c1c3.to_string() == "c1*c3");
  CHECK(Monomial::from_pairs({{1, 2}, {3, 1}}).to_string('N') == "N1^2*N3");
  CHECK(one.to_string() == "1");
  CHECK((c1 * c1c3) == Monomial::from_pairs({{1, 2}, {3, 1}}));
  CHECK(c1c3.exponent_of(3) == 1);
  CHECK(c1c3.exponent_of(2) == 0);
  CHECK(c1c3.max_variable_index() == 3);
  CHECK_THROWS_AS(Monomial::variable(0), std::invalid_argument);
}

TEST_CASE("ring axioms on sparse elements") {
  for (unsigned n : {6u, 9u, 12u}) {
    GradedPoly a = sparse_a(n), b = sparse_b(n), c = sparse_c(n);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a - a == GradedPoly::zero(n));
    CHECK(a * GradedPoly::one(n) == a);
    CHECK(a * GradedPoly::zero(n) == GradedPoly::zero(n));
    CHECK(-(-a) == a);
    CHECK(a.scaled(Rational(3, 2)).scaled(Rational(2, 3)) == a);
  }
}

TEST_CASE("truncation coherence: truncate-then-multiply equals multiply-then-truncate") {
  GradedPoly a = sparse_a(12), b = sparse_b(12);
  for (unsigned n : {4u, 7u, 10u}) {
    CHECK((a * b).truncated(n) == a.truncated(n) * b.truncated(n));
    CHECK((a + b).truncated(n) == a.truncated(n) + b.truncated(n));
  }
  CHECK(a.truncated(12) == a);
  // equality itself compares through the smaller truncation
  CHECK(a == a.truncated(8));
  CHECK(a == a.truncated(0));  // both reduce to the constant term
  CHECK_FALSE(a.truncated(2) == GradedPoly::one(2));
}

TEST_CASE("mismatched truncations are rejected") {
  GradedPoly a = sparse_a(6), b = sparse_b(8);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
}

TEST_CASE("component extraction") {
  GradedPoly a = sparse_a(8);
  CHECK(a.component(0) == GradedPoly::one(8));
  CHECK(a.component(1) == GradedPoly::variable(8, 1).scaled(Rational(2)));
  CHECK(a.component(3).is_zero());
  CHECK(a.component(5) ==
        GradedPoly::from_terms(8, {{Monomial::from_pairs({{2, 1}, {3, 1}}), Rational(1, 3)}}));
  GradedPoly recomposed = GradedPoly::zero(8);
  for (unsigned w = 0; w <= 8; ++w) recomposed += a.component(w);
  CHECK(recomposed == a);
  CHECK_THROWS_AS(a.component(9), std::invalid_argument);
}

TEST_CASE("invert_unit is a two-sided inverse") {
  for (unsigned n : {5u, 9u}) {
    GradedPoly u = sparse_a(n);
    CHECK(u * u.invert_unit() == GradedPoly::one(n));
    GradedPoly v = sparse_b(n);  // constant -1/2, still a unit
    CHECK(v.invert_unit() * v == GradedPoly::one(n));
  }
  CHECK_THROWS_AS(sparse_c(6).invert_unit(), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse on their domains") {
  GradedPoly nil = sparse_c(9);  // zero constant term
  CHECK(nil.exp_series().log_series() == nil);
  GradedPoly unit = GradedPoly::one(9) + nil;
  CHECK(unit.log_series().exp_series() == unit);
  CHECK_THROWS_AS(sparse_a(9).exp_series(), std::invalid_argument);
  CHECK_THROWS_AS(sparse_c(9).log_series(), std::invalid_argument);
}

TEST_CASE("exp turns sums into products") {
  GradedPoly x = sparse_c(8);
  GradedPoly y = GradedPoly::variable(8, 1).scaled(Rational(1, 2)) -
                 GradedPoly::variable(8, 2, 2).scaled(Rational(3));
  CHECK((x + y).exp_series() == x.exp_series() * y.exp_series());
  CHECK(GradedPoly::zero(8).exp_series() == GradedPoly::one(8));
}

TEST_CASE("sign involution is a ring map and an involution") {
  GradedPoly a = sparse_a(10), b = sparse_b(10);
  CHECK((a * b).sign_involution() == a.sign_involution() * b.sign_involution());
  CHECK((a + b).sign_involution() == a.sign_involution() + b.sign_involution());
  CHECK(a.sign_involution().sign_involution() == a);
  // weight-w component picks up (-1)^w
  CHECK(a.sign_involution().component(5) == -a.component(5));
  CHECK(a.sign_involution().component(2) == a.component(2));
}

TEST_CASE("canonical emission order") {
  GradedPoly p = GradedPoly::from_terms(4, {
      {Monomial::variable(2), Rational(1, 12)},
      {Monomial(), Rational(1)},
      {Monomial::variable(1, 2), Rational(1, 12)},
      {Monomial::variable(1), Rational(1, 2)},
  });
  CHECK(p.to_string() == "1 + 1/2*c1 + 1/12*c1^2 + 1/12*c2");

  GradedPoly q = GradedPoly::from_terms(4, {
      {Monomial::variable(4), Rational(-1)},
      {Monomial::variable(2, 2), Rational(3)},
      {Monomial::from_pairs({{1, 1}, {3, 1}}), Rational(1, 7)},
      {Monomial::variable(1, 4), Rational(-2, 5)},
  });
  CHECK(q.to_string() == "-2/5*c1^4 + 1/7*c1*c3 + 3*c2^2 + -1*c4");
  CHECK(GradedPoly::zero(3).to_string() == "0");
  CHECK(GradedPoly::constant(3, Rational(-5, 4)).to_string() == "-5/4");
}

TEST_CASE("parse round-trips the canonical form bit-exactly") {
  std::vector<GradedPoly> samples = {
      sparse_a(12), sparse_b(12), sparse_c(12), sparse_a(12) * sparse_b(12),
      GradedPoly::zero(5), GradedPoly::one(5),
      GradedPoly::constant(7, Rational(-22, 7)),
  };
  for (const GradedPoly& p : samples) {
    std::string text = p.to_string();
    GradedPoly back = GradedPoly::parse(text, p.truncation());
    CHECK(back == p);
    CHECK(back.to_string() == text);
  }
}

TEST_CASE("parse accepts minus separators and bare factors") {
  GradedPoly a = GradedPoly::parse("1 - 1/2*c1 + c2", 4);
  GradedPoly b = GradedPoly::from_terms(4, {
      {Monomial(), Rational(1)},
      {Monomial::variable(1), Rational(-1, 2)},
      {Monomial::variable(2), Rational(1)},
  });
  CHECK(a == b);
  CHECK(GradedPoly::parse("c1^2*c3", 5) ==
        GradedPoly::from_terms(5, {{Monomial::from_pairs({{1, 2}, {3, 1}}), Rational(1)}}));
  CHECK(GradedPoly::parse("-N2", 2, 'N') ==
        GradedPoly::variable(2, 2).scaled(Rational(-1)));
  CHECK(GradedPoly::parse("  1/2 * c1 ", 3) == GradedPoly::variable(3, 1).scaled(Rational(1, 2)));
  CHECK(GradedPoly::parse("3", 0) == GradedPoly::constant(0, Rational(3)));
}

TEST_CASE("parse rejects malformed or overweight input") {
  CHECK_THROWS_AS(GradedPoly::parse("", 4), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly::parse("c5", 4), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly::parse("1 + + c1", 4), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly::parse("x1", 4), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly::parse("1/2*c1^", 4), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly::parse("c0", 4), std::invalid_argument);
}

TEST_CASE("pretty_string uses minus separators and drops unit coefficients") {
  GradedPoly p = GradedPoly::variable(2, 2).scaled(Rational(-1));
  CHECK(pretty_string(p, 'N') == "-N2");
  GradedPoly q = GradedPoly::from_terms(4, {
      {Monomial::variable(2, 2), Rational(1, 2)},
      {Monomial::variable(4), Rational(-1, 2)},
  });
  CHECK(pretty_string(q, 'N') == "1/2*N2^2 - 1/2*N4");
  GradedPoly r = GradedPoly::one(2) + GradedPoly::variable(2, 1);
  CHECK(pretty_string(r) == "1 + c1");
  CHECK(pretty_string(GradedPoly::zero(2)) == "0");
  // pretty output parses back to the same element
  CHECK(GradedPoly::parse(pretty_string(q, 'N'), 4, 'N') == q);
}

TEST_CASE("substitute replaces variables, identity on missing indices") {
  GradedPoly p = GradedPoly::variable(6, 1, 2) + GradedPoly::variable(6, 2);
  std::map<unsigned, GradedPoly> images;
  images.emplace(1, GradedPoly::variable(6, 1) + GradedPoly::variable(6, 2));
  GradedPoly got = p.substitute(images);
  // (c1 + c2)^2 + c2
  GradedPoly want = GradedPoly::variable(6, 1, 2) +
                    GradedPoly::from_terms(6, {{Monomial::from_pairs({{1, 1}, {2, 1}}), Rational(2)}}) +
                    GradedPoly::variable(6, 2, 2) + GradedPoly::variable(6, 2);
  CHECK(got == want);

  std::map<unsigned, GradedPoly> bad;
  bad.emplace(1, GradedPoly::variable(4, 1));
  CHECK_THROWS_AS(p.substitute(bad), std::invalid_argument);
}

TEST_CASE("remap_variables doubles indices and weights") {
  GradedPoly p = GradedPoly::variable(3, 1, 2) + GradedPoly::variable(3, 3).scaled(Rational(5));
  GradedPoly q = p.remap_variables([](unsigned i) { return 2 * i; }, 6);
  GradedPoly want = GradedPoly::variable(6, 2, 2) + GradedPoly::variable(6, 6).scaled(Rational(5));
  CHECK(q == want);
  CHECK(q.truncation() == 6);
}

TEST_CASE("pow by repeated squaring agrees with direct products") {
  GradedPoly a = sparse_c(10) + GradedPoly::one(10);
  CHECK(pow(a, 0) == GradedPoly::one(10));
  CHECK(pow(a, 1) == a);
  CHECK(pow(a, 3) == a * a * a);
  CHECK(pow(a, 5) == a * a * a * a * a);
}
