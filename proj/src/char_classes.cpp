#include "chowbound/char_classes.hpp"

#include <stdexcept>

#include "chowbound/bernoulli.hpp"

namespace chowbound {

namespace {

// One-variable series f(x) = sum coeffs[j] x^j represented in the graded ring
// as a polynomial in c_1, so the ring's exp/log/inverse can be reused.
GradedPoly series_to_poly(unsigned truncation, const std::vector<Rational>& coeffs) {
  std::vector<std::pair<Monomial, Rational>> terms;
  for (unsigned j = 0; j < coeffs.size() && j <= truncation; ++j)
    terms.emplace_back(Monomial::variable(1, j), coeffs[j]);
  return GradedPoly::from_terms(truncation, std::move(terms));
}

std::vector<Rational> poly_to_series(const GradedPoly& p) {
  std::vector<Rational> coeffs(p.truncation() + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) {
      coeffs[0] = c;
      continue;
    }
    if (m.entries().size() != 1 || m.entries()[0].first != 1)
      throw std::logic_error("poly_to_series: not a one-variable polynomial in c_1");
    coeffs[m.entries()[0].second] = c;
  }
  return coeffs;
}

// Power sums of the virtual roots of a unit total class, by the Newton
// recurrence p_k = sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k
// with e_j the weight-j component of the unit.
std::vector<GradedPoly> power_sums_of_unit(const GradedPoly& total) {
  unsigned n = total.truncation();
  std::vector<GradedPoly> e;
  e.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) e.push_back(total.component(j));
  std::vector<GradedPoly> p;
  p.reserve(n + 1);
  p.push_back(GradedPoly::zero(n));  // p_0 unused
  for (unsigned k = 1; k <= n; ++k) {
    GradedPoly pk = e[k].scaled(Rational(k % 2 == 1 ? static_cast<long long>(k)
                                                    : -static_cast<long long>(k)));
    for (unsigned j = 1; j < k; ++j) {
      GradedPoly term = e[j] * p[k - j];
      pk += j % 2 == 1 ? term : -term;
    }
    p.push_back(std::move(pk));
  }
  return p;
}

}  // namespace

GradedPoly total_chern_generic(const BundleSpec& bundle) {
  if (bundle.rank == 0) throw std::invalid_argument("BundleSpec: rank must be >= 1");
  GradedPoly c = GradedPoly::one(bundle.truncation);
  unsigned top = std::min(bundle.rank, bundle.truncation);
  for (unsigned i = 1; i <= top; ++i) c += GradedPoly::variable(bundle.truncation, i);
  return c;
}

MultiplicativeSequence MultiplicativeSequence::todd(unsigned max_degree) {
  // q(x) = x / (1 - e^{-x}) as the inverse of (1 - e^{-x})/x, whose j-th
  // coefficient is (-1)^j / (j+1)!.
  std::vector<Rational> denom(max_degree + 1);
  Rational inv_factorial(1);
  for (unsigned j = 0; j <= max_degree; ++j) {
    inv_factorial /= Rational(j + 1);
    // inv_factorial now holds 1/(j+1)!.
    denom[j] = j % 2 == 0 ? inv_factorial : -inv_factorial;
  }
  GradedPoly q = series_to_poly(max_degree, denom).invert_unit();
  return from_series("todd", poly_to_series(q));
}

MultiplicativeSequence MultiplicativeSequence::from_series(std::string name,
                                                           std::vector<Rational> series) {
  if (series.empty() || !(series[0] == Rational(1)))
    throw std::invalid_argument("MultiplicativeSequence: series must start with q_0 = 1");
  MultiplicativeSequence seq;
  seq.name_ = std::move(name);
  seq.series_ = std::move(series);
  return seq;
}

GradedPoly MultiplicativeSequence::apply_to_total_chern(const GradedPoly& total_chern) const {
  unsigned n = total_chern.truncation();
  if (!(total_chern.constant_term() == Rational(1)))
    throw std::invalid_argument("apply_to_total_chern: total class must have constant term 1");
  if (series_.size() <= n)
    throw std::invalid_argument("apply_to_total_chern: series too short for truncation " +
                                std::to_string(n));
  // log q as a one-variable series; its coefficients s_k weight the power sums.
  std::vector<Rational> head(series_.begin(), series_.begin() + n + 1);
  std::vector<Rational> s = poly_to_series(series_to_poly(n, head).log_series());
  std::vector<GradedPoly> p = power_sums_of_unit(total_chern);
  GradedPoly log_class = GradedPoly::zero(n);
  for (unsigned k = 1; k <= n; ++k) {
    if (s[k].is_zero()) continue;
    log_class += p[k].scaled(s[k]);
  }
  return log_class.exp_series();
}

GradedPoly newton_from_chern(unsigned k, unsigned rank, unsigned truncation) {
  if (k == 0) throw std::invalid_argument("newton_from_chern: k must be >= 1");
  if (k > truncation)
    throw std::invalid_argument("newton_from_chern: k exceeds the truncation");
  GradedPoly total = total_chern_generic({rank, truncation});
  return power_sums_of_unit(total)[k];
}

GradedPoly chern_from_newton(unsigned k, unsigned rank, unsigned truncation) {
  if (k == 0) throw std::invalid_argument("chern_from_newton: k must be >= 1");
  if (k > truncation)
    throw std::invalid_argument("chern_from_newton: k exceeds the truncation");
  if (k > rank) return GradedPoly::zero(truncation);
  // e_k = (1/k) sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j, in variables p_j.
  std::vector<GradedPoly> e;
  e.push_back(GradedPoly::one(truncation));
  for (unsigned m = 1; m <= k; ++m) {
    GradedPoly em = GradedPoly::zero(truncation);
    for (unsigned j = 1; j <= m; ++j) {
      GradedPoly term = e[m - j] * GradedPoly::variable(truncation, j);
      em += j % 2 == 1 ? term : -term;
    }
    e.push_back(em.scaled(Rational(1, m)));
  }
  return e[k];
}

GradedPoly todd_from_total_chern(const GradedPoly& total_chern) {
  return MultiplicativeSequence::todd(total_chern.truncation())
      .apply_to_total_chern(total_chern);
}

GradedPoly todd_class(const BundleSpec& bundle) {
  return todd_from_total_chern(total_chern_generic(bundle));
}

GradedPoly chern_character_from_total_chern(const GradedPoly& total_chern,
                                            const Rational& rank_term) {
  unsigned n = total_chern.truncation();
  if (!(total_chern.constant_term() == Rational(1)))
    throw std::invalid_argument("chern_character: total class must have constant term 1");
  GradedPoly ch = GradedPoly::constant(n, rank_term);
  std::vector<GradedPoly> p = power_sums_of_unit(total_chern);
  Rational inv_factorial(1);
  for (unsigned k = 1; k <= n; ++k) {
    inv_factorial /= Rational(k);
    ch += p[k].scaled(inv_factorial);
  }
  return ch;
}

GradedPoly chern_character(const BundleSpec& bundle) {
  return chern_character_from_total_chern(total_chern_generic(bundle),
                                          Rational(bundle.rank));
}

GradedPoly chern_character_of_determinant(unsigned truncation) {
  return GradedPoly::variable(truncation, 1).exp_series();
}

GradedPoly derham_total_chern(unsigned g, unsigned truncation) {
  if (g == 0) throw std::invalid_argument("derham_total_chern: g must be >= 1");
  GradedPoly c = total_chern_generic({g, truncation});
  return c * c.sign_involution();
}

GradedPoly derham_chern_in_newton(unsigned i, unsigned g) {
  if (i == 0) throw std::invalid_argument("derham_chern_in_newton: i must be >= 1");
  if (i > g)
    throw std::invalid_argument("derham_chern_in_newton: 2i exceeds the rank 2g");
  // c(E + E^dual) = prod_j (1 - x_j^2), so c_{2i} = (-1)^i e_i(x_1^2, ..., x_g^2)
  // and the power sums of the squared roots are p_k(x^2) = N_{2k}(E). Convert
  // e_i to power sums, then double every index so variable 2j stands for N_2j.
  GradedPoly e_i = chern_from_newton(i, g, i);
  GradedPoly doubled = e_i.remap_variables([](unsigned j) { return 2 * j; }, 2 * i);
  return i % 2 == 0 ? doubled : -doubled;
}

DualityReport verify_todd_det_duality(unsigned rank, unsigned truncation) {
  DualityReport report;
  report.rank = rank;
  report.truncation = truncation;
  GradedPoly total = total_chern_generic({rank, truncation});
  report.lhs = todd_from_total_chern(total);
  report.rhs = chern_character_of_determinant(truncation) *
               todd_from_total_chern(total.sign_involution());
  report.equal = report.lhs == report.rhs;
  if (!report.equal) {
    GradedPoly diff = report.lhs - report.rhs;
    for (unsigned w = 0; w <= truncation; ++w) {
      if (!diff.component(w).is_zero()) {
        report.first_differing_weight = w;
        break;
      }
    }
  }
  return report;
}

HirzebruchReport verify_hirzebruch_coefficient(unsigned i, unsigned max_degree) {
  if (i == 0) throw std::invalid_argument("verify_hirzebruch_coefficient: i must be >= 1");
  if (2 * i > max_degree)
    throw std::invalid_argument("verify_hirzebruch_coefficient: degree 2i = " +
                                std::to_string(2 * i) + " exceeds the configured maximum " +
                                std::to_string(max_degree));
  HirzebruchReport report;
  report.i = i;
  GradedPoly td = todd_class({2 * i, 2 * i});
  report.coeff_c2i = td.coefficient(Monomial::variable(2 * i));
  report.coeff_c1_pow = td.coefficient(Monomial::variable(1, 2 * i));
  report.expected = bernoulli(2 * i) / Rational(factorial(2 * i));
  report.all_equal =
      report.coeff_c2i == report.coeff_c1_pow && report.coeff_c1_pow == report.expected;
  report.nonzero = !report.coeff_c2i.is_zero();
  return report;
}

Rational todd24_c12sq_coefficient() {
  return todd_coefficient(24, Monomial::variable(12, 2), 24);
}

Rational todd_coefficient(unsigned degree, const Monomial& m, unsigned rank) {
  if (m.weight() != degree)
    throw std::invalid_argument("todd_coefficient: monomial weight " +
                                std::to_string(m.weight()) + " differs from degree " +
                                std::to_string(degree));
  return todd_class({rank, degree}).coefficient(m);
}

}  // namespace chowbound
