#include "chowbound/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "chowbound/bernoulli.hpp"
#include "chowbound/bounds.hpp"
#include "chowbound/char_classes.hpp"
#include "chowbound/root_oracle.hpp"

namespace chowbound {

namespace {

CheckResult check(std::string name, bool pass, std::string detail) {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_duality(unsigned max_rank, unsigned max_weight) {
  std::vector<CheckResult> out;
  for (unsigned r = 1; r <= max_rank; ++r) {
    DualityReport rep = verify_todd_det_duality(r, max_weight);
    std::ostringstream detail;
    if (rep.equal)
      detail << "Td(E) = ch(det E) * Td(E^dual) for rank " << r << " up to weight "
             << max_weight;
    else
      detail << "sides differ at weight " << *rep.first_differing_weight << ": "
             << (rep.lhs - rep.rhs).component(*rep.first_differing_weight).to_string();
    out.push_back(check("duality rank " + std::to_string(r), rep.equal, detail.str()));
  }
  // Independent root-expansion confirmation at oracle scale.
  unsigned oracle_weight = std::min(max_weight, 8u);
  for (unsigned r : {1u, 3u, 5u}) {
    if (r > max_rank) break;
    GradedPoly lhs = oracle_todd(r, oracle_weight);
    GradedPoly rhs = oracle_todd_dual_side(r, oracle_weight);
    bool equal = lhs == rhs;
    out.push_back(check("duality oracle rank " + std::to_string(r), equal,
                        equal ? "root expansion agrees to weight " + std::to_string(oracle_weight)
                              : "root expansion mismatch"));
  }
  return out;
}

std::vector<CheckResult> verify_odd_vanishing(unsigned max_g, unsigned max_weight) {
  std::vector<CheckResult> out;
  for (unsigned g = 1; g <= max_g; ++g) {
    GradedPoly c = derham_total_chern(g, max_weight);
    bool pass = true;
    std::string bad;
    for (unsigned w = 1; w <= max_weight; w += 2) {
      GradedPoly comp = c.component(w);
      if (!comp.is_zero()) {
        pass = false;
        bad = "weight " + std::to_string(w) + ": " + comp.to_string();
        break;
      }
    }
    if (pass && !(c.sign_involution() == c)) {
      pass = false;
      bad = "sign involution does not fix c(H)";
    }
    out.push_back(check("odd vanishing g = " + std::to_string(g), pass,
                        pass ? "all odd components zero; involution-fixed" : bad));
  }
  return out;
}

std::vector<CheckResult> verify_hirzebruch(unsigned max_degree) {
  std::vector<CheckResult> out;
  for (unsigned i = 1; 2 * i <= max_degree; ++i) {
    HirzebruchReport rep = verify_hirzebruch_coefficient(i, max_degree);
    std::ostringstream detail;
    if (rep.all_equal && rep.nonzero)
      detail << "coeff(c_" << 2 * i << ") = coeff(c_1^" << 2 * i
             << ") = B_" << 2 * i << "/(" << 2 * i << ")! = " << rep.expected.to_string();
    else
      detail << "c_" << 2 * i << ": " << rep.coeff_c2i.to_string() << ", c_1^" << 2 * i << ": "
             << rep.coeff_c1_pow.to_string() << ", expected " << rep.expected.to_string();
    out.push_back(
        check("hirzebruch i = " + std::to_string(i), rep.all_equal && rep.nonzero, detail.str()));
  }
  // Recursion-structure scan: apart from the c_{2i} term itself, every
  // monomial of Td_{2i} involves some class c_j with j <= i.
  for (unsigned i = 1; 2 * i <= max_degree; ++i) {
    GradedPoly td2i = todd_class({2 * i, 2 * i}).component(2 * i);
    bool pass = true;
    std::string bad;
    for (const auto& [m, c] : td2i.terms()) {
      if (m == Monomial::variable(2 * i)) continue;
      if (m.entries().front().first > i) {
        pass = false;
        bad = "monomial " + m.to_string() + " has no class of index <= " + std::to_string(i);
        break;
      }
    }
    out.push_back(check("todd recursion structure i = " + std::to_string(i), pass,
                        pass ? "every non-leading monomial involves a low class" : bad));
  }
  return out;
}

std::vector<CheckResult> verify_nk(unsigned table_max, unsigned agreement_max) {
  std::vector<CheckResult> out;
  static const long long published[] = {24,    240,   504, 480,   264,   65520, 24,
                                        16320, 28728, 13200, 552, 131040, 24,    6960};
  bool table_ok = true;
  std::string bad;
  for (unsigned k = 1; k <= table_max && k <= 14; ++k) {
    BigInt got = nk_formula(k).value;
    if (got != published[k - 1]) {
      table_ok = false;
      bad = "k = " + std::to_string(k) + ": computed " + got.str() + ", published " +
            std::to_string(published[k - 1]);
      break;
    }
  }
  out.push_back(check("nk published table k <= " + std::to_string(std::min(table_max, 14u)),
                      table_ok, table_ok ? "all rows match" : bad));

  bool three_way = true;
  std::string detail = "formula = denominator = stabilized gcd";
  for (unsigned k = 1; k <= agreement_max; ++k) {
    NkCrossCheck rec = nk_cross_validated(k);
    if (!rec.agree || !rec.gcd_stabilized) {
      three_way = false;
      detail = "k = " + std::to_string(k) + ": formula " + rec.formula.value.str() +
               ", denominator " + rec.denominator.str() + ", gcd sample " +
               rec.gcd_sample.str() + (rec.gcd_stabilized ? "" : " (gcd not stabilized)");
      break;
    }
  }
  out.push_back(check("nk three-way agreement k <= " + std::to_string(agreement_max), three_way,
                      detail));

  bool vsc = true;
  std::string vsc_detail = "denominator of B_2k equals the prime product";
  for (unsigned k = 1; k <= 60; ++k) {
    if (bernoulli(2 * k).denominator() != von_staudt_clausen_denominator(k)) {
      vsc = false;
      vsc_detail = "k = " + std::to_string(k);
      break;
    }
  }
  out.push_back(check("von Staudt-Clausen denominators k <= 60", vsc, vsc_detail));

  bool odd = true;
  for (unsigned j = 1; 2 * j + 1 <= 61; ++j)
    if (!bernoulli(2 * j + 1).is_zero()) odd = false;
  out.push_back(check("odd Bernoulli vanishing", odd,
                      odd ? "B_{2j+1} = 0 for 1 <= j" : "nonzero odd Bernoulli found"));
  return out;
}

std::vector<CheckResult> verify_newton(unsigned max_k) {
  std::vector<CheckResult> out;
  unsigned rank = max_k;
  bool pass = true;
  std::string detail = "chern_from_newton(newton_from_chern) = identity for k <= " +
                       std::to_string(max_k);
  for (unsigned k = 1; k <= max_k; ++k) {
    std::map<unsigned, GradedPoly> images;
    for (unsigned j = 1; j <= k; ++j) images.emplace(j, newton_from_chern(j, rank, k));
    GradedPoly back = chern_from_newton(k, rank, k).substitute(images);
    if (!(back == GradedPoly::variable(k, k))) {
      pass = false;
      detail = "k = " + std::to_string(k) + ": round trip gave " + back.to_string();
      break;
    }
  }
  out.push_back(check("newton basis round trip", pass, detail));

  bool oracle_pass = true;
  std::string oracle_detail = "power sums match the root expansion for k <= " +
                              std::to_string(std::min(max_k, 8u));
  for (unsigned k = 1; k <= std::min(max_k, 8u); ++k) {
    GradedPoly direct = newton_from_chern(k, k, k);
    GradedPoly via_roots = oracle_power_sum(k, k, k);
    if (!(direct == via_roots)) {
      oracle_pass = false;
      oracle_detail = "k = " + std::to_string(k) + ": " + direct.to_string() + " vs " +
                      via_roots.to_string();
      break;
    }
  }
  out.push_back(check("newton power sums vs roots", oracle_pass, oracle_detail));
  return out;
}

std::vector<CheckResult> verify_oracle(unsigned max_weight) {
  std::vector<CheckResult> out;
  unsigned n = std::min(max_weight, 8u);
  {
    GradedPoly power_route = todd_class({n, n});
    GradedPoly root_route = oracle_todd(n, n);
    bool equal = power_route == root_route;
    out.push_back(check("todd power-sum route vs root expansion", equal,
                        equal ? "equal with " + std::to_string(n) + " roots up to weight " +
                                    std::to_string(n)
                              : "difference: " + (power_route - root_route).to_string()));
  }
  {
    GradedPoly power_route = chern_character({n, n});
    GradedPoly root_route = oracle_chern_character(n, n);
    bool equal = power_route == root_route;
    out.push_back(check("chern character route vs root expansion", equal,
                        equal ? "equal with " + std::to_string(n) + " roots"
                              : "difference: " + (power_route - root_route).to_string()));
  }
  return out;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite,
                                          std::optional<unsigned> max_degree) {
  auto value_or = [&](unsigned dflt) { return max_degree.value_or(dflt); };
  if (suite == "duality") return verify_duality(5, value_or(10));
  if (suite == "odd-vanishing") return verify_odd_vanishing(8, value_or(16));
  if (suite == "hirzebruch") return verify_hirzebruch(value_or(16));
  if (suite == "nk") return verify_nk(14, value_or(40));
  if (suite == "newton") return verify_newton(value_or(10));
  if (suite == "oracle") return verify_oracle(value_or(8));
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"duality", "odd-vanishing", "hirzebruch", "nk", "newton", "oracle"}) {
      std::vector<CheckResult> part = run_verify_suite(s, max_degree);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite: " + std::string(suite));
}

}  // namespace chowbound
