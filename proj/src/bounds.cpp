#include "chowbound/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "chowbound/bernoulli.hpp"

namespace chowbound {

Context Context::make(unsigned g, std::optional<unsigned> d, std::optional<unsigned> level_n,
                      std::optional<BigInt> char_p) {
  if (g == 0) throw std::invalid_argument("Context: g must be >= 1");
  Context ctx;
  ctx.g = g;
  if (d.has_value())
    ctx.d = *d;
  else if (level_n.has_value())
    ctx.d = g * (g + 1) / 2;
  else
    throw std::invalid_argument("Context: either d or a level structure must be given");
  ctx.level_n = level_n;
  if (level_n && *level_n < 3)
    throw std::invalid_argument("Context: level structure requires n >= 3");
  if (char_p) {
    if (!is_prime(*char_p))
      throw std::invalid_argument("Context: characteristic " + char_p->str() + " is not prime");
    if (level_n && BigInt(*level_n) % *char_p == 0)
      throw std::invalid_argument("Context: characteristic divides the level");
    ctx.char_p = char_p;
  }
  return ctx;
}

std::vector<unsigned> lambda_todd_bernoulli_indices(unsigned i) {
  if (i == 0) throw std::invalid_argument("lambda_todd_bernoulli_indices: i must be >= 1");
  std::vector<unsigned> out;
  for (unsigned j = 2; j <= 2 * (i / 2); j += 2) out.push_back(j);
  if (out.empty() || out.back() != 2 * i) out.push_back(2 * i);
  return out;
}

int lambda_todd_bound(const Context& ctx, unsigned i, const BigInt& ell) {
  if (i == 0 || i > ctx.g)
    throw std::invalid_argument("lambda_todd_bound: class index must satisfy 1 <= i <= g");
  if (!is_prime(ell))
    throw std::invalid_argument("lambda_todd_bound: " + ell.str() + " is not prime");
  if (ell <= ctx.threshold())
    throw std::invalid_argument("lambda_todd_bound: the estimate only applies for primes above "
                                "2g+d+1 = " +
                                std::to_string(ctx.threshold()) + "; got " + ell.str());
  long long best = 0;
  for (unsigned j : lambda_todd_bernoulli_indices(i)) {
    Valuation v = valuation(bernoulli(j), ell);
    // ell > 2g+d+1 >= 2j+1 rules ell out of every Bernoulli denominator
    // (von Staudt-Clausen), so the valuation is a nonnegative integer.
    if (v.is_infinite() || v.value() < 0)
      throw std::logic_error("lambda_todd_bound: denominator contribution at ell = " + ell.str());
    best = std::max(best, v.value());
  }
  return static_cast<int>(best);
}

FactoredInt fzip_bound(const BigInt& p, unsigned i) {
  return fzip_bound(p, i, FactorOptions::defaults());
}

FactoredInt fzip_bound(const BigInt& p, unsigned i, const FactorOptions& opts) {
  if (!is_prime(p)) throw std::invalid_argument("fzip_bound: " + p.str() + " is not prime");
  if (i == 0) throw std::invalid_argument("fzip_bound: i must be >= 1");
  return factor_power_minus_one(p, 2 * i, opts);
}

CombinedBound combined_char_p_bound(const Context& ctx, unsigned i, const BigInt& ell) {
  if (!ctx.char_p)
    throw std::invalid_argument("combined_char_p_bound: context has no characteristic");
  const BigInt& p = *ctx.char_p;
  if (ell == p)
    throw std::invalid_argument("combined_char_p_bound: ell must differ from the characteristic");
  CombinedBound out;
  out.lambda_bound = lambda_todd_bound(ctx, i, ell);
  BigInt m = pow(p, 2 * i) - 1;
  out.fzip_valuation = valuation_of_nonzero(m, ell);
  out.bound = static_cast<int>(std::min<long long>(out.lambda_bound, out.fzip_valuation));
  out.mult_order = multiplicative_order(p, ell);
  out.order_divides_2i = BigInt(2 * i) % out.mult_order == 0;
  out.gcd_2i_ellm1 = gcd(BigInt(2 * i), ell - 1);
  return out;
}

std::pair<BigInt, BigInt> evdg_order_candidates(unsigned i) {
  BigInt n = nk_formula(i).value;
  // v_2(n_i) >= 3, so the half candidate is an integer.
  return {n, n / 2};
}

FactoredInt evdg_top_class_bound(unsigned g) {
  if (g == 0) throw std::invalid_argument("evdg_top_class_bound: g must be >= 1");
  FactoredInt out = factorial_factored(g - 1);
  out.multiply(nk_formula(g));
  return out;
}

int mr_bound(unsigned i, const BigInt& ell) {
  if (i == 0) throw std::invalid_argument("mr_bound: i must be >= 1");
  if (!is_prime(ell)) throw std::invalid_argument("mr_bound: " + ell.str() + " is not prime");
  if (ell <= 2 * i)
    throw std::invalid_argument("mr_bound: requires a prime above 2i = " + std::to_string(2 * i) +
                                "; got " + ell.str());
  Rational q = Rational(pow(BigInt(2), 2 * i) - 1) * bernoulli(2 * i);
  return static_cast<int>(valuation_of_nonzero(q.numerator(), ell));
}

Ledger build_ledger(const Context& ctx) {
  Ledger ledger;
  ledger.context = ctx;
  const unsigned threshold = ctx.threshold();
  bool any_fzip_omitted = false;
  FactorOptions opts = FactorOptions::defaults();

  for (unsigned i = 1; i <= ctx.g; ++i) {
    BoundEntry entry;
    entry.i = i;
    entry.bernoulli_indices = lambda_todd_bernoulli_indices(i);

    // Primes enumerated per entry: divisors of the relevant Bernoulli
    // numerators above the threshold, plus (in char p) divisors of
    // p^{2i} - 1 above the threshold.
    std::map<BigInt, std::string> sources;
    for (unsigned j : entry.bernoulli_indices) {
      BigInt num = abs(bernoulli(j).numerator());
      for (const auto& [q, e] : factor(num).factors)
        if (q > threshold) sources.emplace(q, "lambda-todd");
    }
    if (ctx.char_p) {
      try {
        FactoredInt fz = fzip_bound(*ctx.char_p, i, opts);
        for (const auto& [q, e] : fz.factors) {
          if (q <= threshold) continue;
          auto [it, inserted] = sources.try_emplace(q, "fzip");
          if (!inserted) it->second = "both";
        }
        entry.fzip = std::move(fz);
      } catch (const partial_factorization_error&) {
        entry.fzip_omitted = true;
        any_fzip_omitted = true;
      }
    }

    for (const auto& [q, source] : sources) {
      PrimeBound pb;
      pb.ell = q;
      pb.source = source;
      pb.bound = lambda_todd_bound(ctx, i, q);
      pb.mr = mr_bound(i, q);  // q > threshold >= 2g+1 >= 2i+1 > 2i
      if (ctx.char_p && q != *ctx.char_p) {
        CombinedBound cb = combined_char_p_bound(ctx, i, q);
        pb.fzip_valuation = cb.fzip_valuation;
        pb.combined_bound = cb.bound;
        pb.mult_order = cb.mult_order;
        pb.order_divides_2i = cb.order_divides_2i;
        pb.gcd_2i_ellm1 = cb.gcd_2i_ellm1;
      }
      entry.annihilator.multiply_prime_power(q, static_cast<unsigned>(pb.bound));
      entry.primes.push_back(std::move(pb));
    }

    auto [full, half] = evdg_order_candidates(i);
    entry.evdg.candidate_full = full;
    entry.evdg.candidate_half = half;
    if (i == ctx.g) entry.evdg.top_class = evdg_top_class_bound(ctx.g);

    ledger.entries.push_back(std::move(entry));
  }

  ledger.notes.push_back("bounds are strict evaluations of the estimate v_ell(order of "
                         "c_2i) <= max over the entry's Bernoulli indices of v_ell(B_j), "
                         "for primes ell above the threshold " +
                         std::to_string(threshold));
  ledger.notes.push_back("top class i = " + std::to_string(ctx.g) +
                         " additionally carries the (g-1)! * n_g divisor bound");
  if (ctx.char_p)
    ledger.notes.push_back("characteristic " + ctx.char_p->str() +
                           ": per-prime columns carry v_ell(p^2i - 1), the combined bound, "
                           "and the order-divides-2i condition");
  if (any_fzip_omitted)
    ledger.notes.push_back("fzip factorizations omitted where the factorization effort cap "
                           "was exceeded (set CHOWBOUND_FACTOR_EFFORT to raise it); combined "
                           "bounds are unaffected, they use direct valuations");
  if (ctx.g == 13 && ctx.level_n == 4u)
    ledger.notes.push_back("published worked example for this context prints the coefficient "
                           "ring Z[1/105!] where the threshold formula 2g+d+1 gives 118; no "
                           "prime in (105, 118] divides any relevant Bernoulli numerator, so "
                           "every bound below is identical under either reading");
  return ledger;
}

const std::vector<PublishedExampleRow>& published_example_rows() {
  static const std::vector<PublishedExampleRow> rows = {
      {6, "691", "", "691 * c_12 = 0, and 691 is prime"},
      {7, "3617", "", "printed as num(B_14); the strict evaluation pairs 3617 with c_16"},
      {8, "43867", "", "printed as num(B_16); the strict evaluation pairs 43867 with c_18"},
      {9, "283 * 617", "174611 = 283 * 617",
       "printed as num(B_18); the strict evaluation pairs 174611 with c_20"},
      {10, "11 * 131 * 593", "854513 = 11 * 131 * 593",
       "printed as num(B_20); the strict evaluation keeps only 131 * 593 = 77683 above the "
       "threshold, paired with c_22"},
      {11, "103 * 2294797", "236364091 = 103 * 2294797",
       "printed as num(B_22); the strict evaluation pairs 2294797 (with 691 from B_12) with "
       "c_24"},
      {12, "8553103", "8553103 = 13 * 657931",
       "printed as num(B_24); 8553103 is the modern num(B_26)"},
      {13, "23749461029", "23749461029 = 7 * 9349 * 362903",
       "printed as num(B_26); 23749461029 is the modern num(B_28)"},
  };
  return rows;
}

const PublishedExampleExtras& published_example_extras() {
  static const PublishedExampleExtras extras = {
      "12! * n_12 = 2^5 * 3^2 * 5 * 7 * 13!",
      BigInt("62768369664000"),
      "gcd(24, 690) = 6",
      "Z[1/105!]",
  };
  return extras;
}

}  // namespace chowbound
