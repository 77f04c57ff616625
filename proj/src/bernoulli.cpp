#include "chowbound/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace chowbound {

namespace {

void extend_bernoulli(std::vector<Rational>& cache, unsigned n) {
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    Rational sum;
    BigInt binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      sum += Rational(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    // binom now holds C(m+1, m) = m + 1.
    cache.push_back(-sum / Rational(binom));
  }
}

}  // namespace

Rational bernoulli(unsigned n) {
  if (n > kBernoulliMaxIndex)
    throw std::invalid_argument("bernoulli: index " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(kBernoulliMaxIndex));
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  extend_bernoulli(cache, n);
  return cache[n];
}

BernoulliTable::BernoulliTable(unsigned max_index) {
  values_.push_back(Rational(1));
  extend_bernoulli(values_, max_index);
}

const Rational& BernoulliTable::at(unsigned n) const {
  if (n >= values_.size())
    throw std::invalid_argument("BernoulliTable: index " + std::to_string(n) +
                                " beyond table size");
  return values_[n];
}

FactoredInt nk_formula(unsigned k) {
  if (k == 0) throw std::invalid_argument("nk_formula: k must be >= 1");
  if (2ull * k + 1 >= 1'000'000)
    throw std::invalid_argument("nk_formula: k exceeds the prime sieve range");
  auto v_of = [](unsigned n, unsigned p) {
    unsigned v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  FactoredInt n_k;
  n_k.multiply_prime_power(BigInt(2), 3 + v_of(k, 2));
  for (std::uint32_t ell : small_primes()) {
    if (ell == 2) continue;
    if (ell > 2 * static_cast<std::uint64_t>(k) + 1) break;
    if ((2 * k) % (ell - 1) == 0) n_k.multiply_prime_power(BigInt(ell), 1 + v_of(k, ell));
  }
  return n_k;
}

BigInt nk_denominator(unsigned k) {
  if (k == 0) throw std::invalid_argument("nk_denominator: k must be >= 1");
  Rational q = bernoulli(2 * k) / Rational(-4 * static_cast<long long>(k));
  return q.denominator();
}

BigInt nk_gcd_sample(unsigned k, unsigned prime_count) {
  if (k == 0 || prime_count == 0)
    throw std::invalid_argument("nk_gcd_sample: k and prime_count must be >= 1");
  BigInt g = 0;
  BigInt p = 2 * k + 1;
  for (unsigned i = 0; i < prime_count; ++i) {
    p = next_prime_above(p);
    g = gcd(g, pow(p, 2 * k) - 1);
  }
  return g;
}

NkCrossCheck nk_cross_validated(unsigned k) {
  NkCrossCheck rec;
  rec.k = k;
  rec.formula = nk_formula(k);
  rec.denominator = nk_denominator(k);
  // Track stabilization: the gcd after 40 primes must match the gcd after 50.
  BigInt g = 0;
  BigInt g40 = 0;
  BigInt p = 2 * k + 1;
  for (unsigned i = 1; i <= 50; ++i) {
    p = next_prime_above(p);
    g = gcd(g, pow(p, 2 * k) - 1);
    if (i == 40) g40 = g;
  }
  rec.gcd_sample = g;
  rec.gcd_stabilized = g40 == g;
  rec.agree = rec.formula.value == rec.denominator && rec.denominator == rec.gcd_sample;
  return rec;
}

BigInt von_staudt_clausen_denominator(unsigned k) {
  if (k == 0) throw std::invalid_argument("von_staudt_clausen_denominator: k must be >= 1");
  if (2ull * k + 1 >= 1'000'000)
    throw std::invalid_argument("von_staudt_clausen_denominator: k exceeds the prime sieve range");
  BigInt d = 1;
  for (std::uint32_t p : small_primes()) {
    if (p > 2 * static_cast<std::uint64_t>(k) + 1) break;
    if ((2 * k) % (p - 1) == 0) d *= p;
  }
  return d;
}

}  // namespace chowbound
