#include "chowbound/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace chowbound {

FactoredInt FactoredInt::from_parts(BigInt value, std::map<BigInt, unsigned> factors) {
  BigInt prod = 1;
  for (const auto& [p, e] : factors) {
    if (e == 0) throw std::invalid_argument("FactoredInt: zero exponent");
    if (!is_prime(p)) throw std::invalid_argument("FactoredInt: factor " + p.str() + " is not prime");
    prod *= pow(p, e);
  }
  if (prod != value)
    throw std::invalid_argument("FactoredInt: factors do not multiply to " + value.str());
  FactoredInt f;
  f.value = std::move(value);
  f.factors = std::move(factors);
  return f;
}

FactoredInt& FactoredInt::multiply(const FactoredInt& o) {
  value *= o.value;
  for (const auto& [p, e] : o.factors) factors[p] += e;
  return *this;
}

FactoredInt& FactoredInt::multiply_prime_power(const BigInt& p, unsigned e) {
  if (e == 0) return *this;
  value *= pow(p, e);
  factors[p] += e;
  return *this;
}

std::string FactoredInt::to_string(const std::string& sep) const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : factors) {
    if (!s.empty()) s += sep;
    s += p.str();
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> comp(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i)
        comp[static_cast<std::uint32_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
  // Returns true if a witnesses n composite.
  BigInt x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // Deterministic for n < 3317044064679887385961981 with this witness set.
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u})
    if (miller_rabin_witness(n, BigInt(a), d, r)) return false;
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  // Beyond the proven range: extra rounds with bases seeded from n, so the
  // answer is still a pure function of n.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n % BigInt("18446744073709551616")));
  for (int round = 0; round < 64; ++round) {
    BigInt a = 2 + BigInt(rng()) % (n - 3);
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

FactorOptions FactorOptions::defaults() {
  FactorOptions opts;
  if (const char* env = std::getenv("CHOWBOUND_FACTOR_EFFORT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts.max_rho_iterations = v;
  }
  return opts;
}

namespace {

// Pollard rho, Brent variant, batched gcd. Deterministic: the polynomial
// increment starts at 1 and advances on each failed attempt. Returns a
// nontrivial divisor of odd composite n, or 0 when the budget runs out.
BigInt rho_brent(const BigInt& n, std::uint64_t& budget) {
  for (BigInt c = 1; budget > 0; ++c) {
    BigInt y = 2, x = y, q = 1, divisor = 1, ys = y;
    std::uint64_t r = 1;
    while (divisor == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i) {
        y = (y * y + c) % n;
        --budget;
      }
      std::uint64_t k = 0;
      while (k < r && divisor == 1 && budget > 0) {
        ys = y;
        std::uint64_t batch = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < batch && budget > 0; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
          --budget;
        }
        divisor = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (divisor == n) {
      // Backtrack one step at a time to find the divisor the batch skipped.
      do {
        ys = (ys * ys + c) % n;
        divisor = gcd(abs(x - ys), n);
      } while (divisor == 1);
    }
    if (divisor != n && divisor != 1) return divisor;
    // divisor == n: cycle degenerated for this c; retry with the next one.
  }
  return 0;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget,
                 const FactoredInt& partial_so_far, const BigInt& original) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = rho_brent(n, budget);
  if (d == 0) {
    FactoredInt partial = partial_so_far;
    for (const auto& [p, e] : out) partial.multiply_prime_power(p, e);
    throw partial_factorization_error(
        partial, n,
        "factorization effort cap exceeded while splitting a " +
            std::to_string(n.str().size()) + "-digit cofactor of " + original.str());
  }
  factor_into(d, out, budget, partial_so_far, original);
  factor_into(n / d, out, budget, partial_so_far, original);
}

}  // namespace

FactoredInt factor(const BigInt& n) { return factor(n, FactorOptions::defaults()); }

FactoredInt factor(const BigInt& n, const FactorOptions& opts) {
  if (n < 1) throw std::invalid_argument("factor: argument must be >= 1, got " + n.str());
  FactoredInt result;
  BigInt m = n;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > m) break;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) result.multiply_prime_power(BigInt(p), e);
  }
  if (m > 1) {
    if (BigInt(1'000'000) * 1'000'000 > m || is_prime(m)) {
      // Below the trial-division square or certified prime: no rho needed.
      result.multiply_prime_power(m, 1);
    } else {
      std::map<BigInt, unsigned> rest;
      std::uint64_t budget = opts.max_rho_iterations;
      factor_into(m, rest, budget, result, n);
      for (const auto& [p, e] : rest) result.multiply_prime_power(p, e);
    }
  }
  return result;
}

int mobius(unsigned n) {
  if (n == 0) throw std::invalid_argument("mobius: argument must be >= 1");
  int sign = 1;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<std::uint64_t>(p) * p > n) break;
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace {

BigInt cyclotomic_value(unsigned d, const BigInt& p) {
  // Phi_d(p) = prod over t | d of (p^t - 1)^mobius(d/t).
  BigInt num = 1, den = 1;
  for (unsigned t = 1; t <= d; ++t) {
    if (d % t) continue;
    int mu = mobius(d / t);
    if (mu == 1) num *= pow(p, t) - 1;
    if (mu == -1) den *= pow(p, t) - 1;
  }
  if (num % den != 0) throw std::logic_error("cyclotomic_value: inexact division");
  return num / den;
}

}  // namespace

FactoredInt factor_power_minus_one(const BigInt& p, unsigned e, const FactorOptions& opts) {
  if (p < 2) throw std::invalid_argument("factor_power_minus_one: base must be >= 2");
  if (e == 0) throw std::invalid_argument("factor_power_minus_one: exponent must be >= 1");
  FactoredInt result;
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d) continue;
    BigInt phi = cyclotomic_value(d, p);
    try {
      result.multiply(factor(phi, opts));
    } catch (const partial_factorization_error& err) {
      FactoredInt partial = result;
      partial.multiply(err.partial_result);
      throw partial_factorization_error(
          std::move(partial), err.unfactored_cofactor,
          "factorization effort cap exceeded on the cyclotomic piece Phi_" + std::to_string(d) +
              "(" + p.str() + ") of " + p.str() + "^" + std::to_string(e) + " - 1");
    }
  }
  if (result.value != pow(p, e) - 1)
    throw std::logic_error("factor_power_minus_one: cyclotomic pieces do not multiply back");
  return result;
}

BigInt multiplicative_order(const BigInt& p, const BigInt& q) {
  if (!is_prime(q)) throw std::invalid_argument("multiplicative_order: modulus must be prime");
  BigInt r = p % q;
  if (r < 0) r += q;
  if (r == 0) throw std::invalid_argument("multiplicative_order: " + q.str() + " divides " + p.str());
  BigInt e = q - 1;
  FactoredInt f = factor(q - 1);
  for (const auto& [prime, exp] : f.factors) {
    for (unsigned i = 0; i < exp; ++i) {
      BigInt candidate = e / prime;
      if (powm(r, candidate, q) == 1)
        e = candidate;
      else
        break;
    }
  }
  return e;
}

long long valuation_of_nonzero(const BigInt& n, const BigInt& ell) {
  if (n == 0) throw std::invalid_argument("valuation_of_nonzero: argument is zero");
  BigInt m = abs(n);
  long long v = 0;
  while (m % ell == 0) {
    m /= ell;
    ++v;
  }
  return v;
}

Valuation valuation(const BigInt& n, const BigInt& ell) {
  if (!is_prime(ell)) throw std::invalid_argument("valuation: " + ell.str() + " is not prime");
  if (n == 0) return Valuation::infinity();
  return Valuation(valuation_of_nonzero(n, ell));
}

Valuation valuation(const Rational& q, const BigInt& ell) {
  if (!is_prime(ell)) throw std::invalid_argument("valuation: " + ell.str() + " is not prime");
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(valuation_of_nonzero(q.numerator(), ell) -
                   valuation_of_nonzero(q.denominator(), ell));
}

BigInt next_prime_above(const BigInt& n) {
  BigInt m = n + 1;
  if (m <= 2) return 2;
  if (m % 2 == 0) ++m;
  while (!is_prime(m)) m += 2;
  return m;
}

FactoredInt factorial_factored(unsigned n) {
  if (n >= 1'000'000)
    throw std::invalid_argument("factorial_factored: argument exceeds the prime sieve range");
  FactoredInt result;
  for (std::uint32_t p : small_primes()) {
    if (p > n) break;
    unsigned e = 0;
    for (std::uint64_t q = p; q <= n; q *= p) e += n / q;
    result.multiply_prime_power(BigInt(p), e);
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace chowbound
