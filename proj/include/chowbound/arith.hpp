#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowbound/big_int.hpp"
#include "chowbound/rational.hpp"

namespace chowbound {

// A positive integer together with its certified prime factorization.
// Invariant: value == product of prime^exp over factors, every key passes
// is_prime, exponents >= 1, keys ascending (map order).
struct FactoredInt {
  BigInt value = 1;
  std::map<BigInt, unsigned> factors;

  static FactoredInt one() { return FactoredInt{}; }
  static FactoredInt from_parts(BigInt value, std::map<BigInt, unsigned> factors);

  FactoredInt& multiply(const FactoredInt& o);
  FactoredInt& multiply_prime_power(const BigInt& p, unsigned e);

  // "2^4 * 3 * 5" with sep " * "; the unit factorization renders as "1".
  std::string to_string(const std::string& sep = " * ") const;

  bool operator==(const FactoredInt& o) const = default;
};

// Extended integer used for p-adic valuations: a finite value or +infinity
// (the valuation of 0). Infinity compares greater than every finite value.
class Valuation {
 public:
  explicit Valuation(long long v) : finite_(true), value_(v) {}
  static Valuation infinity() {
    Valuation v(0);
    v.finite_ = false;
    return v;
  }

  bool is_infinite() const { return !finite_; }
  long long value() const {
    if (!finite_) throw std::logic_error("Valuation: infinite value has no finite part");
    return value_;
  }

  bool operator==(const Valuation& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator<(const Valuation& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return value_ < o.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  bool finite_;
  long long value_;
};

// Deterministic primality test. Exact for all n below 3.3e24 (fixed
// Miller-Rabin witness set 2..41); larger inputs additionally run 64
// deterministically seeded rounds. n <= 1 reports false.
bool is_prime(const BigInt& n);

struct FactorOptions {
  // Per-factorization budget of Pollard-rho iterations before giving up.
  std::uint64_t max_rho_iterations = 1u << 26;

  // Default budget, with CHOWBOUND_FACTOR_EFFORT (a decimal iteration count)
  // honored as an override.
  static FactorOptions defaults();
};

// Thrown when the rho budget is exhausted; carries what was factored so far.
class partial_factorization_error : public std::runtime_error {
 public:
  partial_factorization_error(FactoredInt partial, BigInt cofactor, std::string msg)
      : std::runtime_error(std::move(msg)),
        partial_result(std::move(partial)),
        unfactored_cofactor(std::move(cofactor)) {}

  FactoredInt partial_result;
  BigInt unfactored_cofactor;
};

// Full factorization of n >= 1: trial division below 10^6, then Pollard rho
// (Brent) with every reported prime certified by is_prime.
FactoredInt factor(const BigInt& n);
FactoredInt factor(const BigInt& n, const FactorOptions& opts);

// Factorization of p^e - 1 that first splits the target into cyclotomic
// polynomial values Phi_d(p) over d | e, so each rho call sees a much
// smaller composite.
FactoredInt factor_power_minus_one(const BigInt& p, unsigned e, const FactorOptions& opts);

// Order of p in (Z/q)^* for prime q with q not dividing p.
BigInt multiplicative_order(const BigInt& p, const BigInt& q);

// ell-adic valuation; ell must be prime. valuation(0) is infinity.
Valuation valuation(const BigInt& n, const BigInt& ell);
Valuation valuation(const Rational& q, const BigInt& ell);
// Precondition n != 0 (checked); fast path used by the two above.
long long valuation_of_nonzero(const BigInt& n, const BigInt& ell);

// Primes below 10^6, ascending (shared sieve).
const std::vector<std::uint32_t>& small_primes();

BigInt next_prime_above(const BigInt& n);

// n! with exponents by Legendre's formula; never multiplies out n! digits
// beyond the (exact) value field.
FactoredInt factorial_factored(unsigned n);

BigInt factorial(unsigned n);

int mobius(unsigned n);

}  // namespace chowbound
