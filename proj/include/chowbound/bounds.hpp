#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowbound/arith.hpp"
#include "chowbound/big_int.hpp"

namespace chowbound {

// Numerical situation of the family: relative dimension g, base dimension d,
// optional positive characteristic and level structure. The coefficient ring
// inverts every prime up to the threshold 2g + d + 1, so the Bernoulli-Todd
// bound speaks only about primes above it.
struct Context {
  unsigned g = 1;
  unsigned d = 0;
  std::optional<BigInt> char_p;
  std::optional<unsigned> level_n;

  unsigned threshold() const { return 2 * g + d + 1; }

  // Validates and applies the defaulting rule: level structure given without
  // an explicit base dimension fills in d = g(g+1)/2.
  static Context make(unsigned g, std::optional<unsigned> d, std::optional<unsigned> level_n,
                      std::optional<BigInt> char_p);

  bool operator==(const Context& o) const = default;
};

// v_ell(order of c_{2i}) <= max{v_ell(B_2), ..., v_ell(B_{2*floor(i/2)}), v_ell(B_{2i})},
// valid for primes ell above the context threshold.
int lambda_todd_bound(const Context& ctx, unsigned i, const BigInt& ell);

// The Bernoulli indices feeding the bound for class index i:
// {2, 4, ..., 2*floor(i/2)} together with 2i.
std::vector<unsigned> lambda_todd_bernoulli_indices(unsigned i);

// p^{2i} - 1, fully factored (cyclotomic pre-split, then rho).
FactoredInt fzip_bound(const BigInt& p, unsigned i);
FactoredInt fzip_bound(const BigInt& p, unsigned i, const FactorOptions& opts);

struct CombinedBound {
  int bound = 0;             // min of the two mechanisms
  int lambda_bound = 0;      // Bernoulli-Todd part
  long long fzip_valuation = 0;  // v_ell(p^{2i} - 1)
  BigInt mult_order;         // ord of p in (Z/ell)^*
  bool order_divides_2i = false;
  BigInt gcd_2i_ellm1;       // gcd(2i, ell - 1), the cap on relevant orders
};

// Characteristic-p refinement: min(v_ell(p^{2i}-1), lambda_todd_bound), plus
// the order condition (ell can divide the class order only when
// ord_ell(p) | 2i).
CombinedBound combined_char_p_bound(const Context& ctx, unsigned i, const BigInt& ell);

// The two candidate orders {n_i, n_i / 2} of c_{2i} in cohomology.
std::pair<BigInt, BigInt> evdg_order_candidates(unsigned i);

// (g-1)! * n_g, the divisor bound for the top class c_{2g}.
FactoredInt evdg_top_class_bound(unsigned g);

// v_ell(num((2^{2i} - 1) * B_{2i})), valid for primes ell > 2i.
int mr_bound(unsigned i, const BigInt& ell);

// One prime's column in a ledger entry.
struct PrimeBound {
  BigInt ell;
  int bound = 0;            // lambda_todd_bound
  std::string source;       // "lambda-todd", "fzip", or "both"
  int mr = 0;               // mr_bound at the same prime
  // Present only in characteristic p (and ell != p):
  std::optional<long long> fzip_valuation;
  std::optional<int> combined_bound;
  std::optional<BigInt> mult_order;
  std::optional<bool> order_divides_2i;
  std::optional<BigInt> gcd_2i_ellm1;

  bool operator==(const PrimeBound& o) const = default;
};

struct EvdgColumn {
  BigInt candidate_full;  // n_i
  BigInt candidate_half;  // n_i / 2
  std::optional<FactoredInt> top_class;  // (g-1)! * n_g, on the i = g entry

  bool operator==(const EvdgColumn& o) const = default;
};

struct BoundEntry {
  unsigned i = 0;
  std::vector<unsigned> bernoulli_indices;
  std::vector<PrimeBound> primes;  // ascending ell
  FactoredInt annihilator;         // prod ell^bound over the primes above
  std::optional<FactoredInt> fzip;  // p^{2i} - 1 when char_p set and factorable
  bool fzip_omitted = false;        // cap exceeded; explained in ledger notes
  EvdgColumn evdg;

  bool operator==(const BoundEntry& o) const = default;
};

struct Ledger {
  Context context;
  std::vector<BoundEntry> entries;  // i = 1..g, in order
  std::vector<std::string> notes;

  bool operator==(const Ledger& o) const = default;
};

Ledger build_ledger(const Context& ctx);

// One row of the published worked example (g = 13, level 4), verbatim: the
// printed annihilator pairings, kept as a comparison fixture next to the
// strict evaluation (which pairs several of these values differently).
struct PublishedExampleRow {
  unsigned i;                       // class index: the row concerns c_{2i}
  std::string printed_value;        // annihilator / numerator as printed
  std::string printed_factorization;  // empty when none was printed
  std::string remark;
};

const std::vector<PublishedExampleRow>& published_example_rows();

// Further printed claims of the same example that conflict with the strict
// formulas (top class via n_12, the gcd(24, 690) aside), kept for display.
struct PublishedExampleExtras {
  std::string top_class_printed;      // "12! * n_12 = 2^5 * 3^2 * 5 * 7 * 13!"
  BigInt top_class_printed_value;     // 62768369664000
  std::string gcd_aside;              // "gcd(24, 690) = 6"
  std::string coefficient_ring;       // "Z[1/105!]"
};

const PublishedExampleExtras& published_example_extras();

}  // namespace chowbound
