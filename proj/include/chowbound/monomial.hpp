#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chowbound {

// Monomial in the graded variables c_1, c_2, ... where c_i carries weight i.
// Stored as (index, exponent) pairs, ascending index, exponents >= 1.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  static Monomial variable(unsigned index, unsigned exponent = 1);
  static Monomial from_pairs(std::vector<std::pair<unsigned, unsigned>> pairs);

  bool is_one() const { return entries_.empty(); }
  const std::vector<std::pair<unsigned, unsigned>>& entries() const { return entries_; }
  unsigned long long weight() const;
  unsigned exponent_of(unsigned index) const;
  unsigned max_variable_index() const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

  // Canonical term order: ascending weight, and within a weight the term
  // with the larger exponent at the smallest differing index comes first
  // (so c1^2 precedes c2, and c2^2 precedes c4).
  std::strong_ordering operator<=>(const Monomial& o) const;

  // "c1^2*c3"; the empty monomial renders as "1".
  std::string to_string(char letter = 'c') const;

  std::size_t hash() const;

 private:
  std::vector<std::pair<unsigned, unsigned>> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace chowbound
