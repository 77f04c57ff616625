#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowbound {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // value summary, or the first counterexample on failure
};

// Each suite returns one CheckResult per property instance; nothing throws
// for a mathematical failure, only for precondition misuse.
std::vector<CheckResult> verify_duality(unsigned max_rank = 5, unsigned max_weight = 10);
std::vector<CheckResult> verify_odd_vanishing(unsigned max_g = 8, unsigned max_weight = 16);
std::vector<CheckResult> verify_hirzebruch(unsigned max_degree = 16);
std::vector<CheckResult> verify_nk(unsigned table_max = 14, unsigned agreement_max = 40);
std::vector<CheckResult> verify_newton(unsigned max_k = 10);
std::vector<CheckResult> verify_oracle(unsigned max_weight = 8);

// Dispatch by suite name ("all" runs every suite in a fixed order);
// max_degree rescales the suite's primary size parameter when given.
std::vector<CheckResult> run_verify_suite(std::string_view suite,
                                          std::optional<unsigned> max_degree);

}  // namespace chowbound
