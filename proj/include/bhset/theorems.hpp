#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bhset/sumset.hpp"

namespace bhset {

/// Closed forms for the greedy B_h-set: a_1 = 1, a_2 = h+1, a_3 = h²+h+1 and
/// the parity-dependent quasi-polynomial for a_4. Throws InvalidArgument for
/// k outside 1..4.
u128 a_formula(unsigned k, Order h);

/// 1 + h + ... + h^(k-1), an upper bound on a_k(h). Requires k >= 1.
u128 geometric_bound(Order h, unsigned k);

/// h·max(A) + 1; adding it to a B_h-set A keeps the B_h property.
u128 safe_extension(const IntegerSet& set, Order h);

/// {0} together with the first k base-h repunits 1, 1+h, 1+h+h², ...
IntegerSet repunit_set(Order h, std::size_t k);

struct ClaimRecord {
  std::string id;
  std::string range;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;

  [[nodiscard]] bool pass() const noexcept;
};

struct VerifyConfig {
  unsigned h_max_a3 = 30;
  unsigned h_max_a4 = 20;
  /// Greedy prefixes are computed up to a_{prefix_depth}(h).
  unsigned prefix_depth = 4;
  unsigned repunit_h_max = 5;
  unsigned repunit_k_max = 6;
  /// Passed to the greedy engine as GreedyLimits::max_layer_size.
  u128 max_layer_size = 100'000'000;
  /// Corrupts the a_1 expectation so the report must fail.
  bool inject_fault = false;
};

/// Runs the greedy engine over the configured ranges and checks every closed
/// form and bound against it. Errors raised while computing a row become
/// failed records rather than exceptions.
VerificationReport verify_suite(const VerifyConfig& config);

}  // namespace bhset
