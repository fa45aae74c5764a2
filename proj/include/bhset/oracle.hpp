#pragma once

#include <cstddef>

#include "bhset/sumset.hpp"

namespace bhset::oracle {

struct OracleLimits {
  /// Most h-multisets a single certification may enumerate.
  u128 max_multisets = 10'000'000;
};

/// Brute-force B_h test: walks every nondecreasing h-tuple of `set`, groups
/// them by sum and reports the largest sum reached twice together with its
/// two lexicographically smallest tuples. Throws ResourceError above the cap.
BhVerdict is_bh(const IntegerSet& set, Order h, const OracleLimits& limits = {});

/// Greedy B_h prefix a_0..a_count, re-certifying each candidate from scratch.
IntegerSet greedy(Order h, std::size_t count, const OracleLimits& limits = {});

}  // namespace bhset::oracle
