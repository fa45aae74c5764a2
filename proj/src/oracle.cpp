#include "bhset/oracle.hpp"

#include <map>
#include <string>
#include <vector>

#include "bhset/errors.hpp"

namespace bhset::oracle {

namespace {

// C(k+h-1, h) by Pascal's rule, so the oracle shares no counting code with
// the fast path.
u128 multiset_count(std::size_t k, std::size_t h) {
  std::vector<u128> row(h + 1, 0);
  row[0] = 1;
  // row[j] = number of j-multisets from the first i elements
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 1; j <= h; ++j) row[j] = checked_add(row[j], row[j - 1], "multiset count");
  }
  return row[h];
}

}  // namespace

BhVerdict is_bh(const IntegerSet& set, Order h, const OracleLimits& limits) {
  const std::size_t k = set.size();
  const std::size_t order = h.value();
  if (k == 0) return BhVerdict::certify();
  const u128 total = multiset_count(k, order);
  if (total > limits.max_multisets) {
    throw ResourceError("oracle: " + to_string(total) + " multisets exceed the cap of " +
                        to_string(limits.max_multisets));
  }

  std::map<u128, std::vector<std::vector<u128>>> by_sum;
  std::vector<std::size_t> idx(order, 0);
  while (true) {
    std::vector<u128> parts(order);
    u128 sum = 0;
    for (std::size_t t = 0; t < order; ++t) {
      parts[t] = set[idx[t]];
      sum = checked_add(sum, parts[t], "sum of " + std::to_string(order) + " elements");
    }
    by_sum[sum].push_back(std::move(parts));

    // next nondecreasing index tuple, odometer style
    std::size_t pos = order;
    while (pos > 0 && idx[pos - 1] == k - 1) --pos;
    if (pos == 0) break;
    const std::size_t bumped = idx[pos - 1] + 1;
    for (std::size_t t = pos - 1; t < order; ++t) idx[t] = bumped;
  }

  for (auto it = by_sum.rbegin(); it != by_sum.rend(); ++it) {
    const auto& [n, tuples] = *it;
    if (tuples.size() >= 2) return BhVerdict::refute({n, {tuples[0], n}, {tuples[1], n}});
  }
  return BhVerdict::certify();
}

IntegerSet greedy(Order h, std::size_t count, const OracleLimits& limits) {
  std::vector<u128> elements{0};
  for (std::size_t k = 0; k < count; ++k) {
    u128 c = checked_add(elements.back(), 1, "next candidate");
    while (true) {
      std::vector<u128> trial = elements;
      trial.push_back(c);
      if (is_bh(IntegerSet(std::move(trial)), h, limits).certified) break;
      c = checked_add(c, 1, "next candidate");
    }
    elements.push_back(c);
  }
  return IntegerSet(std::move(elements));
}

}  // namespace bhset::oracle
