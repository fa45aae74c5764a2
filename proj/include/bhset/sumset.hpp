#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bhset/arith.hpp"

namespace bhset {

/// Number of summands h in an h-fold sum. Always at least 1.
class Order {
 public:
  explicit Order(unsigned h);

  [[nodiscard]] unsigned value() const noexcept { return h_; }

  friend bool operator==(Order, Order) = default;

 private:
  unsigned h_;
};

/// A finite set of nonnegative integers stored strictly increasing.
class IntegerSet {
 public:
  using const_iterator = std::vector<u128>::const_iterator;

  IntegerSet() = default;

  /// Takes ownership of `elements`; throws InvalidArgument unless they are
  /// strictly increasing.
  explicit IntegerSet(std::vector<u128> elements);
  IntegerSet(std::initializer_list<u128> elements);

  /// Sorts and removes duplicates instead of rejecting them.
  static IntegerSet from_unsorted(std::vector<u128> elements);

  [[nodiscard]] std::span<const u128> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] const_iterator begin() const noexcept { return elements_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return elements_.end(); }
  [[nodiscard]] u128 operator[](std::size_t i) const { return elements_[i]; }

  /// Smallest and largest element. Throw InvalidArgument on an empty set.
  [[nodiscard]] u128 min() const;
  [[nodiscard]] u128 max() const;

  /// Binary search.
  [[nodiscard]] bool contains(u128 value) const noexcept;

  /// Copy with `value` inserted at its sorted position (no-op if present).
  [[nodiscard]] IntegerSet with(u128 value) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<u128> elements_;
};

/// Canonical (nondecreasing) multiset of summands together with their total.
struct Representation {
  std::vector<u128> parts;
  u128 sum = 0;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Two distinct representations of the same integer `n`.
struct CollisionWitness {
  u128 n = 0;
  Representation first;
  Representation second;

  /// True when both representations have h parts drawn from `set`, are
  /// nondecreasing, sum to `n` and differ as multisets.
  [[nodiscard]] bool valid_for(const IntegerSet& set, Order h) const;

  friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

/// Outcome of a B_h certification: either certified, or refuted by a witness.
struct BhVerdict {
  bool certified = true;
  std::optional<CollisionWitness> witness;

  static BhVerdict certify() { return {}; }
  static BhVerdict refute(CollisionWitness w) { return {false, std::move(w)}; }
};

/// Caps guarding the exhaustive routines against runaway allocations.
struct SumsetLimits {
  /// Upper bound on the number of h-multisets C(|A|+h-1, h) is_bh will process.
  u128 max_multisets = 100'000'000;
};

/// Values of all sums of exactly `m` elements of `set`, repetition allowed.
/// The 0-fold sum of any set is {0}; the m-fold sum of the empty set is
/// empty for m >= 1.
IntegerSet sum_layer(const IntegerSet& set, std::size_t m);

/// hA. Throws OverflowError naming the summand count at which a sum left
/// the 128-bit range.
IntegerSet h_fold_sumset(const IntegerSet& set, Order h);

/// All nondecreasing h-tuples from `set` summing to `n`, lexicographically
/// ordered.
std::vector<Representation> representations(const IntegerSet& set, Order h, u128 n);

/// r_{h,A}(n), the length of representations(set, h, n).
u128 rep_count(const IntegerSet& set, Order h, u128 n);

/// Exact C(n, k), zero when k > n. Throws OverflowError if the value does
/// not fit in 128 bits.
u128 binomial(u128 n, u128 k);

/// Decides whether `set` is a B_h-set via the cardinality criterion
/// |hA| = C(|A|+h-1, h). A refutation carries the largest colliding n and,
/// at that n, its two lexicographically smallest representations.
BhVerdict is_bh(const IntegerSet& set, Order h, const SumsetLimits& limits = {});

}  // namespace bhset
