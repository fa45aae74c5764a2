#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bhset/sumset.hpp"

namespace bhset {

/// Sum layers Σ_0(A) ... Σ_h(A): layer m holds the values of sums of exactly
/// m elements of A. Layer 0 is {0} and layer 1 is A itself.
class SumLayers {
 public:
  /// Layers of the set {0} for order h: every layer is {0}.
  explicit SumLayers(Order h);

  [[nodiscard]] std::size_t size() const noexcept { return layers_.size(); }
  [[nodiscard]] const IntegerSet& operator[](std::size_t m) const { return layers_.at(m); }
  [[nodiscard]] const IntegerSet& top() const noexcept { return layers_.back(); }

  /// Layers of A ∪ {c} from those of A, assuming the union is B_h so the
  /// shifted pieces d·c + Σ_{m-d}(A) are pairwise disjoint.
  [[nodiscard]] SumLayers extended(u128 c) const;

  friend bool operator==(const SumLayers&, const SumLayers&) = default;

 private:
  SumLayers() = default;
  std::vector<IntegerSet> layers_;
};

/// Dense membership bitmap over [0, max] for a sorted value set.
class DenseBitmap {
 public:
  explicit DenseBitmap(const IntegerSet& values);

  [[nodiscard]] bool test(u128 v) const noexcept {
    if (v > max_) return false;
    const auto i = static_cast<std::size_t>(v);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

 private:
  u128 max_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bhset
