#pragma once

#include <optional>

#include "bhset/layers.hpp"

namespace bhset {

/// Read-only view of a B_h prefix that the candidate kernels probe.
///
/// A candidate c above max(A) breaks the B_h property exactly when two
/// h-representations over A ∪ {c} use c a different number of times. After
/// cancelling common copies of c and common parts, and padding with 0 ∈ A,
/// every such collision reduces to e·c + s = t with 1 <= e <= h,
/// s ∈ Σ_{h-e}(A) and t ∈ Σ_h(A). Equal copy counts cannot collide because A
/// is already B_h. So c is admissible iff each shifted layer e·c + Σ_{h-e}(A)
/// misses Σ_h(A), which also makes the shifted layers pairwise disjoint.
class ScanView {
 public:
  /// `bitmap`, if given, must index layers.top(); it only accelerates lookups.
  ScanView(const SumLayers& layers, const DenseBitmap* bitmap) noexcept
      : layers_(&layers), bitmap_(bitmap) {}

  [[nodiscard]] const SumLayers& layers() const noexcept { return *layers_; }

  [[nodiscard]] bool in_top(u128 v) const noexcept {
    return bitmap_ ? bitmap_->test(v) : layers_->top().contains(v);
  }

  /// True iff e·c + s ∈ Σ_h for some e in [1, h] and s ∈ Σ_{h-e}.
  /// Throws OverflowError if e·c leaves the 128-bit range.
  [[nodiscard]] bool collides(u128 c) const;

 private:
  const SumLayers* layers_;
  const DenseBitmap* bitmap_;
};

/// Least c in [lo, hi] with !view.collides(c), scanning upward one at a time.
std::optional<u128> first_admissible_serial(const ScanView& view, u128 lo, u128 hi);

/// Same contract as first_admissible_serial; evaluates growing blocks of
/// candidates across OpenMP threads and keeps the smallest admissible one.
std::optional<u128> first_admissible_parallel(const ScanView& view, u128 lo, u128 hi);

}  // namespace bhset
