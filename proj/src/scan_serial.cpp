#include "bhset/scan.hpp"

#include <string>

namespace bhset {

bool ScanView::collides(u128 c) const {
  const SumLayers& layers = *layers_;
  const std::size_t h = layers.size() - 1;
  const u128 top_max = layers.top().max();
  for (std::size_t e = 1; e <= h; ++e) {
    const u128 shift = checked_mul(u128(e), c, std::to_string(e) + " copies of candidate");
    if (shift > top_max) break;
    for (u128 s : layers[h - e]) {
      const u128 v = shift + s;  // <= top_max + max(Σ_{h-e}), fits
      if (v > top_max) break;
      if (in_top(v)) return true;
    }
  }
  return false;
}

std::optional<u128> first_admissible_serial(const ScanView& view, u128 lo, u128 hi) {
  for (u128 c = lo; c <= hi; ++c) {
    if (!view.collides(c)) return c;
    if (c == kU128Max) break;
  }
  return std::nullopt;
}

}  // namespace bhset
