#include "bhset/layers.hpp"

#include <algorithm>
#include <string>

namespace bhset {

SumLayers::SumLayers(Order h) : layers_(h.value() + 1, IntegerSet{0}) {}

SumLayers SumLayers::extended(u128 c) const {
  SumLayers out;
  out.layers_.reserve(layers_.size());
  for (std::size_t m = 0; m < layers_.size(); ++m) {
    std::vector<u128> values;
    std::size_t total = 0;
    for (std::size_t d = 0; d <= m; ++d) total += layers_[m - d].size();
    values.reserve(total);
    u128 shift = 0;
    for (std::size_t d = 0; d <= m; ++d) {
      if (d > 0) shift = checked_add(shift, c, std::to_string(d) + " copies of the new element");
      const auto mid = static_cast<std::ptrdiff_t>(values.size());
      for (u128 v : layers_[m - d]) {
        values.push_back(checked_add(v, shift, "sum of " + std::to_string(m) + " elements"));
      }
      std::inplace_merge(values.begin(), values.begin() + mid, values.end());
    }
    values.erase(std::unique(values.begin(), values.end()), values.end());
    out.layers_.emplace_back(std::move(values));
  }
  return out;
}

DenseBitmap::DenseBitmap(const IntegerSet& values)
    : max_(values.empty() ? 0 : values.max()),
      words_(static_cast<std::size_t>(max_ / 64) + 1, 0) {
  for (u128 v : values) {
    const auto i = static_cast<std::size_t>(v);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

}  // namespace bhset
