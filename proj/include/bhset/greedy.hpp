#pragma once

#include <cstddef>
#include <memory>
#include <utility>

#include "bhset/layers.hpp"
#include "bhset/scan.hpp"
#include "bhset/sumset.hpp"

namespace bhset {

enum class ScanPolicy { serial, parallel };

struct GreedyLimits {
  /// Largest permitted top layer, checked against C(k+h, h) before each extension.
  u128 max_layer_size = 100'000'000;
  /// Top layers whose maximum is below this get a dense membership bitmap.
  u128 bitmap_value_limit = u128{1} << 28;
  ScanPolicy scan = ScanPolicy::parallel;
};

/// A greedy B_h prefix {0 = a_0 < a_1 < ... < a_k} with its sum layers.
/// Growth is append-only.
class GreedyState {
 public:
  explicit GreedyState(Order h, GreedyLimits limits = {});

  [[nodiscard]] Order order() const noexcept { return h_; }
  [[nodiscard]] const IntegerSet& prefix() const noexcept { return prefix_; }
  [[nodiscard]] const SumLayers& layers() const noexcept { return layers_; }
  [[nodiscard]] const GreedyLimits& limits() const noexcept { return limits_; }

  /// Whether prefix ∪ {c} is a B_h-set. Requires c > max(prefix). A
  /// rejection carries the same witness is_bh(prefix ∪ {c}) would.
  [[nodiscard]] BhVerdict admissible(u128 c) const;

  /// Appends c. Throws InvalidArgument if c is not admissible, ResourceError
  /// if the predicted top layer exceeds the cap.
  void extend(u128 c);

  /// Finds the least admissible c above max(prefix), appends it and returns it.
  u128 advance();

 private:
  void append(u128 c);
  [[nodiscard]] ScanView view() const noexcept;

  Order h_;
  GreedyLimits limits_;
  IntegerSet prefix_;
  SumLayers layers_;
  std::shared_ptr<const DenseBitmap> bitmap_;
};

GreedyState new_state(Order h);

/// Value-returning form of GreedyState::extend.
GreedyState extend(GreedyState state, u128 c);

/// Value-returning form of GreedyState::advance.
std::pair<u128, GreedyState> next_element(GreedyState state);

/// a_0(h), ..., a_count(h) of the greedy B_h-set.
IntegerSet greedy_prefix(Order h, std::size_t count, const GreedyLimits& limits = {});

}  // namespace bhset
