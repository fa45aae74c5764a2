#include "bhset/greedy.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "bhset/errors.hpp"

namespace bhset {

GreedyState::GreedyState(Order h, GreedyLimits limits)
    : h_(h), limits_(limits), prefix_{0}, layers_(h) {
  bitmap_ = std::make_shared<const DenseBitmap>(layers_.top());
}

ScanView GreedyState::view() const noexcept { return ScanView(layers_, bitmap_.get()); }

BhVerdict GreedyState::admissible(u128 c) const {
  if (c <= prefix_.max()) {
    throw InvalidArgument("candidate " + to_string(c) + " must exceed max(prefix) = " +
                          to_string(prefix_.max()));
  }
  // Every h-fold sum of prefix ∪ {c} must be representable, h·c included.
  (void)checked_mul(u128(h_.value()), c, std::to_string(h_.value()) + " copies of candidate");
  const ScanView probe = view();
  if (!probe.collides(c)) return BhVerdict::certify();

  // Rejections are rare next to scans; reuse the full certifier so the
  // witness follows the same rule as is_bh.
  BhVerdict verdict = is_bh(prefix_.with(c), h_);
  if (verdict.certified) throw std::logic_error("admissible: layer probe and certifier disagree");
  return verdict;
}

void GreedyState::append(u128 c) {
  const u128 predicted = binomial(u128(prefix_.size()) + h_.value(), h_.value());
  if (predicted > limits_.max_layer_size) {
    throw ResourceError("top sum layer would hold " + to_string(predicted) +
                        " values, above the cap of " + to_string(limits_.max_layer_size));
  }
  SumLayers next = layers_.extended(c);
  if (u128(next.top().size()) != predicted) {
    throw std::logic_error("sum layer cardinality broke after appending " + to_string(c));
  }
  layers_ = std::move(next);
  prefix_ = prefix_.with(c);
  if (layers_.top().max() < limits_.bitmap_value_limit) {
    bitmap_ = std::make_shared<const DenseBitmap>(layers_.top());
  } else {
    bitmap_.reset();
  }
}

void GreedyState::extend(u128 c) {
  if (!admissible(c).certified) {
    throw InvalidArgument("prefix ∪ {" + to_string(c) + "} is not a B_" +
                          std::to_string(h_.value()) + "-set");
  }
  append(c);
}

u128 GreedyState::advance() {
  const u128 a = prefix_.max();
  const u128 lo = checked_add(a, 1, "next candidate");
  // h·a + 1 always keeps the B_h property, so the scan ends by then.
  const u128 hi = checked_add(checked_mul(u128(h_.value()), a, "scan bound"), 1, "scan bound");
  const ScanView probe = view();
  const std::optional<u128> found = limits_.scan == ScanPolicy::parallel
                                        ? first_admissible_parallel(probe, lo, hi)
                                        : first_admissible_serial(probe, lo, hi);
  if (!found) throw std::logic_error("no admissible candidate up to h·max + 1");
  append(*found);
  return *found;
}

GreedyState new_state(Order h) { return GreedyState(h); }

GreedyState extend(GreedyState state, u128 c) {
  state.extend(c);
  return state;
}

std::pair<u128, GreedyState> next_element(GreedyState state) {
  const u128 c = state.advance();
  return {c, std::move(state)};
}

IntegerSet greedy_prefix(Order h, std::size_t count, const GreedyLimits& limits) {
  GreedyState state(h, limits);
  for (std::size_t k = 0; k < count; ++k) state.advance();
  return state.prefix();
}

}  // namespace bhset
