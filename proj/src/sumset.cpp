#include "bhset/sumset.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "bhset/errors.hpp"

namespace bhset {

Order::Order(unsigned h) : h_(h) {
  if (h == 0) throw InvalidArgument("order h must be at least 1");
}

IntegerSet::IntegerSet(std::vector<u128> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) {
      throw InvalidArgument("set elements must be strictly increasing");
    }
  }
}

IntegerSet::IntegerSet(std::initializer_list<u128> elements)
    : IntegerSet(std::vector<u128>(elements)) {}

IntegerSet IntegerSet::from_unsorted(std::vector<u128> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return IntegerSet(std::move(elements));
}

u128 IntegerSet::min() const {
  if (elements_.empty()) throw InvalidArgument("min of an empty set");
  return elements_.front();
}

u128 IntegerSet::max() const {
  if (elements_.empty()) throw InvalidArgument("max of an empty set");
  return elements_.back();
}

bool IntegerSet::contains(u128 value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

IntegerSet IntegerSet::with(u128 value) const {
  IntegerSet out = *this;
  auto it = std::lower_bound(out.elements_.begin(), out.elements_.end(), value);
  if (it == out.elements_.end() || *it != value) out.elements_.insert(it, value);
  return out;
}

namespace {

bool is_valid_representation(const Representation& rep, const IntegerSet& set, Order h) {
  if (rep.parts.size() != h.value()) return false;
  if (!std::is_sorted(rep.parts.begin(), rep.parts.end())) return false;
  u128 total = 0;
  for (u128 part : rep.parts) {
    if (!set.contains(part)) return false;
    if (__builtin_add_overflow(total, part, &total)) return false;
  }
  return total == rep.sum;
}

// Saturating r * v, used only for pruning comparisons.
u128 saturating_mul(u128 r, u128 v) {
  u128 out;
  return __builtin_mul_overflow(r, v, &out) ? kU128Max : out;
}

void collect_representations(std::span<const u128> elems, std::size_t start, std::size_t remaining,
                             u128 target, std::vector<u128>& parts,
                             std::vector<Representation>& out, u128 n) {
  if (remaining == 0) {
    if (target == 0) out.push_back({parts, n});
    return;
  }
  const u128 largest = elems.back();
  if (saturating_mul(remaining, largest) < target) return;
  for (std::size_t i = start; i < elems.size(); ++i) {
    const u128 v = elems[i];
    // every later part is at least v
    if (saturating_mul(remaining, v) > target) break;
    parts.push_back(v);
    collect_representations(elems, i, remaining - 1, target - v, parts, out, n);
    parts.pop_back();
  }
}

// Sum values of exactly m elements with multiplicities saturated at 2.
struct CountedValue {
  u128 value;
  unsigned char count;
};
using CountedLayer = std::vector<CountedValue>;

CountedLayer normalize(CountedLayer layer) {
  std::sort(layer.begin(), layer.end(),
            [](const CountedValue& a, const CountedValue& b) { return a.value < b.value; });
  CountedLayer out;
  out.reserve(layer.size());
  for (const auto& cv : layer) {
    if (!out.empty() && out.back().value == cv.value) {
      out.back().count = static_cast<unsigned char>(std::min(2, out.back().count + cv.count));
    } else {
      out.push_back(cv);
    }
  }
  return out;
}

// Largest n whose h-fold representation count is at least 2.
std::optional<u128> largest_collision(const IntegerSet& set, Order h) {
  const std::size_t order = h.value();
  std::vector<CountedLayer> layers(order + 1);
  layers[0] = {{0, 1}};
  for (u128 a : set) {
    // Descending m keeps layers[m - d] at their pre-insertion state.
    for (std::size_t m = order; m >= 1; --m) {
      CountedLayer merged = layers[m];
      u128 shift = 0;
      for (std::size_t d = 1; d <= m; ++d) {
        shift = checked_add(shift, a, "sum of " + std::to_string(d) + " elements");
        for (const auto& cv : layers[m - d]) {
          merged.push_back(
              {checked_add(cv.value, shift, "sum of " + std::to_string(m) + " elements"), cv.count});
        }
      }
      layers[m] = normalize(std::move(merged));
    }
  }
  for (auto it = layers[order].rbegin(); it != layers[order].rend(); ++it) {
    if (it->count >= 2) return it->value;
  }
  return std::nullopt;
}

}  // namespace

bool CollisionWitness::valid_for(const IntegerSet& set, Order h) const {
  return first.sum == n && second.sum == n && first.parts != second.parts &&
         is_valid_representation(first, set, h) && is_valid_representation(second, set, h);
}

IntegerSet sum_layer(const IntegerSet& set, std::size_t m) {
  std::vector<u128> current{0};
  for (std::size_t step = 1; step <= m; ++step) {
    std::vector<u128> next;
    next.reserve(current.size() * set.size());
    const std::string context = "sum of " + std::to_string(step) + " elements";
    for (u128 base : current) {
      for (u128 a : set) next.push_back(checked_add(base, a, context));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return IntegerSet(std::move(current));
}

IntegerSet h_fold_sumset(const IntegerSet& set, Order h) { return sum_layer(set, h.value()); }

std::vector<Representation> representations(const IntegerSet& set, Order h, u128 n) {
  std::vector<Representation> out;
  if (set.empty()) return out;
  std::vector<u128> parts;
  parts.reserve(h.value());
  collect_representations(set.elements(), 0, h.value(), n, parts, out, n);
  return out;
}

u128 rep_count(const IntegerSet& set, Order h, u128 n) {
  return representations(set, h, n).size();
}

u128 binomial(u128 n, u128 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (u128 i = 0; i < k; ++i) {
    // result * (n - i) / (i + 1) is exact; divide out the common factor first
    // so the only multiplication left is the one producing C(n, i + 1).
    u128 numer = n - i;
    u128 denom = i + 1;
    const u128 g = std::gcd(result, denom);
    result /= g;
    denom /= g;
    numer /= denom;
    result = checked_mul(result, numer, "binomial coefficient");
  }
  return result;
}

BhVerdict is_bh(const IntegerSet& set, Order h, const SumsetLimits& limits) {
  if (set.size() <= 1) return BhVerdict::certify();
  const u128 multisets = binomial(u128(set.size()) + h.value() - 1, h.value());
  if (multisets > limits.max_multisets) {
    throw ResourceError("is_bh: " + to_string(multisets) + " multisets exceed the cap of " +
                        to_string(limits.max_multisets));
  }
  const IntegerSet sums = h_fold_sumset(set, h);
  if (u128(sums.size()) == multisets) return BhVerdict::certify();

  const auto n = largest_collision(set, h);
  if (!n) throw std::logic_error("is_bh: cardinality deficit without a colliding sum");
  auto reps = representations(set, h, *n);
  if (reps.size() < 2) throw std::logic_error("is_bh: colliding sum with fewer than two representations");
  return BhVerdict::refute({*n, std::move(reps[0]), std::move(reps[1])});
}

}  // namespace bhset
