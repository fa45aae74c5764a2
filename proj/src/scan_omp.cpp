#include <algorithm>
#include <cstdint>
#include <exception>

#include "bhset/scan.hpp"

namespace bhset {

namespace {
constexpr std::int64_t kFirstBlock = 256;
constexpr std::int64_t kMaxBlock = std::int64_t{1} << 16;
}  // namespace

std::optional<u128> first_admissible_parallel(const ScanView& view, u128 lo, u128 hi) {
  std::int64_t block = kFirstBlock;
  while (lo <= hi) {
    const u128 span = hi - lo;
    const std::int64_t count =
        span >= u128(block) ? block : static_cast<std::int64_t>(span) + 1;
    std::int64_t best = count;
    std::int64_t failed_at = count;
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        if (!view.collides(lo + u128(i))) best = std::min(best, i);
      } catch (...) {
#pragma omp critical(bhset_scan_failure)
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }

    // Match the serial scan: an error only surfaces if no earlier candidate passed.
    if (failure && failed_at < best) std::rethrow_exception(failure);
    if (best < count) return lo + u128(best);
    if (hi - lo < u128(count)) break;
    lo += u128(count);
    block = std::min(block * 2, kMaxBlock);
  }
  return std::nullopt;
}

}  // namespace bhset
