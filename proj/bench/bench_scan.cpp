// Times the serial and OpenMP candidate scans on the last step of a greedy
// prefix, and checks both pick the same element.
//
//   bench_scan [h K]...        defaults: 2 12, 4 8, 10 8

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <utility>
#include <vector>

#include "bhset/greedy.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bhset;
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (int i = 1; i + 1 < argc; i += 2) {
    cases.emplace_back(std::atoi(argv[i]), std::atoi(argv[i + 1]));
  }
  if (cases.empty()) cases = {{2, 12}, {4, 8}, {10, 8}};

  std::cout << "threads " << omp_get_max_threads() << '\n';
  bool agree = true;
  for (auto [h, k] : cases) {
    GreedyLimits limits;
    limits.scan = ScanPolicy::serial;
    GreedyState state(Order(h), limits);
    double build = time_ms([&] {
      for (unsigned j = 1; j < k; ++j) state.advance();
    });

    const u128 a = state.prefix().max();
    const u128 hi = u128(h) * a + 1;
    const DenseBitmap bitmap(state.layers().top());
    std::cout << "h=" << h << " k=" << k << " prefix " << build << " ms\n";
    for (const DenseBitmap* index : {static_cast<const DenseBitmap*>(nullptr), &bitmap}) {
      const ScanView view(state.layers(), index);
      std::optional<u128> serial, parallel;
      const double t_serial = time_ms([&] { serial = first_admissible_serial(view, a + 1, hi); });
      const double t_parallel = time_ms([&] { parallel = first_admissible_parallel(view, a + 1, hi); });
      agree = agree && serial == parallel;
      std::cout << "  " << (index ? "bitmap       " : "binary search") << " a_k=" << to_string(serial.value_or(0))
                << " | serial " << t_serial << " ms | omp " << t_parallel << " ms"
                << (serial == parallel ? "" : "  MISMATCH") << '\n';
    }
  }
  return agree ? 0 : 1;
}
