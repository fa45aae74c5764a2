#include "bhset/theorems.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "bhset/errors.hpp"
#include "bhset/greedy.hpp"

namespace bhset {

u128 a_formula(unsigned k, Order h) {
  const u128 hv = h.value();
  switch (k) {
    case 1:
      return 1;
    case 2:
      return checked_add(hv, 1, "a_2 formula");
    case 3:
      return checked_add(checked_add(checked_mul(hv, hv, "a_3 formula"), hv, "a_3 formula"), 1,
                         "a_3 formula");
    case 4: {
      const u128 h1 = checked_add(hv, 1, "a_4 formula");
      const u128 h2 = checked_mul(hv, hv, "a_4 formula");
      // odd: (h+1)(h²+2h+1)/2, even: (h+1)(h²+h+2)/2
      const u128 quadratic =
          hv % 2 == 1
              ? checked_add(checked_add(h2, checked_mul(2, hv, "a_4 formula"), "a_4 formula"), 1,
                            "a_4 formula")
              : checked_add(checked_add(h2, hv, "a_4 formula"), 2, "a_4 formula");
      // exactly one factor is even in both cases
      return h1 % 2 == 0 ? checked_mul(h1 / 2, quadratic, "a_4 formula")
                         : checked_mul(h1, quadratic / 2, "a_4 formula");
    }
    default:
      throw InvalidArgument("closed form known only for k in 1..4, got " + std::to_string(k));
  }
}

u128 geometric_bound(Order h, unsigned k) {
  if (k == 0) throw InvalidArgument("geometric_bound needs k >= 1");
  u128 sum = 0;
  u128 power = 1;
  for (unsigned i = 0; i < k; ++i) {
    sum = checked_add(sum, power, "geometric bound");
    if (i + 1 < k) power = checked_mul(power, h.value(), "geometric bound");
  }
  return sum;
}

u128 safe_extension(const IntegerSet& set, Order h) {
  if (set.empty()) throw InvalidArgument("safe_extension needs a nonempty set");
  return checked_add(checked_mul(u128(h.value()), set.max(), "safe extension"), 1,
                     "safe extension");
}

IntegerSet repunit_set(Order h, std::size_t k) {
  std::vector<u128> elements{0};
  u128 repunit = 0;
  u128 power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    repunit = checked_add(repunit, power, "repunit");
    elements.push_back(repunit);
    if (i + 1 < k) power = checked_mul(power, h.value(), "repunit");
  }
  // base 1 repunits 1, 2, 3, ... stay strictly increasing as well
  return IntegerSet(std::move(elements));
}

bool VerificationReport::pass() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.pass; });
}

namespace {

struct Row {
  unsigned h = 0;
  std::optional<IntegerSet> prefix;
  bool safe_extension_ok = false;
  std::string error;
};

std::string h_range(unsigned lo, unsigned hi) {
  return "h=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Accumulates pass/fail for one claim, keeping the first few failures.
class ClaimBuilder {
 public:
  ClaimBuilder(std::string id, std::string range) : id_(std::move(id)), range_(std::move(range)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    if (++failures_ <= kShown) notes_.push_back(describe());
  }

  ClaimRecord finish() && {
    ClaimRecord rec{std::move(id_), std::move(range_), failures_ == 0, {}};
    if (failures_ == 0) {
      rec.details = std::to_string(checks_) + " checks passed";
    } else {
      rec.details = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
      for (const auto& note : notes_) rec.details += "; " + note;
    }
    return rec;
  }

 private:
  static constexpr std::size_t kShown = 5;
  std::string id_;
  std::string range_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string mismatch(unsigned h, unsigned k, u128 expected, u128 got) {
  return "h=" + std::to_string(h) + " a_" + std::to_string(k) + " expected " + to_string(expected) +
         " got " + to_string(got);
}

// Checks a_k(h) against a closed form on every row up to h_max.
ClaimRecord formula_claim(const std::string& id, unsigned k, unsigned h_max,
                          const std::vector<Row>& rows, bool corrupt) {
  ClaimBuilder claim(id, h_range(1, h_max));
  for (const Row& row : rows) {
    if (row.h > h_max) continue;
    if (!row.prefix) {
      claim.check(false, [&] { return "h=" + std::to_string(row.h) + ": " + row.error; });
      continue;
    }
    u128 expected = a_formula(k, Order(row.h));
    if (corrupt && row.h == 1) expected += 1;
    const u128 got = (*row.prefix)[k];
    claim.check(got == expected, [&] { return mismatch(row.h, k, expected, got); });
  }
  return std::move(claim).finish();
}

}  // namespace

VerificationReport verify_suite(const VerifyConfig& config) {
  if (config.prefix_depth == 0) throw InvalidArgument("prefix_depth must be at least 1");
  const unsigned h_max = std::max({1u, config.h_max_a3, config.h_max_a4});
  const unsigned depth = config.prefix_depth;

  std::vector<Row> rows(h_max);
  GreedyLimits limits;
  limits.scan = ScanPolicy::serial;  // rows already run in parallel
  limits.max_layer_size = config.max_layer_size;

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < static_cast<int>(h_max); ++i) {
    Row& row = rows[static_cast<std::size_t>(i)];
    row.h = static_cast<unsigned>(i) + 1;
    try {
      GreedyState state(Order(row.h), limits);
      for (unsigned k = 0; k < depth; ++k) state.advance();
      row.safe_extension_ok =
          state.admissible(safe_extension(state.prefix(), state.order())).certified;
      row.prefix = state.prefix();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  VerificationReport report;
  report.claims.push_back(formula_claim("a1-formula", 1, h_max, rows, config.inject_fault));
  if (depth >= 2) report.claims.push_back(formula_claim("a2-formula", 2, h_max, rows, false));
  if (depth >= 3 && config.h_max_a3 >= 1) {
    report.claims.push_back(formula_claim("a3-theorem", 3, config.h_max_a3, rows, false));
  }
  if (depth >= 4 && config.h_max_a4 >= 1) {
    report.claims.push_back(formula_claim("a4-quasi-polynomial", 4, config.h_max_a4, rows, false));
  }

  const std::string prefix_range = h_range(1, h_max) + " k=1.." + std::to_string(depth);
  ClaimBuilder successor("successor-bound", prefix_range);
  ClaimBuilder geometric("geometric-bound", prefix_range);
  ClaimBuilder extension("safe-extension", h_range(1, h_max));
  for (const Row& row : rows) {
    const auto failed = [&] { return "h=" + std::to_string(row.h) + ": " + row.error; };
    if (!row.prefix) {
      successor.check(false, failed);
      geometric.check(false, failed);
      extension.check(false, failed);
      continue;
    }
    const IntegerSet& a = *row.prefix;
    const Order h(row.h);
    for (unsigned k = 1; k <= depth; ++k) {
      const u128 prev = a[k - 1];
      const u128 cur = a[k];
      const bool ok = prev < cur && cur <= u128(row.h) * prev + 1;
      successor.check(ok, [&] {
        return "h=" + std::to_string(row.h) + " a_" + std::to_string(k) + "=" + to_string(cur) +
               " outside (" + to_string(prev) + ", h*" + to_string(prev) + "+1]";
      });
      const u128 bound = geometric_bound(h, k);
      geometric.check(cur <= bound, [&] {
        return "h=" + std::to_string(row.h) + " a_" + std::to_string(k) + "=" + to_string(cur) +
               " > " + to_string(bound);
      });
    }
    extension.check(row.safe_extension_ok, [&] {
      return "h=" + std::to_string(row.h) + ": prefix plus h*max+1 is not B_h";
    });
  }
  report.claims.push_back(std::move(successor).finish());
  report.claims.push_back(std::move(geometric).finish());
  report.claims.push_back(std::move(extension).finish());

  if (config.h_max_a4 >= 1) {
    ClaimBuilder below("a4-below-geometric", h_range(1, config.h_max_a4));
    for (unsigned h = 1; h <= config.h_max_a4; ++h) {
      const u128 f = a_formula(4, Order(h));
      const u128 g = geometric_bound(Order(h), 4);
      below.check(f <= g, [&] {
        return "h=" + std::to_string(h) + ": " + to_string(f) + " > " + to_string(g);
      });
    }
    report.claims.push_back(std::move(below).finish());
  }

  if (config.repunit_h_max >= 1 && config.repunit_k_max >= 1) {
    ClaimBuilder repunit("repunit-bh", h_range(1, config.repunit_h_max) + " k=1.." +
                                           std::to_string(config.repunit_k_max));
    for (unsigned h = 1; h <= config.repunit_h_max; ++h) {
      for (unsigned k = 1; k <= config.repunit_k_max; ++k) {
        std::string error;
        bool ok = false;
        try {
          ok = is_bh(repunit_set(Order(h), k), Order(h)).certified;
        } catch (const std::exception& e) {
          error = std::string(": ") + e.what();
        }
        repunit.check(ok, [&] {
          return "h=" + std::to_string(h) + " k=" + std::to_string(k) + " not certified" + error;
        });
      }
    }
    report.claims.push_back(std::move(repunit).finish());
  }
  return report;
}

}  // namespace bhset
