#include "bhset/sumset.hpp"

#include "bhset/errors.hpp"
#include "test_support.hpp"

using namespace bhset;
using bhset::testing::random_order;
using bhset::testing::random_set;
using bhset::testing::values;

namespace {

const IntegerSet kExample{0, 1, 3, 7};

std::vector<std::vector<u128>> parts_of(const std::vector<Representation>& reps) {
  std::vector<std::vector<u128>> out;
  for (const auto& r : reps) out.push_back(r.parts);
  return out;
}

}  // namespace

TEST_CASE("IntegerSet enforces strict increase") {
  CHECK_THROWS_AS(IntegerSet({3, 1}), InvalidArgument);
  CHECK_THROWS_AS(IntegerSet({1, 1}), InvalidArgument);
  CHECK(IntegerSet::from_unsorted(values({7, 0, 3, 3, 1})) == kExample);
  CHECK(kExample.with(4) == IntegerSet{0, 1, 3, 4, 7});
  CHECK(kExample.with(3) == kExample);
  CHECK_THROWS_AS((void)IntegerSet{}.max(), InvalidArgument);
}

TEST_CASE("Order rejects zero") {
  CHECK_THROWS_AS(Order(0), InvalidArgument);
  CHECK(Order(3).value() == 3);
}

TEST_CASE("h_fold_sumset of the worked example") {
  CHECK(h_fold_sumset(kExample, Order(2)) == IntegerSet{0, 1, 2, 3, 4, 6, 7, 8, 10, 14});
  CHECK(h_fold_sumset(kExample, Order(3)) ==
        IntegerSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 17, 21});
}

TEST_CASE("h_fold_sumset edge cases") {
  CHECK(h_fold_sumset(IntegerSet{5}, Order(4)) == IntegerSet{20});
  CHECK(h_fold_sumset(IntegerSet{}, Order(3)).empty());
  CHECK(sum_layer(IntegerSet{}, 0) == IntegerSet{0});
  CHECK(sum_layer(kExample, 0) == IntegerSet{0});

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const IntegerSet a = random_set(rng, 8, 1000);
    CHECK(h_fold_sumset(a, Order(1)) == a);
  }
}

TEST_CASE("h_fold_sumset names the combination size on overflow") {
  const IntegerSet big{0, u128{1} << 127};
  CHECK(h_fold_sumset(big, Order(1)) == big);
  CHECK_THROWS_WITH_AS(h_fold_sumset(big, Order(2)), "128-bit overflow in sum of 2 elements",
                       OverflowError);
}

TEST_CASE("representations of the worked example") {
  CHECK(parts_of(representations(kExample, Order(3), 9)) ==
        std::vector<std::vector<u128>>{values({1, 1, 7}), values({3, 3, 3})});
  CHECK(representations(kExample, Order(2), 5).empty());
  CHECK(parts_of(representations(IntegerSet{0}, Order(5), 0)) ==
        std::vector<std::vector<u128>>{values({0, 0, 0, 0, 0})});
  for (const auto& r : representations(kExample, Order(3), 9)) CHECK(r.sum == 9);
}

TEST_CASE("rep_count") {
  CHECK(rep_count(kExample, Order(3), 9) == 2);
  CHECK(rep_count(kExample, Order(2), 10) == 1);
  CHECK(rep_count(kExample, Order(3), 22) == 0);
  CHECK(rep_count(IntegerSet{0, 1}, Order(2), 99) == 0);
  CHECK(rep_count(IntegerSet{}, Order(2), 0) == 0);
  // no pruning overflow for sums near the top of the range
  CHECK(rep_count(IntegerSet{0, kU128Max / 2}, Order(2), kU128Max - 1) == 1);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(to_string(binomial(130, 65)) == "95067625827960698145584333020095113100");
  CHECK_THROWS_AS((void)binomial(140, 70), OverflowError);

  // C(6,3) is the count of 3-multisets over 4 elements.
  u128 multisets = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int k = j; k < 4; ++k) ++multisets;
  CHECK(multisets == 20);
  CHECK(binomial(6, 3) == multisets);

  // Pascal's rule across a table
  for (u128 n = 1; n < 60; ++n)
    for (u128 k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("is_bh on the worked example") {
  CHECK(is_bh(kExample, Order(2)).certified);
  CHECK(h_fold_sumset(kExample, Order(2)).size() == binomial(5, 2));

  const BhVerdict v = is_bh(kExample, Order(3));
  REQUIRE_FALSE(v.certified);
  REQUIRE(v.witness);
  CHECK(v.witness->n == 9);
  CHECK(v.witness->first.parts == values({1, 1, 7}));
  CHECK(v.witness->second.parts == values({3, 3, 3}));
  CHECK(v.witness->valid_for(kExample, Order(3)));
}

TEST_CASE("is_bh trivial sets") {
  for (unsigned h = 1; h <= 6; ++h) {
    CHECK(is_bh(IntegerSet{}, Order(h)).certified);
    CHECK(is_bh(IntegerSet{42}, Order(h)).certified);
    CHECK_FALSE(is_bh(IntegerSet{}, Order(h)).witness);
  }
}

TEST_CASE("is_bh resource cap") {
  SumsetLimits tight;
  tight.max_multisets = 10;
  CHECK_THROWS_AS((void)is_bh(IntegerSet{0, 1, 3, 7, 12}, Order(2), tight), ResourceError);
}

TEST_CASE("powers of three: 27 = 9+9+9 = 27+0+0") {
  const IntegerSet powers{0, 1, 3, 9, 27};
  const BhVerdict v = is_bh(powers, Order(3));
  REQUIRE(v.witness);
  CHECK(v.witness->n == 27);
  CHECK(v.witness->first.parts == values({0, 0, 27}));
  CHECK(v.witness->second.parts == values({9, 9, 9}));
  // 3^i + 3^i + 3^i = 3^(i+1) + 0 + 0 for every i that stays in the set
  for (u128 p : {u128{1}, u128{3}, u128{9}}) {
    const auto reps = parts_of(representations(powers, Order(3), 3 * p));
    CHECK(std::find(reps.begin(), reps.end(), std::vector<u128>{0, 0, 3 * p}) != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), std::vector<u128>{p, p, p}) != reps.end());
  }
}

TEST_CASE("property: representation counts partition the multisets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const IntegerSet a = random_set(rng, 7, 100);
    const Order h(random_order(rng, 4));
    u128 total = 0;
    for (u128 n : h_fold_sumset(a, h)) {
      const auto reps = representations(a, h, n);
      REQUIRE_FALSE(reps.empty());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(std::is_sorted(reps[i].parts.begin(), reps[i].parts.end()));
        CHECK(reps[i].sum == n);
        if (i > 0) CHECK(reps[i - 1].parts < reps[i].parts);
      }
      total += reps.size();
    }
    const u128 expected = a.empty() ? 0 : binomial(a.size() + h.value() - 1, h.value());
    CHECK(total == expected);
  }
}

TEST_CASE("property: cardinality criterion matches witness-free enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntegerSet a = random_set(rng, 7, 100);
    const Order h(random_order(rng, 4));
    const BhVerdict v = is_bh(a, h);
    const bool by_count = a.empty() || h_fold_sumset(a, h).size() ==
                                           binomial(a.size() + h.value() - 1, h.value());
    bool all_unique = true;
    for (u128 n : h_fold_sumset(a, h)) all_unique = all_unique && rep_count(a, h, n) == 1;
    CHECK(v.certified == by_count);
    CHECK(v.certified == all_unique);
    CHECK(v.certified == !v.witness.has_value());
    if (v.witness) {
      CHECK(v.witness->valid_for(a, h));
      // largest colliding sum
      for (u128 n : h_fold_sumset(a, h)) {
        if (n > v.witness->n) CHECK(rep_count(a, h, n) == 1);
      }
      const auto reps = representations(a, h, v.witness->n);
      CHECK(v.witness->first == reps[0]);
      CHECK(v.witness->second == reps[1]);
    }
  }
}

TEST_CASE("property: B_h implies B_m for m < h") {
  std::mt19937_64 rng(5);
  int certified_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const IntegerSet a = random_set(rng, 5, 100);
    const unsigned h = random_order(rng, 4);
    if (!is_bh(a, Order(h)).certified) continue;
    ++certified_cases;
    for (unsigned m = 1; m < h; ++m) CHECK(is_bh(a, Order(m)).certified);
  }
  CHECK(certified_cases > 100);
}

TEST_CASE("property: translation and reflection preserve the verdict") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntegerSet a = random_set(rng, 7, 100);
    const Order h(random_order(rng, 4));
    const bool base = is_bh(a, h).certified;
    const u128 t = std::uniform_int_distribution<unsigned>(0, 50)(rng);

    std::vector<u128> shifted, reflected;
    const u128 top = (a.empty() ? 0 : a.max()) + t;
    for (u128 x : a) {
      shifted.push_back(x + t);
      reflected.push_back(top - x);
    }
    CHECK(is_bh(IntegerSet(shifted), h).certified == base);
    CHECK(is_bh(IntegerSet::from_unsorted(reflected), h).certified == base);
  }
}
