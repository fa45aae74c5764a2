#include "bhset/theorems.hpp"

#include "bhset/errors.hpp"
#include "test_support.hpp"

using namespace bhset;

TEST_CASE("a_formula") {
  CHECK(a_formula(3, Order(2)) == 7);
  CHECK(a_formula(4, Order(2)) == 12);
  CHECK(a_formula(4, Order(3)) == 32);
  for (unsigned h = 1; h <= 40; ++h) {
    CHECK(a_formula(1, Order(h)) == 1);
    CHECK(a_formula(2, Order(h)) == h + 1);
  }
  CHECK_THROWS_AS((void)a_formula(0, Order(2)), InvalidArgument);
  CHECK_THROWS_AS((void)a_formula(5, Order(2)), InvalidArgument);
}

TEST_CASE("a_4 quasi-polynomial branches") {
  // doubled values avoid the division: 2·a_4 = (h+1)(h²+2h+1) or (h+1)(h²+h+2)
  for (u128 h = 1; h <= 1000; ++h) {
    const u128 doubled = h % 2 ? (h + 1) * (h * h + 2 * h + 1) : (h + 1) * (h * h + h + 2);
    CHECK(2 * a_formula(4, Order(static_cast<unsigned>(h))) == doubled);
    CHECK(a_formula(4, Order(static_cast<unsigned>(h))) <= geometric_bound(Order(static_cast<unsigned>(h)), 4));
  }
}

TEST_CASE("geometric_bound") {
  CHECK(geometric_bound(Order(2), 3) == 7);
  CHECK(geometric_bound(Order(1), 5) == 5);
  u128 by_addition = 0;
  for (u128 term : {u128{1}, u128{3}, u128{9}, u128{27}}) by_addition += term;
  CHECK(geometric_bound(Order(3), 4) == by_addition);
  CHECK(by_addition == 40);
  CHECK_THROWS_AS((void)geometric_bound(Order(2), 0), InvalidArgument);
  CHECK_THROWS_AS((void)geometric_bound(Order(2), 129), OverflowError);
  CHECK(geometric_bound(Order(2), 128) == kU128Max);
}

TEST_CASE("safe_extension") {
  CHECK(safe_extension(IntegerSet{0, 1, 3, 7}, Order(2)) == 15);
  CHECK(safe_extension(IntegerSet{0, 1, 4, 13}, Order(3)) == 40);
  CHECK(safe_extension(IntegerSet{0}, Order(5)) == 1);
  CHECK_THROWS_AS((void)safe_extension(IntegerSet{}, Order(2)), InvalidArgument);
  CHECK_THROWS_AS((void)safe_extension(IntegerSet{0, kU128Max / 2}, Order(3)), OverflowError);
}

TEST_CASE("repunit_set") {
  CHECK(repunit_set(Order(3), 3) == IntegerSet{0, 1, 4, 13});
  CHECK(repunit_set(Order(2), 4) == IntegerSet{0, 1, 3, 7, 15});
  CHECK(repunit_set(Order(1), 3) == IntegerSet{0, 1, 2, 3});
  CHECK(repunit_set(Order(4), 0) == IntegerSet{0});
  for (unsigned h = 1; h <= 5; ++h)
    for (std::size_t k = 0; k <= 6; ++k) CHECK(is_bh(repunit_set(Order(h), k), Order(h)).certified);
}

TEST_CASE("safe_extension chained from {0, 1} rebuilds the repunits") {
  for (unsigned h = 1; h <= 6; ++h) {
    IntegerSet set{0, 1};
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(set == repunit_set(Order(h), k));
      set = set.with(safe_extension(set, Order(h)));
    }
  }
}

TEST_CASE("verify_suite default ranges pass") {
  const VerificationReport report = verify_suite({});
  CHECK(report.pass());
  std::vector<std::string> ids;
  for (const auto& c : report.claims) {
    CAPTURE(c.id);
    CAPTURE(c.details);
    CHECK(c.pass);
    ids.push_back(c.id);
  }
  CHECK(ids == std::vector<std::string>{"a1-formula", "a2-formula", "a3-theorem",
                                        "a4-quasi-polynomial", "successor-bound", "geometric-bound",
                                        "safe-extension", "a4-below-geometric", "repunit-bh"});
  CHECK(report.claims[2].range == "h=1..30");
  CHECK(report.claims[3].range == "h=1..20");
}

TEST_CASE("verify_suite small configurations") {
  VerifyConfig tiny;
  tiny.h_max_a3 = 1;
  tiny.h_max_a4 = 1;
  CHECK(verify_suite(tiny).pass());

  VerifyConfig shallow;
  shallow.prefix_depth = 1;
  const auto report = verify_suite(shallow);
  CHECK(report.pass());
  for (const auto& c : report.claims) {
    CHECK(c.id != "a2-formula");
    CHECK(c.id != "a3-theorem");
    CHECK(c.id != "a4-quasi-polynomial");
  }

  VerifyConfig none;
  none.prefix_depth = 0;
  CHECK_THROWS_AS((void)verify_suite(none), InvalidArgument);
}

TEST_CASE("verify_suite reports an injected fault") {
  VerifyConfig faulty;
  faulty.h_max_a3 = 3;
  faulty.h_max_a4 = 3;
  faulty.inject_fault = true;
  const auto report = verify_suite(faulty);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.claims.front().pass);
  CHECK(report.claims.front().details.find("h=1 a_1 expected 2 got 1") != std::string::npos);
}

TEST_CASE("verify_suite turns engine errors into failed records") {
  VerifyConfig capped;
  capped.h_max_a3 = 3;
  capped.h_max_a4 = 3;
  capped.max_layer_size = 10;  // C(4+3, 3) = 35 for h = 3 at depth 4
  const auto report = verify_suite(capped);
  CHECK_FALSE(report.pass());
  bool mentions_limit = false;
  for (const auto& c : report.claims) {
    mentions_limit = mentions_limit || c.details.find("above the cap") != std::string::npos;
  }
  CHECK(mentions_limit);
}
