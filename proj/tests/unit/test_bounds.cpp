#include <doctest.h>

#include "large_atlas/bounds.hpp"

using namespace large_atlas;

TEST_CASE("order_bounds examples") {
  const OrderBounds gl = order_bounds(BoundFamily::GL, 3, 3);
  CHECK(gl.lower == 10935);
  CHECK(gl.actual == 11232);
  CHECK(gl.holds());

  const OrderBounds gu = order_bounds(BoundFamily::GU, 2, 2);
  CHECK(gu.actual == 18);
  CHECK(gu.lower <= ExactRatio(gu.actual));
  CHECK(ExactRatio(gu.actual) <= gu.upper);

  const OrderBounds sp = order_bounds(BoundFamily::Sp, 4, 2);
  CHECK(sp.actual == 720);
  CHECK(sp.holds());

  CHECK_THROWS_AS(order_bounds(BoundFamily::GL, 1, 3), OutOfRange);
  CHECK_THROWS_AS(order_bounds(BoundFamily::Sp, 5, 3), OutOfRange);
  CHECK_THROWS_AS(order_bounds(BoundFamily::SOcirc, 6, 3), OutOfRange);
  CHECK_THROWS_AS(order_bounds(BoundFamily::SOplus, 4, 3), OutOfRange);
  CHECK_THROWS(order_bounds(BoundFamily::GL, 3, 6));
}

TEST_CASE("order bounds hold for every family and small n, q") {
  for (BoundFamily f : all_bound_families()) {
    for (const auto& pp : prime_powers_upto(32)) {
      for (int n = 2; n <= 20; ++n) {
        OrderBounds b;
        try {
          b = order_bounds(f, n, pp.q);
        } catch (const OutOfRange&) {
          continue;
        }
        CAPTURE(to_string(f));
        CAPTURE(n);
        CAPTURE(pp.q);
        const ExactRatio a(b.actual);
        CHECK(b.lower <= a);
        CHECK(a <= b.upper);
        CHECK(b.lower < b.upper);
        // the strict inequalities fail only at the smallest dimensions, as exact equalities
        if (f == BoundFamily::GU && n == 2) CHECK(b.lower == a);
        else if ((f == BoundFamily::SOcirc && n == 5) || (f == BoundFamily::SOminus && n == 6)) CHECK(b.upper == a);
        else CHECK(b.holds());
      }
    }
  }
}

TEST_CASE("simple_order_bounds examples") {
  const OrderBounds l = simple_order_bounds(GroupId::psl(4, 5));
  CHECK(l.lower == ExactRatio(ipow(5, 14)));
  CHECK(l.actual == Int("7254000000"));
  CHECK(l.holds());
  CHECK(ExactRatio(l.actual) <= ExactRatio(ipow(5, 15)) * ratio(24L, 25L));

  const OrderBounds s = simple_order_bounds(GroupId::psp(6, 3));
  CHECK(ExactRatio(s.actual) > ExactRatio(ipow(3, 21)) / 4);
  CHECK(s.holds());

  const OrderBounds o = simple_order_bounds(GroupId::pomega(8, 2, Sign::plus));
  CHECK(o.actual == 174182400);
  CHECK(ExactRatio(o.actual) > classical_floor(8, 2));
  CHECK(classical_floor(8, 2) == 33554432);
}

TEST_CASE("classical floor for simple groups") {
  for (const auto& pp : prime_powers_upto(16)) {
    const long q = pp.q;
    for (int n = 2; n <= 10; ++n) {
      std::vector<GroupId> gs{GroupId::psl(n, q)};
      if (n >= 3) gs.push_back(GroupId::psu(n, q));
      if (n % 2 == 0 && n >= 4) gs.push_back(GroupId::psp(n, q));
      if (n >= 7) {
        if (n % 2) gs.push_back(GroupId::pomega(n, q, Sign::circ));
        else gs.insert(gs.end(), {GroupId::pomega(n, q, Sign::plus), GroupId::pomega(n, q, Sign::minus)});
      }
      for (const auto& g : gs) {
        if (!in_simple_domain(g)) continue;
        CAPTURE(to_string(g));
        CHECK(ExactRatio(order(g)) > classical_floor(n, q));
        CHECK(simple_order_bounds(g).holds());
      }
    }
  }
}

TEST_CASE("factorial and logarithm bounds") {
  for (unsigned long t = 2; t <= 64; ++t) CHECK(factorial_bound(t));
  for (const auto& pp : prime_powers_upto(1024)) CHECK(log_square_bound(pp) == (pp.q != 8));
}

TEST_CASE("sandwich examples") {
  CHECK(sandwich(RatioCase::PSL_C2_t3, 29).verdict == Verdict::CertainlyNotLarge);
  CHECK(sandwich(RatioCase::PSL_C2_t3, 3).verdict == Verdict::CertainlyLarge);

  const BoundTriple po = sandwich(RatioCase::PO_C5_r3, 3);
  CHECK(po.lower > ExactRatio(33, 100));
  CHECK(po.lower < po.upper);
  CHECK(po.upper < 1);

  const BoundTriple tri = sandwich(RatioCase::O8_triality_3D4, 2);
  CHECK(tri.lower > ExactRatio(49, 100));
  CHECK(tri.lower < ExactRatio(1, 2));

  CHECK_THROWS_AS(parse_ratio_case("PSL-C9"), UnknownCase);
  CHECK(parse_ratio_case("PSU-C3-r3") == RatioCase::PSU_C3_r3);
  CHECK_THROWS_AS(sandwich(RatioCase::PSL_C2_t3, 6), OutOfRange);
  CHECK_FALSE(sandwich_applies(RatioCase::O8_triality_3D4, 3));
}

TEST_CASE("sandwich brackets the exact ratio and never contradicts it") {
  for (RatioCase c : all_ratio_cases()) {
    for (const auto& pp : prime_powers_upto(256)) {
      if (!sandwich_applies(c, pp.q)) continue;
      const BoundTriple b = sandwich(c, pp.q);
      CAPTURE(to_string(c));
      CAPTURE(pp.q);
      CHECK(b.lower <= b.upper);
      CHECK(b.brackets());
      if (b.verdict == Verdict::CertainlyLarge) CHECK(b.exact_large());
      if (b.verdict == Verdict::CertainlyNotLarge) CHECK_FALSE(b.exact_large());
      // verdict consistent with the stored comparisons
      CHECK((b.verdict == Verdict::CertainlyLarge) == (b.threshold < b.lower));
      CHECK((b.verdict == Verdict::CertainlyNotLarge) == (b.threshold > b.upper));
      if (b.closed_threshold) CHECK(*b.closed_threshold == b.threshold);
    }
  }
}

TEST_CASE("PSL-C2-t3 upper bound stays below 1") {
  for (const auto& pp : prime_powers_upto(1024)) {
    CAPTURE(pp.q);
    CHECK(sandwich(RatioCase::PSL_C2_t3, pp.q).upper < 1);
  }
}

TEST_CASE("C3 ratio g(q) below 4/3 for q >= 7") {
  for (const auto& pp : prime_powers_upto(256)) {
    if (pp.q < 7) continue;
    CAPTURE(pp.q);
    CHECK(sandwich(RatioCase::PSL_C3_r3, pp.q).upper < ExactRatio(4, 3));
  }
}
