#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hzm/lfun.hpp"
#include "hzm/exact.hpp"

using namespace hzm;

TEST_CASE("context validation") {
  CHECK_NOTHROW(make_context(5, 1, 3, 4));
  CHECK_THROWS(make_context(5, 1, 3, 5));    // c != 1 mod m
  CHECK_THROWS(make_context(5, 1, 3, 10));   // p | c
  CHECK_THROWS(make_context(5, 1, 3, 1));    // degenerate c
  CHECK_THROWS(make_context(5, 3, 3, 4));    // m | a
  CHECK_THROWS(make_context(5, 2, 4, 9));    // gcd(a,m) != 1, p∤m
  CHECK_THROWS(make_context(3, 3, 6, 7));    // p | a with p | m
  CHECK_NOTHROW(make_context(3, 7, 6, 7));   // a > m allowed when p | m
  CHECK_THROWS(make_context(4, 1, 3, 7));    // composite p
  LpContext deg{Int(5), 1, 3, Int(1), 10, 24, 128, true};
  CHECK_NOTHROW(deg.validate());
}

TEST_CASE("frozen moments") {
  LpContext ctx = make_context(5, 1, 3, 4);
  MomentMeasure mu = hurwitz_moments(ctx, 4);
  CHECK(mu.moment(0) == make_rat(1, 2));
  CHECK(mu.moment(1) == make_rat(5, 4));
  MomentMeasure bz = boldzeta_moments(ctx, 4);
  CHECK(bz.moment(0) == make_rat(1, 2));
  CHECK(bz.moment(1) == make_rat(-1, 4));
}

TEST_CASE("degenerate c = 1 kills every moment") {
  LpContext deg{Int(5), 1, 3, Int(1), 10, 24, 128, true};
  MomentMeasure mu = hurwitz_moments(deg, 8);
  for (std::size_t n = 0; n < 8; ++n) CHECK(mu.moment(n) == 0);
}

TEST_CASE("mahler integrality of the measure") {
  for (long p : {2L, 3L, 5L}) {
    Int c = p == 2 ? 7 : 4;
    LpContext ctx = make_context(p, 1, 3, c, 10, 64, 64);
    auto cj = mahler_coefficients(hurwitz_moments(ctx, 42), 41);
    for (const auto& r : cj)
      CHECK((r == 0 || valuation(r, p) >= 0));
  }
}

static Rat unit_closed_form(const LpContext& ctx, unsigned k) {
  Rat base = pow_rat(Rat(Int(ctx.m)), static_cast<long>(k) - 1) *
             (Rat(1) - Rat(pow_int(ctx.c, k))) / Rat(Int(k));
  Rat val = base * bernoulli_poly(k, make_rat(ctx.a, ctx.m));
  if (!ctx.p_divides_m()) {
    long a1 = ap_inverse_bracket(ctx.a, ctx.m, ctx.p);
    val -= base * Rat(pow_int(ctx.p, k - 1)) *
           bernoulli_poly(k, make_rat(a1, ctx.m));
  }
  return val;
}

TEST_CASE("unit integral, p | m branch") {
  LpContext ctx = make_context(3, 1, 3, 7, 10, 24, 256);
  for (unsigned k = 1; k <= 6; ++k) {
    UnitIntegral u = theorem1_unit_integral(ctx, k);
    CHECK(u.stabilized);
    CHECK(same_padic(u.computed, u.predicted));
    CHECK(u.pzp_computed.is_zero());  // measure lives on the units
    CHECK(u.computed.equals_rat(unit_closed_form(ctx, k)));
  }
}

TEST_CASE("unit integral, p∤m branch") {
  LpContext ctx = make_context(5, 1, 3, 7, 10, 24, 256);
  for (unsigned k = 1; k <= 6; ++k) {
    UnitIntegral u = theorem1_unit_integral(ctx, k);
    CHECK(u.stabilized);
    CHECK(same_padic(u.pzp_computed, u.pzp_predicted));
    CHECK(u.computed.equals_rat(unit_closed_form(ctx, k)));
  }
}

TEST_CASE("frozen L-value") {
  // closed form at s = -3 on the trivial branch, worked out by hand:
  // (27/4)(B_4(1/3) - 125 B_4(2/3)) with B_4(1/3) = B_4(2/3) = 13/810
  LpContext ctx = make_context(5, 1, 3, 7, 10, 24, 256);
  LpValue L = lp_beta(ctx, 0, Rat(-3));
  CHECK(L.stabilized);
  CHECK(L.value.equals_rat(make_rat(-403, 30)));
  CHECK(L.effective_prec >= 5);
}

TEST_CASE("interpolation on every branch") {
  for (long p : {2L, 3L, 5L}) {
    long m = p == 2 ? 5 : 3;
    LpContext ctx = make_context(p, 1, m, 2 * m + 1, 10, 24, 256);
    auto sc = ctx.sc();
    for (unsigned k = 1; k <= 8; ++k) {
      unsigned long beta = k % sc.e;
      LpValue L = lp_beta(ctx, beta, Rat(1 - static_cast<long>(k)));
      Rat expect = unit_closed_form(ctx, k) /
                   (Rat(1) - Rat(pow_int(ctx.c, k)));
      CHECK(L.value.equals_rat(expect));
    }
  }
}

TEST_CASE("pole on the trivial branch") {
  LpContext ctx = make_context(5, 1, 3, 7);
  CHECK_THROWS_AS(lp_beta(ctx, 0, Rat(1)), PoleError);
  CHECK_NOTHROW(lp_beta(ctx, 2, Rat(1)));  // other branches are fine at 1
}

TEST_CASE("sigma independence of the L-value") {
  LpContext ca = make_context(5, 1, 3, 4, 10, 24, 256);
  LpContext cb = make_context(5, 1, 3, 7, 10, 24, 256);
  for (unsigned long beta : {0UL, 1UL, 2UL, 3UL}) {
    Rat s = beta == 0 ? Rat(-3) : Rat(2);
    LpValue La = lp_beta(ca, beta, s);
    LpValue Lb = lp_beta(cb, beta, s);
    CHECK(same_padic(La.value, Lb.value));
  }
}

TEST_CASE("shiratani normalization") {
  LpContext ctx = make_context(5, 1, 3, 7, 10, 24, 256);
  LpValue z = shiratani_zeta(ctx, Rat(-3));
  LpValue L = lp_beta(ctx, 0, Rat(-3));
  CHECK(same_padic(z.value, -L.value));
  LpContext c2 = make_context(2, 1, 3, 7);
  CHECK_THROWS(shiratani_zeta(c2, Rat(-1)));
}

TEST_CASE("p-shift decomposition") {
  auto d = decompose_ap(3, 106, 11);
  CHECK(d.a1 == 87);
  CHECK(d.delta == -9);
  CHECK(Int(3) == Int(11) * 87 + Int(-9) * 106);
  auto d2 = decompose_ap(1, 3, 5);
  CHECK(Int(1) == Int(5) * d2.a1 + Int(d2.delta) * 3);
}

TEST_CASE("coset restriction identity") {
  CHECK(lemma56_check(1, 3, 5, 7, 10, 10, 256));
  CHECK(lemma56_check(2, 3, 5, 7, 10, 10, 256));
  CHECK(lemma56_check(1, 3, 2, 7, 10));
  CHECK(lemma56_check(2, 5, 3, 11, 10, 10, 256));
}
