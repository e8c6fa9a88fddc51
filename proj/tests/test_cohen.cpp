#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hzm/cohen.hpp"
#include "hzm/exact.hpp"

using namespace hzm;

TEST_CASE("domain classification") {
  CHECK(classify_cohen(make_rat(1, 3), 5) == CohenDomain::Zp);
  CHECK(classify_cohen(make_rat(7), 5) == CohenDomain::Zp);
  CHECK(classify_cohen(make_rat(1, 5), 5) == CohenDomain::CZp);
  CHECK(classify_cohen(make_rat(1, 2), 2) == CohenDomain::Outside);
  CHECK(classify_cohen(make_rat(1, 4), 2) == CohenDomain::CZp);
  CHECK(classify_cohen(Rat(0), 3) == CohenDomain::Zp);
}

TEST_CASE("extended teichmuller lift") {
  // w_v(50) = 25 w(2) in Z_5
  Padic w = omega_v(Rat(50), 5, 8);
  CHECK(w.val() == 2);
  Padic w2 = teichmuller(Padic::from_int(2, 5, 8));
  CHECK(same_padic(w, w2 * Padic::from_int(25, 5, 8)));
  // multiplicative
  Padic wa = omega_v(make_rat(3, 7), 5, 8);
  Padic wb = omega_v(Rat(10), 5, 8);
  CHECK(same_padic(omega_v(make_rat(30, 7), 5, 8), wa * wb));
}

TEST_CASE("twisted bernoulli values") {
  Padic b32 = chi_bernoulli_teich(2, Rat(0), 3, 10);
  CHECK(b32.equals_rat(make_rat(-1, 3)));
  Padic b22 = chi_bernoulli_teich(2, Rat(0), 2, 10);
  CHECK(b22.equals_rat(make_rat(-1, 6)));
  CHECK(chi_bernoulli_closed(2, Rat(0), 3) == make_rat(-1, 3));
  CHECK(chi_bernoulli_closed(2, Rat(0), 2) == make_rat(-1, 6));
  CHECK_THROWS(chi_bernoulli_closed(3, Rat(0), 3));  // 2 ∤ 3
  CHECK_THROWS(chi_bernoulli_teich(2, make_rat(1, 3), 3, 10));
}

TEST_CASE("closed form matches the twisted sum when e | k") {
  struct Case {
    long p;
    unsigned k;
  };
  for (Case t : {Case{2, 2}, Case{2, 4}, Case{3, 2}, Case{3, 6}, Case{5, 4},
                 Case{5, 8}, Case{7, 6}}) {
    for (Rat x : {Rat(0), Rat(1), make_rat(3, 7 % t.p == 0 ? 9 : 7)}) {
      Padic lhs = chi_bernoulli_teich(t.k, x, t.p, 12);
      CHECK(lhs.equals_rat(chi_bernoulli_closed(t.k, x, t.p)));
    }
  }
}

TEST_CASE("zeta on the C-domain: frozen value and preconditions") {
  LpContext ctx = make_context(3, 1, 3, 7, 10, 24, 256);
  LpValue z = cohen_zeta_C(ctx, 0, Padic::from_rat(Rat(-1), 3, 20));
  CHECK(z.value.equals_rat(make_rat(1, 4)));
  CHECK(z.stabilized);

  LpContext bad = make_context(2, 1, 3, 7);  // q = 4 does not divide m
  CHECK_THROWS(cohen_zeta_C(bad, 0, Padic::from_rat(Rat(-1), 2, 20)));
  LpContext c2 = make_context(2, 1, 4, 9, 10, 24, 256);
  // branch discipline at p = 2: s = 1 - beta mod 2
  CHECK_THROWS(cohen_zeta_C(c2, 0, Padic::from_rat(Rat(0), 2, 20)));
  CHECK_NOTHROW(cohen_zeta_C(c2, 1, Padic::from_rat(Rat(0), 2, 20)));
}

TEST_CASE("zeta on Z_p against the twisted bernoulli interpolation") {
  CohenConfig cfg{3, 10, 256, 0};
  Padic s = Padic::from_rat(Rat(-1), 3, 20);
  LpValue z = cohen_zeta_Zp(make_rat(3, 5), 0, s, cfg);
  Padic ref = chi_bernoulli_teich(2, make_rat(3, 5), 3, 10);
  CHECK(same_padic(z.value, -ref / Padic::from_int(2, 3, 20)));
  CHECK(z.stabilized);

  // computing at a finer level than necessary changes nothing
  CohenConfig deeper{3, 10, 256, 3};
  LpValue z2 = cohen_zeta_Zp(make_rat(3, 5), 0, s, deeper);
  CHECK(same_padic(z.value, z2.value));

  CHECK_THROWS(cohen_zeta_Zp(make_rat(1, 5), 0, s, cfg));   // p ∤ x
  CHECK_THROWS(cohen_zeta_Zp(make_rat(-3, 5), 0, s, cfg));  // x <= 0
  CHECK_THROWS(cohen_zeta_Zp(make_rat(2, 3), 0, s, cfg));   // not in Z_p
  CohenConfig shallow{3, 10, 256, 1};
  CHECK_THROWS(cohen_zeta_Zp(make_rat(3, 5), 0, s, shallow));
}

TEST_CASE("first p-divisible index") {
  auto c = claim_r0(3, 106, 11);
  CHECK(c.r0 == 9);
  CHECK(c.verified);
  std::mt19937 rng(2024);
  const long primes[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 200; ++i) {
    long p = primes[rng() % 5];
    long m = 2 + static_cast<long>(rng() % 100);
    while (m % p == 0) ++m;
    long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m - 1));
    CHECK(claim_r0(a, m, p).verified);
  }
  CHECK_THROWS(claim_r0(1, 4, 2));  // p | m
  CHECK_THROWS(claim_r0(5, 3, 7)); // a out of range
}

TEST_CASE("bridge between the two evaluators") {
  for (long k : {2L, 4L}) {
    Padic s = Padic::from_rat(Rat(1 - k), 3, 20);
    auto br = cohen_shiratani_bridge(1, 5, 3, 11, s, 10, 256);
    CHECK(br.r == 1);
    CHECK(br.stabilized);
    CHECK(same_padic(br.lhs, br.rhs));
  }
  CHECK_THROWS(cohen_shiratani_bridge(
      1, 5, 2, 11, Padic::from_rat(Rat(-1), 2, 20)));
}

TEST_CASE("worked instance data") {
  Example11 ex = example11();
  CHECK(ex.a1 == 87);
  CHECK(ex.r == 9);
  CHECK(ex.rows.size() == 9);
  for (long v = 0; v < 9; ++v) {
    CHECK(ex.rows[v].num == 3 + 106 * v);
    CHECK(ex.rows[v].den == 106);
    CHECK(ex.rows[v].unit);
  }
}
