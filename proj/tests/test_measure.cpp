#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hzm/measure.hpp"
#include "hzm/exact.hpp"

using namespace hzm;

// point mass at t: moments t^n, Mahler coefficients binom(t,j),
// integrals f(t) -- everything about it is checkable by hand
static MomentMeasure delta_at(long t, std::size_t K) {
  std::vector<Rat> m(K);
  for (std::size_t n = 0; n < K; ++n) m[n] = pow_rat(Rat(t), static_cast<long>(n));
  return MomentMeasure(std::move(m));
}

TEST_CASE("mahler coefficients, explicit small solves") {
  std::vector<Rat> mom = {make_rat(2), make_rat(5, 3), make_rat(-1, 4),
                          make_rat(7)};
  MomentMeasure mu(mom);
  auto c = mahler_coefficients(mu, 3);
  CHECK(c[0] == mom[0]);
  CHECK(c[1] == mom[1]);
  CHECK(c[2] == (mom[2] - mom[1]) / 2);
  CHECK(c[3] == (mom[3] - Rat(3) * mom[2] + Rat(2) * mom[1]) / 6);
  CHECK_THROWS(mahler_coefficients(mu, 4));
}

TEST_CASE("point-mass mahler coefficients are binomials") {
  MomentMeasure d = delta_at(6, 12);
  auto c = mahler_coefficients(d, 11);
  for (std::size_t j = 0; j <= 11; ++j)
    CHECK(c[j] == Rat(j <= 6 ? binomial(6, j) : 0));
}

TEST_CASE("integration evaluates point masses") {
  MomentMeasure d = delta_at(3, 40);
  Int p(5);
  auto f = [&](unsigned long i) {
    return Padic::from_int(Int(i) * i + 1, p, 14);
  };
  IntegrateResult r = integrate_adaptive(d, f, p, 8, 39);
  CHECK(r.value.equals_rat(Rat(10)));  // f(3)
  // coset masses see exactly the supporting coset
  for (unsigned long u = 0; u < 5; ++u) {
    auto m = coset_mass_adaptive(d, u, 1, p, 8, 39);
    CHECK(m.value.equals_rat(Rat(u == 3 ? 1 : 0)));
  }
}

TEST_CASE("integrate with explicit stream matches adaptive") {
  MomentMeasure d = delta_at(4, 40);
  Int p(3);
  auto f = [&](unsigned long i) { return Padic::from_int(2 * Int(i), p, 12); };
  IntegrateResult a = integrate(d, MahlerStream{f, 39}, 39, p, 8);
  IntegrateResult b = integrate_adaptive(d, f, p, 8, 39);
  CHECK(same_padic(a.value, b.value));
  CHECK(a.value.equals_rat(Rat(8)));
}

TEST_CASE("pushforward moves point masses affinely") {
  MomentMeasure d = delta_at(2, 10);
  MomentMeasure moved = affine_pushforward(d, 3, make_rat(5));
  for (std::size_t n = 0; n < 10; ++n)
    CHECK(moved.moment(n) == pow_rat(Rat(11), static_cast<long>(n)));
}

TEST_CASE("pushforward functoriality and involution laws") {
  std::mt19937 rng(7331);
  std::uniform_int_distribution<long> small(1, 9);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Rat> mom(8);
    for (auto& x : mom) x = make_rat(small(rng) - 5, small(rng));
    MomentMeasure mu(mom);
    Int m1 = small(rng), m2 = small(rng);
    Rat s1 = make_rat(small(rng) - 5, small(rng));
    Rat s2 = make_rat(small(rng) - 5, small(rng));
    MomentMeasure lhs =
        affine_pushforward(affine_pushforward(mu, m2, s2), m1, s1);
    MomentMeasure rhs = affine_pushforward(mu, m1 * m2, Rat(m1) * s2 + s1);
    CHECK(lhs.moments() == rhs.moments());
    CHECK(involution(affine_pushforward(mu, m1, s1)).moments() ==
          affine_pushforward(involution(mu), m1, -s1).moments());
    CHECK(involution(involution(mu)).moments() == mu.moments());
  }
}

TEST_CASE("cocycle law of the regularized bernoulli moments") {
  CHECK(cocycle_moment_check(1, 3, 4, 7, 12));
  CHECK(cocycle_moment_check(2, 5, 11, 16, 10));
  CHECK(cocycle_moment_check(3, 4, 9, 13, 8));
}

TEST_CASE("serialization round trip") {
  MeasureMeta meta;
  meta.a = 1;
  meta.m = 3;
  meta.c = Int(7);
  meta.notes = {"round", "trip"};
  MomentMeasure mu({make_rat(1, 2), make_rat(-5, 4), make_rat(7)}, meta);
  MomentMeasure back = MomentMeasure::deserialize(mu.serialize());
  CHECK(back.moments() == mu.moments());
  CHECK(*back.meta().a == 1);
  CHECK(*back.meta().c == 7);
  CHECK(back.meta().notes == meta.notes);
}

TEST_CASE("finite level assembly and coarsening") {
  PrimeLevelComponent c2{Int(2), 2, {Int(1), Int(4), Int(9), Int(16)}};
  PrimeLevelComponent c3{Int(3), 1, {Int(1), Int(2), Int(3)}};
  FiniteLevelMeasure t = finite_level({c2, c3}, 12, 1000);
  CHECK(t.masses.size() == 12);
  for (unsigned long u = 0; u < 12; ++u)
    CHECK(t.masses[u] == c2.masses[u % 4] * c3.masses[u % 3] % 1000);

  FiniteLevelMeasure coarse = coarsen(t, 4);
  for (unsigned long u = 0; u < 4; ++u)
    CHECK(coarse.masses[u] == c2.masses[u] * Int(1 + 2 + 3) % 1000);
  // total mass is preserved under coarsening
  Int s1(0), s2(0);
  for (const auto& v : t.masses) s1 += v;
  for (const auto& v : coarse.masses) s2 += v;
  CHECK(s1 % 1000 == s2 % 1000);

  CHECK_THROWS(finite_level({c2}, 12, 1000));  // 3-part missing
  CHECK_THROWS(coarsen(t, 5));
  FiniteLevelMeasure back = FiniteLevelMeasure{12, 1000, t.masses};
  CHECK(back.serialize() == t.serialize());
}
