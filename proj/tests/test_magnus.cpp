#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hzm/magnus.hpp"

using namespace hzm;

static YLinear random_elem(std::mt19937& rng, std::size_t L) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rat> y(L);
  for (auto& v : y) v = make_rat(num(rng), den(rng));
  return YLinear(make_rat(num(rng), den(rng)), TruncSeries(y, L));
}

TEST_CASE("group axioms in the Y-linear quotient") {
  std::mt19937 rng(31337);
  const std::size_t L = 12;
  YLinear e = YLinear::identity(L);
  for (int rep = 0; rep < 20; ++rep) {
    YLinear a = random_elem(rng, L), b = random_elem(rng, L),
            c = random_elem(rng, L);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * e == a);
    CHECK(e * a == a);
    CHECK(a * a.inverse() == e);
    CHECK(a.inverse() * a == e);
  }
}

TEST_CASE("product formula explicit cases") {
  const std::size_t L = 6;
  std::vector<Rat> h = {Rat(1), Rat(0), Rat(2), Rat(0), Rat(0), Rat(0)};
  YLinear x(Rat(0), TruncSeries(h, L));
  YLinear y(make_rat(1, 2), TruncSeries(L));
  // pure-X factor on the right twists the Y part by e^{-rho T}
  YLinear xy = x * y;
  CHECK(xy.rho == make_rat(1, 2));
  CHECK(xy.ypart == TruncSeries::exp_linear(make_rat(-1, 2), L) *
                        TruncSeries(h, L));
  // and on the left it does not
  YLinear yx = y * x;
  CHECK(yx.ypart == TruncSeries(h, L));
  CHECK_FALSE(xy == yx);  // the group is not abelian
}

TEST_CASE("flat/log transforms: hand-checked order 2 and inversion") {
  Rat u0 = make_rat(3, 7);
  std::vector<Rat> u = {make_rat(2), make_rat(-1, 3)};
  auto b = log_to_flat(u0, u);
  CHECK(b[0] == u[0]);
  CHECK(b[1] == u[1] - u0 * u[0] / 2);
  auto back = flat_to_log(u0, b);
  CHECK(back == u);

  // inversion on all basis vectors at full working order
  for (std::size_t j = 0; j < 20; ++j) {
    std::vector<Rat> basis(20, Rat(0));
    basis[j] = 1;
    CHECK(flat_to_log(u0, log_to_flat(u0, basis)) == basis);
    CHECK(log_to_flat(u0, flat_to_log(u0, basis)) == basis);
  }
}

TEST_CASE("generating function identity") {
  for (Rat u0 : {Rat(0), Rat(1), make_rat(-3, 7), make_rat(5, 2)})
    CHECK(genfunc_identity_check(u0, 20));
  CHECK(prop42_check(make_rat(4, 3), 20));
  CHECK(prop42_check(Rat(0), 20));
}

TEST_CASE("bivariate polynomial arithmetic") {
  BivarPoly a = BivarPoly::alpha(), x = BivarPoly::chi();
  BivarPoly one = BivarPoly::constant(Rat(1));
  CHECK((a + x) * (a - x) == a * a - x * x);
  CHECK((a * x).coeff(1, 1) == 1);
  CHECK((a * x).coeff(1, 0) == 0);
  CHECK(a.pow(3).coeff(3, 0) == 1);
  CHECK((a - a) == BivarPoly());
  CHECK(((a + one).pow(2)).coeff(1, 0) == 2);
}

TEST_CASE("reduction identity for all weights") {
  for (unsigned k = 1; k <= 20; ++k) CHECK(lemma53_check(k));
}

TEST_CASE("weight one case written out") {
  // left side is (alpha - 1/2)(chi - 1); the single right-hand term is
  // J_1 = rho + 1/2 - chi/2 with rho = alpha(chi - 1)
  BivarPoly a = BivarPoly::alpha(), x = BivarPoly::chi();
  BivarPoly one = BivarPoly::constant(Rat(1));
  BivarPoly half = BivarPoly::constant(make_rat(1, 2));
  BivarPoly lhs = (a - half) * (x - one);
  BivarPoly j1 = a * (x - one) + half - x * make_rat(1, 2);
  CHECK(lhs == j1);
}

TEST_CASE("convention conversions") {
  CHECK(convention_convert(Convention::li_sign, 2, Rat(5)) == 5);
  CHECK(convention_convert(Convention::li_sign, 3, Rat(5)) == -5);
  CHECK(convention_convert(Convention::chitilde_from_li, 1, Rat(5)) == 5);
  CHECK(convention_convert(Convention::chitilde_from_li, 4, Rat(5)) == -30);
  // the elli route = flatten first, then apply the same factor
  Rat rho = make_rat(2, 3);
  std::vector<Rat> elli = {Rat(1), make_rat(-1, 2), Rat(3), Rat(0), Rat(7)};
  std::vector<Rat> Li = log_to_flat(-rho, elli);
  std::vector<Rat> chit = chitilde_from_elli_sequence(rho, elli);
  for (std::size_t k = 1; k <= Li.size(); ++k)
    CHECK(chit[k - 1] == convention_convert(Convention::chitilde_from_li,
                                            static_cast<unsigned>(k),
                                            Li[k - 1]));
}
