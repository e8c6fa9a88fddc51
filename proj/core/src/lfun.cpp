#include "hzm/lfun.hpp"

#include <algorithm>

#include "hzm/exact.hpp"

namespace hzm {

namespace {

constexpr long kGuard = 10;

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

void LpContext::validate() const {
  if (m <= 1) throw std::invalid_argument("LpContext: m <= 1");
  if (a <= 0) throw std::invalid_argument("LpContext: a <= 0");
  if (a % m == 0) throw std::invalid_argument("LpContext: m | a");
  if ((c - 1) % m != 0)
    throw std::invalid_argument("LpContext: c != 1 mod m");
  if (gcd_int(c, p) != 1) throw std::invalid_argument("LpContext: p | c");
  if (!allow_degenerate_c && (c == 1 || c == -1))
    throw std::invalid_argument("LpContext: degenerate c");
  if (p_divides_m()) {
    if (Int(a) % p == 0)
      throw std::invalid_argument("LpContext: p | a with p | m");
  } else {
    if (a >= m) throw std::invalid_argument("LpContext: need 0 < a < m");
    if (gcd_int(Int(a), Int(m)) != 1)
      throw std::invalid_argument("LpContext: gcd(a,m) != 1");
  }
  if (N <= 0) throw std::invalid_argument("LpContext: N <= 0");
  if (K < 2) throw std::invalid_argument("LpContext: K < 2");
  structural(p);  // also rejects composite p
}

LpContext make_context(const Int& p, long a, long m, const Int& c, long N,
                       std::size_t K, std::size_t J) {
  LpContext ctx{p, a, m, c, N, K, J};
  ctx.validate();
  return ctx;
}

MomentMeasure hurwitz_moments(const LpContext& ctx, std::size_t K) {
  Rat x = make_rat(ctx.a, ctx.m);
  std::vector<Rat> moments;
  moments.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) {
    Rat mk = pow_rat(Rat(Int(ctx.m)), static_cast<long>(k) - 1) *
             bernoulli_poly(static_cast<unsigned>(k), x) /
             Rat(Int(static_cast<unsigned long>(k)));
    moments.push_back(mk * (Rat(1) - Rat(pow_int(ctx.c, k))));
  }
  MeasureMeta meta;
  meta.a = ctx.a;
  meta.m = ctx.m;
  meta.c = ctx.c;
  return MomentMeasure(std::move(moments), std::move(meta));
}

MomentMeasure hurwitz_moments(const LpContext& ctx) {
  return hurwitz_moments(ctx, ctx.K);
}

MomentMeasure boldzeta_moments(const LpContext& ctx, std::size_t K) {
  MomentMeasure hur = hurwitz_moments(ctx, K);
  Rat shift = -Rat(Int(ctx.a)) * Rat(ctx.c);  // undo t -> m t + a c
  Rat minv = make_rat(1, ctx.m);
  std::vector<Rat> out(K, Rat(0));
  for (std::size_t j = 0; j < K; ++j) {
    Rat acc(0);
    for (std::size_t i = 0; i <= j; ++i)
      acc += Rat(binomial(j, i)) * pow_rat(shift, static_cast<long>(j - i)) *
             hur.moment(i);
    out[j] = acc * pow_rat(minv, static_cast<long>(j));
  }
  MeasureMeta meta = hur.meta();
  meta.notes.push_back("un-translated");
  return MomentMeasure(std::move(out), std::move(meta));
}

MomentMeasure boldzeta_moments(const LpContext& ctx) {
  return boldzeta_moments(ctx, ctx.K);
}

UnitIntegral theorem1_unit_integral(const LpContext& ctx, unsigned k) {
  ctx.validate();
  if (k == 0) throw std::invalid_argument("theorem1_unit_integral: k = 0");
  const Int& p = ctx.p;
  long N = ctx.N;
  MomentMeasure mu = hurwitz_moments(ctx, ctx.J + 1);

  Rat full = mu.moment(k - 1);  // int over all of Z_p, exactly

  auto f = [&](unsigned long i) -> Padic {
    if (Int(i) % p != 0) return Padic::zero(p, N + kGuard);
    if (i == 0) return k == 1 ? Padic::from_int(1, p, N + kGuard)
                              : Padic::zero(p, N + kGuard);
    return Padic::from_int(Int(i), p, N + kGuard).pow(static_cast<long>(k) - 1);
  };
  IntegrateResult pzp = integrate_adaptive(mu, f, p, N, ctx.J);

  Rat pzp_pred(0);
  if (!ctx.p_divides_m()) {
    long a1 = ap_inverse_bracket(ctx.a, ctx.m, p);
    pzp_pred = Rat(pow_int(p, static_cast<unsigned long>(k - 1))) *
               pow_rat(Rat(Int(ctx.m)), static_cast<long>(k) - 1) *
               bernoulli_poly(k, make_rat(a1, ctx.m)) / Rat(Int(k)) *
               (Rat(1) - Rat(pow_int(ctx.c, k)));
  }

  UnitIntegral out{
      Padic::from_rat(full, p, N + kGuard).with_abs_prec(N) - pzp.value,
      Padic::from_rat(full - pzp_pred, p, N + kGuard).with_abs_prec(N),
      pzp.value,
      Padic::from_rat(pzp_pred, p, N + kGuard).with_abs_prec(N),
      pzp.stabilized};
  return out;
}

LpValue lp_beta(const LpContext& ctx, unsigned long beta, const Padic& s) {
  ctx.validate();
  const Int& p = ctx.p;
  long N = ctx.N;
  long W = N + kGuard;
  auto sc = ctx.sc();
  beta %= sc.e;

  Padic one = Padic::from_int(1, p, W);
  Padic one_minus_s = one - s;
  if (beta == 0 && one_minus_s.is_zero())
    throw PoleError("lp_beta: pole at s = 1 on the trivial branch");

  Padic cp = Padic::from_int(ctx.c, p, W);
  Padic pref = one - teichmuller(cp).pow(static_cast<long>(beta)) *
                         padic_power(angle(cp), one_minus_s);
  if (pref.is_zero())
    throw std::domain_error("lp_beta: regularization factor vanishes");

  MomentMeasure mu = hurwitz_moments(ctx, ctx.J + 1);
  auto f = [&](unsigned long i) -> Padic {
    if (i == 0 || Int(i) % p == 0) return Padic::zero(p, W);
    Padic b = Padic::from_int(Int(i), p, W);
    return padic_power(angle(b), one_minus_s) / b *
           teichmuller(b).pow(static_cast<long>(beta));
  };
  IntegrateResult integral = integrate_adaptive(mu, f, p, N, ctx.J);
  Padic value = integral.value / pref;
  return {value, integral.stabilized, integral.terms_used, value.abs_prec()};
}

LpValue lp_beta(const LpContext& ctx, unsigned long beta, const Rat& s) {
  return lp_beta(ctx, beta, Padic::from_rat(s, ctx.p, ctx.N + kGuard));
}

LpValue shiratani_zeta(const LpContext& ctx, const Padic& s) {
  if (ctx.p == 2)
    throw std::invalid_argument("shiratani_zeta: requires p > 2");
  LpValue v = lp_beta(ctx, 0, s);
  v.value = -v.value;
  return v;
}

LpValue shiratani_zeta(const LpContext& ctx, const Rat& s) {
  return shiratani_zeta(ctx, Padic::from_rat(s, ctx.p, ctx.N + kGuard));
}

PDecomposition decompose_ap(long a, long m, const Int& p) {
  long a1 = ap_inverse_bracket(a, m, p);
  Int num = Int(a) - p * Int(a1);
  if (num % m != 0)
    throw std::logic_error("decompose_ap: inconsistent decomposition");
  Int d = num / m;
  return {a1, static_cast<long>(mpz_get_si(d.get_mpz_t()))};
}

bool lemma56_check(long a, long m, const Int& p, const Int& c, std::size_t K,
                   long N, std::size_t J) {
  auto dec = decompose_ap(a, m, p);
  LpContext ca = make_context(p, a, m, c, N, K, J);
  LpContext ca1 = make_context(p, dec.a1, m, c, N, K, J);
  MomentMeasure mu_a = boldzeta_moments(ca, J + 1);
  MomentMeasure rhs = affine_pushforward(boldzeta_moments(ca1, K), p,
                                         Rat(-Int(dec.delta)) * Rat(c));
  // residue class of the target coset -delta c + pZ_p
  Int r = (-Int(dec.delta) * c) % p;
  if (r < 0) r += p;
  long W = N + kGuard;
  MahlerTransform mt(mu_a);
  for (std::size_t n = 0; n < K; ++n) {
    auto f = [&](unsigned long i) -> Padic {
      if (Int(i) % p != r) return Padic::zero(p, W);
      if (i == 0) return n == 0 ? Padic::from_int(1, p, W)
                                : Padic::zero(p, W);
      return Padic::from_int(Int(i), p, W).pow(static_cast<long>(n));
    };
    IntegrateResult lhs = integrate_adaptive(mt, f, p, N, J);
    if (!lhs.stabilized) return false;
    if (!lhs.value.equals_rat(rhs.moment(n))) return false;
  }
  return true;
}

}  // namespace hzm
