#include "hzm/cohen.hpp"

#include "hzm/exact.hpp"

namespace hzm {

namespace {

constexpr long kGuard = 10;

}  // namespace

CohenDomain classify_cohen(const Rat& x, const Int& p) {
  if (x == 0) return CohenDomain::Zp;
  long v = valuation(x, p);
  long cutoff = 1 - (p == 2 ? 2L : 1L);  // 1 - v_p(q)
  if (v < cutoff) return CohenDomain::CZp;
  if (v >= 0) return CohenDomain::Zp;
  return CohenDomain::Outside;
}

Padic omega_v(const Padic& x) {
  if (x.is_zero()) throw std::domain_error("omega_v: zero");
  const Int& p = x.prime();
  Padic u = Padic::from_int(x.unit(), p, x.rel_prec());
  Padic shift = Padic::from_rat(pow_rat(Rat(p), x.val()), p, x.rel_prec());
  return teichmuller(u) * shift;
}

Padic omega_v(const Rat& x, const Int& p, long prec) {
  return omega_v(Padic::from_rat(x, p, prec));
}

Padic chi_bernoulli_teich(unsigned k, const Rat& x, const Int& p, long N) {
  if (k < 1) throw std::invalid_argument("chi_bernoulli_teich: k < 1");
  if (valuation(x.get_den(), p) != 0 && x != 0)
    throw std::invalid_argument("chi_bernoulli_teich: x not in Z_p");
  long W = N + kGuard;
  auto sc = structural(p);
  unsigned long q = mpz_get_ui(sc.q.get_mpz_t());
  Padic acc = Padic::zero(p, W);
  for (unsigned long j = 0; j < q; ++j) {
    if (Int(j) % p == 0) continue;
    Padic w = teichmuller(Padic::from_int(Int(j), p, W));
    Rat b = bernoulli_poly(k, (x + Rat(Int(j))) / Rat(sc.q));
    acc = acc + w.pow(-static_cast<long>(k)) * Padic::from_rat(b, p, W);
  }
  Padic lvl = Padic::from_int(sc.q, p, W).pow(static_cast<long>(k) - 1);
  return (lvl * acc).with_abs_prec(N);
}

Rat chi_bernoulli_closed(unsigned k, const Rat& x, const Int& p) {
  auto sc = structural(p);
  if (k % sc.e != 0)
    throw std::invalid_argument("chi_bernoulli_closed: needs e | k");
  return bernoulli_poly(k, x) -
         Rat(pow_int(p, k - 1)) * bernoulli_poly(k, x / Rat(p));
}

LpValue cohen_zeta_C(const LpContext& ctx, unsigned long beta, const Padic& s) {
  ctx.validate();
  const Int& p = ctx.p;
  auto sc = ctx.sc();
  beta %= sc.e;
  long t = valuation(Int(ctx.m), p);
  if (t < valuation(sc.q, p))
    throw std::invalid_argument("cohen_zeta_C: needs q | m");
  if (Int(ctx.a) % p == 0)
    throw std::invalid_argument("cohen_zeta_C: needs p prime to a");
  long W = ctx.N + kGuard;
  if (p == 2) {
    // the two analytic branches live on disjoint discs: s = 1 - beta mod 2
    Padic d = s - Padic::from_int(Int(1) - Int(beta), p, W);
    if (!d.is_zero() && d.val() < 1)
      throw std::invalid_argument("cohen_zeta_C: s outside the beta branch");
  }

  Int m1 = Int(ctx.m) / pow_int(p, static_cast<unsigned long>(t));
  Padic wm1 = teichmuller(Padic::from_int(m1, p, W));
  Padic wvm = wm1 * Padic::from_int(pow_int(p, static_cast<unsigned long>(t)),
                                    p, W);
  Padic wa = teichmuller(Padic::from_int(Int(ctx.a), p, W));
  Padic angle_m1 = padic_power(angle(Padic::from_int(m1, p, W)), s);

  LpValue L = lp_beta(ctx, beta, s);
  L.value = -(wvm / wa.pow(static_cast<long>(beta))) * angle_m1 * L.value;
  L.effective_prec = L.value.abs_prec();
  return L;
}

LpValue cohen_zeta_Zp(const Rat& x, unsigned long beta, const Padic& s,
                      const CohenConfig& cfg) {
  const Int& p = cfg.p;
  if (x <= 0) throw std::invalid_argument("cohen_zeta_Zp: need x > 0");
  if (valuation(x.get_den(), p) != 0)
    throw std::invalid_argument("cohen_zeta_Zp: x not in Z_p");
  long u = valuation(x, p);
  if (u < 1) throw std::invalid_argument("cohen_zeta_Zp: need p | x");
  long v = cfg.v_override > 0 ? cfg.v_override : u + 1;
  if (v < u + 1 || (p == 2 && v < 2))
    throw std::invalid_argument("cohen_zeta_Zp: level v too small");

  Int pv = pow_int(p, static_cast<unsigned long>(v));
  Int num = x.get_num(), den = x.get_den();
  Int mpp = den * pv;
  if (!mpp.fits_slong_p())
    throw std::overflow_error("cohen_zeta_Zp: level modulus too large");
  long m2 = mpz_get_si(mpp.get_mpz_t());

  long W = cfg.N + kGuard;
  Padic acc = Padic::zero(p, W);
  bool stable = true;
  std::size_t terms = 0;
  unsigned long pvl = mpz_get_ui(pv.get_mpz_t());
  for (unsigned long j = 0; j < pvl; ++j) {
    if (Int(j) % p == 0) continue;
    Int a2 = num + Int(j) * den;  // (x + j)/p^v = a2 / m2
    if (!a2.fits_slong_p())
      throw std::overflow_error("cohen_zeta_Zp: numerator too large");
    LpContext ctx = make_context(p, mpz_get_si(a2.get_mpz_t()), m2,
                                 Int(1) + mpp, cfg.N, 24, cfg.J);
    LpValue term = cohen_zeta_C(ctx, beta, s);
    acc = acc + term.value;
    stable = stable && term.stabilized;
    terms += term.terms;
  }
  Padic value = acc / Padic::from_int(pv, p, W);
  return {value, stable, terms, value.abs_prec()};
}

ClaimResult claim_r0(long a, long m, const Int& p) {
  if (m <= 1 || a <= 0 || a >= m)
    throw std::invalid_argument("claim_r0: need 0 < a < m");
  if (Int(m) % p == 0) throw std::invalid_argument("claim_r0: p | m");
  long r0 = 0;
  while ((Int(a) + Int(m) * r0) % p != 0) ++r0;
  long a1 = ap_inverse_bracket(a, m, p);
  bool verified = Int(a) + Int(m) * r0 == Int(a1) * p;
  return {r0, verified};
}

BridgeResult cohen_shiratani_bridge(long a, long m, const Int& p, const Int& c,
                                    const Padic& s, long N, std::size_t J) {
  if (p == 2)
    throw std::invalid_argument("cohen_shiratani_bridge: requires p > 2");
  ClaimResult cl = claim_r0(a, m, p);
  if (!cl.verified)
    throw std::logic_error("cohen_shiratani_bridge: claim violated");
  long r = cl.r0;
  long W = N + kGuard;

  LpContext ctx = make_context(p, a, m, c, N, 24, J);
  LpValue zsh = shiratani_zeta(ctx, s);

  // m^s on the trivial branch splits as w(m) [m]^s
  Padic mp = Padic::from_int(Int(m), p, W);
  Padic ms = teichmuller(mp) * padic_power(angle(mp), s);

  Padic sum = Padic::zero(p, W);
  for (long v = 0; v < r; ++v) {
    Rat xv = make_rat(a + Int(m) * v, m);
    if (valuation(xv, p) != 0)
      throw std::logic_error("cohen_shiratani_bridge: non-unit term");
    Padic xvp = Padic::from_rat(xv, p, W);
    // x^{-s} = w(x)^{-1} [x]^{-s} on this branch
    sum = sum + padic_power(angle(xvp), -s) / teichmuller(xvp);
  }

  Rat xr = make_rat(a + Int(m) * r, m);
  CohenConfig cfg{p, N, J, 0};
  LpValue lhs = cohen_zeta_Zp(xr, 0, s, cfg);

  return {lhs.value, ms * zsh.value - sum, r, lhs.stabilized && zsh.stabilized};
}

Example11 example11() {
  Example11 out;
  out.a1 = ap_inverse_bracket(3, 106, 11);
  out.r = claim_r0(3, 106, 11).r0;
  for (long v = 0; v < out.r; ++v) {
    long num = 3 + 106 * v;
    out.rows.push_back({v, num, 106, num % 11 != 0});
  }
  return out;
}

}  // namespace hzm
