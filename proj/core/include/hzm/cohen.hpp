#pragma once

#include <vector>

#include "hzm/lfun.hpp"

namespace hzm {

/// Domain of the two-variable p-adic zeta: CZp is the complement of
/// (p/q)Z_p in Q_p (valuation < 1 - v_p(q)), Zp the p-adic integers.
enum class CohenDomain { CZp, Zp, Outside };

CohenDomain classify_cohen(const Rat& x, const Int& p);

/// w_v(u p^n) = p^n w(u): the Teichmuller lift extended by p^Z.
Padic omega_v(const Padic& x);
Padic omega_v(const Rat& x, const Int& p, long prec);

/// Twisted Bernoulli value B_k(w~^{-k}, x)
///   = q^{k-1} sum_{j<q, p∤j} w(j)^{-k} B_k((x+j)/q),
/// with w~ the Teichmuller character extended by 0 on pZ_p. The level
/// is q (not p), which is what the distribution relation needs at p=2.
Padic chi_bernoulli_teich(unsigned k, const Rat& x, const Int& p, long N);

/// Closed form B_k(x) - p^{k-1} B_k(x/p), valid when e | k.
Rat chi_bernoulli_closed(unsigned k, const Rat& x, const Int& p);

/// zeta_p(s, a/m) for a/m in CZp with q | m, p∤a:
///   -(w_v(m)/w(a)^beta) [m1]^s L_p^[beta](s;a,m), m1 = m / p^{v_p(m)}.
/// For odd p the value is independent of beta; for p = 2 the argument
/// must satisfy s = 1 - beta mod 2.
LpValue cohen_zeta_C(const LpContext& ctx, unsigned long beta, const Padic& s);

struct CohenConfig {
  Int p;
  long N = 10;
  std::size_t J = 128;
  long v_override = 0;  // 0 = minimal level v_p(x)+1
};

/// zeta_p(s, x) for x in Z_p with v_p(x) >= 1:
///   p^{-v} sum_{j<p^v, p∤j} zeta_p(s, (x+j)/p^v), v = v_p(x)+1.
LpValue cohen_zeta_Zp(const Rat& x, unsigned long beta, const Padic& s,
                      const CohenConfig& cfg);

struct ClaimResult {
  long r0;        // least r >= 0 with a + m r = 0 mod p
  bool verified;  // a + m r0 == <a p^-1> p
};
ClaimResult claim_r0(long a, long m, const Int& p);

struct BridgeResult {
  Padic lhs;  // zeta_p(s, (a+mr)/m)
  Padic rhs;  // w(m)[m]^s (-L_p^[0](s;a,m)) - sum_{v<r} (x_v)^{-s}
  long r;
  bool stabilized;
};

/// Both sides of zeta_p(s,(a+mr)/m) = m^s zeta^Sh_p(s;a,m)
///   - sum_{v=0}^{r-1} ((a+mv)/m)^{-s}
/// on the trivial branch (s in the closure of {1-k : e | k}); p odd,
/// p∤m, 0 < a < m. Powers of units are split as w * angle^s.
BridgeResult cohen_shiratani_bridge(long a, long m, const Int& p, const Int& c,
                                    const Padic& s, long N = 10,
                                    std::size_t J = 128);

struct Example11Row {
  long v;
  long num;
  long den;
  bool unit;  // numerator prime to 11
};

struct Example11 {
  long a1;  // <3 * 11^-1> mod 106
  long r;
  std::vector<Example11Row> rows;
};

/// The worked p=11, a=3, m=106 instance of the bridge data.
Example11 example11();

}  // namespace hzm
