#pragma once

#include <cstddef>

#include "hzm/measure.hpp"
#include "hzm/padic.hpp"

namespace hzm {

/// Parameters of one L-function evaluation. c plays the role of the
/// cyclotomic-character value of the chosen Galois element; it must be
/// congruent to 1 mod m, prime to p, and different from +-1 so that the
/// regularization factor does not vanish identically.
struct LpContext {
  Int p;
  long a = 0;
  long m = 0;
  Int c;
  long N = 10;         // target precision (digits)
  std::size_t K = 24;  // moments kept by hurwitz_moments
  std::size_t J = 128; // Mahler truncation cap
  bool allow_degenerate_c = false;  // admit c = 1 (testing only)

  StructuralConstants sc() const { return structural(p); }
  bool p_divides_m() const { return Int(m) % p == 0; }
  void validate() const;
};

LpContext make_context(const Int& p, long a, long m, const Int& c, long N = 10,
                       std::size_t K = 24, std::size_t J = 128);

/// Moments of the p-adic Hurwitz measure:
/// m_{k-1} = (m^{k-1}/k) B_k(a/m) (1 - c^k), k = 1..K.
MomentMeasure hurwitz_moments(const LpContext& ctx);
MomentMeasure hurwitz_moments(const LpContext& ctx, std::size_t K);

/// Moments of the un-translated measure: the Hurwitz measure is its
/// pushforward under t -> m t + a c.
MomentMeasure boldzeta_moments(const LpContext& ctx);
MomentMeasure boldzeta_moments(const LpContext& ctx, std::size_t K);

struct UnitIntegral {
  Padic computed;   // moment minus the pZ_p part, via Mahler machinery
  Padic predicted;  // closed Bernoulli form, by branch
  Padic pzp_computed;   // coset-restricted Mahler integral over pZ_p
  Padic pzp_predicted;  // p^{k-1} m^{k-1} B_k(<a p^-1>/m)(1-c^k)/k  (p∤m)
  bool stabilized;
};

/// int_{Z_p^x} b^{k-1} d(hurwitz measure), both branches.
UnitIntegral theorem1_unit_integral(const LpContext& ctx, unsigned k);

struct LpValue {
  Padic value;
  bool stabilized;
  std::size_t terms;
  long effective_prec;  // absolute precision of value
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// L_p^[beta](s;a,m) =
///   (1 - w(c)^beta [c]^{1-s})^{-1} int_{Z_p^x} [b]^{1-s} b^-1 w(b)^beta dmu.
LpValue lp_beta(const LpContext& ctx, unsigned long beta, const Padic& s);
LpValue lp_beta(const LpContext& ctx, unsigned long beta, const Rat& s);

/// -L_p^[0](s;a,m), p > 2, s != 1.
LpValue shiratani_zeta(const LpContext& ctx, const Padic& s);
LpValue shiratani_zeta(const LpContext& ctx, const Rat& s);

/// Decomposition a = p a1 + delta m with a1 = <a p^-1>, 1 <= a1 < m.
struct PDecomposition {
  long a1;
  long delta;
};
PDecomposition decompose_ap(long a, long m, const Int& p);

/// Coset identity: the restriction of the un-translated measure for a/m
/// to -delta c + pZ_p equals [p, -delta c]_* of the one for a1/m. The
/// left side is a coset-restricted Mahler integral mod p^N for each
/// monomial v^n, n < K; the right side is exact.
bool lemma56_check(long a, long m, const Int& p, const Int& c, std::size_t K,
                   long N = 10, std::size_t J = 128);

}  // namespace hzm
