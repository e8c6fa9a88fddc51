#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hzm/padic.hpp"
#include "hzm/rational.hpp"

namespace hzm {

struct MeasureMeta {
  std::optional<long> a;
  std::optional<long> m;
  std::optional<Int> c;
  std::vector<std::string> notes;
};

/// Bounded measure on Z_p given by its exact power moments
/// m_n = int b^n dmu, n = 0..K-1. Moments are exact rationals; reduction
/// mod p^N happens only at integration time.
class MomentMeasure {
 public:
  explicit MomentMeasure(std::vector<Rat> moments, MeasureMeta meta = {});

  std::size_t count() const { return moments_.size(); }
  const Rat& moment(std::size_t n) const { return moments_.at(n); }
  const std::vector<Rat>& moments() const { return moments_; }
  const MeasureMeta& meta() const { return meta_; }

  std::string serialize() const;  // {"meta":{...},"moments":["num/den",...]}
  static MomentMeasure deserialize(const std::string& json_text);

 private:
  std::vector<Rat> moments_;
  MeasureMeta meta_;
};

/// Exact Mahler coefficients c_j = int binom(b,j) dmu
///   = (1/j!) sum_{n<=j} s(j,n) m_n,
/// computed incrementally with a rolling signed-Stirling row.
class MahlerTransform {
 public:
  explicit MahlerTransform(const MomentMeasure& mu) : mu_(&mu) {}
  /// Requires j < mu.count().
  const Rat& coeff(std::size_t j);
  const MomentMeasure& measure() const { return *mu_; }

 private:
  const MomentMeasure* mu_;
  std::vector<Rat> coeffs_;
  std::vector<Int> stirling_row_{Int(1)};  // row for j = coeffs_.size()
  Int factorial_{1};
};

std::vector<Rat> mahler_coefficients(const MomentMeasure& mu, std::size_t J);

/// Integrand given by its values on 0..J at a common precision.
struct MahlerStream {
  std::function<Padic(unsigned long)> eval;
  std::size_t J;
};

struct IntegrateResult {
  Padic value;
  bool stabilized;
  std::size_t terms_used;
};

/// sum_{j<=J} a_j(f) c_j(mu) mod p^N with a_j the finite differences of
/// f at 0. The stabilization report compares the partial sum at J/2
/// against the one at J.
IntegrateResult integrate(const MomentMeasure& mu, const MahlerStream& f,
                          std::size_t J, const Int& p, long N);

/// Doubles the truncation until the partial sums at three successive
/// checkpoints agree mod p^N; capped by j_cap and by the available
/// moments.
IntegrateResult integrate_adaptive(const MomentMeasure& mu,
                                   const std::function<Padic(unsigned long)>& f,
                                   const Int& p, long N,
                                   std::size_t j_cap = 512);

/// Same, with a caller-owned transform so several integrals against one
/// measure share the coefficient work.
IntegrateResult integrate_adaptive(MahlerTransform& mt,
                                   const std::function<Padic(unsigned long)>& f,
                                   const Int& p, long N,
                                   std::size_t j_cap = 512);

/// Mass of the coset u + p^t Z_p.
IntegrateResult coset_mass(const MomentMeasure& mu, unsigned long u,
                           unsigned t, std::size_t J, const Int& p, long N);
IntegrateResult coset_mass_adaptive(const MomentMeasure& mu, unsigned long u,
                                    unsigned t, const Int& p, long N,
                                    std::size_t j_cap = 512);

/// [m,s]_* mu: moments of the image under t -> m t + s.
MomentMeasure affine_pushforward(const MomentMeasure& mu, const Int& m,
                                 const Rat& s);

/// Action of -1: m_n -> (-1)^n m_n.
MomentMeasure involution(const MomentMeasure& mu);

/// Moment-level cocycle law of the Hurwitz measure family:
/// M_k(c1 c2) = M_k(c1) + c1^k M_k(c2) with
/// M_k(c) = (m^{k-1}/k) B_k(a/m) (1 - c^k), exactly, for k = 1..K.
bool cocycle_moment_check(long a, long m, const Int& c1, const Int& c2,
                          unsigned K);

/// Finite-level table on Z/N with values in Z/M.
struct FiniteLevelMeasure {
  unsigned long levelN;
  unsigned long modulusM;
  std::vector<Int> masses;  // index = residue mod N

  std::string serialize() const;  // {"N","M","masses":[...]}
};

struct PrimeLevelComponent {
  Int p;
  unsigned t;                // level p^t
  std::vector<Int> masses;   // length p^t, values taken mod M
};

/// CRT assembly: mass(u + N Zhat) = prod_p mass_p(u mod p^{t_p}) mod M,
/// treating the prime coordinates as independent. Every prime factor of
/// N must be covered by a component.
FiniteLevelMeasure finite_level(const std::vector<PrimeLevelComponent>& parts,
                                unsigned long N, unsigned long M);

/// Coarsen to a divisor level by summing over fibers.
FiniteLevelMeasure coarsen(const FiniteLevelMeasure& mu, unsigned long N);

}  // namespace hzm
