#pragma once

#include <cstddef>
#include <vector>

#include "hzm/exact.hpp"

namespace hzm {

/// Group element in normal form exp(rho X) exp(sum_k L_k ad(X)^{k-1} Y),
/// working modulo words that contain Y twice. ypart.coeff(k-1) = L_k.
struct YLinear {
  Rat rho;
  TruncSeries ypart;

  YLinear(Rat r, TruncSeries y) : rho(std::move(r)), ypart(std::move(y)) {}
  static YLinear identity(std::size_t L);

  std::size_t order() const { return ypart.order(); }
  YLinear operator*(const YLinear& o) const;
  YLinear inverse() const;
  bool operator==(const YLinear& o) const {
    return rho == o.rho && ypart == o.ypart;
  }
};

/// b_k = sum_{i=1}^{k} (-u0)^{k-i}/(k+1-i)! u_i. Sequences are indexed
/// from 1: u[0] is u_1.
std::vector<Rat> log_to_flat(const Rat& u0, const std::vector<Rat>& u);

/// u_k = sum_{s=0}^{k-1} (B_s/s!)(-u0)^s b_{k-s}, the inverse transform.
std::vector<Rat> flat_to_log(const Rat& u0, const std::vector<Rat>& b);

/// sum u_{k+1} T^k = (-u0 T)/(e^{-u0 T}-1) * sum b_{k+1} T^k for the
/// given flat sequence b (with u = flat_to_log(u0, b)).
bool genfunc_identity_check(const Rat& u0, const std::vector<Rat>& b);
/// The same on all unit basis sequences of length L.
bool genfunc_identity_check(const Rat& u0, std::size_t L);

/// Li_k = sum_i rho^{k-i}/(k+1-i)! li_i and its Bernoulli inverse are
/// mutually inverse to order L, and match the order-zero transforms
/// with rho = -u0.
bool prop42_check(const Rat& rho, std::size_t L);

/// Dense polynomial in two formal variables; coeff[i][j] multiplies
/// alpha^i chi^j.
class BivarPoly {
 public:
  BivarPoly() = default;
  static BivarPoly constant(const Rat& c);
  static BivarPoly alpha();
  static BivarPoly chi();

  const Rat& coeff(std::size_t i, std::size_t j) const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator*(const Rat& c) const;
  BivarPoly operator-() const;
  BivarPoly pow(unsigned long e) const;
  bool operator==(const BivarPoly& o) const;

 private:
  void normalize();
  std::vector<std::vector<Rat>> c_;  // c_[i][j] alpha^i chi^j
};

/// Exact bivariate identity behind the unit-integral evaluation:
/// (1/k) B_k(alpha)(chi^k - 1)
///   = sum_{i<k} binom(k-1,i) alpha^i chi^i J_{k-i},
/// J_s = -(1/s)(B_s(-rho) - B_s chi^s), rho = alpha(chi - 1).
bool lemma53_check(unsigned k);

enum class Convention {
  li_sign,            // Li_k -> (-1)^k Li_k
  chitilde_from_li,   // Li_k -> (-1)^{k-1} (k-1)! Li_k
  chitilde_from_elli  // same factor, applied to the flattened li sum
};

Rat convention_convert(Convention kind, unsigned k, const Rat& value);

/// chi~_k = (-1)^{k+1}(k-1)! sum_i rho^{k-i}/(k+1-i)! li_i for all k.
std::vector<Rat> chitilde_from_elli_sequence(const Rat& rho,
                                             const std::vector<Rat>& elli);

}  // namespace hzm
