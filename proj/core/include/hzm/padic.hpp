#pragma once

#include <string>

#include "hzm/rational.hpp"

namespace hzm {

/// q = 4 for p = 2 and q = p otherwise; e = |(Z/qZ)^x|.
struct StructuralConstants {
  Int p;
  Int q;
  unsigned long e;
};

StructuralConstants structural(const Int& p);

/// Element of Q_p with capped precision. A nonzero value is
/// p^val * unit with unit in (Z/p^prec)^x; precision is tracked
/// relatively (prec digits of the unit), so the absolute precision is
/// val + prec. A value flagged zero is "0 up to O(p^abs)".
///
/// Arithmetic propagates precision: products/quotients keep the minimum
/// relative precision, sums keep the minimum absolute precision.
class Padic {
 public:
  static Padic from_int(const Int& v, const Int& p, long rel_prec);
  /// Denominator may be divisible by p; the valuation absorbs it.
  static Padic from_rat(const Rat& r, const Int& p, long rel_prec);
  static Padic zero(const Int& p, long abs_prec);

  const Int& prime() const { return p_; }
  bool is_zero() const { return zero_; }
  /// val + prec for a nonzero value; the O() bound for zero.
  long abs_prec() const { return zero_ ? val_ : val_ + prec_; }
  long rel_prec() const { return zero_ ? 0 : prec_; }
  long val() const;
  const Int& unit() const;
  bool is_unit() const { return !zero_ && val_ == 0; }

  /// The value as an integer in [0, p^digits); requires val >= 0 and
  /// digits <= abs_prec - 0 for a faithful answer.
  Int residue(long digits) const;
  /// r == *this up to the tracked precision.
  bool equals_rat(const Rat& r) const;

  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator*(const Padic& o) const;
  Padic operator/(const Padic& o) const;
  Padic operator-() const;
  Padic pow(long e) const;
  Padic with_abs_prec(long abs) const;  // truncate to a coarser bound

  /// Zero up to the common precision.
  friend bool same_padic(const Padic& a, const Padic& b) {
    return (a - b).is_zero();
  }

  /// {"p","val","unit","prec"}; unit as base-p little-endian digits.
  std::string serialize() const;
  static Padic deserialize(const std::string& json_text);
  std::string str() const;  // human-readable p^v * u + O(p^a)

 private:
  Padic() = default;
  void normalize(const Int& raw, long raw_val, long abs);
  Int p_;
  long val_ = 0;
  Int unit_;
  long prec_ = 0;
  bool zero_ = true;
};

/// The root of unity congruent to b mod q, by iterated p-th powers.
Padic teichmuller(const Padic& b);

/// [b] = b / teichmuller(b), in 1 + qZ_p.
Padic angle(const Padic& b);

/// Iwasawa logarithm restricted to 1 + qZ_p.
Padic padic_log(const Padic& u);

/// exp, requires v_p(x) >= 1 (p odd) or >= 2 (p = 2).
Padic padic_exp(const Padic& x);

/// u^s = exp(s log u) for u in 1 + qZ_p, s in Z_p.
Padic padic_power(const Padic& u, const Padic& s);

/// Least positive x with x p = a (mod m). Requires m > 1, gcd(p,m) = 1.
long ap_inverse_bracket(long a, long m, const Int& p);

}  // namespace hzm
