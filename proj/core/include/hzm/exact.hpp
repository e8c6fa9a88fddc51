#pragma once

#include <cstddef>
#include <vector>

#include "hzm/rational.hpp"

namespace hzm {

/// Dense polynomial over Q. coeffs[i] is the coefficient of T^i;
/// the trailing coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(Rat c);
  static Poly monomial(const Rat& c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rat& coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// Power series over Q truncated at a fixed order: coefficients of
/// T^0..T^{L-1}. Arithmetic never reads beyond index L-1.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order);                  // zero series
  TruncSeries(std::vector<Rat> coeffs, std::size_t order);  // padded/truncated

  std::size_t order() const { return coeffs_.size(); }
  const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
  Rat& coeff(std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator*(const Rat& c) const;
  TruncSeries operator-() const;
  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

  /// Sum c^k T^k / k!, k < L.
  static TruncSeries exp_linear(const Rat& c, std::size_t L);
  /// Sum B_s c^s T^s / s!, k < L: the series (cT)/(e^{cT}-1).
  static TruncSeries bernoulli_gen(const Rat& c, std::size_t L);

 private:
  std::vector<Rat> coeffs_;
};

/// B_k in the convention of the generating function w e^{Tw}/(e^w - 1),
/// so B_1 = -1/2. Memoized; safe to call concurrently.
const Rat& bernoulli_number(unsigned k);

/// B_k(x) = sum_{s<=k} binom(k,s) B_s x^{k-s}.
Rat bernoulli_poly(unsigned k, const Rat& x);

/// B_k(T) as a dense polynomial.
Poly bernoulli_poly(unsigned k);

/// Coefficient of b^n in b(b-1)...(b-j+1). Requires n <= j.
Int stirling_first_signed(unsigned j, unsigned n);

/// Number of partitions of an n-set into j blocks. Requires j <= n.
Int stirling_second(unsigned n, unsigned j);

/// B_k(y+x) = sum_{s<=k} binom(k,s) B_s(y) x^{k-s}, exactly.
bool verify_bernoulli_addition(unsigned k, const Rat& x, const Rat& y);

/// B_k(x) = p^{k-1} sum_{j<p} B_k(x/p + j/p), exactly.
bool verify_distribution(unsigned k, unsigned long p, const Rat& x);

}  // namespace hzm
