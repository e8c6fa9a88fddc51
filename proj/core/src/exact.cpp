#include "hzm/exact.hpp"

#include <algorithm>
#include <mutex>

namespace hzm {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw std::domain_error("pow_rat: 0 to negative power");
    return 0;
  }
  Rat r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
  if (e < 0) {
    Rat inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  return r;
}

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& r, const Int& p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  return valuation(Int(r.get_num()), p) - valuation(Int(r.get_den()), p);
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Rat c) { return Poly({std::move(c)}); }

Poly Poly::monomial(const Rat& c, std::size_t deg) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return Poly(std::move(v));
}

const Rat& Poly::coeff(std::size_t i) const {
  static const Rat kZero(0);
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
  std::vector<Rat> v = coeffs_;
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

// ---------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order, Rat(0)) {
  if (order == 0) throw std::invalid_argument("TruncSeries: order 0");
}

TruncSeries::TruncSeries(std::vector<Rat> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  if (order == 0) throw std::invalid_argument("TruncSeries: order 0");
  coeffs_.resize(order, Rat(0));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  if (order() != o.order())
    throw std::invalid_argument("TruncSeries: order mismatch");
  TruncSeries r(order());
  for (std::size_t i = 0; i < order(); ++i)
    r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + (-o);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(order());
  for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (order() != o.order())
    throw std::invalid_argument("TruncSeries: order mismatch");
  TruncSeries r(order());
  for (std::size_t i = 0; i < order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < order(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TruncSeries TruncSeries::operator*(const Rat& c) const {
  TruncSeries r(order());
  for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

TruncSeries TruncSeries::exp_linear(const Rat& c, std::size_t L) {
  TruncSeries r(L);
  Rat term(1);
  for (std::size_t k = 0; k < L; ++k) {
    r.coeff(k) = term;
    term = term * c / Rat(static_cast<unsigned long>(k + 1));
  }
  return r;
}

TruncSeries TruncSeries::bernoulli_gen(const Rat& c, std::size_t L) {
  TruncSeries r(L);
  Rat cpow(1);
  for (std::size_t s = 0; s < L; ++s) {
    r.coeff(s) = bernoulli_number(static_cast<unsigned>(s)) * cpow /
                 factorial(static_cast<unsigned long>(s));
    cpow *= c;
  }
  return r;
}

// ------------------------------------------------------------ Bernoulli

// sum_{j=0}^{k} binom(k+1,j) B_j = 0 for k >= 1, B_0 = 1.
const Rat& bernoulli_number(unsigned k) {
  static std::mutex mu;
  static std::vector<Rat> memo{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= k) {
    unsigned n = static_cast<unsigned>(memo.size());
    Rat acc(0);
    for (unsigned j = 0; j < n; ++j)
      acc += Rat(binomial(n + 1, j)) * memo[j];
    memo.push_back(-acc / Rat(Int(n) + 1));
  }
  return memo[k];
}

Rat bernoulli_poly(unsigned k, const Rat& x) {
  Rat acc(0);
  Rat xpow(1);  // x^{k-s}, built from s = k downward
  for (unsigned s = k + 1; s-- > 0;) {
    acc += Rat(binomial(k, s)) * bernoulli_number(s) * xpow;
    if (s > 0) xpow *= x;
  }
  return acc;
}

Poly bernoulli_poly(unsigned k) {
  std::vector<Rat> v(k + 1, Rat(0));
  for (unsigned s = 0; s <= k; ++s)
    v[k - s] = Rat(binomial(k, s)) * bernoulli_number(s);
  return Poly(std::move(v));
}

Int stirling_first_signed(unsigned j, unsigned n) {
  if (n > j) throw std::invalid_argument("stirling_first_signed: n > j");
  // s(j,n) = s(j-1,n-1) - (j-1) s(j-1,n), rolling row
  std::vector<Int> row{1};
  for (unsigned i = 1; i <= j; ++i) {
    std::vector<Int> next(i + 1, Int(0));
    for (unsigned t = 0; t < row.size(); ++t) {
      next[t + 1] += row[t];
      next[t] -= Int(i - 1) * row[t];
    }
    row = std::move(next);
  }
  return row[n];
}

Int stirling_second(unsigned n, unsigned j) {
  if (j > n) throw std::invalid_argument("stirling_second: j > n");
  // S(n,j) = j S(n-1,j) + S(n-1,j-1)
  std::vector<Int> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, Int(0));
    for (unsigned t = 0; t < row.size(); ++t) {
      next[t + 1] += row[t];
      if (t <= i) next[t] += Int(t) * row[t];
    }
    row = std::move(next);
  }
  return row[j];
}

bool verify_bernoulli_addition(unsigned k, const Rat& x, const Rat& y) {
  Rat lhs = bernoulli_poly(k, y + x);
  Rat rhs(0);
  Rat xpow(1);
  for (unsigned s = k + 1; s-- > 0;) {
    rhs += Rat(binomial(k, s)) * bernoulli_poly(s, y) * xpow;
    if (s > 0) xpow *= x;
  }
  return lhs == rhs;
}

bool verify_distribution(unsigned k, unsigned long p, const Rat& x) {
  Rat rhs(0);
  Rat invp = make_rat(1, Int(p));
  for (unsigned long j = 0; j < p; ++j)
    rhs += bernoulli_poly(k, x * invp + Rat(Int(j)) * invp);
  rhs *= pow_rat(Rat(Int(p)), static_cast<long>(k) - 1);
  return bernoulli_poly(k, x) == rhs;
}

}  // namespace hzm
