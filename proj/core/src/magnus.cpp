#include "hzm/magnus.hpp"

#include <stdexcept>

namespace hzm {

YLinear YLinear::identity(std::size_t L) {
  return YLinear(Rat(0), TruncSeries(L));
}

YLinear YLinear::operator*(const YLinear& o) const {
  if (order() != o.order())
    throw std::invalid_argument("YLinear: order mismatch");
  // exp(r X) h exp(r' X) g = exp((r+r') X) (Ad(exp(-r' X)) h) g, and the
  // adjoint action on ad(X)-strings is multiplication by e^{-r' T}
  return YLinear(rho + o.rho,
                 TruncSeries::exp_linear(-o.rho, order()) * ypart + o.ypart);
}

YLinear YLinear::inverse() const {
  return YLinear(-rho, -(TruncSeries::exp_linear(rho, order()) * ypart));
}

std::vector<Rat> log_to_flat(const Rat& u0, const std::vector<Rat>& u) {
  std::size_t L = u.size();
  if (L < 1) throw std::invalid_argument("log_to_flat: empty sequence");
  std::vector<Rat> b(L, Rat(0));
  for (std::size_t k = 1; k <= L; ++k) {
    Rat acc(0);
    for (std::size_t i = 1; i <= k; ++i)
      acc += pow_rat(-u0, static_cast<long>(k - i)) /
             Rat(factorial(k + 1 - i)) * u[i - 1];
    b[k - 1] = acc;
  }
  return b;
}

std::vector<Rat> flat_to_log(const Rat& u0, const std::vector<Rat>& b) {
  std::size_t L = b.size();
  if (L < 1) throw std::invalid_argument("flat_to_log: empty sequence");
  std::vector<Rat> u(L, Rat(0));
  for (std::size_t k = 1; k <= L; ++k) {
    Rat acc(0);
    for (std::size_t s = 0; s < k; ++s)
      acc += bernoulli_number(static_cast<unsigned>(s)) / Rat(factorial(s)) *
             pow_rat(-u0, static_cast<long>(s)) * b[k - s - 1];
    u[k - 1] = acc;
  }
  return u;
}

bool genfunc_identity_check(const Rat& u0, const std::vector<Rat>& b) {
  std::size_t L = b.size();
  std::vector<Rat> u = flat_to_log(u0, b);
  TruncSeries lhs(u, L);  // coeff of T^k is u_{k+1}
  TruncSeries rhs = TruncSeries::bernoulli_gen(-u0, L) * TruncSeries(b, L);
  return lhs == rhs;
}

bool genfunc_identity_check(const Rat& u0, std::size_t L) {
  if (L < 2) throw std::invalid_argument("genfunc_identity_check: L < 2");
  // the identity is linear in the sequence, so unit vectors suffice
  for (std::size_t j = 0; j < L; ++j) {
    std::vector<Rat> b(L, Rat(0));
    b[j] = 1;
    if (!genfunc_identity_check(u0, b)) return false;
  }
  return true;
}

bool prop42_check(const Rat& rho, std::size_t L) {
  if (L < 1) throw std::invalid_argument("prop42_check: L < 1");
  // Li_k = sum rho^{k-i}/(k+1-i)! li_i is the flat transform with
  // u0 = -rho; its stated Bernoulli inverse is the log transform
  for (std::size_t j = 0; j < L; ++j) {
    std::vector<Rat> elli(L, Rat(0));
    elli[j] = 1;
    std::vector<Rat> Li = log_to_flat(-rho, elli);
    if (flat_to_log(-rho, Li) != elli) return false;
    std::vector<Rat> back = flat_to_log(-rho, elli);
    if (log_to_flat(-rho, back) != elli) return false;
  }
  return true;
}

void BivarPoly::normalize() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BivarPoly BivarPoly::constant(const Rat& c) {
  BivarPoly r;
  if (c != 0) r.c_ = {{c}};
  return r;
}

BivarPoly BivarPoly::alpha() {
  BivarPoly r;
  r.c_ = {{}, {Rat(1)}};
  return r;
}

BivarPoly BivarPoly::chi() {
  BivarPoly r;
  r.c_ = {{Rat(0), Rat(1)}};
  return r;
}

const Rat& BivarPoly::coeff(std::size_t i, std::size_t j) const {
  static const Rat zero(0);
  if (i >= c_.size() || j >= c_[i].size()) return zero;
  return c_[i][j];
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::size_t w = std::max(i < c_.size() ? c_[i].size() : 0,
                             i < o.c_.size() ? o.c_[i].size() : 0);
    r.c_[i].resize(w, Rat(0));
    for (std::size_t j = 0; j < w; ++j) r.c_[i][j] = coeff(i, j) + o.coeff(i, j);
  }
  r.normalize();
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& row : r.c_)
    for (auto& v : row) v = -v;
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  return *this + (-o);
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      for (std::size_t k = 0; k < o.c_.size(); ++k)
        for (std::size_t l = 0; l < o.c_[k].size(); ++l) {
          if (o.c_[k][l] == 0) continue;
          if (r.c_.size() <= i + k) r.c_.resize(i + k + 1);
          if (r.c_[i + k].size() <= j + l) r.c_[i + k].resize(j + l + 1, Rat(0));
          r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
        }
    }
  r.normalize();
  return r;
}

BivarPoly BivarPoly::operator*(const Rat& c) const {
  return *this * constant(c);
}

BivarPoly BivarPoly::pow(unsigned long e) const {
  BivarPoly r = constant(Rat(1));
  for (unsigned long i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool BivarPoly::operator==(const BivarPoly& o) const { return c_ == o.c_; }

namespace {

// B_s(x) for a bivariate argument
BivarPoly bernoulli_at(unsigned s, const BivarPoly& x) {
  BivarPoly acc;
  for (unsigned t = 0; t <= s; ++t)
    acc = acc + x.pow(s - t) * (Rat(binomial(s, t)) * bernoulli_number(t));
  return acc;
}

}  // namespace

bool lemma53_check(unsigned k) {
  if (k < 1) throw std::invalid_argument("lemma53_check: k < 1");
  BivarPoly al = BivarPoly::alpha();
  BivarPoly ch = BivarPoly::chi();
  BivarPoly one = BivarPoly::constant(Rat(1));
  BivarPoly rho = al * (ch - one);

  BivarPoly lhs =
      bernoulli_at(k, al) * (ch.pow(k) - one) * make_rat(1, Int(k));

  BivarPoly rhs;
  for (unsigned i = 0; i < k; ++i) {
    unsigned s = k - i;
    BivarPoly Js =
        -(bernoulli_at(s, -rho) - ch.pow(s) * bernoulli_number(s)) *
        make_rat(1, Int(s));
    rhs = rhs + (al * ch).pow(i) * Js * Rat(binomial(k - 1, i));
  }
  return lhs == rhs;
}

Rat convention_convert(Convention kind, unsigned k, const Rat& value) {
  if (k < 1) throw std::invalid_argument("convention_convert: k < 1");
  switch (kind) {
    case Convention::li_sign:
      return k % 2 == 0 ? value : -value;
    case Convention::chitilde_from_li:
    case Convention::chitilde_from_elli: {
      Rat f = Rat(factorial(k - 1)) * value;
      return k % 2 == 1 ? f : -f;  // (-1)^{k-1} = (-1)^{k+1}
    }
  }
  throw std::invalid_argument("convention_convert: unknown kind");
}

std::vector<Rat> chitilde_from_elli_sequence(const Rat& rho,
                                             const std::vector<Rat>& elli) {
  std::vector<Rat> Li = log_to_flat(-rho, elli);
  std::vector<Rat> out(Li.size());
  for (std::size_t k = 1; k <= Li.size(); ++k)
    out[k - 1] = convention_convert(Convention::chitilde_from_elli,
                                    static_cast<unsigned>(k), Li[k - 1]);
  return out;
}

}  // namespace hzm
