#include "hzm/padic.hpp"

#include <algorithm>

#include "hzm/exact.hpp"
#include "json.hpp"

namespace hzm {

namespace {

Int pmod(const Int& p, long digits) {
  return pow_int(p, static_cast<unsigned long>(std::max(0L, digits)));
}

Int mod_inverse(const Int& a, const Int& mod) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("not invertible");
  return r;
}

}  // namespace

StructuralConstants structural(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("structural: p not prime");
  if (p == 2) return {p, Int(4), 2};
  StructuralConstants sc{p, p, 0};
  sc.e = mpz_get_ui(Int(p - 1).get_mpz_t());
  return sc;
}

void Padic::normalize(const Int& raw, long raw_val, long abs) {
  // raw is the value divided by p^raw_val, known mod p^{abs - raw_val}
  long digits = abs - raw_val;
  if (digits <= 0) {
    zero_ = true;
    val_ = abs;
    unit_ = 0;
    prec_ = 0;
    return;
  }
  Int m = pmod(p_, digits);
  Int u = raw % m;
  if (u < 0) u += m;
  if (u == 0) {
    zero_ = true;
    val_ = abs;
    unit_ = 0;
    prec_ = 0;
    return;
  }
  long t = valuation(u, p_);
  val_ = raw_val + t;
  prec_ = abs - val_;
  Int d;
  mpz_divexact(d.get_mpz_t(), u.get_mpz_t(), pow_int(p_, t).get_mpz_t());
  unit_ = d % pmod(p_, prec_);
  zero_ = false;
}

Padic Padic::from_int(const Int& v, const Int& p, long rel_prec) {
  if (rel_prec <= 0) throw std::invalid_argument("Padic: rel_prec <= 0");
  if (v == 0) return zero(p, rel_prec);
  Padic x;
  x.p_ = p;
  long t = valuation(v, p);
  x.normalize(v, 0, t + rel_prec);
  return x;
}

Padic Padic::from_rat(const Rat& r, const Int& p, long rel_prec) {
  if (rel_prec <= 0) throw std::invalid_argument("Padic: rel_prec <= 0");
  if (r == 0) return zero(p, rel_prec);
  Padic x;
  x.p_ = p;
  Int num = r.get_num(), den = r.get_den();
  long vn = valuation(num, p), vd = valuation(den, p);
  Int nu, du;
  mpz_divexact(nu.get_mpz_t(), num.get_mpz_t(), pow_int(p, vn).get_mpz_t());
  mpz_divexact(du.get_mpz_t(), den.get_mpz_t(), pow_int(p, vd).get_mpz_t());
  Int m = pmod(p, rel_prec);
  Int u = (nu % m) * mod_inverse(du, m) % m;
  if (u < 0) u += m;
  x.val_ = vn - vd;
  x.unit_ = u;
  x.prec_ = rel_prec;
  x.zero_ = false;
  return x;
}

Padic Padic::zero(const Int& p, long abs_prec) {
  Padic x;
  x.p_ = p;
  x.zero_ = true;
  x.val_ = abs_prec;
  return x;
}

long Padic::val() const {
  if (zero_) throw std::domain_error("val of (apparent) zero");
  return val_;
}

const Int& Padic::unit() const {
  if (zero_) throw std::domain_error("unit of (apparent) zero");
  return unit_;
}

Int Padic::residue(long digits) const {
  if (zero_) return 0;
  if (val_ < 0) throw std::domain_error("residue: negative valuation");
  Int m = pmod(p_, digits);
  return (unit_ * pmod(p_, std::min(val_, digits))) % m;
}

bool Padic::equals_rat(const Rat& r) const {
  long rel = std::max(1L, abs_prec() + 4 -
                              (r == 0 ? 0 : valuation(r, p_)));
  return same_padic(*this, Padic::from_rat(r, p_, rel));
}

Padic Padic::operator+(const Padic& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Padic: prime mismatch");
  long abs = std::min(abs_prec(), o.abs_prec());
  if (zero_ && o.zero_) return zero(p_, abs);
  if (zero_) return o.with_abs_prec(abs);
  if (o.zero_) return with_abs_prec(abs);
  long v = std::min(val_, o.val_);
  Int s = unit_ * pmod(p_, val_ - v) + o.unit_ * pmod(p_, o.val_ - v);
  Padic r;
  r.p_ = p_;
  r.normalize(s, v, abs);
  return r;
}

Padic Padic::operator-() const {
  Padic r = *this;
  if (!r.zero_) r.unit_ = pmod(p_, prec_) - r.unit_;
  return r;
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Padic: prime mismatch");
  // val_ doubles as the O() bound when flagged zero, so this covers
  // 0 + O(p^a) times p^v u as O(p^{a+v}) too.
  if (zero_ || o.zero_) return zero(p_, val_ + o.val_);
  Padic r;
  r.p_ = p_;
  r.val_ = val_ + o.val_;
  r.prec_ = std::min(prec_, o.prec_);
  r.unit_ = (unit_ * o.unit_) % pmod(p_, r.prec_);
  r.zero_ = false;
  return r;
}

Padic Padic::operator/(const Padic& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Padic: prime mismatch");
  if (o.zero_) throw std::domain_error("Padic: division by (apparent) zero");
  if (zero_) return zero(p_, val_ - o.val_);
  Padic r;
  r.p_ = p_;
  r.val_ = val_ - o.val_;
  r.prec_ = std::min(prec_, o.prec_);
  Int m = pmod(p_, r.prec_);
  r.unit_ = (unit_ % m) * mod_inverse(o.unit_ % m, m) % m;
  r.zero_ = false;
  return r;
}

Padic Padic::pow(long e) const {
  if (e == 0) return from_int(1, p_, zero_ ? std::max(1L, val_) : prec_);
  if (zero_) {
    if (e < 0) throw std::domain_error("Padic: negative power of zero");
    return zero(p_, val_ * e);
  }
  Padic base = *this;
  if (e < 0) base = from_int(1, p_, prec_) / base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Padic result = from_int(1, p_, base.prec_);
  Padic cur = base;
  while (n) {
    if (n & 1) result = result * cur;
    n >>= 1;
    if (n) cur = cur * cur;
  }
  return result;
}

Padic Padic::with_abs_prec(long abs) const {
  if (abs >= abs_prec()) {
    Padic r = *this;
    if (r.zero_) r.val_ = abs;  // a weaker bound would be wrong; keep ours
    return *this;
  }
  if (zero_) return zero(p_, abs);
  Padic r;
  r.p_ = p_;
  r.normalize(unit_, val_, abs);
  return r;
}

std::string Padic::str() const {
  if (zero_) return "O(" + p_.get_str() + "^" + std::to_string(val_) + ")";
  return unit_.get_str() + "*" + p_.get_str() + "^" + std::to_string(val_) +
         " + O(" + p_.get_str() + "^" + std::to_string(abs_prec()) + ")";
}

std::string Padic::serialize() const {
  nlohmann::json j;
  j["p"] = p_.get_str();
  j["val"] = zero_ ? abs_prec() : val_;
  j["prec"] = prec_;
  std::string digits;
  if (!zero_) {
    Int u = unit_;
    for (long i = 0; i < prec_; ++i) {
      Int d = u % p_;
      digits += d.get_str();
      if (i + 1 < prec_) digits += ",";
      u /= p_;
    }
  }
  j["unit"] = digits;
  return j.dump();
}

Padic Padic::deserialize(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Int p(j.at("p").get<std::string>());
  long val = j.at("val").get<long>();
  long prec = j.at("prec").get<long>();
  std::string digits = j.at("unit").get<std::string>();
  if (prec == 0 || digits.empty()) return zero(p, val);
  Int u(0), ppow(1);
  std::size_t pos = 0;
  while (pos < digits.size()) {
    auto comma = digits.find(',', pos);
    std::string d = digits.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    u += Int(d) * ppow;
    ppow *= p;
    pos = comma == std::string::npos ? digits.size() : comma + 1;
  }
  Padic x;
  x.p_ = p;
  x.normalize(u, val, val + prec);
  return x;
}

Padic teichmuller(const Padic& b) {
  if (!b.is_unit()) throw std::domain_error("teichmuller: not a unit");
  const Int& p = b.prime();
  long prec = b.rel_prec();
  Int m = pow_int(p, static_cast<unsigned long>(prec));
  if (p == 2) {
    Int r4 = b.unit() % (prec >= 2 ? Int(4) : Int(2));
    if (prec < 2)
      throw std::domain_error("teichmuller: need >= 2 digits for p=2");
    return Padic::from_int(r4 == 1 ? Int(1) : Int(-1), p, prec);
  }
  Int t = b.unit() % m;
  for (long i = 0; i <= prec + 1; ++i) {
    Int next;
    mpz_powm(next.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t());
    if (next == t) break;
    t = next;
  }
  return Padic::from_int(t, p, prec);
}

Padic angle(const Padic& b) { return b / teichmuller(b); }

Padic padic_log(const Padic& u) {
  const Int& p = u.prime();
  auto sc = structural(p);
  if (!u.is_unit() || u.unit() % sc.q != 1)
    throw std::domain_error("padic_log: not in 1+qZ_p");
  long abs = u.abs_prec();
  Padic x = u - Padic::from_int(1, p, u.rel_prec() + 2);
  if (x.is_zero()) return Padic::zero(p, x.abs_prec());
  Padic acc = Padic::zero(p, abs + 2);
  Padic power = x;
  long n = 1;
  while (!power.is_zero() && power.val() < abs + 2) {
    Padic term = power / Padic::from_int(n, p, power.rel_prec() + 4);
    if (n % 2 == 0) term = -term;
    acc = acc + term;
    power = power * x;
    ++n;
    if (n > 8 * (abs + 4)) break;  // safety
  }
  return acc;
}

Padic padic_exp(const Padic& x) {
  const Int& p = x.prime();
  long conv = p == 2 ? 2 : 1;
  if (!x.is_zero() && x.val() < conv)
    throw std::domain_error("padic_exp: outside convergence domain");
  long abs = x.abs_prec();
  Padic acc = Padic::from_int(1, p, abs + 2);
  if (x.is_zero()) return acc.with_abs_prec(abs);
  Padic term = acc;
  long n = 1;
  while (true) {
    term = term * x / Padic::from_int(n, p, x.rel_prec() + 8);
    if (term.is_zero() || term.val() >= abs) break;
    acc = acc + term;
    ++n;
    if (n > 16 * (abs + 4)) break;  // safety
  }
  return acc;
}

Padic padic_power(const Padic& u, const Padic& s) {
  if (s.is_zero())
    return Padic::from_int(1, u.prime(), std::max(1L, s.abs_prec()));
  if (s.val() < 0)
    throw std::domain_error("padic_power: exponent not in Z_p");
  return padic_exp(s * padic_log(u));
}

long ap_inverse_bracket(long a, long m, const Int& p) {
  if (m <= 1) throw std::invalid_argument("ap_inverse_bracket: m <= 1");
  if (Int(m) % p == 0) throw std::invalid_argument("ap_inverse_bracket: p | m");
  Int inv = mod_inverse(p % Int(m), Int(m));
  Int x = (inv * Int(a)) % Int(m);
  if (x <= 0) x += m;
  return static_cast<long>(mpz_get_si(x.get_mpz_t()));
}

}  // namespace hzm
