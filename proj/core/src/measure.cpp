#include "hzm/measure.hpp"

#include <algorithm>

#include "hzm/exact.hpp"
#include "json.hpp"

namespace hzm {

MomentMeasure::MomentMeasure(std::vector<Rat> moments, MeasureMeta meta)
    : moments_(std::move(moments)), meta_(std::move(meta)) {
  if (moments_.size() < 2)
    throw std::invalid_argument("MomentMeasure: need at least 2 moments");
}

std::string MomentMeasure::serialize() const {
  nlohmann::json j;
  nlohmann::json meta = nlohmann::json::object();
  if (meta_.a) meta["a"] = *meta_.a;
  if (meta_.m) meta["m"] = *meta_.m;
  if (meta_.c) meta["c"] = meta_.c->get_str();
  if (!meta_.notes.empty()) meta["notes"] = meta_.notes;
  j["meta"] = meta;
  auto arr = nlohmann::json::array();
  for (const auto& mo : moments_) arr.push_back(rat_to_string(mo));
  j["moments"] = arr;
  return j.dump();
}

MomentMeasure MomentMeasure::deserialize(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MeasureMeta meta;
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    if (m.contains("a")) meta.a = m["a"].get<long>();
    if (m.contains("m")) meta.m = m["m"].get<long>();
    if (m.contains("c")) meta.c = Int(m["c"].get<std::string>());
    if (m.contains("notes"))
      meta.notes = m["notes"].get<std::vector<std::string>>();
  }
  std::vector<Rat> moments;
  for (const auto& s : j.at("moments"))
    moments.push_back(rat_from_string(s.get<std::string>()));
  return MomentMeasure(std::move(moments), std::move(meta));
}

const Rat& MahlerTransform::coeff(std::size_t j) {
  if (j >= mu_->count())
    throw std::out_of_range("MahlerTransform: insufficient moments");
  while (coeffs_.size() <= j) {
    std::size_t n = coeffs_.size();
    // stirling_row_ holds the coefficients of b(b-1)...(b-n+1)
    Rat acc(0);
    for (std::size_t i = 0; i < stirling_row_.size(); ++i)
      if (stirling_row_[i] != 0) acc += Rat(stirling_row_[i]) * mu_->moment(i);
    coeffs_.push_back(acc / Rat(factorial_));
    // advance the falling-factorial row: multiply by (b - n)
    std::vector<Int> next(stirling_row_.size() + 1, Int(0));
    for (std::size_t i = 0; i < stirling_row_.size(); ++i) {
      next[i + 1] += stirling_row_[i];
      next[i] -= Int(static_cast<unsigned long>(n)) * stirling_row_[i];
    }
    stirling_row_ = std::move(next);
    factorial_ *= Int(static_cast<unsigned long>(n + 1));
  }
  return coeffs_[j];
}

std::vector<Rat> mahler_coefficients(const MomentMeasure& mu, std::size_t J) {
  if (J >= mu.count())
    throw std::out_of_range("mahler_coefficients: J >= moment count");
  MahlerTransform mt(mu);
  std::vector<Rat> out;
  out.reserve(J + 1);
  for (std::size_t j = 0; j <= J; ++j) out.push_back(mt.coeff(j));
  return out;
}

namespace {

constexpr long kGuardDigits = 8;

struct Accumulator {
  // col[j] = Delta^j f(i-j) after consuming f(0..i)
  std::vector<Padic> col;
  Padic sum;
  MahlerTransform& mt;
  const Int& p;
  long work_prec;

  Accumulator(MahlerTransform& mt_, const Int& p_, long N)
      : sum(Padic::zero(p_, N + kGuardDigits)),
        mt(mt_),
        p(p_),
        work_prec(N + kGuardDigits) {}

  void consume(const Padic& fi) {
    std::size_t i = col.size();
    std::vector<Padic> next;
    next.reserve(i + 1);
    next.push_back(fi);
    for (std::size_t j = 1; j <= i; ++j)
      next.push_back(next[j - 1] - col[j - 1]);
    col = std::move(next);
    const Padic aj = col.back();
    sum = sum + aj * Padic::from_rat(mt.coeff(i), p, work_prec);
  }
};

IntegrateResult finish(const Padic& half, const Padic& full, const Int& p,
                       long N, std::size_t terms) {
  bool stable = ((half - full).with_abs_prec(N)).is_zero();
  return {full.with_abs_prec(N), stable, terms};
}

}  // namespace

IntegrateResult integrate(const MomentMeasure& mu, const MahlerStream& f,
                          std::size_t J, const Int& p, long N) {
  if (J >= mu.count())
    throw std::out_of_range("integrate: J >= moment count");
  if (J > f.J) throw std::out_of_range("integrate: J beyond stream domain");
  MahlerTransform mt(mu);
  Accumulator acc(mt, p, N);
  Padic half = Padic::zero(p, N);
  for (std::size_t i = 0; i <= J; ++i) {
    acc.consume(f.eval(static_cast<unsigned long>(i)));
    if (i == J / 2) half = acc.sum;
  }
  return finish(half, acc.sum, p, N, J + 1);
}

IntegrateResult integrate_adaptive(const MomentMeasure& mu,
                                   const std::function<Padic(unsigned long)>& f,
                                   const Int& p, long N, std::size_t j_cap) {
  MahlerTransform mt(mu);
  return integrate_adaptive(mt, f, p, N, j_cap);
}

IntegrateResult integrate_adaptive(MahlerTransform& mt,
                                   const std::function<Padic(unsigned long)>& f,
                                   const Int& p, long N, std::size_t j_cap) {
  std::size_t cap = std::min(j_cap, mt.measure().count() - 1);
  Accumulator acc(mt, p, N);
  std::size_t checkpoint = 16;
  Padic prev = Padic::zero(p, 0);
  bool have_prev = false;
  bool agreed_once = false;  // one agreement can be accidental
  for (std::size_t i = 0; i <= cap; ++i) {
    acc.consume(f(static_cast<unsigned long>(i)));
    if (i == checkpoint || i == cap) {
      bool agree =
          have_prev && ((prev - acc.sum).with_abs_prec(N)).is_zero();
      if (agree && agreed_once)
        return {acc.sum.with_abs_prec(N), true, i + 1};
      agreed_once = agree;
      prev = acc.sum;
      have_prev = true;
      checkpoint *= 2;
    }
  }
  return {acc.sum.with_abs_prec(N), false, cap + 1};
}

namespace {

std::function<Padic(unsigned long)> coset_indicator(unsigned long u, unsigned t,
                                                    const Int& p, long N) {
  Int mod = pow_int(p, t);
  Padic one = Padic::from_int(1, p, N + kGuardDigits);
  Padic nil = Padic::zero(p, N + kGuardDigits);
  Int uu = Int(u) % mod;
  return [=](unsigned long i) {
    return Int(i) % mod == uu ? one : nil;
  };
}

}  // namespace

IntegrateResult coset_mass(const MomentMeasure& mu, unsigned long u, unsigned t,
                           std::size_t J, const Int& p, long N) {
  auto ind = coset_indicator(u, t, p, N);
  return integrate(mu, MahlerStream{ind, J}, J, p, N);
}

IntegrateResult coset_mass_adaptive(const MomentMeasure& mu, unsigned long u,
                                    unsigned t, const Int& p, long N,
                                    std::size_t j_cap) {
  return integrate_adaptive(mu, coset_indicator(u, t, p, N), p, N, j_cap);
}

MomentMeasure affine_pushforward(const MomentMeasure& mu, const Int& m,
                                 const Rat& s) {
  if (m < 1) throw std::invalid_argument("affine_pushforward: m < 1");
  std::size_t K = mu.count();
  std::vector<Rat> out(K, Rat(0));
  for (std::size_t n = 0; n < K; ++n) {
    Rat acc(0);
    // sum_i binom(n,i) m^i s^{n-i} m_i
    for (std::size_t i = 0; i <= n; ++i) {
      Rat term = Rat(binomial(n, i)) * Rat(pow_int(m, i)) *
                 pow_rat(s, static_cast<long>(n - i));
      acc += term * mu.moment(i);
    }
    out[n] = acc;
  }
  MeasureMeta meta = mu.meta();
  meta.notes.push_back("pushforward [" + m.get_str() + "," + rat_to_string(s) +
                       "]");
  return MomentMeasure(std::move(out), std::move(meta));
}

MomentMeasure involution(const MomentMeasure& mu) {
  std::vector<Rat> out = mu.moments();
  for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
  MeasureMeta meta = mu.meta();
  meta.notes.push_back("involution");
  return MomentMeasure(std::move(out), std::move(meta));
}

bool cocycle_moment_check(long a, long m, const Int& c1, const Int& c2,
                          unsigned K) {
  Rat x = make_rat(a, m);
  for (unsigned k = 1; k <= K; ++k) {
    Rat base = pow_rat(Rat(Int(m)), static_cast<long>(k) - 1) *
               bernoulli_poly(k, x) / Rat(Int(k));
    Rat Mc1 = base * (Rat(1) - Rat(pow_int(c1, k)));
    Rat Mc2 = base * (Rat(1) - Rat(pow_int(c2, k)));
    Rat Mc12 = base * (Rat(1) - Rat(pow_int(c1 * c2, k)));
    if (Mc12 != Mc1 + Rat(pow_int(c1, k)) * Mc2) return false;
  }
  return true;
}

std::string FiniteLevelMeasure::serialize() const {
  nlohmann::json j;
  j["N"] = levelN;
  j["M"] = modulusM;
  auto arr = nlohmann::json::array();
  for (const auto& v : masses) arr.push_back(v.get_str());
  j["masses"] = arr;
  return j.dump();
}

FiniteLevelMeasure finite_level(const std::vector<PrimeLevelComponent>& parts,
                                unsigned long N, unsigned long M) {
  // check the factorization of N is covered exactly
  Int rest(N);
  for (const auto& c : parts) {
    Int lvl = pow_int(c.p, c.t);
    if (c.masses.size() != mpz_get_ui(lvl.get_mpz_t()))
      throw std::invalid_argument("finite_level: bad component table size");
    if (rest % lvl != 0)
      throw std::invalid_argument("finite_level: component level does not divide N");
    rest /= lvl;
  }
  if (rest != 1)
    throw std::invalid_argument("finite_level: missing prime component for N");
  FiniteLevelMeasure out{N, M, std::vector<Int>(N, Int(1))};
  Int mod(M);
  for (unsigned long u = 0; u < N; ++u) {
    Int v(1);
    for (const auto& c : parts) {
      Int lvl = pow_int(c.p, c.t);
      unsigned long r = mpz_get_ui(Int(Int(u) % lvl).get_mpz_t());
      v = v * (c.masses[r] % mod) % mod;
    }
    v %= mod;
    if (v < 0) v += mod;
    out.masses[u] = v;
  }
  return out;
}

FiniteLevelMeasure coarsen(const FiniteLevelMeasure& mu, unsigned long N) {
  if (N == 0 || mu.levelN % N != 0)
    throw std::invalid_argument("coarsen: N must divide the level");
  FiniteLevelMeasure out{N, mu.modulusM, std::vector<Int>(N, Int(0))};
  Int mod(mu.modulusM);
  for (unsigned long u = 0; u < mu.levelN; ++u) {
    auto& slot = out.masses[u % N];
    slot = (slot + mu.masses[u]) % mod;
  }
  return out;
}

}  // namespace hzm
