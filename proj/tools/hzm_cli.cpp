// Command-line front end: moment tables, Mahler coefficients, coset
// masses, L-values, Appendix-style evaluators and verification suites.
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hzm/cohen.hpp"
#include "hzm/lfun.hpp"
#include "hzm/magnus.hpp"
#include "json.hpp"

using namespace hzm;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotStabilized = 3;

struct Common {
  long p = 3;
  long a = 1;
  long m = 3;
  std::string c;  // default 1+m
  long N = 10;
  std::size_t K = 24;
  std::size_t J = 128;
  std::string format = "text";
  bool allow_degenerate = false;
};

void add_common(CLI::App* cmd, Common& o, bool needs_ctx = true) {
  cmd->add_option("--p", o.p, "prime");
  if (needs_ctx) {
    cmd->add_option("--a", o.a, "numerator shift a");
    cmd->add_option("--m", o.m, "modulus m");
    cmd->add_option("--c", o.c, "cyclotomic value c (default 1+m)");
    cmd->add_flag("--allow-degenerate-c", o.allow_degenerate,
                  "admit c = 1 (diagnostic)");
  }
  cmd->add_option("--N", o.N, "p-adic precision digits");
  cmd->add_option("--K", o.K, "moment count");
  cmd->add_option("--J", o.J, "Mahler truncation cap");
  cmd->add_option("--format", o.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

LpContext context_of(const Common& o) {
  Int c = o.c.empty() ? Int(o.m + 1) : Int(o.c);
  LpContext ctx{Int(o.p), o.a, o.m, c, o.N, o.K, o.J, o.allow_degenerate};
  ctx.validate();
  return ctx;
}

void emit(const Common& o, const json& j, const std::string& csv_header,
          const std::vector<std::vector<std::string>>& rows) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << csv_header << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        std::cout << r[i] << (i + 1 < r.size() ? "," : "");
      std::cout << "\n";
    }
  } else {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        std::cout << r[i] << (i + 1 < r.size() ? "  " : "");
      std::cout << "\n";
    }
  }
}

Padic parse_s(const std::string& text, const Int& p, long prec) {
  return Padic::from_rat(rat_from_string(text), p, prec);
}

struct Suite {
  bool all_pass = true;
  bool all_stable = true;

  void line(const std::string& name, bool ok, bool stable = true) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name
              << (stable ? "" : "  [not stabilized]") << "\n";
    all_pass = all_pass && ok;
    all_stable = all_stable && stable;
  }
  int exit_code() const {
    if (!all_stable) return kExitNotStabilized;
    return all_pass ? 0 : 1;
  }
};

// closed Bernoulli form of the unit integral; pass regularized = false
// for the L-value itself (no 1 - c^k factor)
Rat theorem1_closed_form(const LpContext& ctx, unsigned k,
                         bool regularized = true) {
  Rat reg = regularized ? Rat(1) - Rat(pow_int(ctx.c, k)) : Rat(1);
  Rat base =
      pow_rat(Rat(Int(ctx.m)), static_cast<long>(k) - 1) * reg / Rat(Int(k));
  Rat val = base * bernoulli_poly(k, make_rat(ctx.a, ctx.m));
  if (!ctx.p_divides_m()) {
    long a1 = ap_inverse_bracket(ctx.a, ctx.m, ctx.p);
    val -= base * Rat(pow_int(ctx.p, k - 1)) *
           bernoulli_poly(k, make_rat(a1, ctx.m));
  }
  return val;
}

int verify_theorem1(unsigned kmax) {
  Suite s;
  struct Case {
    long p, a, m;
  };
  for (Case t : {Case{2, 1, 4}, Case{2, 3, 4}, Case{3, 1, 3}, Case{3, 2, 3},
                 Case{5, 2, 5}, Case{3, 1, 6}, Case{5, 1, 3}, Case{5, 2, 3},
                 Case{7, 2, 5}, Case{2, 1, 3}}) {
    LpContext ctx = make_context(t.p, t.a, t.m, 2 * t.m + 1, 10, 24, 256);
    for (unsigned k = 1; k <= kmax; ++k) {
      UnitIntegral u = theorem1_unit_integral(ctx, k);
      bool ok = same_padic(u.computed, u.predicted) &&
                same_padic(u.pzp_computed, u.pzp_predicted) &&
                u.computed.equals_rat(theorem1_closed_form(ctx, k));
      s.line("theorem1 p=" + std::to_string(t.p) + " a=" + std::to_string(t.a) +
                 " m=" + std::to_string(t.m) + " k=" + std::to_string(k),
             ok, u.stabilized);
    }
  }
  return s.exit_code();
}

int verify_interpolation(unsigned kmax) {
  Suite s;
  struct Case {
    long p, a, m;
  };
  for (Case t : {Case{2, 1, 4}, Case{3, 1, 3}, Case{3, 2, 5}, Case{5, 1, 3},
                 Case{7, 3, 5}}) {
    // p = 2 needs extra digits: the value's 2-valuation can reach -5
    LpContext ctx = make_context(t.p, t.a, t.m, 2 * t.m + 1,
                                 t.p == 2 ? 14 : 10, 24, 256);
    auto sc = ctx.sc();
    for (unsigned k = 1; k <= kmax; ++k) {
      unsigned long beta = k % sc.e;
      LpValue L = lp_beta(ctx, beta, Rat(1 - static_cast<long>(k)));
      bool ok = L.value.equals_rat(theorem1_closed_form(ctx, k, false)) &&
                L.value.abs_prec() >= 5;
      s.line("interpolation p=" + std::to_string(t.p) +
                 " a=" + std::to_string(t.a) + " m=" + std::to_string(t.m) +
                 " k=" + std::to_string(k) + " beta=" + std::to_string(beta),
             ok, L.stabilized);
    }
  }
  return s.exit_code();
}

Int pick_c(long m, const Int& coprime_to, long from_multiple) {
  Int c = 1 + Int(m) * from_multiple;
  Int g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), coprime_to.get_mpz_t());
    if (g == 1) return c;
    c += m;
  }
}

int verify_sigma_independence() {
  Suite s;
  struct Case {
    long p, a, m;
  };
  for (Case t : {Case{3, 1, 3}, Case{5, 1, 3}, Case{2, 1, 5}}) {
    Int c1 = pick_c(t.m, t.p, 1), c2 = pick_c(t.m, t.p, 3);
    LpContext ca = make_context(t.p, t.a, t.m, c1, 10, 24, 256);
    LpContext cb = make_context(t.p, t.a, t.m, c2, 10, 24, 256);
    auto sc = ca.sc();
    for (unsigned long beta = 0; beta < sc.e && beta < 4; ++beta) {
      for (long i = 1; i <= 5; ++i) {
        // 5 sample s per branch: s = 1 - (beta + i e) stays on branch beta
        Rat sv(1 - static_cast<long>(beta) - i * static_cast<long>(sc.e));
        if (beta == 0 && sv == 1) continue;
        LpValue La = lp_beta(ca, beta, sv);
        LpValue Lb = lp_beta(cb, beta, sv);
        bool ok = same_padic(La.value, Lb.value) &&
                  std::min(La.value.abs_prec(), Lb.value.abs_prec()) >= 5;
        s.line("sigma-independence p=" + std::to_string(t.p) +
                   " beta=" + std::to_string(beta) + " s=" + rat_to_string(sv),
               ok, La.stabilized && Lb.stabilized);
      }
    }
  }
  return s.exit_code();
}

int verify_lemma53(unsigned kmax) {
  Suite s;
  for (unsigned k = 1; k <= kmax; ++k)
    s.line("bivariate identity k=" + std::to_string(k), lemma53_check(k));
  return s.exit_code();
}

int verify_lemma43(unsigned order) {
  Suite s;
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (int rep = 0; rep < 20; ++rep) {
    Rat u0 = make_rat(num(rng), den(rng));
    std::vector<Rat> u(order);
    for (auto& x : u) x = make_rat(num(rng), den(rng));
    auto b = log_to_flat(u0, u);
    bool round = flat_to_log(u0, b) == u;
    s.line("transform round-trip u0=" + rat_to_string(u0), round);
    s.line("generating identity u0=" + rat_to_string(u0),
           genfunc_identity_check(u0, b));
  }
  s.line("prop. 4.2 transforms rho=4/3", prop42_check(make_rat(4, 3), order));
  return s.exit_code();
}

int verify_lemma56() {
  Suite s;
  s.line("(p,m,a)=(5,3,1)", lemma56_check(1, 3, 5, 7, 12, 10, 256));
  s.line("(p,m,a)=(2,3,1)", lemma56_check(1, 3, 2, 7, 12));
  s.line("(p,m,a)=(7,5,3)", lemma56_check(3, 5, 7, 11, 12, 10, 256));
  s.line("(p,m,a)=(11,106,3)", lemma56_check(3, 106, 11, 107, 8, 8, 512));
  return s.exit_code();
}

int verify_cocycle() {
  Suite s;
  std::mt19937 rng(987123);
  std::uniform_int_distribution<long> md(2, 30);
  std::uniform_int_distribution<long> mult(1, 8);
  bool all = true;
  for (int i = 0; i < 100; ++i) {
    long m = md(rng);
    long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
    if (a % m == 0) a = 1;
    Int c1 = 1 + m * mult(rng), c2 = 1 + m * mult(rng);
    all = all && cocycle_moment_check(a, m, c1, c2, 10);
  }
  s.line("cocycle law on 100 random (a,m,c1,c2)", all);
  return s.exit_code();
}

int verify_pushforward() {
  Suite s;
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> small(1, 9);
  bool functorial = true, iota = true, invol = true;
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> mom(8);
    for (auto& x : mom) x = make_rat(small(rng) - 5, small(rng));
    MomentMeasure mu(mom);
    Int m1 = small(rng), m2 = small(rng);
    Rat s1 = make_rat(small(rng) - 5, small(rng));
    Rat s2 = make_rat(small(rng) - 5, small(rng));
    // [m1,s1]_*[m2,s2]_* = [m1 m2, m1 s2 + s1]_*
    MomentMeasure lhs = affine_pushforward(affine_pushforward(mu, m2, s2), m1, s1);
    MomentMeasure rhs = affine_pushforward(mu, m1 * m2, Rat(m1) * s2 + s1);
    functorial = functorial && lhs.moments() == rhs.moments();
    // iota [m,s]_* = [m,-s]_* iota
    MomentMeasure l2 = involution(affine_pushforward(mu, m1, s1));
    MomentMeasure r2 = affine_pushforward(involution(mu), m1, -s1);
    iota = iota && l2.moments() == r2.moments();
    invol = invol && involution(involution(mu)).moments() == mu.moments();
  }
  s.line("pushforward functoriality on 100 random", functorial);
  s.line("involution intertwining on 100 random", iota);
  s.line("involution is an involution", invol);
  return s.exit_code();
}

int verify_cohen_bridge() {
  Suite s;
  struct Case {
    long p, a, m;
  };
  for (Case t : {Case{3, 1, 5}, Case{5, 2, 3}, Case{7, 3, 5}}) {
    auto sc = structural(t.p);
    for (unsigned k = sc.e; k <= 2 * sc.e + 2; k += sc.e) {
      Padic sv = Padic::from_rat(Rat(1 - static_cast<long>(k)), t.p, 20);
      auto br = cohen_shiratani_bridge(t.a, t.m, t.p, 2 * t.m + 1, sv, 10, 256);
      s.line("bridge p=" + std::to_string(t.p) + " a=" + std::to_string(t.a) +
                 " m=" + std::to_string(t.m) + " s=1-" + std::to_string(k),
             same_padic(br.lhs, br.rhs), br.stabilized);
    }
  }
  return s.exit_code();
}

int verify_claim() {
  Suite s;
  std::mt19937 rng(424242);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  bool all = true;
  for (int i = 0; i < 500; ++i) {
    long p = primes[rng() % 6];
    long m = 2 + static_cast<long>(rng() % 200);
    while (m % p == 0) ++m;
    long a = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m - 1));
    auto cl = claim_r0(a, m, p);
    all = all && cl.verified;
  }
  s.line("claim r0 identity on 500 random (p,a,m)", all);
  return s.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hzm: Hurwitz zeta measures, p-adic L-values and checks"};
  app.require_subcommand(1);

  Common o;

  auto* cmd_moments = app.add_subcommand("moments", "power moment table");
  add_common(cmd_moments, o);

  auto* cmd_mahler =
      app.add_subcommand("mahler", "Mahler coefficients + integrality");
  add_common(cmd_mahler, o);

  long mass_t = 1;
  auto* cmd_mass = app.add_subcommand("mass", "coset masses at level p^t");
  add_common(cmd_mass, o);
  cmd_mass->add_option("--t", mass_t, "level exponent");

  unsigned long beta = 0;
  std::string s_text = "0";
  auto* cmd_lp = app.add_subcommand("lp", "L-value on a branch");
  add_common(cmd_lp, o);
  cmd_lp->add_option("--beta", beta, "branch");
  cmd_lp->add_option("--s", s_text, "argument (rational literal)");

  auto* cmd_zsh = app.add_subcommand("zeta-sh", "Hurwitz zeta value (p > 2)");
  add_common(cmd_zsh, o);
  cmd_zsh->add_option("--s", s_text, "argument (rational literal)");

  auto* cmd_cohen = app.add_subcommand("cohen", "two-variable zeta evaluators");
  cmd_cohen->require_subcommand(1);
  auto* cmd_ex11 = cmd_cohen->add_subcommand(
      "example11", "the p=11, a=3, m=106 bridge data table");
  std::string ex_fmt = "json";
  cmd_ex11->add_option("--format", ex_fmt, "json only")
      ->check(CLI::IsMember({"json"}));
  auto* cmd_zc = cmd_cohen->add_subcommand("zeta-c", "value on the C-domain");
  add_common(cmd_zc, o);
  cmd_zc->add_option("--beta", beta, "branch");
  cmd_zc->add_option("--s", s_text, "argument (rational literal)");
  std::string x_text = "3/5";
  unsigned chib_k = 2;
  auto* cmd_zzp = cmd_cohen->add_subcommand("zeta-zp", "value on Z_p");
  add_common(cmd_zzp, o, false);
  cmd_zzp->add_option("--x", x_text, "argument x (rational, p | x)");
  cmd_zzp->add_option("--beta", beta, "branch");
  cmd_zzp->add_option("--s", s_text, "argument (rational literal)");
  auto* cmd_chib = cmd_cohen->add_subcommand("chib", "twisted Bernoulli value");
  add_common(cmd_chib, o, false);
  cmd_chib->add_option("--k", chib_k, "degree");
  cmd_chib->add_option("--x", x_text, "argument x (rational in Z_p)");

  unsigned long adelic_level = 12, adelic_mod = 1000000;
  auto* cmd_adelic =
      app.add_subcommand("adelic", "finite-level product-assembled table");
  add_common(cmd_adelic, o);
  cmd_adelic->add_option("--level", adelic_level, "composite level");
  cmd_adelic->add_option("--mod", adelic_mod, "value modulus");

  std::string suite;
  unsigned kmax = 8;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite, "suite name")->required();
  cmd_verify->add_option("--kmax", kmax, "maximum weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_moments) {
      LpContext ctx = context_of(o);
      MomentMeasure mu = hurwitz_moments(ctx);
      json j = json::parse(mu.serialize());
      std::vector<std::vector<std::string>> rows;
      for (std::size_t n = 0; n < mu.count(); ++n)
        rows.push_back({std::to_string(n), rat_to_string(mu.moment(n))});
      emit(o, j, "n,moment", rows);
    } else if (*cmd_mahler) {
      LpContext ctx = context_of(o);
      MomentMeasure mu = hurwitz_moments(ctx, o.J + 1);
      auto cj = mahler_coefficients(mu, o.J);
      bool integral = true;
      json arr = json::array();
      std::vector<std::vector<std::string>> rows;
      for (std::size_t j = 0; j < cj.size(); ++j) {
        long v = cj[j] == 0 ? 0 : valuation(cj[j], ctx.p);
        integral = integral && v >= 0;
        arr.push_back({{"j", j},
                       {"coefficient", rat_to_string(cj[j])},
                       {"valuation", v}});
        rows.push_back({std::to_string(j), rat_to_string(cj[j]),
                        std::to_string(v)});
      }
      json j{{"coefficients", arr}, {"integral", integral}};
      emit(o, j, "j,coefficient,valuation", rows);
      if (!integral) return 1;
    } else if (*cmd_mass) {
      LpContext ctx = context_of(o);
      MomentMeasure mu = hurwitz_moments(ctx, o.J + 1);
      Int level = pow_int(ctx.p, static_cast<unsigned long>(mass_t));
      unsigned long n = mpz_get_ui(level.get_mpz_t());
      json arr = json::array();
      std::vector<std::vector<std::string>> rows;
      Padic total = Padic::zero(ctx.p, o.N);
      bool stable = true;
      for (unsigned long u = 0; u < n; ++u) {
        auto r = coset_mass_adaptive(mu, u, static_cast<unsigned>(mass_t),
                                     ctx.p, o.N, o.J);
        stable = stable && r.stabilized;
        total = total + r.value;
        arr.push_back({{"u", u}, {"mass", r.value.str()}});
        rows.push_back({std::to_string(u), r.value.str()});
      }
      bool partition = total.equals_rat(mu.moment(0));
      json j{{"masses", arr}, {"partition_ok", partition}};
      emit(o, j, "u,mass", rows);
      if (!stable) return kExitNotStabilized;
      if (!partition) return 1;
    } else if (*cmd_lp || *cmd_zsh) {
      LpContext ctx = context_of(o);
      Padic s = parse_s(s_text, ctx.p, o.N + 10);
      LpValue v = *cmd_lp ? lp_beta(ctx, beta, s) : shiratani_zeta(ctx, s);
      json j{{"value", v.value.str()},
             {"serialized", json::parse(v.value.serialize())},
             {"stabilized", v.stabilized},
             {"effective_prec", v.effective_prec}};
      emit(o, j, "value,stabilized",
           {{v.value.str(), std::to_string(v.stabilized)}});
      if (!v.stabilized) return kExitNotStabilized;
    } else if (*cmd_ex11) {
      Example11 ex = example11();
      json rows = json::array();
      for (const auto& r : ex.rows)
        rows.push_back({{"v", r.v},
                        {"numerator", r.num},
                        {"denominator", r.den},
                        {"unit", r.unit}});
      json j{{"a1", ex.a1}, {"r", ex.r}, {"terms", rows}};
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_zc) {
      LpContext ctx = context_of(o);
      Padic s = parse_s(s_text, ctx.p, o.N + 10);
      LpValue v = cohen_zeta_C(ctx, beta, s);
      emit(o, json{{"value", v.value.str()}, {"stabilized", v.stabilized}},
           "value,stabilized", {{v.value.str(), std::to_string(v.stabilized)}});
      if (!v.stabilized) return kExitNotStabilized;
    } else if (*cmd_zzp) {
      CohenConfig cfg{Int(o.p), o.N, o.J, 0};
      Padic s = parse_s(s_text, cfg.p, o.N + 10);
      LpValue v = cohen_zeta_Zp(rat_from_string(x_text), beta, s, cfg);
      emit(o, json{{"value", v.value.str()}, {"stabilized", v.stabilized}},
           "value,stabilized", {{v.value.str(), std::to_string(v.stabilized)}});
      if (!v.stabilized) return kExitNotStabilized;
    } else if (*cmd_chib) {
      Padic v = chi_bernoulli_teich(chib_k, rat_from_string(x_text), o.p, o.N);
      emit(o, json{{"value", v.str()}}, "value", {{v.str()}});
    } else if (*cmd_adelic) {
      Int c = o.c.empty() ? pick_c(o.m, Int(adelic_level), 1) : Int(o.c);
      std::vector<PrimeLevelComponent> parts;
      unsigned long rest = adelic_level;
      for (long pr = 2; rest > 1; ++pr) {
        if (rest % pr != 0) continue;
        unsigned t = 0;
        Int lvl(1);
        while (rest % pr == 0) rest /= pr, ++t, lvl *= pr;
        LpContext ctx = make_context(pr, o.a, o.m, c, o.N, o.K, o.J);
        MomentMeasure mu = hurwitz_moments(ctx, o.J + 1);
        PrimeLevelComponent comp{Int(pr), t, {}};
        long digits = o.N;
        while (pow_int(pr, static_cast<unsigned long>(digits)) < adelic_mod)
          ++digits;
        unsigned long n = mpz_get_ui(lvl.get_mpz_t());
        for (unsigned long u = 0; u < n; ++u) {
          auto r = coset_mass_adaptive(mu, u, t, Int(pr), digits, 512);
          comp.masses.push_back(r.value.residue(digits) % Int(adelic_mod));
        }
        parts.push_back(std::move(comp));
      }
      FiniteLevelMeasure table = finite_level(parts, adelic_level, adelic_mod);
      json j = json::parse(table.serialize());
      std::vector<std::vector<std::string>> rows;
      for (unsigned long u = 0; u < table.levelN; ++u)
        rows.push_back({std::to_string(u), table.masses[u].get_str()});
      emit(o, j, "u,mass", rows);
    } else if (*cmd_verify) {
      if (suite == "theorem1") return verify_theorem1(kmax);
      if (suite == "interpolation") return verify_interpolation(std::min(kmax, 10u));
      if (suite == "sigma-independence") return verify_sigma_independence();
      if (suite == "lemma53") return verify_lemma53(std::max(kmax, 20u));
      if (suite == "lemma43") return verify_lemma43(20);
      if (suite == "lemma56") return verify_lemma56();
      if (suite == "cocycle") return verify_cocycle();
      if (suite == "pushforward") return verify_pushforward();
      if (suite == "cohen-bridge") return verify_cohen_bridge();
      if (suite == "claim") return verify_claim();
      std::cerr << "unknown suite: " << suite << "\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
