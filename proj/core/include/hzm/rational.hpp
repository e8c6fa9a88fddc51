#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hzm {

using Int = mpz_class;
using Rat = mpq_class;

// num/den with den > 0, reduced. mpq_class keeps values canonical after
// arithmetic; this constructor canonicalizes the raw pair.
inline Rat make_rat(Int num, Int den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// Exponent of p in n. n must be nonzero.
long valuation(const Int& n, const Int& p);
// v_p(num) - v_p(den). r must be nonzero.
long valuation(const Rat& r, const Int& p);

bool is_prime(const Int& n);

// "num/den" in base 10, "/den" omitted when den = 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(std::string_view s);

}  // namespace hzm
