#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zform {

// Exact arbitrary-precision integers and rationals. Every computation in this
// library is exact; no floating point is used anywhere in the algebraic core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
  if (!is_integer(q))
    throw std::domain_error("to_integer: not an integer: " + q.get_str());
  return q.get_num();
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int int_binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Binomial coefficient with an arbitrary rational upper argument:
// a (a-1) ... (a-k+1) / k!
inline Rat rat_binom(const Rat& a, unsigned long k) {
  Rat num = 1;
  for (unsigned long j = 0; j < k; ++j) num *= (a - Rat(static_cast<long>(j)));
  return num / Rat(factorial(k));
}

inline std::string render_rat(const Rat& q) { return q.get_str(); }

}  // namespace zform
