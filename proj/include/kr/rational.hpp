#pragma once

/* Small exact-arithmetic helpers on top of GMP's C++ wrappers. */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kr {

/// Canonicalized rational num/den. The two-argument mpq_class constructor
/// stores the pair verbatim, so comparisons would be wrong without this.
inline mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
  return z.get_si();
}

/// Exact conversion; throws if q has a nontrivial denominator.
inline long to_long(const mpq_class& q) {
  if (q.get_den() != 1) throw std::invalid_argument("to_long: not an integer: " + q.get_str());
  return to_long(mpz_class(q.get_num()));
}

}  // namespace kr
