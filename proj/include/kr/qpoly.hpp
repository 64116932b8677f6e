#pragma once

/*
  Sparse polynomials in q with arbitrary-precision integer coefficients and
  exact rational exponents. Exponents are rational (not just integral)
  because one twisted family defines its graded multiplicity through a
  folding that divides degrees by two; every other code path keeps them
  integral, and integral_exponents() lets callers assert that.
*/

#include <gmpxx.h>

#include <map>
#include <string>

namespace kr {

class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(const mpq_class& exp, const mpz_class& coeff = 1);

  void add_term(const mpq_class& exp, const mpz_class& coeff);

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
  friend QPolynomial operator+(QPolynomial x, const QPolynomial& y) {
    x += y;
    return x;
  }
  friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y);
  bool operator==(const QPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  bool integral_exponents() const;
  mpz_class coeff(const mpq_class& exp) const;
  mpz_class eval_one() const;  // sum of all coefficients

  QPolynomial inverse_q() const;                      // q -> 1/q
  QPolynomial scaled(const mpq_class& factor) const;  // q -> q^factor

  const std::map<mpq_class, mpz_class>& terms() const { return terms_; }

  /// Human-readable form with ascending exponents, e.g. "q^2 + q^3 + q^4".
  std::string str() const;

 private:
  std::map<mpq_class, mpz_class> terms_;  // exponent -> nonzero coefficient
};

/// Gaussian binomial [m + p choose m] as a polynomial in q^power.
/// Zero if m or p is negative; the count of partitions in an m x p box
/// graded by size when both are nonnegative.
QPolynomial gaussian_binomial(long m, long p, long power = 1);

}  // namespace kr
