/*
  QPolynomial arithmetic and the Gaussian binomial.

  The binomial is computed densely as product over i = 1..m of
  (1 - q^{p+i}) / (1 - q^i), with each division performed exactly by
  synthetic division (the remainder is asserted to vanish), then reindexed
  into the sparse representation with exponents multiplied by `power`.
*/

#include "kr/qpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace kr {

QPolynomial QPolynomial::monomial(const mpq_class& exp, const mpz_class& coeff) {
  QPolynomial p;
  p.add_term(exp, coeff);
  return p;
}

void QPolynomial::add_term(const mpq_class& exp, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
  QPolynomial r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
  return r;
}

bool QPolynomial::integral_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e.get_den() != 1) return false;
  return true;
}

mpz_class QPolynomial::coeff(const mpq_class& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class QPolynomial::eval_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QPolynomial QPolynomial::inverse_q() const {
  QPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(mpq_class(-e), c);
  return r;
}

QPolynomial QPolynomial::scaled(const mpq_class& factor) const {
  if (factor == 0 && !terms_.empty()) {
    QPolynomial r;
    r.add_term(0, eval_one());
    return r;
  }
  QPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(mpq_class(e * factor), c);
  return r;
}

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool show_coeff = mag != 1 || e == 0;
    if (show_coeff) os << mag.get_str();
    if (e != 0) {
      if (show_coeff) os << '*';
      os << 'q';
      if (e != 1) {
        if (e.get_den() == 1)
          os << '^' << e.get_num().get_str();
        else
          os << "^(" << e.get_num().get_str() << '/' << e.get_den().get_str() << ')';
      }
    }
  }
  return os.str();
}

QPolynomial gaussian_binomial(long m, long p, long power) {
  if (power < 1) throw std::invalid_argument("gaussian_binomial: power must be positive");
  if (m < 0 || p < 0) return QPolynomial::zero();

  // Dense coefficient vector of the running product; degree grows to m*p.
  std::vector<mpz_class> c{1};
  for (long i = 1; i <= m; ++i) {
    // Multiply by (1 - q^{p+i}).
    std::vector<mpz_class> f(c.size() + static_cast<size_t>(p + i), 0);
    for (size_t j = 0; j < c.size(); ++j) {
      f[j] += c[j];
      f[j + static_cast<size_t>(p + i)] -= c[j];
    }
    // Divide by (1 - q^i): g_j = f_j + g_{j-i}, top i coefficients must die.
    std::vector<mpz_class> g(f.size(), 0);
    for (size_t j = 0; j < f.size(); ++j) {
      g[j] = f[j];
      if (j >= static_cast<size_t>(i)) g[j] += g[j - static_cast<size_t>(i)];
    }
    for (size_t j = f.size() - static_cast<size_t>(i); j < f.size(); ++j)
      if (g[j] != 0) throw std::logic_error("gaussian_binomial: inexact division");
    g.resize(f.size() - static_cast<size_t>(i));
    c = std::move(g);
  }

  QPolynomial out;
  for (size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) out.add_term(mpq_class(static_cast<long>(j) * power), c[j]);
  return out;
}

}  // namespace kr
