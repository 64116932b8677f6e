/*
  Affine Cartan matrices, Kac labels, and the derived scaling constants for
  all supported families, plus exact coordinate changes on the classical
  weight lattice.

  The label tables are hardcoded and cross-checked at construction time:
  A a = 0, a^dual A = 0, symmetrizability of diag(a^dual/a) A, integrality
  of the t constants, and the long-root normalization (alpha|alpha) =
  2 * twist / a_0^dual. A typo in a table therefore aborts the first use of
  the type instead of silently corrupting downstream counts.
*/

#include "kr/root_data.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "kr/rational.hpp"

namespace kr {

namespace {

void table_check(bool ok, const char* what, const AffineType& t) {
  if (!ok)
    throw std::logic_error("dynkin table inconsistent for " + t.str() + ": " + what);
}

DynkinData build_dynkin(AffineType t) {
  t.validate();
  const int n = t.n;
  const int N = n + 1;

  DynkinData d;
  d.type = t;
  d.cartan.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i) d.cartan[i][i] = 2;

  auto single = [&](int i, int j) { d.cartan[i][j] = d.cartan[j][i] = -1; };
  // Edge of multiplicity m with the arrow pointing from i to j.
  auto arrow = [&](int i, int j, int m) {
    d.cartan[i][j] = -1;
    d.cartan[j][i] = -m;
  };
  auto chain = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) single(i, i + 1);
  };

  std::vector<int>& a = d.a;
  std::vector<int>& av = d.a_dual;
  a.assign(N, 1);
  av.assign(N, 1);

  switch (t.family) {
    case Family::A1:
      if (n == 1) {
        d.cartan[0][1] = d.cartan[1][0] = -2;
      } else {
        chain(0, n);
        single(0, n);
      }
      break;
    case Family::B1:
      single(0, 2);
      chain(1, n - 1);
      arrow(n - 1, n, 2);
      for (int i = 2; i <= n; ++i) a[i] = 2;
      av = a;
      av[n] = 1;
      break;
    case Family::C1:
      arrow(0, 1, 2);
      chain(1, n - 1);
      arrow(n, n - 1, 2);
      for (int i = 1; i < n; ++i) a[i] = 2;
      break;
    case Family::D1:
      single(0, 2);
      chain(1, n - 1);
      single(n - 2, n);
      for (int i = 2; i <= n - 2; ++i) a[i] = 2;
      av = a;
      break;
    case Family::E61:
      chain(1, 5);
      single(3, 6);
      single(0, 6);
      a = {1, 1, 2, 3, 2, 1, 2};
      av = a;
      break;
    case Family::E71:
      chain(0, 6);
      single(3, 7);
      a = {1, 2, 3, 4, 3, 2, 1, 2};
      av = a;
      break;
    case Family::E81:
      chain(0, 7);
      single(5, 8);
      a = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      av = a;
      break;
    case Family::F41:
      chain(0, 2);
      arrow(2, 3, 2);
      single(3, 4);
      a = {1, 2, 3, 4, 2};
      av = {1, 2, 3, 2, 1};
      break;
    case Family::G21:
      single(0, 1);
      arrow(1, 2, 3);
      a = {1, 2, 3};
      av = {1, 2, 1};
      break;
    case Family::A2Even:
      if (n == 1) {
        arrow(1, 0, 4);
      } else {
        arrow(1, 0, 2);
        chain(1, n - 1);
        arrow(n, n - 1, 2);
      }
      for (int i = 0; i < n; ++i) a[i] = 2;
      for (int i = 1; i <= n; ++i) av[i] = 2;
      break;
    case Family::A2EvenDag:
      if (n == 1) {
        arrow(0, 1, 4);
      } else {
        arrow(0, 1, 2);
        chain(1, n - 1);
        arrow(n - 1, n, 2);
      }
      for (int i = 1; i <= n; ++i) a[i] = 2;
      for (int i = 0; i < n; ++i) av[i] = 2;
      break;
    case Family::A2Odd:
      single(0, 2);
      chain(1, n - 1);
      arrow(n, n - 1, 2);
      for (int i = 2; i < n; ++i) a[i] = 2;
      av = a;
      av[n] = 2;
      break;
    case Family::D2:
      arrow(1, 0, 2);
      chain(1, n - 1);
      arrow(n - 1, n, 2);
      for (int i = 1; i < n; ++i) av[i] = 2;
      break;
    case Family::E62:
      chain(0, 2);
      arrow(3, 2, 2);
      single(3, 4);
      a = {1, 2, 3, 2, 1};
      av = {1, 2, 3, 4, 2};
      break;
    case Family::D43:
      single(0, 1);
      arrow(2, 1, 3);
      a = {1, 2, 1};
      av = {1, 2, 3};
      break;
  }

  // Null vector conditions pin both label tables against the matrix.
  for (int i = 0; i < N; ++i) {
    long row = 0, col = 0;
    for (int j = 0; j < N; ++j) {
      row += static_cast<long>(d.cartan[i][j]) * a[j];
      col += static_cast<long>(av[j]) * d.cartan[j][i];
    }
    table_check(row == 0, "A a != 0", t);
    table_check(col == 0, "a^dual A != 0", t);
  }
  // Symmetrizability with the weights a^dual/a.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      table_check(static_cast<long>(av[i]) * d.cartan[i][j] * a[j] ==
                      static_cast<long>(av[j]) * d.cartan[j][i] * a[i],
                  "diag(a^dual/a) A not symmetric", t);
  // Long-root normalization of the induced classical form. Skipped for the
  // rank-1 dagger type, whose classical subsystem contains no long root.
  if (!(t.family == Family::A2EvenDag && n == 1)) {
    mpq_class longest = 0;
    for (int i = 1; i <= N - 1; ++i) longest = std::max(longest, frac(2 * av[i], a[i]));
    table_check(longest == frac(2 * t.twist(), av[0]), "long-root norm != 2 r / a_0^dual", t);
  }

  d.t.assign(N, 0);
  d.t_dual.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    mpq_class ti = std::max(frac(a[i], av[i]), mpq_class(av[0]));
    mpq_class tvi = std::max(frac(av[i], a[i]), mpq_class(a[0]));
    table_check(ti.get_den() == 1 && tvi.get_den() == 1, "t constants not integral", t);
    d.t[i] = static_cast<int>(ti.get_num().get_si());
    d.t_dual[i] = static_cast<int>(tvi.get_num().get_si());
  }

  std::vector<std::vector<mpq_class>> abar(n, std::vector<mpq_class>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) abar[i - 1][j - 1] = d.cartan[i][j];
  d.cartan_bar_inv = invert_matrix(abar);

  return d;
}

}  // namespace

const DynkinData& dynkin_data(AffineType t) {
  static std::map<AffineType, std::unique_ptr<DynkinData>> cache;
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<DynkinData>(build_dynkin(t))).first;
  return *it->second;
}

std::vector<std::vector<mpq_class>> invert_matrix(const std::vector<std::vector<mpq_class>>& m) {
  const size_t n = m.size();
  auto work = m;
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw std::invalid_argument("invert_matrix: matrix not square");
    inv[i][i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("invert_matrix: matrix singular");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class p = work[col][col];
    for (size_t j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      const mpq_class f = work[row][col];
      for (size_t j = 0; j < n; ++j) {
        work[row][j] -= f * work[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

mpq_class inv_form_entry(AffineType t, int a, int b) {
  const DynkinData& d = dynkin_data(t);
  if (a < 1 || a > d.n() || b < 1 || b > d.n())
    throw std::out_of_range("inv_form_entry: index outside classical diagram");
  return frac(d.a_dual[a] * d.cartan[a][b], d.a[a]);
}

mpq_class inv_form(AffineType t, const RootVec& x, const RootVec& y) {
  const DynkinData& d = dynkin_data(t);
  const int n = d.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("inv_form: vector length != rank");
  mpq_class s = 0;
  for (int a = 1; a <= n; ++a) {
    if (x[a - 1] == 0) continue;
    for (int b = 1; b <= n; ++b) {
      if (d.cartan[a][b] == 0 || y[b - 1] == 0) continue;
      s += x[a - 1] * inv_form_entry(t, a, b) * y[b - 1];
    }
  }
  return s;
}

RootVec to_root_coords(AffineType t, const Weight& w) {
  const DynkinData& d = dynkin_data(t);
  const int n = d.n();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("to_root_coords: weight length != rank");
  RootVec c(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w[b] != 0) c[a] += d.cartan_bar_inv[a][b] * w[b];
  return c;
}

std::vector<mpq_class> to_fund_coords(AffineType t, const RootVec& c) {
  const DynkinData& d = dynkin_data(t);
  const int n = d.n();
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("to_fund_coords: vector length != rank");
  std::vector<mpq_class> f(n, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (c[b - 1] != 0) f[a - 1] += d.cartan[a][b] * c[b - 1];
  return f;
}

bool dominates(AffineType t, const Weight& mu, const Weight& nu) {
  RootVec c = to_root_coords(t, weight_sub(mu, nu));
  for (const mpq_class& x : c)
    if (x < 0 || x.get_den() != 1) return false;
  return true;
}

Weight weight_add(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw std::invalid_argument("weight_add: length mismatch");
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Weight weight_sub(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw std::invalid_argument("weight_sub: length mismatch");
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Weight weight_scale(long k, const Weight& x) {
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = k * x[i];
  return r;
}

Weight zero_weight(int n) { return Weight(static_cast<size_t>(n), 0); }

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace kr
