#pragma once

/*
  Affine Dynkin data and weight-lattice arithmetic.

  Node numbering follows the standard affine diagrams (node 0 placement per
  family), encoded in build_dynkin() in root_data.cpp. Classical weights are
  stored in fundamental coordinates over I-bar = {1..n} (index a stored at
  slot a-1); root coordinates (coefficients of the simple roots alpha_a) are
  exact rationals computed through the cached inverse of the classical
  Cartan submatrix.

  Conventions:
    cartan[i][j] = 2 (alpha_i | alpha_j) / (alpha_i | alpha_i),
  so an edge of multiplicity m with the arrow pointing from i to j gives
  cartan[i][j] = -1 and cartan[j][i] = -m, and in fundamental coordinates
  alpha_j is column j of the Cartan matrix. The normalized invariant form is
    (alpha_i | alpha_j) = (a_i^dual / a_i) cartan[i][j],
  which makes every long root have square length 2r/a_0^dual.
*/

#include <gmpxx.h>

#include <vector>

#include "kr/types.hpp"

namespace kr {

// Classical weight in fundamental coordinates; w[a-1] is the coefficient of
// the a-th fundamental weight. May carry negative entries (differences).
using Weight = std::vector<long>;

// Element of the rational span of the simple roots alpha_1..alpha_n;
// rv[a-1] is the coefficient of alpha_a.
using RootVec = std::vector<mpq_class>;

struct DynkinData {
  AffineType type;
  std::vector<std::vector<int>> cartan;  // (n+1) x (n+1), indices 0..n
  std::vector<int> a;                    // Kac labels a_i
  std::vector<int> a_dual;               // dual Kac labels a_i^dual
  std::vector<int> t;                    // t_i = max(a_i/a_i^dual, a_0^dual)
  std::vector<int> t_dual;               // t_i^dual = max(a_i^dual/a_i, a_0)

  // Inverse of the classical Cartan submatrix (rows/columns 1..n), used for
  // fundamental <-> root coordinate changes; entry [a-1][b-1].
  std::vector<std::vector<mpq_class>> cartan_bar_inv;

  int n() const { return type.n; }
};

// Cached per type; the returned reference stays valid for the process
// lifetime. Throws UnsupportedType for invalid ranks.
const DynkinData& dynkin_data(AffineType t);

// Normalized invariant form on the classical root space:
// sum_{a,b} x_a y_b (alpha_a | alpha_b).
mpq_class inv_form(AffineType t, const RootVec& x, const RootVec& y);

// (alpha_a | alpha_b) for a, b in I-bar.
mpq_class inv_form_entry(AffineType t, int a, int b);

// Coefficients c with w = sum_a c_a alpha_a.
RootVec to_root_coords(AffineType t, const Weight& w);

// Inverse change of basis: fundamental coordinates of sum_a c_a alpha_a
// (exact rationals; integral iff the input lies in the weight lattice).
std::vector<mpq_class> to_fund_coords(AffineType t, const RootVec& c);

// True iff mu - nu is a nonnegative integral combination of simple roots.
bool dominates(AffineType t, const Weight& mu, const Weight& nu);

inline bool is_dominant(const Weight& w) {
  for (long c : w)
    if (c < 0) return false;
  return true;
}

// Small value helpers (componentwise).
Weight weight_add(const Weight& x, const Weight& y);
Weight weight_sub(const Weight& x, const Weight& y);
Weight weight_scale(long k, const Weight& x);
Weight zero_weight(int n);

// Generic exact linear solve A x = b over the rationals (Gaussian
// elimination); A must be square and invertible. Exposed for reuse by the
// fermionic module's auxiliary root systems.
std::vector<std::vector<mpq_class>> invert_matrix(const std::vector<std::vector<mpq_class>>& m);

std::string weight_str(const Weight& w);

}  // namespace kr
