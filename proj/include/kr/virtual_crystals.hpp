#pragma once

/*
  Row crystals realized inside a simply-laced ambient product.

  A factor B^{1,s} of the folded type contributes ambient factors per the
  orbit of node 1: a column-row pair B_Y^{2n-1,s} (x) B_Y^{1,s} when the
  ambient type is A_{2n-1}^(1) (at rank one the column degenerates to a
  second row realized on column counts), and a single row B_Y^{1, gamma_1 s}
  when it is D_{n+1}^(1). The folded operator at node i applies every
  ambient operator in iota(i), each gamma_i times.

  V^{1,s} is the closure of the ambient head under the folded operators;
  the per-family membership predicate (self-duality counts plus parities on
  the A-chain, evenness and truncation on the D-chain) must carve out the
  same set, and the arrow-propagated embedding must be an isomorphism onto
  it. The graded sum X^v divides ambient energies by gamma_0.
*/

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kr/crystals.hpp"
#include "kr/qpoly.hpp"
#include "kr/virtual_kleber.hpp"

namespace kr {

struct VirtualCrystal {
  AffineType x;
  std::vector<int> widths;  // folded-side factor widths, leftmost first
  EmbeddingData emb;
  int site_factors = 1;  // ambient factors per folded factor
  TensorCrystal vhat;
};

VirtualCrystal virtual_crystal(AffineType x, const std::vector<int>& widths);

// Folded operator at node i of the folded type; undefined as soon as one
// constituent ambient step is.
std::optional<TensorElt> vhat_op(const VirtualCrystal& v, const TensorElt& b, int i,
                                 bool lower);
long vhat_eps(const VirtualCrystal& v, const TensorElt& b, int i);
long vhat_phi(const VirtualCrystal& v, const TensorElt& b, int i);

// Orbit-equality and divisibility of the ambient string lengths at every
// folded node.
bool is_aligned(const VirtualCrystal& v, const TensorElt& b);

// Count form of the self-duality fixed point R(b-dual-star) = b on one
// column-row site; parities are layered on top per family.
bool site_self_dual(const KRElt& dualc, const KRElt& rowc);

// Per-site membership predicate for the whole product.
bool v_member(const VirtualCrystal& v, const TensorElt& b);

struct VGraph {
  std::vector<TensorElt> verts;  // discovery order from the ambient head
  std::map<TensorElt, int> index;
  std::vector<std::vector<int>> f_arc, e_arc;  // [folded node][vertex]
};

VGraph generate_V(const VirtualCrystal& v, long cap = 1000000);

// Arrow-propagated bijection from the folded-side product onto V; throws
// ConjectureViolation if sizes differ or arrows fail to match.
std::map<TensorElt, TensorElt> embedding_map(const VirtualCrystal& v);

// R on an ambient row (x) column pair, column pulled to the left.
std::pair<KRElt, KRElt> typeA_row_R(AffineType y, int s, const KRElt& rowc,
                                    const KRElt& colc);

// Ambient intrinsic energy scaled by 1/gamma_0.
mpq_class virtual_D(const VirtualCrystal& v, const TensorElt& b);

// Elements of V of ambient weight Psi(lambda) killed by every classical
// folded raising operator.
std::vector<TensorElt> v_restricted(const VirtualCrystal& v, const Weight& lambda);

QPolynomial xv_polynomial(const VirtualCrystal& v, const Weight& lambda);

}  // namespace kr
