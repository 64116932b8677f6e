#pragma once

/*
  Single-row affine crystals B^{1,s} for the nonexceptional families, the
  type-A column crystal B^{m,s} realized through column complements, tensor
  products with their folded operator rule, and the reachability graph.

  Elements are stored as letter-count vectors over the classical alphabet
  of the factor:

    A row        x_1 .. x_{m+1}                  (m+1 slots)
    A dual row   y*_1 .. y*_{m+1}                (m+1 slots; y*_j counts
                 columns missing the letter j, ordered (m+1)* < .. < 1*)
    B row        x_1 .. x_n  x_o  xbar_n .. xbar_1   (2n+1 slots, x_o <= 1)
    C row        x_1 .. x_n  xbar_n .. xbar_1        (2n slots)
    D row        likewise, with x_n * xbar_n = 0

  A weakly increasing word is recovered by reading the alphabet in order,
  so counts are a canonical form. Operators act by transferring one unit
  between adjacent slots (two units for the length-changing rules); a
  result is undefined exactly when the new counts leave the set above or
  the word length leaves the family's allowed set:

    exact s          A rows and duals; B_n^{(1)}, D_n^{(1)}, A_{2n-1}^{(2)}
    s, s-1, .., 0    A_{2n}^{(2)}, D_{n+1}^{(2)}
    s, s-2, ..       C_n^{(1)}, A_{2n}^{(2)+}

  Tensor factors are stored leftmost first, matching the written product
  B_L x .. x B_1; energy conventions number positions from the right, so
  position p lives at vector index L - p.
*/

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kr/root_data.hpp"

namespace kr {

enum class RowKind { ARow, ADualRow, BRow, CRow, DRow };

// One tensor factor B^{r,s}. Only r = 1 carries operator rules, except the
// type-A column factor B^{m,s} selected by dual = true.
struct KRSpec {
  AffineType type;
  int s = 1;
  bool dual = false;

  auto operator<=>(const KRSpec&) const = default;

  int r() const { return dual ? type.n : 1; }
};

using KRElt = std::vector<long>;

RowKind row_kind(const KRSpec& spec);
int slot_count(const KRSpec& spec);

// Word lengths the family admits below width s, ascending.
std::vector<long> allowed_lengths(const KRSpec& spec);

bool kr_valid(const KRSpec& spec, const KRElt& c);

// The classically highest element: 1^s, resp. ((m+1)*)^s for a dual row.
KRElt kr_u(const KRSpec& spec);

// Every element, lexicographic in the count vector within each length,
// shorter words first.
std::vector<KRElt> kr_set(const KRSpec& spec);

// e_i (lower = false) or f_i (lower = true); i = 0 is the affine operator.
std::optional<KRElt> kr_op(const KRSpec& spec, const KRElt& c, int i, bool lower);
long kr_eps(const KRSpec& spec, const KRElt& c, int i);
long kr_phi(const KRSpec& spec, const KRElt& c, int i);

// Classical weight in fundamental coordinates of the deleted-node-0
// subalgebra (rank n slots).
Weight kr_weight(const KRSpec& spec, const KRElt& c);

std::string elt_str(const KRSpec& spec, const KRElt& c);

// Reverses the alphabet in place: x_i -> x_{m+2-i}. Together with factor
// reversal this realizes the * involution on type-A tensor words.
KRElt star_elt(const KRSpec& spec, const KRElt& c);

// Column-complement duality of type A: a row of width s maps to a column
// factor on identical counts and back. wt(b~) = -wt(b) and e_i(b~) = (f_i b)~.
KRSpec dual_spec(const KRSpec& spec);

struct TensorCrystal {
  AffineType type;
  std::vector<KRSpec> factors;  // leftmost written factor first
};

using TensorElt = std::vector<KRElt>;

// B^{1,s} tensor over the common type; widths leftmost first.
TensorCrystal row_tensor(AffineType t, const std::vector<int>& widths);

TensorElt tensor_u(const TensorCrystal& B);
bool tensor_valid(const TensorCrystal& B, const TensorElt& b);
std::optional<TensorElt> tensor_op(const TensorCrystal& B, const TensorElt& b, int i,
                                   bool lower);
long tensor_eps(const TensorCrystal& B, const TensorElt& b, int i);
long tensor_phi(const TensorCrystal& B, const TensorElt& b, int i);
Weight tensor_weight(const TensorCrystal& B, const TensorElt& b);
std::string tensor_elt_str(const TensorCrystal& B, const TensorElt& b);

// Dual of a product reverses the factor order: counts are untouched.
TensorCrystal dual_crystal(const TensorCrystal& B);
TensorElt dual_elt(const TensorElt& b);

// Full underlying set (product of the factor sets, leftmost slowest).
std::vector<TensorElt> tensor_set(const TensorCrystal& B);

// Arrows under all e_i/f_i from the highest element. Vertices appear in
// discovery order; arc tables hold vertex indices or -1.
struct CrystalGraph {
  TensorCrystal crystal;
  std::vector<TensorElt> verts;
  std::map<TensorElt, int> index;
  std::vector<std::vector<int>> f_arc;  // [i][v]
  std::vector<std::vector<int>> e_arc;
};

CrystalGraph generate_graph(const TensorCrystal& B, long cap = 1000000);

// Elements of weight lambda killed by every classical raising operator.
std::vector<TensorElt> restricted_paths(const TensorCrystal& B, const Weight& lambda);

// min over the crystal of sum_i a*_i eps_i, the level of the associated
// perfect-crystal candidate.
long crystal_level(const TensorCrystal& B);

}  // namespace kr
