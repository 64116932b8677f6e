#pragma once

/*
  Realization of non-simply-laced and twisted types inside a simply-laced
  ambient type, and the tree algorithm run there.

  Each supported type X maps into an ambient Y via a folding: iota sends an
  X node to its orbit of Y nodes and gamma scales widths/weights. The tree
  in Y is grown with two extra admission rules (child weights symmetric
  under the folding automorphism; edges repeated on the scaled nodes except
  every gamma-th iteration), and afterwards the nodes encoding X data are
  selected by depth or by a vanishing edge condition.
*/

#include <vector>

#include "kr/fermionic.hpp"
#include "kr/kleber.hpp"
#include "kr/qpoly.hpp"

namespace kr {

struct EmbeddingData {
  AffineType x;
  AffineType y;
  std::vector<std::vector<int>> iota;  // by X node 0..n: image Y nodes, ascending
  std::vector<int> gamma;              // by X node 0..n
  // Largest width multiplier over classical X nodes. This equals gamma there
  // except at node n of the A_{2n}^{(2)} family, whose row lengths stay put.
  int gamma_max = 1;

  // sigma-orbits of the classical Y diagram = {iota(a) : a classical}.
  std::vector<std::vector<int>> orbits() const;
};

/// Folding data for X; throws UnsupportedType when X is simply laced (no
/// realization needed) or A_1^{(1)}.
const EmbeddingData& embedding(AffineType x);

/// Image of a classical X-weight: hat w_b = gamma_a w_a for b in iota(a).
Weight psi_weight(AffineType x, const Weight& lambda);

/// Preimage; throws std::invalid_argument if what is not an image (orbit
/// coordinates unequal or not divisible by gamma).
Weight devirtualize_weight(AffineType x, const Weight& what);

/// True iff what lies in the image of psi_weight.
bool is_psi_image(AffineType x, const Weight& what);

/// Ambient factor content: B^{a,i} contributes factors B^{b, gamma_a i}
/// for b in iota(a), except that in the A_{2n}^{(2)} family node n keeps
/// width i with doubled count, and at rank 1 in the dagger family the
/// single image factor is doubled.
TensorSpec lift_L(AffineType x, const TensorSpec& B);

/// Tree in the ambient type grown under the extra admission rules; with
/// lambda given, target-pruned toward psi_weight(lambda).
KleberTree virtual_kleber_tree(AffineType x, const TensorSpec& B, const Weight* lambda = nullptr,
                               long node_cap = 1000000);

struct SelectedNode {
  int node;               // index into the ambient tree
  Weight x_weight;        // devirtualized final weight
  Configuration y_config;  // configuration in the ambient tree
  Configuration x_config;  // its preimage under the width/orbit scaling
};

/// Nodes encoding X-configurations: depth a multiple of gamma_max, or edge
/// vanishing on iota(a) for every classical a whose width multiplier equals
/// gamma_max > 1.
std::vector<SelectedNode> select_nodes(AffineType x, const KleberTree& vtree);

/// Width/orbit scaling of configurations: m-hat at (b, gamma_a i) equals m
/// at (a, i) for b in iota(a); in the A_{2n}^{(2)} family node n keeps its
/// widths. devirtualize_config validates grid support and orbit equality.
Configuration virtualize_config(AffineType x, const Configuration& nu);
Configuration devirtualize_config(AffineType x, const Configuration& nuhat);

/// Same scaling on rigged objects: riggings multiply by gamma_a (by 2 on
/// node n in the A_{2n}^{(2)} family).
RiggedConfiguration virtualize_rigged(AffineType x, const RiggedConfiguration& rc);
RiggedConfiguration devirtualize_rigged(AffineType x, const RiggedConfiguration& rchat);

/// M(B,lambda;q) computed entirely on the ambient side: over selected
/// nodes of weight psi(lambda), q^{cc/gamma_0} times one box-counting
/// factor per X block, exponents scaled by |iota(a)| gamma_a / gamma_0.
/// The only route for the dagger family; exponents may be half-integral
/// there and are reported exactly.
QPolynomial m_polynomial_via_virtual(AffineType x, const TensorSpec& B, const Weight& lambda);

/// Subtree of `tree` spanned by the root, the marked nodes, and their
/// ancestors (the form in which trees are usually drawn).
KleberTree prune_to_marked(const KleberTree& tree, const std::vector<int>& marked);

}  // namespace kr
