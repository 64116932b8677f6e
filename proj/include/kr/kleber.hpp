#pragma once

/*
  Tree algorithm computing admissible configurations for untwisted types
  with simply-laced classical subdiagram, plus the direct (exponential)
  enumeration used as an independent cross-check.

  The tree: the root carries weight 0; at iteration ell every node gains
  sum_a Lambda_a sum_{i>=ell} L_i^{(a)}, then children attach to depth
  ell-1 nodes. A child's weight tau must be dominant, distinct from and
  dominated by the parent's current weight mu, and for non-root parents the
  new edge mu - tau must be componentwise at most the parent's own edge (in
  root coordinates). Node weights reported here are the final ones, i.e.
  creation weight plus all column additions of later iterations.

  A node at depth p with path edges D_1,...,D_p (root coordinates, D_i
  into the depth-i node) encodes the configuration

      m_i^{(a)} = (D_i)_a - (D_{i+1})_a   (D_j = 0 for j > p),

  which is nonnegative precisely because edges weakly decrease along paths.
*/

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kr/root_data.hpp"

namespace kr {

// Tensor product content: (r,s) -> number of factors B^{r,s}. So the count
// at (a,i) is L_i^{(a)}.
using TensorSpec = std::map<std::pair<int, int>, long>;

// Configuration nu: one map per classical node a (index a-1) sending a row
// length i to its multiplicity m_i^{(a)} > 0.
using Configuration = std::vector<std::map<long, long>>;

inline long config_m(const Configuration& nu, int a, long i) {
  auto it = nu[a - 1].find(i);
  return it == nu[a - 1].end() ? 0 : it->second;
}

std::string config_str(const Configuration& nu);
std::string tensor_str(const TensorSpec& B);

// Throws UnsupportedType/invalid_argument unless every factor (r,s) has
// 1 <= r <= rank, s >= 1, count >= 1.
void validate_tensor(AffineType t, const TensorSpec& B);

struct KleberNode {
  Weight creation;         // weight when the node was attached
  Weight final_wt;         // creation plus all later column additions
  std::vector<long> edge;  // root coordinates of (parent - this); empty at root
  int depth = 0;
  int parent = -1;  // index into KleberTree::nodes
  std::vector<int> children;
};

struct KleberTree {
  AffineType type;    // ambient type the tree lives in
  TensorSpec tensor;  // factor content used to build it
  std::vector<KleberNode> nodes;  // nodes[0] is the root; depth-ordered
};

// Extra admission constraints layered onto the child rule by the virtual
// algorithm. Node index sets refer to the ambient classical diagram.
struct VirtualConstraints {
  // Child weights must have equal fundamental coordinates within each group.
  std::vector<std::vector<int>> symmetric_orbits;
  // For each (gamma, group): when the parent depth is not a multiple of
  // gamma, the new edge must repeat the parent's edge on the group.
  std::vector<std::pair<int, std::vector<int>>> repeat_groups;
};

/// Builds the tree for type t (must be untwisted with simply-laced
/// classical part). With a target weight, branches that cannot reach the
/// target are pruned: a child is kept only if its final weight dominates
/// the target, and dropped if some root coordinate of (final - target) is
/// positive where the new edge is zero (edges only shrink down a path, so
/// that coordinate could never be worked off). Throws ResourceLimit when
/// the node count exceeds node_cap.
KleberTree kleber_tree(AffineType t, const TensorSpec& B, const Weight* target = nullptr,
                       const VirtualConstraints* vc = nullptr, long node_cap = 1000000);

/// Configuration encoded by the path from the root to nodes[node].
Configuration path_to_config(const KleberTree& tree, int node);

/// Configurations of all nodes with final weight lambda, in node order.
/// Complete for the tree's target (or any lambda on an untargeted tree).
std::vector<Configuration> configs(const KleberTree& tree, const Weight& lambda);

/// Direct enumeration: solve the configuration constraint for the row
/// totals, enumerate all partition tuples, keep the admissible ones.
/// Exponential; intended as an oracle at small sizes. Sorted output.
std::vector<Configuration> brute_force_configs(AffineType t, const TensorSpec& B,
                                               const Weight& lambda);

}  // namespace kr
