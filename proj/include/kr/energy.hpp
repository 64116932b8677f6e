#pragma once

/*
  Combinatorial R matrices, local and intrinsic energy, and the graded
  character X(B, lambda; q) of classically restricted elements.

  R: B2 (x) B1 -> B1 (x) B2 is the unique map fixing u (x) u and commuting
  with every operator; it is constructed by propagating that seed along the
  arrows of the two-factor graph. The local energy H lives on the domain:
  H(u (x) u) = 0, classical arrows preserve it, and a raising 0-arrow adds
  -1 when it acts on the left factor both before and after R, +1 when it
  acts on the right in both, and 0 otherwise.

  On a product with factors written leftmost first, positions are counted
  from the right: position p is vector index L - p. R_p swaps positions
  p + 1 and p, carrying the factor widths along with the entries.
*/

#include <map>
#include <utility>
#include <vector>

#include "kr/crystals.hpp"
#include "kr/qpoly.hpp"

namespace kr {

struct RMap {
  KRSpec left, right;  // domain factors, leftmost first
  std::map<std::pair<KRElt, KRElt>, std::pair<KRElt, KRElt>> image;
  std::map<std::pair<KRElt, KRElt>, long> h;
};

// Cached per ordered pair; throws ConjectureViolation if the propagated
// image fails to close into an isomorphism or H is cycle-inconsistent.
const RMap& compute_R_H(const KRSpec& b2, const KRSpec& b1);

// Factors paired with their current entries so R moves can be chained.
struct TaggedTensor {
  std::vector<KRSpec> specs;
  TensorElt elts;
};

void apply_R(TaggedTensor& t, int p);
long local_H(const TaggedTensor& t, int p);

// Elements with phi_i = 0 classically and phi_0 equal to the level.
std::vector<KRElt> find_bnatural(const KRSpec& spec);

// D on one factor, normalized so the head scores zero: pairs each element
// against the unique minimizing partner. Throws when it is not unique.
const std::map<KRElt, long>& intrinsic_D_site(const KRSpec& spec);

long intrinsic_D(const TensorCrystal& B, const TensorElt& b);

// X(B, lambda; q) = sum of q^D over classically restricted elements.
QPolynomial x_polynomial(const TensorCrystal& B, const Weight& lambda);

}  // namespace kr
