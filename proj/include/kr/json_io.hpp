#pragma once

/*
  JSON and Graphviz renderings of trees, crystal graphs, and polynomials.

  Every emitter walks its input in a fixed order (node ids, then child ids;
  map iteration is already sorted), so identical inputs give identical bytes.
  Schemas for the JSON shapes live in docs/schemas/.
*/

#include <string>
#include <vector>

#include "json.hpp"
#include "kr/crystals.hpp"
#include "kr/kleber.hpp"
#include "kr/qpoly.hpp"
#include "kr/virtual_kleber.hpp"

namespace kr {

// Insertion-ordered so emitted keys read in the documented order.
using Json = nlohmann::ordered_json;

// {"terms": [{"exp": "3/2", "coeff": "4"}, ...], "pretty": "..."}.
// Exponents and coefficients are decimal strings; they can exceed long.
Json poly_json(const QPolynomial& p);

// Fundamental coordinates as a plain array.
Json weight_json(const Weight& w);

// [{"r": 1, "s": 2, "count": 1}, ...] sorted by (r, s).
Json tensor_json(const TensorSpec& B);

// One descending partition per classical node: [[2,1],[2],[]].
Json config_json(const Configuration& nu);

// Tree dump with per-node configuration and vacancy numbers. Pass the
// selection of a virtual tree to flag its encoding nodes and attach their
// devirtualized weights and configurations.
Json tree_json(const KleberTree& tree,
               const std::vector<SelectedNode>* selected = nullptr);
std::string tree_dot(const KleberTree& tree,
                     const std::vector<SelectedNode>* selected = nullptr);

// Vertices in discovery order plus all lowering arcs; raising arcs are the
// reverses and are not repeated.
Json graph_json(const CrystalGraph& g);
std::string graph_dot(const CrystalGraph& g);

}  // namespace kr
