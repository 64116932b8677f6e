/*
  JSON/DOT emitters. The DOT writers target plain `dot -Tsvg`: box nodes,
  edge labels for tree steps or operator indices, double periphery on
  selected nodes of a virtual tree.
*/

#include "kr/json_io.hpp"

#include <set>
#include <sstream>

#include "kr/fermionic.hpp"

namespace kr {

namespace {

// Vacancy numbers at the occupied rows of nu, as [a, i, p] triples. The
// tree's own type is always one that the direct formula supports.
Json vacancy_json(AffineType t, const TensorSpec& B, const Configuration& nu) {
  Json out = Json::array();
  for (size_t a = 1; a <= nu.size(); ++a)
    for (const auto& [len, mult] : nu[a - 1]) {
      (void)mult;
      out.push_back({static_cast<long>(a), len, vacancy(t, B, nu, static_cast<int>(a), len)});
    }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json poly_json(const QPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : p.terms())
    terms.push_back({{"exp", exp.get_str()}, {"coeff", coeff.get_str()}});
  return {{"terms", terms}, {"pretty", p.str()}};
}

Json weight_json(const Weight& w) { return Json(w); }

Json tensor_json(const TensorSpec& B) {
  Json out = Json::array();
  for (const auto& [rs, count] : B)
    out.push_back({{"r", rs.first}, {"s", rs.second}, {"count", count}});
  return out;
}

Json config_json(const Configuration& nu) {
  Json out = Json::array();
  for (const auto& part : nu) {
    Json rows = Json::array();
    for (auto it = part.rbegin(); it != part.rend(); ++it)
      for (long r = 0; r < it->second; ++r) rows.push_back(it->first);
    out.push_back(rows);
  }
  return out;
}

Json tree_json(const KleberTree& tree, const std::vector<SelectedNode>* selected) {
  Json nodes = Json::array();
  for (size_t id = 0; id < tree.nodes.size(); ++id) {
    const KleberNode& nd = tree.nodes[id];
    const Configuration nu = path_to_config(tree, static_cast<int>(id));
    Json j = {{"id", static_cast<long>(id)},
              {"parent", nd.parent},
              {"depth", nd.depth},
              {"weight", weight_json(nd.final_wt)},
              {"edge", weight_json(nd.edge)},
              {"config", config_json(nu)},
              {"vacancies", vacancy_json(tree.type, tree.tensor, nu)}};
    if (selected) {
      const SelectedNode* hit = nullptr;
      for (const SelectedNode& s : *selected)
        if (s.node == static_cast<int>(id)) hit = &s;
      j["selected"] = hit != nullptr;
      if (hit) {
        j["x_weight"] = weight_json(hit->x_weight);
        j["x_config"] = config_json(hit->x_config);
      }
    }
    nodes.push_back(std::move(j));
  }
  return {{"kind", selected ? "virtual-kleber-tree" : "kleber-tree"},
          {"type", tree.type.str()},
          {"tensor", tensor_json(tree.tensor)},
          {"node_count", static_cast<long>(tree.nodes.size())},
          {"selected_count",
           selected ? Json(static_cast<long>(selected->size())) : Json(nullptr)},
          {"nodes", std::move(nodes)}};
}

std::string tree_dot(const KleberTree& tree, const std::vector<SelectedNode>* selected) {
  std::set<int> picked;
  if (selected)
    for (const SelectedNode& s : *selected) picked.insert(s.node);

  std::ostringstream os;
  os << "digraph tree {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t id = 0; id < tree.nodes.size(); ++id) {
    const KleberNode& nd = tree.nodes[id];
    os << "  n" << id << " [label=\"" << dot_escape(weight_str(nd.final_wt)) << "\\n"
       << dot_escape(config_str(path_to_config(tree, static_cast<int>(id))));
    os << "\"";
    if (picked.count(static_cast<int>(id)))
      os << ", peripheries=2, style=filled, fillcolor=lightgrey";
    os << "];\n";
  }
  for (size_t id = 0; id < tree.nodes.size(); ++id)
    for (int child : tree.nodes[id].children)
      os << "  n" << id << " -> n" << child << " [label=\""
         << dot_escape(weight_str(tree.nodes[child].edge)) << "\"];\n";
  os << "}\n";
  return os.str();
}

Json graph_json(const CrystalGraph& g) {
  Json factors = Json::array();
  for (const KRSpec& sp : g.crystal.factors)
    factors.push_back({{"r", sp.r()}, {"s", sp.s}});

  Json verts = Json::array();
  for (size_t v = 0; v < g.verts.size(); ++v)
    verts.push_back({{"id", static_cast<long>(v)},
                     {"elt", tensor_elt_str(g.crystal, g.verts[v])},
                     {"weight", weight_json(tensor_weight(g.crystal, g.verts[v]))}});

  Json arcs = Json::array();
  for (size_t i = 0; i < g.f_arc.size(); ++i)
    for (size_t v = 0; v < g.f_arc[i].size(); ++v)
      if (g.f_arc[i][v] >= 0)
        arcs.push_back({{"i", static_cast<long>(i)},
                        {"from", static_cast<long>(v)},
                        {"to", g.f_arc[i][v]}});

  return {{"kind", "crystal-graph"},
          {"type", g.crystal.type.str()},
          {"factors", std::move(factors)},
          {"vertex_count", static_cast<long>(g.verts.size())},
          {"vertices", std::move(verts)},
          {"arcs", std::move(arcs)}};
}

std::string graph_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t v = 0; v < g.verts.size(); ++v)
    os << "  v" << v << " [label=\"" << dot_escape(tensor_elt_str(g.crystal, g.verts[v]))
       << "\"];\n";
  for (size_t i = 0; i < g.f_arc.size(); ++i)
    for (size_t v = 0; v < g.f_arc[i].size(); ++v)
      if (g.f_arc[i][v] >= 0)
        os << "  v" << v << " -> v" << g.f_arc[i][v] << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace kr
