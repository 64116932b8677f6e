/*
  Command line front end.

    kr m       graded multiplicity M(B, lambda; q) and configuration count
    kr x       graded sum X(B, lambda; q) over classically restricted paths
    kr tree    admissible-weight tree for a simply-laced type
    kr vtree   ambient tree of a folded type, encoding nodes flagged
    kr crystal full arrow graph of a row tensor
    kr verify  self-check matrix over a named budget

  Tensor factors are written left to right exactly as in the written
  product B^{r1,s1} (x) B^{r2,s2} (x) ...; note the energy machinery counts
  exchange positions from the right.

  Exit codes: 0 ok, 1 usage/parse error, 2 unsupported or malformed input,
  3 generation cap exceeded, 4 per-instance conjecture check failed; verify
  exits with min(failures, 125).
*/

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kr/crystals.hpp"
#include "kr/energy.hpp"
#include "kr/fermionic.hpp"
#include "kr/json_io.hpp"
#include "kr/kleber.hpp"
#include "kr/verify.hpp"
#include "kr/virtual_kleber.hpp"

namespace {

using namespace kr;

std::vector<long> parse_longs(const std::string& s, const char* what) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = std::min(s.find(',', pos), s.size());
    const std::string item = s.substr(pos, comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected comma-separated integers, got '" +
                                  s + "'");
    }
    pos = comma + 1;
  }
  return out;
}

// Factors arrive as "r,s" tokens, leftmost written factor first.
TensorSpec parse_tensor(const std::vector<std::string>& items) {
  TensorSpec B;
  for (const std::string& item : items) {
    const std::vector<long> rs = parse_longs(item, "--tensor");
    if (rs.size() != 2) throw std::invalid_argument("--tensor: each factor must be 'r,s'");
    B[{static_cast<int>(rs[0]), rs[1]}] += 1;
  }
  return B;
}

Weight parse_weight(const std::string& s, int n) {
  const Weight w = parse_longs(s, "--weight");
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("--weight: expected " + std::to_string(n) +
                                " fundamental coordinates");
  return w;
}

// Row widths for the path side: factors must all be single rows B^{1,s}.
std::vector<int> row_widths(const std::vector<std::string>& items) {
  std::vector<int> widths;
  for (const std::string& item : items) {
    const std::vector<long> rs = parse_longs(item, "--tensor");
    if (rs.size() != 2) throw std::invalid_argument("--tensor: each factor must be 'r,s'");
    if (rs[0] != 1)
      throw std::invalid_argument(
          "the path side is implemented for single-row factors B^{1,s} of the nonexceptional "
          "families only; factor B^{" +
          std::to_string(rs[0]) + "," + std::to_string(rs[1]) + "} is out of scope");
    widths.push_back(static_cast<int>(rs[1]));
  }
  return widths;
}

struct Args {
  std::string type;
  std::vector<std::string> tensor;
  std::string weight;
  std::string weight_filter;
  std::string format = "text";
  std::string budget = "default";
  long node_cap = 1000000;
};

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  std::string msg = "--format: expected one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw std::invalid_argument(msg + ", got '" + fmt + "'");
}

int cmd_m(const Args& a) {
  check_format(a.format, {"text", "json"});
  const AffineType t = AffineType::parse(a.type);
  const TensorSpec B = parse_tensor(a.tensor);
  const Weight lam = parse_weight(a.weight, t.n);
  const QPolynomial m = m_polynomial(t, B, lam);

  long count = 0;
  if (t.simply_laced()) {
    const KleberTree tree = kleber_tree(t, B, &lam, nullptr, a.node_cap);
    count = static_cast<long>(configs(tree, lam).size());
  } else {
    const KleberTree vtree = virtual_kleber_tree(t, B, &lam, a.node_cap);
    for (const SelectedNode& s : select_nodes(t, vtree))
      if (s.x_weight == lam) ++count;
  }

  if (a.format == "json") {
    const Json out = {{"kind", "m-polynomial"},
                      {"type", t.str()},
                      {"tensor", tensor_json(B)},
                      {"weight", weight_json(lam)},
                      {"m", poly_json(m)},
                      {"configurations", count}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << m.str() << "\n";
    std::cout << "configurations: " << count << "\n";
  }
  return 0;
}

int cmd_x(const Args& a) {
  check_format(a.format, {"text", "json"});
  const AffineType t = AffineType::parse(a.type);
  if (!t.nonexceptional())
    throw std::invalid_argument(
        "the path side is implemented for the nonexceptional families only; type " + t.str() +
        " is out of scope");
  const std::vector<int> widths = row_widths(a.tensor);
  const Weight lam = parse_weight(a.weight, t.n);
  const TensorCrystal B = row_tensor(t, widths);
  const QPolynomial x = x_polynomial(B, lam);
  const long paths = static_cast<long>(restricted_paths(B, lam).size());

  if (a.format == "json") {
    Json factors = Json::array();
    for (int w : widths) factors.push_back({{"r", 1}, {"s", w}});
    const Json out = {{"kind", "x-polynomial"},
                      {"type", t.str()},
                      {"tensor", std::move(factors)},
                      {"weight", weight_json(lam)},
                      {"x", poly_json(x)},
                      {"paths", paths}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << x.str() << "\n";
    std::cout << "paths: " << paths << "\n";
  }
  return 0;
}

void print_tree_text(const KleberTree& tree, const std::vector<SelectedNode>* selected) {
  std::cout << "type " << tree.type.str() << ", tensor " << tensor_str(tree.tensor) << ", "
            << tree.nodes.size() << " nodes\n";
  for (size_t id = 0; id < tree.nodes.size(); ++id) {
    const KleberNode& nd = tree.nodes[id];
    std::cout << id << ": depth " << nd.depth << ", parent " << nd.parent << ", weight "
              << weight_str(nd.final_wt) << ", config "
              << config_str(path_to_config(tree, static_cast<int>(id)));
    if (selected)
      for (const SelectedNode& s : *selected)
        if (s.node == static_cast<int>(id))
          std::cout << "  [selected, weight " << weight_str(s.x_weight) << ", config "
                    << config_str(s.x_config) << "]";
    std::cout << "\n";
  }
}

int cmd_tree(const Args& a) {
  check_format(a.format, {"json", "dot", "text"});
  const AffineType t = AffineType::parse(a.type);
  const TensorSpec B = parse_tensor(a.tensor);
  std::optional<Weight> target;
  if (!a.weight.empty()) target = parse_weight(a.weight, t.n);
  const KleberTree tree = kleber_tree(t, B, target ? &*target : nullptr, nullptr, a.node_cap);

  if (a.format == "json")
    std::cout << tree_json(tree).dump(2) << "\n";
  else if (a.format == "dot")
    std::cout << tree_dot(tree);
  else
    print_tree_text(tree, nullptr);
  return 0;
}

int cmd_vtree(const Args& a) {
  check_format(a.format, {"json", "dot", "text"});
  const AffineType t = AffineType::parse(a.type);
  const TensorSpec B = parse_tensor(a.tensor);
  if (!a.weight_filter.empty() && a.weight_filter != "all")
    throw std::invalid_argument("--weight-filter: the only recognized value is 'all'");
  if (!a.weight_filter.empty() && !a.weight.empty())
    throw std::invalid_argument("--weight and --weight-filter are mutually exclusive");
  std::optional<Weight> target;
  if (!a.weight.empty()) target = parse_weight(a.weight, t.n);

  const KleberTree vtree = virtual_kleber_tree(t, B, target ? &*target : nullptr, a.node_cap);
  const std::vector<SelectedNode> sel = select_nodes(t, vtree);

  if (a.format == "json")
    std::cout << tree_json(vtree, &sel).dump(2) << "\n";
  else if (a.format == "dot")
    std::cout << tree_dot(vtree, &sel);
  else {
    print_tree_text(vtree, &sel);
    std::cout << "selected: " << sel.size() << "\n";
  }
  return 0;
}

int cmd_crystal(const Args& a) {
  check_format(a.format, {"json", "dot", "text"});
  const AffineType t = AffineType::parse(a.type);
  const std::vector<int> widths = row_widths(a.tensor);
  const CrystalGraph g = generate_graph(row_tensor(t, widths), a.node_cap);

  if (a.format == "json")
    std::cout << graph_json(g).dump(2) << "\n";
  else if (a.format == "dot")
    std::cout << graph_dot(g);
  else {
    std::cout << "type " << t.str() << ", " << g.verts.size() << " vertices\n";
    for (size_t v = 0; v < g.verts.size(); ++v)
      std::cout << v << ": " << tensor_elt_str(g.crystal, g.verts[v]) << "\n";
  }
  return 0;
}

int cmd_verify(const Args& a) {
  const VerifyReport rep = run_verify(a.budget);
  std::cout << rep.json;
  return static_cast<int>(std::min<long>(rep.failures, 125));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded multiplicities, admissible-weight trees, and row crystals for "
               "nonexceptional affine types"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Args args;
  auto add_common = [&](CLI::App* sub, bool with_weight, bool required_weight) {
    sub->add_option("--type", args.type, "affine type, e.g. A3~1, C2~1, A4~2dag")->required();
    sub->add_option("--tensor", args.tensor, "factors as r,s pairs, leftmost first")
        ->required()
        ->expected(-1);
    if (with_weight) {
      auto* o = sub->add_option("--weight", args.weight,
                                "target weight, comma-separated fundamental coordinates");
      if (required_weight) o->required();
    }
    sub->add_option("--format", args.format, "output format");
    sub->add_option("--node-cap", args.node_cap, "generation cap for trees and graphs");
  };

  CLI::App* m = app.add_subcommand("m", "graded multiplicity M(B, lambda; q)");
  add_common(m, true, true);
  CLI::App* x = app.add_subcommand("x", "graded path sum X(B, lambda; q)");
  add_common(x, true, true);
  CLI::App* tree = app.add_subcommand("tree", "admissible-weight tree (simply-laced)");
  add_common(tree, true, false);
  CLI::App* vtree = app.add_subcommand("vtree", "ambient tree with encoding nodes (folded)");
  add_common(vtree, true, false);
  vtree->add_option("--weight-filter", args.weight_filter, "'all' keeps every weight");
  CLI::App* crystal = app.add_subcommand("crystal", "arrow graph of a row tensor");
  add_common(crystal, false, false);
  CLI::App* verify = app.add_subcommand("verify", "run the self-check matrix");
  verify->add_option("--budget", args.budget, "check budget (default: 'default')");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (m->parsed()) return cmd_m(args);
    if (x->parsed()) return cmd_x(args);
    if (tree->parsed()) return cmd_tree(args);
    if (vtree->parsed()) return cmd_vtree(args);
    if (crystal->parsed()) return cmd_crystal(args);
    if (verify->parsed()) return cmd_verify(args);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConjectureViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
