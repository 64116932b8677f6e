/*
  Foldings into simply-laced ambient types and the tree algorithm run there.

  Tables (X node -> ambient orbit, scaling gamma):

    C_n^(1)      -> A_{2n-1}^(1):  0|{0}*2,  i|{i,2n-i},  n|{n}*2
    A_{2n}^(2)   -> A_{2n-1}^(1):  0|{0},    i|{i,2n-i},  n|{n}*2
    A_{2n}^(2)+  -> A_{2n-1}^(1):  0|{0}*2,  i|{i,2n-i},  n|{n}
    D_{n+1}^(2)  -> A_{2n-1}^(1):  0|{0},    i|{i,2n-i},  n|{n}
    B_n^(1)      -> D_{n+1}^(1):   i|{i}*2 (i<n),  n|{n,n+1}
    A_{2n-1}^(2) -> D_{n+1}^(1):   i|{i} (i<n),    n|{n,n+1}
    F_4^(1)      -> E_6^(1):   0|{0}*2, 1|{6}*2, 2|{3}*2, 3|{2,4}, 4|{1,5}
    E_6^(2)      -> E_6^(1):   same orbits, all scalings 1
    G_2^(1)      -> D_4^(1):   0|{0}*3, 1|{2}*3, 2|{1,3,4}
    D_4^(3)      -> D_4^(1):   same orbits, all scalings 1

  ("*k" marks gamma = k; unmarked orbits have gamma = 1, and i ranges over
  the unlisted middle nodes.)

  The width maps multiply row lengths by gamma_a and copy across the orbit.
  The one exception is node n of the A_{2n}^{(2)} family, where row lengths
  stay put while riggings, vacancy numbers, and factor counts double. Since
  its rows occupy every width, that node is also exempt from the
  edge-repetition rule and from the selection test, both of which exist
  only to keep row lengths on the scaled grid.
*/

#include "kr/virtual_kleber.hpp"

#include <algorithm>

#include "kr/rational.hpp"

namespace kr {

namespace {

// Nodes whose ambient image appears twice at unchanged row length: node n of
// A_{2n}^{(2)}, where labels double while widths are kept, and node 1 of the
// rank-1 dagger type (the orbit {1, 2n-1} collapsed onto one node), where the
// doubling is carried entirely by the two copies.
bool two_copies(const EmbeddingData& e, int a) {
  if (e.x.family == Family::A2Even) return a == e.x.n;
  return e.x.family == Family::A2EvenDag && e.x.n == 1 && a == 1;
}
long width_factor(const EmbeddingData& e, int a) { return two_copies(e, a) ? 1 : e.gamma[a]; }
long label_factor(const EmbeddingData& e, int a) { return e.gamma[a]; }

EmbeddingData build_embedding(AffineType x) {
  if (x.simply_laced())
    throw UnsupportedType("type is its own realization: " + x.str());
  const int n = x.n;
  EmbeddingData e;
  e.x = x;

  auto a_ambient = [&] {
    // 0|{0}, i|{i,2n-i}, n|{n} into A_{2n-1}^(1).
    e.y = make_type(Family::A1, 2 * n - 1);
    e.iota.assign(n + 1, {});
    e.iota[0] = {0};
    for (int i = 1; i < n; ++i) e.iota[i] = {i, 2 * n - i};
    e.iota[n] = {n};
  };
  auto d_ambient = [&] {
    // i|{i}, n|{n,n+1} into D_{n+1}^(1).
    e.y = make_type(Family::D1, n + 1);
    e.iota.assign(n + 1, {});
    for (int i = 0; i < n; ++i) e.iota[i] = {i};
    e.iota[n] = {n, n + 1};
  };

  switch (x.family) {
    case Family::C1:
      a_ambient();
      e.gamma.assign(n + 1, 1);
      e.gamma[0] = e.gamma[n] = 2;
      break;
    case Family::A2Even:
      a_ambient();
      e.gamma.assign(n + 1, 1);
      e.gamma[n] = 2;
      break;
    case Family::A2EvenDag:
      a_ambient();
      e.gamma.assign(n + 1, 1);
      e.gamma[0] = 2;
      break;
    case Family::D2:
      a_ambient();
      e.gamma.assign(n + 1, 1);
      break;
    case Family::B1:
      d_ambient();
      e.gamma.assign(n + 1, 2);
      e.gamma[n] = 1;
      break;
    case Family::A2Odd:
      d_ambient();
      e.gamma.assign(n + 1, 1);
      break;
    case Family::F41:
      e.y = make_type(Family::E61, 6);
      e.iota = {{0}, {6}, {3}, {2, 4}, {1, 5}};
      e.gamma = {2, 2, 2, 1, 1};
      break;
    case Family::E62:
      e.y = make_type(Family::E61, 6);
      e.iota = {{0}, {6}, {3}, {2, 4}, {1, 5}};
      e.gamma.assign(5, 1);
      break;
    case Family::G21:
      e.y = make_type(Family::D1, 4);
      e.iota = {{0}, {2}, {1, 3, 4}};
      e.gamma = {3, 3, 1};
      break;
    case Family::D43:
      e.y = make_type(Family::D1, 4);
      e.iota = {{0}, {2}, {1, 3, 4}};
      e.gamma.assign(3, 1);
      break;
    default:
      throw UnsupportedType("no realization table for " + x.str());
  }

  e.gamma_max = 1;
  for (int a = 1; a <= n; ++a)
    e.gamma_max = std::max(e.gamma_max, static_cast<int>(width_factor(e, a)));
  return e;
}

}  // namespace

std::vector<std::vector<int>> EmbeddingData::orbits() const {
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= x.n; ++a) out.push_back(iota[a]);
  return out;
}

const EmbeddingData& embedding(AffineType x) {
  static std::map<AffineType, EmbeddingData> cache;
  auto it = cache.find(x);
  if (it == cache.end()) it = cache.emplace(x, build_embedding(x)).first;
  return it->second;
}

Weight psi_weight(AffineType x, const Weight& lambda) {
  const EmbeddingData& e = embedding(x);
  if (static_cast<int>(lambda.size()) != x.n)
    throw std::invalid_argument("weight length != rank");
  Weight what = zero_weight(e.y.n);
  for (int a = 1; a <= x.n; ++a)
    for (int b : e.iota[a]) what[b - 1] = e.gamma[a] * lambda[a - 1];
  return what;
}

bool is_psi_image(AffineType x, const Weight& what) {
  const EmbeddingData& e = embedding(x);
  if (static_cast<int>(what.size()) != e.y.n) return false;
  for (int a = 1; a <= x.n; ++a)
    for (int b : e.iota[a]) {
      if (what[b - 1] != what[e.iota[a][0] - 1]) return false;
      if (what[b - 1] % e.gamma[a] != 0) return false;
    }
  return true;
}

Weight devirtualize_weight(AffineType x, const Weight& what) {
  const EmbeddingData& e = embedding(x);
  if (!is_psi_image(x, what)) throw std::invalid_argument("weight not in the folded image");
  Weight lambda(x.n);
  for (int a = 1; a <= x.n; ++a) lambda[a - 1] = what[e.iota[a][0] - 1] / e.gamma[a];
  return lambda;
}

TensorSpec lift_L(AffineType x, const TensorSpec& B) {
  const EmbeddingData& e = embedding(x);
  validate_tensor(x, B);
  TensorSpec out;
  for (const auto& [rs, count] : B) {
    const auto [a, i] = rs;
    // One ambient factor per orbit node, widths stretched. Where widths
    // stay put the label doubling shows up as a doubled factor instead.
    const long copies = two_copies(e, a) ? 2 : 1;
    for (int b : e.iota[a]) out[{b, width_factor(e, a) * i}] += copies * count;
  }
  return out;
}

KleberTree virtual_kleber_tree(AffineType x, const TensorSpec& B, const Weight* lambda,
                               long node_cap) {
  const EmbeddingData& e = embedding(x);
  const TensorSpec bhat = lift_L(x, B);

  VirtualConstraints vc;
  vc.symmetric_orbits = e.orbits();
  for (int a = 1; a <= x.n; ++a)
    if (width_factor(e, a) > 1)
      vc.repeat_groups.emplace_back(static_cast<int>(width_factor(e, a)), e.iota[a]);

  if (!lambda) return kleber_tree(e.y, bhat, nullptr, &vc, node_cap);
  const Weight target = psi_weight(x, *lambda);
  return kleber_tree(e.y, bhat, &target, &vc, node_cap);
}

std::vector<SelectedNode> select_nodes(AffineType x, const KleberTree& vtree) {
  const EmbeddingData& e = embedding(x);
  if (vtree.type != e.y) throw std::invalid_argument("tree type does not match the realization");
  std::vector<SelectedNode> out;
  for (int idx = 0; idx < static_cast<int>(vtree.nodes.size()); ++idx) {
    const KleberNode& node = vtree.nodes[idx];
    bool sel = node.depth % e.gamma_max == 0;
    if (!sel) {
      sel = true;
      for (int a = 1; a <= x.n && sel; ++a) {
        if (width_factor(e, a) != e.gamma_max) continue;
        for (int b : e.iota[a])
          if (node.edge[b - 1] != 0) {
            sel = false;
            break;
          }
      }
    }
    if (!sel) continue;
    if (!is_psi_image(x, node.final_wt))
      throw std::logic_error("selected node weight escapes the folded image");
    Configuration yc = path_to_config(vtree, idx);
    Configuration xc = devirtualize_config(x, yc);
    out.push_back(
        SelectedNode{idx, devirtualize_weight(x, node.final_wt), std::move(yc), std::move(xc)});
  }
  return out;
}

Configuration virtualize_config(AffineType x, const Configuration& nu) {
  const EmbeddingData& e = embedding(x);
  if (static_cast<int>(nu.size()) != x.n) throw std::invalid_argument("configuration size != rank");
  Configuration out(e.y.n);
  for (int a = 1; a <= x.n; ++a)
    for (const auto& [i, m] : nu[a - 1])
      for (int b : e.iota[a]) out[b - 1][width_factor(e, a) * i] += m;
  return out;
}

Configuration devirtualize_config(AffineType x, const Configuration& nuhat) {
  const EmbeddingData& e = embedding(x);
  if (static_cast<int>(nuhat.size()) != e.y.n)
    throw std::invalid_argument("configuration size != ambient rank");
  Configuration out(x.n);
  for (int a = 1; a <= x.n; ++a) {
    const std::map<long, long>& rows = nuhat[e.iota[a][0] - 1];
    for (int b : e.iota[a])
      if (nuhat[b - 1] != rows) throw std::invalid_argument("orbit rows differ");
    const long g = width_factor(e, a);
    for (const auto& [ihat, m] : rows) {
      if (ihat % g != 0) throw std::invalid_argument("row length off the width grid");
      out[a - 1][ihat / g] = m;
    }
  }
  return out;
}

RiggedConfiguration virtualize_rigged(AffineType x, const RiggedConfiguration& rc) {
  const EmbeddingData& e = embedding(x);
  RiggedConfiguration out;
  out.nu = virtualize_config(x, rc.nu);
  out.riggings.assign(e.y.n, {});
  for (int a = 1; a <= x.n; ++a) {
    const long g = width_factor(e, a);
    const long s = label_factor(e, a);
    for (const auto& [i, parts] : rc.riggings[a - 1]) {
      std::vector<long> scaled(parts);
      for (long& part : scaled) part *= s;
      for (int b : e.iota[a]) out.riggings[b - 1][g * i] = scaled;
    }
  }
  return out;
}

RiggedConfiguration devirtualize_rigged(AffineType x, const RiggedConfiguration& rchat) {
  const EmbeddingData& e = embedding(x);
  RiggedConfiguration out;
  out.nu = devirtualize_config(x, rchat.nu);
  out.riggings.assign(x.n, {});
  for (int a = 1; a <= x.n; ++a) {
    const auto& labels = rchat.riggings[e.iota[a][0] - 1];
    for (int b : e.iota[a])
      if (rchat.riggings[b - 1] != labels) throw std::invalid_argument("orbit riggings differ");
    const long g = width_factor(e, a);
    const long s = label_factor(e, a);
    for (const auto& [ihat, parts] : labels) {
      std::vector<long> scaled(parts);
      for (long& part : scaled) {
        if (part % s != 0) throw std::invalid_argument("rigging label off the scaling grid");
        part /= s;
      }
      out.riggings[a - 1][ihat / g] = std::move(scaled);
    }
  }
  return out;
}

QPolynomial m_polynomial_via_virtual(AffineType x, const TensorSpec& B, const Weight& lambda) {
  const EmbeddingData& e = embedding(x);
  if (static_cast<int>(lambda.size()) != x.n)
    throw std::invalid_argument("weight length != rank");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight must be dominant");
  const TensorSpec bhat = lift_L(x, B);
  const KleberTree vtree = virtual_kleber_tree(x, B, &lambda);

  QPolynomial out;
  for (const SelectedNode& sel : select_nodes(x, vtree)) {
    if (sel.x_weight != lambda) continue;
    QPolynomial term = QPolynomial::monomial(cocharge(e.y, sel.y_config) / e.gamma[0]);
    for (int a = 1; a <= x.n; ++a) {
      const int b0 = e.iota[a][0];
      const long divisor = label_factor(e, a);
      // Each part j of a rigging at the X block appears once per orbit node
      // as gamma_a j, so it enters the ambient grading as |iota| gamma_a j,
      // divided by gamma_0 like the rest of the cocharge.
      const mpq_class scale = frac(static_cast<long>(e.iota[a].size()) * e.gamma[a], e.gamma[0]);
      for (const auto& [ihat, m] : sel.y_config[b0 - 1]) {
        const long phat = vacancy(e.y, bhat, sel.y_config, b0, ihat);
        if (phat % divisor != 0) throw std::logic_error("ambient vacancy off the scaling grid");
        term *= gaussian_binomial(m, phat / divisor).scaled(scale);
      }
    }
    out += term;
  }
  return out;
}

KleberTree prune_to_marked(const KleberTree& tree, const std::vector<int>& marked) {
  std::vector<char> keep(tree.nodes.size(), 0);
  keep[0] = 1;
  for (int m : marked) {
    if (m < 0 || m >= static_cast<int>(tree.nodes.size()))
      throw std::invalid_argument("marked node out of range");
    for (int node = m; node >= 0 && !keep[node]; node = tree.nodes[node].parent) keep[node] = 1;
  }

  std::vector<int> remap(tree.nodes.size(), -1);
  KleberTree out{tree.type, tree.tensor, {}};
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<int>(out.nodes.size());
    KleberNode node = tree.nodes[i];
    node.children.clear();
    if (node.parent >= 0) {
      node.parent = remap[node.parent];
      out.nodes[node.parent].children.push_back(remap[i]);
    }
    out.nodes.push_back(std::move(node));
  }
  return out;
}

}  // namespace kr
