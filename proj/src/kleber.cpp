/*
  Tree construction, path decoding, and the direct enumeration oracle.

  The builder works with creation weights: the column additions of step
  ell touch every node equally, so edges are stable and the current weight
  of a depth ell-1 node during iteration ell is creation + delta(ell),
  while its final weight is creation + future(depth), where future(p) sums
  the columns of width > p weighted by the overhang.
*/

#include "kr/kleber.hpp"

#include <algorithm>
#include <sstream>

#include "kr/fermionic.hpp"
#include "kr/rational.hpp"

namespace kr {

namespace {

// sum_a Lambda_a sum_{i>=ell} L_i^{(a)}
Weight delta_weight(int n, const TensorSpec& B, long ell) {
  Weight w = zero_weight(n);
  for (const auto& [rs, count] : B)
    if (rs.second >= ell) w[rs.first - 1] += count;
  return w;
}

// sum_a Lambda_a sum_{j>p} (j-p) L_j^{(a)}
Weight future_weight(int n, const TensorSpec& B, long p) {
  Weight w = zero_weight(n);
  for (const auto& [rs, count] : B)
    if (rs.second > p) w[rs.first - 1] += (rs.second - p) * count;
  return w;
}

long floor_to_long(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return to_long(f);
}

}  // namespace

void validate_tensor(AffineType t, const TensorSpec& B) {
  for (const auto& [rs, count] : B) {
    if (rs.first < 1 || rs.first > t.n)
      throw UnsupportedType("tensor factor row index " + std::to_string(rs.first) +
                            " outside classical diagram of " + t.str());
    if (rs.second < 1) throw std::invalid_argument("tensor factor width must be positive");
    if (count < 1) throw std::invalid_argument("tensor factor count must be positive");
  }
}

std::string tensor_str(const TensorSpec& B) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [rs, count] : B) {
    for (long c = 0; c < count; ++c) {
      if (!first) os << " (x) ";
      os << "B^{" << rs.first << ',' << rs.second << '}';
      first = false;
    }
  }
  if (first) os << "(empty)";
  return os.str();
}

std::string config_str(const Configuration& nu) {
  std::ostringstream os;
  for (size_t a = 0; a < nu.size(); ++a) {
    if (a) os << ' ';
    os << '(';
    bool first = true;
    for (auto it = nu[a].rbegin(); it != nu[a].rend(); ++it)
      for (long r = 0; r < it->second; ++r) {
        if (!first) os << ',';
        os << it->first;
        first = false;
      }
    os << ')';
  }
  return os.str();
}

KleberTree kleber_tree(AffineType t, const TensorSpec& B, const Weight* target,
                       const VirtualConstraints* vc, long node_cap) {
  if (!t.simply_laced())
    throw UnsupportedType("tree construction needs a simply-laced classical part: " + t.str());
  validate_tensor(t, B);
  const DynkinData& d = dynkin_data(t);
  const int n = t.n;
  if (target) {
    if (static_cast<int>(target->size()) != n)
      throw std::invalid_argument("target weight length != rank");
    if (!is_dominant(*target)) throw std::invalid_argument("target weight must be dominant");
  }

  KleberTree tree{t, B, {}};
  tree.nodes.push_back(KleberNode{zero_weight(n), {}, {}, 0, -1, {}});

  std::vector<int> frontier{0};
  for (long ell = 1; !frontier.empty(); ++ell) {
    std::vector<int> next;
    const Weight delta = delta_weight(n, B, ell);
    const Weight fg = future_weight(n, B, ell);

    for (int xi : frontier) {
      const Weight mu = weight_add(tree.nodes[xi].creation, delta);
      const std::vector<long> parent_edge = tree.nodes[xi].edge;  // empty at root
      const RootVec mu_rc = to_root_coords(t, mu);

      std::vector<long> lo(n, 0), hi(n);
      bool box_empty = false;
      for (int a = 0; a < n; ++a) {
        hi[a] = floor_to_long(mu_rc[a]);
        if (!parent_edge.empty()) hi[a] = std::min(hi[a], parent_edge[a]);
        if (hi[a] < 0) box_empty = true;
      }
      if (vc) {
        // Edge repetition: groups with (depth of x) not a multiple of gamma
        // must copy the parent edge componentwise.
        for (const auto& [gamma, group] : vc->repeat_groups) {
          if ((ell - 1) % gamma == 0) continue;
          for (int b : group) {
            const long pinned = parent_edge.empty() ? 0 : parent_edge[b - 1];
            if (pinned > hi[b - 1]) box_empty = true;
            lo[b - 1] = hi[b - 1] = pinned;
          }
        }
      }
      if (box_empty) continue;

      {
        mpz_class cells = 1;
        for (int a = 0; a < n; ++a) cells *= hi[a] - lo[a] + 1;
        if (cells > std::max(node_cap, 10000000L))
          throw ResourceLimit("child search box too large at node " + std::to_string(xi));
      }

      std::vector<long> dvec = lo;
      for (;;) {
        bool zero = true;
        for (long v : dvec) zero = zero && v == 0;
        if (!zero) {
          Weight tau = mu;
          for (int b = 1; b <= n; ++b) {
            if (dvec[b - 1] == 0) continue;
            for (int a = 1; a <= n; ++a) tau[a - 1] -= d.cartan[a][b] * dvec[b - 1];
          }
          bool ok = is_dominant(tau);
          if (ok && vc) {
            for (const auto& orbit : vc->symmetric_orbits)
              for (size_t j = 1; j < orbit.size() && ok; ++j)
                ok = tau[orbit[j] - 1] == tau[orbit[0] - 1];
          }
          if (ok && target) {
            const Weight fin = weight_add(tau, fg);
            const RootVec over = to_root_coords(t, weight_sub(fin, *target));
            for (int a = 0; a < n && ok; ++a) {
              if (over[a] < 0 || over[a].get_den() != 1) ok = false;  // cannot dominate target
              else if (over[a] > 0 && dvec[a] == 0) ok = false;  // edges only shrink: stuck
            }
          }
          if (ok) {
            if (static_cast<long>(tree.nodes.size()) >= node_cap)
              throw ResourceLimit("tree node cap exceeded");
            tree.nodes.push_back(KleberNode{tau, {}, dvec, static_cast<int>(ell), xi, {}});
            const int yi = static_cast<int>(tree.nodes.size()) - 1;
            tree.nodes[xi].children.push_back(yi);
            next.push_back(yi);
          }
        }
        // Odometer step, last coordinate fastest: lexicographic order.
        int pos = n - 1;
        while (pos >= 0 && dvec[pos] == hi[pos]) {
          dvec[pos] = lo[pos];
          --pos;
        }
        if (pos < 0) break;
        ++dvec[pos];
      }
    }
    frontier = std::move(next);
  }

  for (KleberNode& node : tree.nodes)
    node.final_wt = weight_add(node.creation, future_weight(n, B, node.depth));
  return tree;
}

Configuration path_to_config(const KleberTree& tree, int node) {
  const int n = tree.type.n;
  std::vector<const std::vector<long>*> edges;  // deepest first
  for (int x = node; tree.nodes[x].parent >= 0; x = tree.nodes[x].parent)
    edges.push_back(&tree.nodes[x].edge);
  std::reverse(edges.begin(), edges.end());

  const std::vector<long> zero(n, 0);
  Configuration nu(n);
  for (size_t i = 1; i <= edges.size(); ++i) {
    const std::vector<long>& cur = *edges[i - 1];
    const std::vector<long>& nxt = i < edges.size() ? *edges[i] : zero;
    for (int a = 0; a < n; ++a) {
      const long m = cur[a] - nxt[a];
      if (m < 0) throw std::logic_error("path edges not weakly decreasing");
      if (m > 0) nu[a][static_cast<long>(i)] = m;
    }
  }
  return nu;
}

std::vector<Configuration> configs(const KleberTree& tree, const Weight& lambda) {
  std::vector<Configuration> out;
  for (size_t x = 0; x < tree.nodes.size(); ++x)
    if (tree.nodes[x].final_wt == lambda) out.push_back(path_to_config(tree, static_cast<int>(x)));
  return out;
}

namespace {

// All partitions of total with parts recorded as width -> multiplicity.
void partitions_rec(long total, long maxpart, std::map<long, long>& cur,
                    std::vector<std::map<long, long>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (long part = std::min(total, maxpart); part >= 1; --part) {
    auto it = cur.emplace(part, 0).first;
    ++it->second;
    partitions_rec(total - part, part, cur, out);
    if (--it->second == 0) cur.erase(it);
  }
}

std::vector<std::map<long, long>> all_partitions(long total) {
  std::vector<std::map<long, long>> out;
  std::map<long, long> cur;
  partitions_rec(total, total > 0 ? total : 1, cur, out);
  return out;
}

}  // namespace

std::vector<Configuration> brute_force_configs(AffineType t, const TensorSpec& B,
                                               const Weight& lambda) {
  validate_tensor(t, B);
  if (static_cast<int>(lambda.size()) != t.n)
    throw std::invalid_argument("weight length != rank");

  std::vector<Configuration> out;
  std::optional<std::vector<long>> rhs = config_rhs(t, B, lambda);
  if (!rhs) return out;

  std::vector<std::vector<std::map<long, long>>> choices;
  for (int a = 0; a < t.n; ++a) choices.push_back(all_partitions((*rhs)[a]));

  Configuration nu(t.n);
  std::vector<size_t> idx(t.n, 0);
  for (;;) {
    for (int a = 0; a < t.n; ++a) nu[a] = choices[a][idx[a]];
    if (is_admissible(t, B, nu)) out.push_back(nu);
    int pos = t.n - 1;
    while (pos >= 0 && idx[pos] + 1 == choices[pos].size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kr
