/*
  Vacancy numbers, cocharge, rigged configurations, and M(B,lambda;q).

  p_i^{(a)} = sum_k [ L_k^{(a)} min(i,k)
                      - (1/t_a^dual) sum_b F_ab min(t_b i, t_a k) m_k^{(b)} ]

  cc(nu)   = 1/2 sum_{a,b} sum_{j,k} F_ab min(t_b j, t_a k) m_j^{(a)} m_k^{(b)}

  M        = sum_nu q^{cc(nu)} prod_{a,i} [p_i^{(a)} + m_i^{(a)}, m_i^{(a)}]
             with the binomial taken in q^{t_a^dual}.

  Individual vacancy terms can be rational; the totals are integers and
  to_long() enforces that.
*/

#include "kr/fermionic.hpp"

#include <algorithm>

#include "kr/rational.hpp"
#include "kr/virtual_kleber.hpp"

namespace kr {

namespace {

// Auxiliary chain system used by the A_{2n}^{(2)} family: the Cartan matrix
// of the short-ended chain (B_n), inverse cached per rank.
const std::vector<std::vector<mpq_class>>& aux_chain_inverse(int n) {
  static std::map<int, std::vector<std::vector<mpq_class>>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) {
      m[i][i + 1] = -1;
      m[i + 1][i] = -1;
    }
    if (n >= 2) m[n - 1][n - 2] = -2;
    it = cache.emplace(n, invert_matrix(m)).first;
  }
  return it->second;
}

void check_sizes(AffineType t, const Configuration& nu) {
  if (static_cast<int>(nu.size()) != t.n)
    throw std::invalid_argument("configuration size != rank");
}

}  // namespace

mpq_class fermi_form_entry(AffineType t, int a, int b) {
  if (a < 1 || a > t.n || b < 1 || b > t.n)
    throw std::invalid_argument("form index outside classical diagram");
  switch (t.family) {
    case Family::A2EvenDag:
      throw UnsupportedType("the arrow-reversed family has no direct form; use the ambient realization: " + t.str());
    case Family::A2Even:
      // Twice the Gram matrix of the short-ended chain.
      if (a == b) return a == t.n ? 2 : 4;
      return (a - b == 1 || b - a == 1) ? -2 : 0;
    default:
      if (!t.simply_laced() && !t.nonexceptional())
        throw UnsupportedType("no direct form data for " + t.str());
      return inv_form_entry(t, a, b);
  }
}

std::optional<std::vector<long>> config_rhs(AffineType t, const TensorSpec& B,
                                            const Weight& lambda) {
  validate_tensor(t, B);
  if (static_cast<int>(lambda.size()) != t.n)
    throw std::invalid_argument("weight length != rank");
  fermi_form_entry(t, 1, 1);  // reject types without direct data

  Weight w = zero_weight(t.n);
  for (const auto& [rs, count] : B) w[rs.first - 1] += rs.second * count;
  w = weight_sub(w, lambda);

  RootVec rc;
  if (t.family == Family::A2Even) {
    // Map into the auxiliary chain coordinates: the last fundamental
    // coordinate doubles, then invert the auxiliary Cartan matrix.
    std::vector<mpq_class> f(t.n);
    for (int a = 0; a < t.n; ++a) f[a] = w[a];
    f[t.n - 1] *= 2;
    const auto& inv = aux_chain_inverse(t.n);
    rc.assign(t.n, 0);
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) rc[i] += inv[i][j] * f[j];
  } else {
    rc = to_root_coords(t, w);
  }

  std::vector<long> out(t.n);
  for (int a = 0; a < t.n; ++a) {
    if (rc[a].get_den() != 1 || rc[a] < 0) return std::nullopt;
    out[a] = to_long(rc[a]);
  }
  return out;
}

long vacancy(AffineType t, const TensorSpec& B, const Configuration& nu, int a, long i) {
  check_sizes(t, nu);
  if (i < 1) throw std::invalid_argument("row length must be positive");
  const DynkinData& d = dynkin_data(t);
  mpq_class p = 0;
  for (const auto& [rs, count] : B)
    if (rs.first == a) p += count * std::min(i, static_cast<long>(rs.second));
  for (int b = 1; b <= t.n; ++b) {
    const mpq_class fab = fermi_form_entry(t, a, b);
    if (fab == 0) continue;
    mpq_class s = 0;
    for (const auto& [k, m] : nu[b - 1]) s += mpq_class(std::min(d.t[b] * i, d.t[a] * k)) * m;
    p -= fab * s / d.t_dual[a];
  }
  return to_long(p);
}

bool is_admissible(AffineType t, const TensorSpec& B, const Configuration& nu) {
  check_sizes(t, nu);
  const DynkinData& d = dynkin_data(t);
  // p_i^{(a)} is constant in i once every min() has saturated; checking all
  // rows up to that index covers the constant tail as well.
  long icap = 0;
  for (const auto& [rs, count] : B) icap = std::max(icap, static_cast<long>(rs.second));
  for (int a = 1; a <= t.n; ++a)
    for (int b = 1; b <= t.n; ++b) {
      if (nu[b - 1].empty()) continue;
      const long maxpart = nu[b - 1].rbegin()->first;
      icap = std::max(icap, (d.t[a] * maxpart + d.t[b] - 1) / d.t[b]);
    }
  for (int a = 1; a <= t.n; ++a)
    for (long i = 1; i <= icap; ++i)
      if (vacancy(t, B, nu, a, i) < 0) return false;
  return true;
}

mpq_class cocharge(AffineType t, const Configuration& nu) {
  check_sizes(t, nu);
  const DynkinData& d = dynkin_data(t);
  mpq_class cc = 0;
  for (int a = 1; a <= t.n; ++a)
    for (int b = 1; b <= t.n; ++b) {
      const mpq_class fab = fermi_form_entry(t, a, b);
      if (fab == 0) continue;
      mpq_class s = 0;
      for (const auto& [j, mj] : nu[a - 1])
        for (const auto& [k, mk] : nu[b - 1])
          s += mpq_class(std::min(d.t[b] * j, d.t[a] * k)) * mj * mk;
      cc += fab * s;
    }
  return cc / 2;
}

mpq_class cocharge(AffineType t, const RiggedConfiguration& rc) {
  mpq_class cc = cocharge(t, rc.nu);
  const DynkinData& d = dynkin_data(t);
  for (int a = 1; a <= t.n; ++a)
    for (const auto& [i, parts] : rc.riggings[a - 1])
      for (long part : parts) cc += part * d.t_dual[a];
  return cc;
}

namespace {

// Partitions with at most `slots` parts, each between 1 and `maxpart`,
// recorded as weakly decreasing vectors of the nonzero parts. The empty
// partition comes first; extensions follow depth-first with larger leading
// parts first.
void box_partitions_rec(long slots, long maxpart, std::vector<long>& cur,
                        std::vector<std::vector<long>>& out) {
  out.push_back(cur);
  if (slots == 0 || maxpart == 0) return;
  for (long part = maxpart; part >= 1; --part) {
    cur.push_back(part);
    box_partitions_rec(slots - 1, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RiggedConfiguration> enumerate_rigged(AffineType t, const TensorSpec& B,
                                                  const Weight& lambda) {
  std::vector<Configuration> cfgs;
  if (t.simply_laced()) {
    const KleberTree tree = kleber_tree(t, B, &lambda);
    cfgs = configs(tree, lambda);
  } else if (t.family == Family::A2EvenDag) {
    throw UnsupportedType("rigged data for the arrow-reversed family lives on the ambient side: " +
                          t.str());
  } else if (t.nonexceptional()) {
    const KleberTree vtree = virtual_kleber_tree(t, B, &lambda);
    for (const SelectedNode& sel : select_nodes(t, vtree))
      if (sel.x_weight == lambda) cfgs.push_back(sel.x_config);
  } else {
    throw UnsupportedType("no direct rigged data for " + t.str());
  }

  std::vector<RiggedConfiguration> out;
  for (const Configuration& nu : cfgs) {
    // Riggings carry one key per occupied row length; a key's vector lists
    // the nonzero labels only.
    std::vector<std::pair<std::pair<int, long>, std::vector<std::vector<long>>>> slots;
    for (int a = 1; a <= t.n; ++a)
      for (const auto& [i, m] : nu[a - 1]) {
        const long p = vacancy(t, B, nu, a, i);
        if (p < 0) throw std::logic_error("inadmissible configuration reached rigging stage");
        std::vector<std::vector<long>> parts;
        std::vector<long> cur;
        box_partitions_rec(m, p, cur, parts);
        slots.emplace_back(std::pair<int, long>{a, i}, std::move(parts));
      }

    RiggedConfiguration rc;
    rc.nu = nu;
    rc.riggings.assign(t.n, {});
    std::vector<size_t> idx(slots.size(), 0);
    for (;;) {
      for (size_t s = 0; s < slots.size(); ++s)
        rc.riggings[slots[s].first.first - 1][slots[s].first.second] = slots[s].second[idx[s]];
      out.push_back(rc);
      size_t pos = slots.size();
      while (pos > 0 && idx[pos - 1] + 1 == slots[pos - 1].second.size()) {
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QPolynomial config_term(AffineType t, const TensorSpec& B, const Configuration& nu) {
  check_sizes(t, nu);
  const DynkinData& d = dynkin_data(t);
  QPolynomial out = QPolynomial::monomial(cocharge(t, nu));
  for (int a = 1; a <= t.n; ++a)
    for (const auto& [i, m] : nu[a - 1])
      out *= gaussian_binomial(m, vacancy(t, B, nu, a, i), d.t_dual[a]);
  return out;
}

QPolynomial m_polynomial(AffineType t, const TensorSpec& B, const Weight& lambda) {
  validate_tensor(t, B);
  if (static_cast<int>(lambda.size()) != t.n)
    throw std::invalid_argument("weight length != rank");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight must be dominant");

  if (t.family == Family::A2EvenDag) return m_polynomial_via_virtual(t, B, lambda);

  QPolynomial out;
  if (t.simply_laced()) {
    const KleberTree tree = kleber_tree(t, B, &lambda);
    for (const Configuration& nu : configs(tree, lambda)) out += config_term(t, B, nu);
  } else if (t.nonexceptional()) {
    const KleberTree vtree = virtual_kleber_tree(t, B, &lambda);
    for (const SelectedNode& sel : select_nodes(t, vtree))
      if (sel.x_weight == lambda) out += config_term(t, B, sel.x_config);
  } else {
    throw UnsupportedType("graded multiplicities cover the nonexceptional families only: " +
                          t.str());
  }
  return out;
}

}  // namespace kr
