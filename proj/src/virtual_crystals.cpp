/*
  Folded crystal operators, membership predicates, embeddings, X^v.
*/

#include "kr/virtual_crystals.hpp"

#include <algorithm>
#include <string>

#include "kr/energy.hpp"
#include "kr/rational.hpp"
#include "kr/types.hpp"

namespace kr {

VirtualCrystal virtual_crystal(AffineType x, const std::vector<int>& widths) {
  VirtualCrystal v;
  v.x = x;
  v.widths = widths;
  v.emb = embedding(x);
  const AffineType y = v.emb.y;
  const bool pair_site = y.family == Family::A1;
  v.site_factors = pair_site ? 2 : 1;
  v.vhat.type = y;
  for (int s : widths) {
    if (pair_site) {
      // Orbit of node 1 is {1, 2n-1} with unit width scaling; at rank one
      // the two coincide and the site carries two width-s copies.
      v.vhat.factors.push_back(KRSpec{y, s, true});
      v.vhat.factors.push_back(KRSpec{y, s, false});
    } else {
      v.vhat.factors.push_back(KRSpec{y, v.emb.gamma[1] * s, false});
    }
  }
  return v;
}

std::optional<TensorElt> vhat_op(const VirtualCrystal& v, const TensorElt& b, int i,
                                 bool lower) {
  TensorElt cur = b;
  const int g = v.emb.gamma[i];
  for (int j : v.emb.iota[i]) {
    for (int k = 0; k < g; ++k) {
      auto nxt = tensor_op(v.vhat, cur, j, lower);
      if (!nxt) return std::nullopt;
      cur = std::move(*nxt);
    }
  }
  return cur;
}

long vhat_eps(const VirtualCrystal& v, const TensorElt& b, int i) {
  return tensor_eps(v.vhat, b, v.emb.iota[i].front()) / v.emb.gamma[i];
}

long vhat_phi(const VirtualCrystal& v, const TensorElt& b, int i) {
  return tensor_phi(v.vhat, b, v.emb.iota[i].front()) / v.emb.gamma[i];
}

bool is_aligned(const VirtualCrystal& v, const TensorElt& b) {
  for (int i = 0; i <= v.x.n; ++i) {
    const long g = v.emb.gamma[i];
    long e0 = -1, p0 = -1;
    for (int j : v.emb.iota[i]) {
      long e = tensor_eps(v.vhat, b, j);
      long p = tensor_phi(v.vhat, b, j);
      if (e0 < 0) e0 = e, p0 = p;
      else if (e != e0 || p != p0) return false;
    }
    if (e0 % g != 0 || p0 % g != 0) return false;
  }
  return true;
}

bool site_self_dual(const KRElt& dualc, const KRElt& rowc) {
  const int N = (int)rowc.size();
  auto y = [&](int i) { return rowc[(i - 1) % N]; };
  auto yv = [&](int i) { return dualc[(i - 1) % N]; };
  for (int i = 1; i <= N; ++i) {
    const long m1 = std::min(y(i), yv(i));
    const long m2 = std::min(y(i + 1), yv(i + 1));
    if (y(N + 1 - i) != yv(i) - m1 + m2) return false;
    if (yv(N + 1 - i) != y(i) - m1 + m2) return false;
  }
  return true;
}

namespace {

bool site_member_pair(const VirtualCrystal& v, const KRElt& dualc, const KRElt& rowc) {
  if (!site_self_dual(dualc, rowc)) return false;
  const int n = v.x.n;
  const long head = std::min(rowc[0], dualc[0]);
  const long mid = std::min(rowc[n], dualc[n]);
  switch (v.x.family) {
    case Family::C1:
      return head % 2 == 0 && mid % 2 == 0;
    case Family::A2Even:
      return mid % 2 == 0;
    case Family::A2EvenDag:
      return head % 2 == 0;
    default:  // D_{n+1}^(2): self-duality alone
      return true;
  }
}

bool site_member_row(const VirtualCrystal& v, const KRElt& c) {
  const int N = v.emb.y.n;  // ambient classical rank n+1
  auto X = [&](int i) { return c[i - 1]; };
  auto Xb = [&](int i) { return c[2 * N - i]; };
  if (X(N) != 0 || Xb(N) != 0) return false;
  if (v.x.family == Family::A2Odd) return true;
  for (int i = 1; i < N - 1; ++i)
    if (X(i) % 2 != 0 || Xb(i) % 2 != 0) return false;
  return (X(N - 1) - Xb(N - 1)) % 2 == 0;
}

}  // namespace

bool v_member(const VirtualCrystal& v, const TensorElt& b) {
  const int L = (int)v.widths.size();
  for (int k = 0; k < L; ++k) {
    if (v.site_factors == 2) {
      if (!site_member_pair(v, b[2 * k], b[2 * k + 1])) return false;
    } else {
      if (!site_member_row(v, b[k])) return false;
    }
  }
  return true;
}

VGraph generate_V(const VirtualCrystal& v, long cap) {
  VGraph g;
  const int n = v.x.n;
  g.f_arc.assign(n + 1, {});
  g.e_arc.assign(n + 1, {});
  auto find_or_add = [&](const TensorElt& e) -> int {
    auto it = g.index.find(e);
    if (it != g.index.end()) return it->second;
    if ((long)g.verts.size() >= cap)
      throw ResourceLimit("virtual crystal exceeds " + std::to_string(cap) +
                          " vertices");
    int id = (int)g.verts.size();
    g.verts.push_back(e);
    g.index.emplace(e, id);
    return id;
  };
  find_or_add(tensor_u(v.vhat));
  for (std::size_t head = 0; head < g.verts.size(); ++head) {
    TensorElt cur = g.verts[head];
    for (int i = 0; i <= n; ++i) {
      auto dn = vhat_op(v, cur, i, true);
      g.f_arc[i].push_back(dn ? find_or_add(*dn) : -1);
      auto up = vhat_op(v, cur, i, false);
      g.e_arc[i].push_back(up ? find_or_add(*up) : -1);
    }
  }
  return g;
}

std::map<TensorElt, TensorElt> embedding_map(const VirtualCrystal& v) {
  TensorCrystal BX = row_tensor(v.x, v.widths);
  CrystalGraph gx = generate_graph(BX);
  VGraph gv = generate_V(v);
  if (gx.verts.size() != tensor_set(BX).size())
    throw ConjectureViolation("folded-side crystal fails to be connected");
  if (gx.verts.size() != gv.verts.size())
    throw ConjectureViolation("virtual crystal has the wrong cardinality on " +
                              v.x.str());

  const int n = v.x.n;
  std::vector<int> m((int)gx.verts.size(), -1);
  m[0] = 0;
  for (int w = 0; w < (int)gx.verts.size(); ++w) {
    if (m[w] < 0)
      throw ConjectureViolation("embedding propagation failed to reach a vertex");
    for (int i = 0; i <= n; ++i) {
      for (int lower = 0; lower < 2; ++lower) {
        const int t = lower ? gx.f_arc[i][w] : gx.e_arc[i][w];
        const int ti = lower ? gv.f_arc[i][m[w]] : gv.e_arc[i][m[w]];
        if (t < 0 && ti < 0) continue;
        if (t < 0 || ti < 0)
          throw ConjectureViolation("folded operator mismatch on " + v.x.str());
        if (m[t] < 0) m[t] = ti;
        else if (m[t] != ti)
          throw ConjectureViolation("embedding is not well defined on " + v.x.str());
      }
    }
  }
  std::vector<char> used(gx.verts.size(), 0);
  std::map<TensorElt, TensorElt> out;
  for (int w = 0; w < (int)gx.verts.size(); ++w) {
    if (used[m[w]]) throw ConjectureViolation("embedding is not injective");
    used[m[w]] = 1;
    out.emplace(gx.verts[w], gv.verts[m[w]]);
  }
  return out;
}

std::pair<KRElt, KRElt> typeA_row_R(AffineType y, int s, const KRElt& rowc,
                                    const KRElt& colc) {
  const RMap& rm = compute_R_H(KRSpec{y, s, false}, KRSpec{y, s, true});
  return rm.image.at(std::make_pair(rowc, colc));
}

mpq_class virtual_D(const VirtualCrystal& v, const TensorElt& b) {
  return frac(intrinsic_D(v.vhat, b), v.emb.gamma[0]);
}

std::vector<TensorElt> v_restricted(const VirtualCrystal& v, const Weight& lambda) {
  const Weight what = psi_weight(v.x, lambda);
  std::vector<TensorElt> out;
  for (const auto& b : generate_V(v).verts) {
    if (tensor_weight(v.vhat, b) != what) continue;
    bool hw = true;
    for (int i = 1; i <= v.x.n && hw; ++i)
      if (vhat_op(v, b, i, false)) hw = false;
    if (hw) out.push_back(b);
  }
  return out;
}

QPolynomial xv_polynomial(const VirtualCrystal& v, const Weight& lambda) {
  QPolynomial X;
  for (const auto& b : v_restricted(v, lambda)) X.add_term(virtual_D(v, b), 1);
  return X;
}

}  // namespace kr
