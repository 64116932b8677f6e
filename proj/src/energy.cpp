/*
  R matrix by seed propagation, local energy, intrinsic D, graded sums.
*/

#include "kr/energy.hpp"

#include <stdexcept>
#include <string>

#include "kr/types.hpp"

namespace kr {

const RMap& compute_R_H(const KRSpec& b2, const KRSpec& b1) {
  static std::map<std::pair<KRSpec, KRSpec>, RMap> cache;
  const auto key = std::make_pair(b2, b1);
  if (auto hit = cache.find(key); hit != cache.end()) return hit->second;
  if (!(b2.type == b1.type))
    throw std::invalid_argument("R matrix factors must share one affine type");

  TensorCrystal dom{b2.type, {b2, b1}};
  TensorCrystal img{b2.type, {b1, b2}};
  CrystalGraph gd = generate_graph(dom);
  CrystalGraph gi = generate_graph(img);
  const std::size_t full = kr_set(b2).size() * kr_set(b1).size();
  if (gd.verts.size() != full || gi.verts.size() != full)
    throw ConjectureViolation("two-factor crystal fails to be connected");

  const int n = b2.type.n;
  const int N = (int)gd.verts.size();
  std::vector<int> m(N, -1);
  std::vector<long> h(N, 0);
  std::vector<char> hset(N, 0);
  m[0] = 0;  // u (x) u maps to u (x) u
  hset[0] = 1;

  for (int v = 0; v < N; ++v) {
    if (m[v] < 0 || !hset[v])
      throw ConjectureViolation("R propagation failed to reach a vertex");
    for (int i = 0; i <= n; ++i) {
      for (int lower = 0; lower < 2; ++lower) {
        const int w = lower ? gd.f_arc[i][v] : gd.e_arc[i][v];
        const int iw = lower ? gi.f_arc[i][m[v]] : gi.e_arc[i][m[v]];
        if (w < 0 && iw < 0) continue;
        if (w < 0 || iw < 0)
          throw ConjectureViolation("operator defined on one side of R only");
        if (m[w] < 0) m[w] = iw;
        else if (m[w] != iw) throw ConjectureViolation("R image is inconsistent");

        long delta = 0;
        if (i == 0) {
          // Sign convention: along the raising direction, left-left is -1
          // and right-right is +1; mixed sides leave H unchanged.
          const int sd = gd.verts[v][0] != gd.verts[w][0] ? 0 : 1;
          const int si = gi.verts[m[v]][0] != gi.verts[iw][0] ? 0 : 1;
          int de = 0;
          if (sd == 0 && si == 0) de = -1;
          if (sd == 1 && si == 1) de = 1;
          delta = lower ? -de : de;
        }
        if (!hset[w]) {
          h[w] = h[v] + delta;
          hset[w] = 1;
        } else if (h[w] != h[v] + delta) {
          throw ConjectureViolation("local energy is cycle-inconsistent");
        }
      }
    }
  }

  std::vector<char> used(N, 0);
  for (int v = 0; v < N; ++v) {
    if (used[m[v]]) throw ConjectureViolation("R image is not a bijection");
    used[m[v]] = 1;
  }

  RMap rm;
  rm.left = b2;
  rm.right = b1;
  for (int v = 0; v < N; ++v) {
    const TensorElt& d = gd.verts[v];
    const TensorElt& e = gi.verts[m[v]];
    rm.image.emplace(std::make_pair(d[0], d[1]), std::make_pair(e[0], e[1]));
    rm.h.emplace(std::make_pair(d[0], d[1]), h[v]);
  }
  return cache.emplace(key, std::move(rm)).first->second;
}

void apply_R(TaggedTensor& t, int p) {
  const int L = (int)t.specs.size();
  if (p < 1 || p >= L) throw std::invalid_argument("R position out of range");
  const int l = L - p - 1, r = L - p;
  const RMap& rm = compute_R_H(t.specs[l], t.specs[r]);
  const auto& out = rm.image.at(std::make_pair(t.elts[l], t.elts[r]));
  std::swap(t.specs[l], t.specs[r]);
  t.elts[l] = out.first;
  t.elts[r] = out.second;
}

long local_H(const TaggedTensor& t, int p) {
  const int L = (int)t.specs.size();
  if (p < 1 || p >= L) throw std::invalid_argument("H position out of range");
  const int l = L - p - 1, r = L - p;
  const RMap& rm = compute_R_H(t.specs[l], t.specs[r]);
  return rm.h.at(std::make_pair(t.elts[l], t.elts[r]));
}

std::vector<KRElt> find_bnatural(const KRSpec& spec) {
  TensorCrystal single{spec.type, {spec}};
  const long lev = crystal_level(single);
  std::vector<KRElt> out;
  for (const auto& c : kr_set(spec)) {
    bool ok = kr_phi(spec, c, 0) == lev;
    for (int i = 1; i <= spec.type.n && ok; ++i)
      if (kr_phi(spec, c, i) != 0) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

const std::map<KRElt, long>& intrinsic_D_site(const KRSpec& spec) {
  static std::map<KRSpec, std::map<KRElt, long>> cache;
  if (auto hit = cache.find(spec); hit != cache.end()) return hit->second;

  const auto nat = find_bnatural(spec);
  if (nat.size() != 1)
    throw ConjectureViolation("minimizing element is not unique on " +
                              spec.type.str() + " width " + std::to_string(spec.s));
  const RMap& rm = compute_R_H(spec, spec);
  const long base = rm.h.at(std::make_pair(kr_u(spec), nat[0]));
  std::map<KRElt, long> d;
  for (const auto& c : kr_set(spec))
    d.emplace(c, rm.h.at(std::make_pair(c, nat[0])) - base);
  return cache.emplace(spec, std::move(d)).first->second;
}

namespace {

// Pairwise energies plus site terms, before subtracting the head value.
long d_raw(const TaggedTensor& t0) {
  const int L = (int)t0.specs.size();
  long total = 0;
  for (int j = 2; j <= L; ++j) {
    for (int i = 1; i < j; ++i) {
      TaggedTensor t = t0;
      for (int k = j - 1; k >= i + 1; --k) apply_R(t, k);
      total += local_H(t, i);
    }
  }
  for (int j = 1; j <= L; ++j) {
    TaggedTensor t = t0;
    for (int k = j - 1; k >= 1; --k) apply_R(t, k);
    total += intrinsic_D_site(t.specs.back()).at(t.elts.back());
  }
  return total;
}

}  // namespace

long intrinsic_D(const TensorCrystal& B, const TensorElt& b) {
  TaggedTensor t{B.factors, b};
  TaggedTensor tu{B.factors, tensor_u(B)};
  return d_raw(t) - d_raw(tu);
}

QPolynomial x_polynomial(const TensorCrystal& B, const Weight& lambda) {
  QPolynomial X;
  for (const auto& b : restricted_paths(B, lambda))
    X.add_term(intrinsic_D(B, b), 1);
  return X;
}

}  // namespace kr
