/*
  Row crystals, their affine operators, tensor folds, and graph generation.

  All operators are unit moves on the count vector followed by a validity
  check, so "undefined" falls out of one predicate instead of per-rule edge
  cases. Strings are short at desk scale, hence eps/phi simply walk them.
*/

#include "kr/crystals.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "kr/types.hpp"

namespace kr {

namespace {

// Which of the three affine-operator shapes the family uses on rows:
// 1 = length-preserving pair move, 2 = single step, 3 = double step.
int zero_case(Family f) {
  switch (f) {
    case Family::B1:
    case Family::D1:
    case Family::A2Odd:
      return 1;
    case Family::A2Even:
    case Family::D2:
      return 2;
    case Family::C1:
    case Family::A2EvenDag:
      return 3;
    default:
      return 0;  // type A handled separately
  }
}

long total(const KRElt& c) {
  long t = 0;
  for (long v : c) t += v;
  return t;
}

}  // namespace

RowKind row_kind(const KRSpec& spec) {
  if (spec.dual) {
    if (spec.type.family != Family::A1)
      throw UnsupportedType("column factor only available in type A");
    return RowKind::ADualRow;
  }
  switch (spec.type.family) {
    case Family::A1:
      return RowKind::ARow;
    case Family::B1:
    case Family::A2EvenDag:
    case Family::D2:
      return RowKind::BRow;
    case Family::C1:
    case Family::A2Even:
    case Family::A2Odd:
      return RowKind::CRow;
    case Family::D1:
      return RowKind::DRow;
    default:
      throw UnsupportedType("no row crystal for " + spec.type.str());
  }
}

int slot_count(const KRSpec& spec) {
  int n = spec.type.n;
  switch (row_kind(spec)) {
    case RowKind::ARow:
    case RowKind::ADualRow:
      return n + 1;
    case RowKind::BRow:
      return 2 * n + 1;
    default:
      return 2 * n;
  }
}

std::vector<long> allowed_lengths(const KRSpec& spec) {
  if (spec.s < 1) throw std::invalid_argument("factor width must be positive");
  std::vector<long> out;
  switch (zero_case(spec.type.family)) {
    case 2:
      for (long l = 0; l <= spec.s; ++l) out.push_back(l);
      break;
    case 3:
      for (long l = spec.s % 2; l <= spec.s; l += 2) out.push_back(l);
      break;
    default:
      out.push_back(spec.s);
      break;
  }
  return out;
}

bool kr_valid(const KRSpec& spec, const KRElt& c) {
  if ((int)c.size() != slot_count(spec)) return false;
  for (long v : c)
    if (v < 0) return false;
  int n = spec.type.n;
  RowKind kind = row_kind(spec);
  if (kind == RowKind::BRow && c[n] > 1) return false;
  if (kind == RowKind::DRow && c[n - 1] > 0 && c[n] > 0) return false;
  const auto lens = allowed_lengths(spec);
  return std::find(lens.begin(), lens.end(), total(c)) != lens.end();
}

KRElt kr_u(const KRSpec& spec) {
  KRElt c(slot_count(spec), 0);
  if (row_kind(spec) == RowKind::ADualRow)
    c.back() = spec.s;  // smallest dual letter is (m+1)*
  else
    c.front() = spec.s;
  return c;
}

std::vector<KRElt> kr_set(const KRSpec& spec) {
  std::vector<KRElt> out;
  const int k = slot_count(spec);
  KRElt cur(k, 0);
  std::function<void(int, long)> rec = [&](int slot, long remaining) {
    if (slot == k - 1) {
      cur[slot] = remaining;
      if (kr_valid(spec, cur)) out.push_back(cur);
      cur[slot] = 0;
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      cur[slot] = v;
      rec(slot + 1, remaining - v);
    }
    cur[slot] = 0;
  };
  for (long len : allowed_lengths(spec)) rec(0, len);
  return out;
}

std::optional<KRElt> kr_op(const KRSpec& spec, const KRElt& c, int i, bool lower) {
  const int n = spec.type.n;
  if (i < 0 || i > n) throw std::invalid_argument("operator index out of range");
  const RowKind kind = row_kind(spec);
  KRElt r = c;

  // Slot addresses. x(j) counts letter j, xb(j) counts barred j.
  auto x = [&](int j) -> long& { return r[j - 1]; };
  auto xb = [&](int j) -> long& {
    return r[kind == RowKind::BRow ? 2 * n + 1 - j : 2 * n - j];
  };

  if (kind == RowKind::ARow) {
    if (i == 0) {
      if (lower) {
        --r[n], ++r[0];
      } else {
        --r[0], ++r[n];
      }
    } else if (lower) {
      --r[i - 1], ++r[i];
    } else {
      ++r[i - 1], --r[i];
    }
  } else if (kind == RowKind::ADualRow) {
    // Raising moves a column complement j* to (j+1)*; node 0 wraps.
    if (i == 0) {
      if (lower) {
        --r[0], ++r[n];
      } else {
        --r[n], ++r[0];
      }
    } else if (lower) {
      ++r[i - 1], --r[i];
    } else {
      --r[i - 1], ++r[i];
    }
  } else if (i == 0) {
    switch (zero_case(spec.type.family)) {
      case 1:
        if (lower) {
          if (x(2) >= xb(2)) ++x(2), --xb(1);
          else ++x(1), --xb(2);
        } else {
          if (x(2) > xb(2)) --x(2), ++xb(1);
          else --x(1), ++xb(2);
        }
        break;
      case 2:
        if (lower) {
          if (x(1) >= xb(1)) ++x(1);
          else --xb(1);
        } else {
          if (x(1) > xb(1)) --x(1);
          else ++xb(1);
        }
        break;
      default:
        if (lower) {
          if (x(1) >= xb(1)) x(1) += 2;
          else if (xb(1) == x(1) + 1) ++x(1), --xb(1);
          else xb(1) -= 2;
        } else {
          if (x(1) >= xb(1) + 2) x(1) -= 2;
          else if (x(1) == xb(1) + 1) --x(1), ++xb(1);
          else xb(1) += 2;
        }
        break;
    }
  } else if (i < n - 1 || (i == n - 1 && kind != RowKind::DRow)) {
    // Generic two-sided move between letters i, i+1 and their bars.
    if (lower) {
      if (x(i + 1) >= xb(i + 1)) --x(i), ++x(i + 1);
      else --xb(i + 1), ++xb(i);
    } else {
      if (x(i + 1) > xb(i + 1)) ++x(i), --x(i + 1);
      else ++xb(i + 1), --xb(i);
    }
  } else if (kind == RowKind::CRow && i == n) {
    if (lower) --x(n), ++xb(n);
    else ++x(n), --xb(n);
  } else if (kind == RowKind::BRow && i == n) {
    long& null_ct = r[n];
    if (lower) {
      if (null_ct == 1) --null_ct, ++xb(n);
      else --x(n), ++null_ct;
    } else {
      if (null_ct == 0) ++null_ct, --xb(n);
      else ++x(n), --null_ct;
    }
  } else if (i == n - 1) {  // DRow
    if (lower) {
      if (xb(n) == 0) --x(n - 1), ++x(n);
      else --xb(n), ++xb(n - 1);
    } else {
      if (x(n) > 0) ++x(n - 1), --x(n);
      else ++xb(n), --xb(n - 1);
    }
  } else {  // DRow node n
    if (lower) {
      if (x(n) == 0) --x(n - 1), ++xb(n);
      else --x(n), ++xb(n - 1);
    } else {
      if (xb(n) > 0) ++x(n - 1), --xb(n);
      else ++x(n), --xb(n - 1);
    }
  }

  if (!kr_valid(spec, r)) return std::nullopt;
  return r;
}

long kr_eps(const KRSpec& spec, const KRElt& c, int i) {
  long k = 0;
  KRElt cur = c;
  while (auto nxt = kr_op(spec, cur, i, false)) {
    cur = std::move(*nxt);
    ++k;
  }
  return k;
}

long kr_phi(const KRSpec& spec, const KRElt& c, int i) {
  long k = 0;
  KRElt cur = c;
  while (auto nxt = kr_op(spec, cur, i, true)) {
    cur = std::move(*nxt);
    ++k;
  }
  return k;
}

Weight kr_weight(const KRSpec& spec, const KRElt& c) {
  const int n = spec.type.n;
  Weight w(n, 0);
  switch (row_kind(spec)) {
    case RowKind::ARow:
      for (int a = 1; a <= n; ++a) w[a - 1] = c[a - 1] - c[a];
      break;
    case RowKind::ADualRow:
      for (int a = 1; a <= n; ++a) w[a - 1] = c[a] - c[a - 1];
      break;
    default: {
      const bool has_null = row_kind(spec) == RowKind::BRow;
      std::vector<long> d(n + 1, 0);
      for (int j = 1; j <= n; ++j)
        d[j] = c[j - 1] - c[has_null ? 2 * n + 1 - j : 2 * n - j];
      for (int a = 1; a + 1 <= n; ++a) w[a - 1] = d[a] - d[a + 1];
      switch (row_kind(spec)) {
        case RowKind::CRow:
          w[n - 1] = d[n];
          break;
        case RowKind::BRow:
          w[n - 1] = 2 * d[n];
          break;
        default:  // DRow: spin coordinates
          w[n - 2] = d[n - 1] - d[n];
          w[n - 1] = d[n - 1] + d[n];
          break;
      }
    }
  }
  return w;
}

std::string elt_str(const KRSpec& spec, const KRElt& c) {
  const int n = spec.type.n;
  const RowKind kind = row_kind(spec);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& tok, long count) {
    for (long k = 0; k < count; ++k) {
      if (!first) os << ' ';
      os << tok;
      first = false;
    }
  };
  if (kind == RowKind::ADualRow) {
    for (int j = n; j >= 0; --j) emit(std::to_string(j + 1) + "v", c[j]);
  } else if (kind == RowKind::ARow) {
    for (int j = 0; j <= n; ++j) emit(std::to_string(j + 1), c[j]);
  } else {
    for (int j = 1; j <= n; ++j) emit(std::to_string(j), c[j - 1]);
    if (kind == RowKind::BRow) emit("0", c[n]);
    const int base = kind == RowKind::BRow ? n + 1 : n;
    for (int j = n; j >= 1; --j) emit("-" + std::to_string(j), c[base + n - j]);
  }
  if (first) os << '.';
  return os.str();
}

KRElt star_elt(const KRSpec& spec, const KRElt& c) {
  RowKind kind = row_kind(spec);
  if (kind != RowKind::ARow && kind != RowKind::ADualRow)
    throw UnsupportedType("star involution requires a type A factor");
  KRElt r = c;
  std::reverse(r.begin(), r.end());
  return r;
}

KRSpec dual_spec(const KRSpec& spec) {
  row_kind(spec);  // validates the family
  if (spec.type.family != Family::A1)
    throw UnsupportedType("duality requires a type A factor");
  KRSpec d = spec;
  d.dual = !d.dual;
  return d;
}

TensorCrystal row_tensor(AffineType t, const std::vector<int>& widths) {
  TensorCrystal B;
  B.type = t;
  for (int s : widths) B.factors.push_back(KRSpec{t, s, false});
  return B;
}

TensorElt tensor_u(const TensorCrystal& B) {
  TensorElt b;
  for (const auto& f : B.factors) b.push_back(kr_u(f));
  return b;
}

bool tensor_valid(const TensorCrystal& B, const TensorElt& b) {
  if (b.size() != B.factors.size()) return false;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!kr_valid(B.factors[k], b[k])) return false;
  return true;
}

std::optional<TensorElt> tensor_op(const TensorCrystal& B, const TensorElt& b, int i,
                                   bool lower) {
  const std::size_t L = b.size();
  std::vector<long> eps(L), phi(L);
  for (std::size_t k = 0; k < L; ++k) {
    eps[k] = kr_eps(B.factors[k], b[k], i);
    phi[k] = kr_phi(B.factors[k], b[k], i);
  }
  // sphi[k] = phi of the suffix starting at factor k.
  std::vector<long> sphi(L + 1, 0);
  for (std::size_t k = L; k-- > 0;)
    sphi[k] = phi[k] + std::max(0L, sphi[k + 1] - eps[k]);

  std::size_t act = L;
  for (std::size_t k = 0; k < L; ++k) {
    const bool here = lower ? eps[k] >= sphi[k + 1] : eps[k] > sphi[k + 1];
    if (here) {
      act = k;
      break;
    }
  }
  if (act == L) {
    if (lower) act = L - 1;  // eps >= 0 always holds there
    else return std::nullopt;
  }
  auto moved = kr_op(B.factors[act], b[act], i, lower);
  if (!moved) return std::nullopt;
  TensorElt out = b;
  out[act] = std::move(*moved);
  return out;
}

long tensor_eps(const TensorCrystal& B, const TensorElt& b, int i) {
  long e = 0, p = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    long fe = kr_eps(B.factors[k], b[k], i);
    long fp = kr_phi(B.factors[k], b[k], i);
    long ne = fe + std::max(0L, e - fp);
    long np = p + std::max(0L, fp - e);
    e = ne, p = np;
  }
  return e;
}

long tensor_phi(const TensorCrystal& B, const TensorElt& b, int i) {
  long e = 0, p = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    long fe = kr_eps(B.factors[k], b[k], i);
    long fp = kr_phi(B.factors[k], b[k], i);
    long ne = fe + std::max(0L, e - fp);
    long np = p + std::max(0L, fp - e);
    e = ne, p = np;
  }
  return p;
}

Weight tensor_weight(const TensorCrystal& B, const TensorElt& b) {
  Weight w = zero_weight(B.type.n);
  for (std::size_t k = 0; k < b.size(); ++k)
    w = weight_add(w, kr_weight(B.factors[k], b[k]));
  return w;
}

std::string tensor_elt_str(const TensorCrystal& B, const TensorElt& b) {
  std::ostringstream os;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) os << " (x) ";
    os << elt_str(B.factors[k], b[k]);
  }
  return os.str();
}

TensorCrystal dual_crystal(const TensorCrystal& B) {
  TensorCrystal D;
  D.type = B.type;
  for (auto it = B.factors.rbegin(); it != B.factors.rend(); ++it)
    D.factors.push_back(dual_spec(*it));
  return D;
}

TensorElt dual_elt(const TensorElt& b) {
  TensorElt d(b.rbegin(), b.rend());
  return d;
}

std::vector<TensorElt> tensor_set(const TensorCrystal& B) {
  std::vector<std::vector<KRElt>> per;
  for (const auto& f : B.factors) per.push_back(kr_set(f));
  std::vector<TensorElt> out;
  TensorElt cur(B.factors.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == per.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : per[k]) {
      cur[k] = e;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

CrystalGraph generate_graph(const TensorCrystal& B, long cap) {
  CrystalGraph g;
  g.crystal = B;
  const int n = B.type.n;
  g.f_arc.assign(n + 1, {});
  g.e_arc.assign(n + 1, {});

  auto find_or_add = [&](const TensorElt& v) -> int {
    auto it = g.index.find(v);
    if (it != g.index.end()) return it->second;
    if ((long)g.verts.size() >= cap)
      throw ResourceLimit("crystal graph exceeds " + std::to_string(cap) +
                          " vertices");
    int id = (int)g.verts.size();
    g.verts.push_back(v);
    g.index.emplace(v, id);
    return id;
  };

  find_or_add(tensor_u(B));
  for (std::size_t head = 0; head < g.verts.size(); ++head) {
    TensorElt cur = g.verts[head];
    for (int i = 0; i <= n; ++i) {
      auto fn = tensor_op(B, cur, i, true);
      g.f_arc[i].push_back(fn ? find_or_add(*fn) : -1);
      auto en = tensor_op(B, cur, i, false);
      g.e_arc[i].push_back(en ? find_or_add(*en) : -1);
    }
  }
  return g;
}

std::vector<TensorElt> restricted_paths(const TensorCrystal& B, const Weight& lambda) {
  std::vector<TensorElt> out;
  for (const auto& b : tensor_set(B)) {
    if (tensor_weight(B, b) != lambda) continue;
    bool hw = true;
    for (int i = 1; i <= B.type.n && hw; ++i)
      if (tensor_eps(B, b, i) != 0) hw = false;
    if (hw) out.push_back(b);
  }
  return out;
}

long crystal_level(const TensorCrystal& B) {
  const DynkinData& dd = dynkin_data(B.type);
  long best = -1;
  for (const auto& b : tensor_set(B)) {
    long lev = 0;
    for (int i = 0; i <= B.type.n; ++i)
      lev += dd.a_dual[i] * tensor_eps(B, b, i);
    if (best < 0 || lev < best) best = lev;
  }
  return best;
}

}  // namespace kr
