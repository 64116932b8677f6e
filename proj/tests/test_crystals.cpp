/* Row crystal operators, tensor folds, graphs, decompositions. */

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kr/crystals.hpp"
#include "kr/root_data.hpp"

using namespace kr;

namespace {

KRSpec spec(Family f, int n, int s, bool dual = false) {
  return KRSpec{make_type(f, n), s, dual};
}

long binom(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (m - k + j) / j;
  return r;
}

// Classical component sizes of B(k Lambda-bar_1) per alphabet shape.
long component_size(RowKind kind, int n, long k) {
  switch (kind) {
    case RowKind::ARow:
    case RowKind::ADualRow:
      return binom(n + k, k);
    case RowKind::CRow:
      return binom(2 * n + k - 1, k);
    case RowKind::BRow:
      return binom(2 * n + k - 1, k) + binom(2 * n + k - 2, k - 1);
    default:
      return binom(2 * n + k - 1, k) - binom(2 * n + k - 3, k - 2);
  }
}

long expected_size(const KRSpec& sp) {
  long total = 0;
  for (long l : allowed_lengths(sp))
    total += component_size(row_kind(sp), sp.type.n, l);
  return total;
}

// Factors covered by the module invariants: every nonexceptional family at
// rank <= 3 and width <= 4 (D_n^(1) starts at rank 4).
std::vector<KRSpec> invariant_specs() {
  std::vector<KRSpec> out;
  for (int s = 1; s <= 4; ++s) {
    for (int n = 1; n <= 3; ++n) {
      out.push_back(spec(Family::A1, n, s));
      out.push_back(spec(Family::A1, n, s, true));
      out.push_back(spec(Family::A2Even, n, s));
      out.push_back(spec(Family::A2EvenDag, n, s));
    }
    for (int n = 2; n <= 3; ++n) {
      out.push_back(spec(Family::C1, n, s));
      out.push_back(spec(Family::D2, n, s));
    }
    out.push_back(spec(Family::B1, 3, s));
    out.push_back(spec(Family::A2Odd, 3, s));
    out.push_back(spec(Family::D1, 4, s));
  }
  return out;
}

// Word shorthand: letters by slot, e.g. C_2 word "2bar" is slot 2.
KRElt slots(std::initializer_list<long> v) { return KRElt(v); }

// Left-nested reference fold: split off the last factor instead of the
// first, so agreement with tensor_op checks associativity of the rule.
std::optional<TensorElt> left_op(const TensorCrystal& B, const TensorElt& b, int i,
                                 bool lower) {
  if (b.size() == 1) {
    auto r = kr_op(B.factors[0], b[0], i, lower);
    if (!r) return std::nullopt;
    return TensorElt{*r};
  }
  TensorCrystal pre{B.type, {B.factors.begin(), B.factors.end() - 1}};
  TensorElt preb(b.begin(), b.end() - 1);
  const KRSpec& last = B.factors.back();
  long ep = tensor_eps(pre, preb, i);
  long pl = kr_phi(last, b.back(), i);
  bool act_prefix = lower ? ep >= pl : ep > pl;
  TensorElt out = b;
  if (act_prefix) {
    auto r = left_op(pre, preb, i, lower);
    if (!r) return std::nullopt;
    std::copy(r->begin(), r->end(), out.begin());
  } else {
    auto r = kr_op(last, b.back(), i, lower);
    if (!r) return std::nullopt;
    out.back() = *r;
  }
  return out;
}

}  // namespace

TEST_SUITE("crystals") {

TEST_CASE("slot layout and allowed lengths") {
  CHECK(slot_count(spec(Family::A1, 3, 2)) == 4);
  CHECK(slot_count(spec(Family::A1, 3, 2, true)) == 4);
  CHECK(slot_count(spec(Family::B1, 3, 1)) == 7);
  CHECK(slot_count(spec(Family::C1, 2, 1)) == 4);
  CHECK(slot_count(spec(Family::D1, 4, 1)) == 8);
  CHECK(slot_count(spec(Family::A2EvenDag, 1, 2)) == 3);

  CHECK(allowed_lengths(spec(Family::C1, 2, 3)) == std::vector<long>{1, 3});
  CHECK(allowed_lengths(spec(Family::A2EvenDag, 1, 2)) == std::vector<long>{0, 2});
  CHECK(allowed_lengths(spec(Family::A2Even, 2, 2)) == std::vector<long>{0, 1, 2});
  CHECK(allowed_lengths(spec(Family::D2, 2, 1)) == std::vector<long>{0, 1});
  CHECK(allowed_lengths(spec(Family::B1, 3, 2)) == std::vector<long>{2});
  CHECK(allowed_lengths(spec(Family::A1, 2, 3)) == std::vector<long>{3});
}

TEST_CASE("highest elements and validity") {
  CHECK(kr_u(spec(Family::A1, 2, 2)) == slots({2, 0, 0}));
  CHECK(kr_u(spec(Family::A1, 2, 2, true)) == slots({0, 0, 2}));
  CHECK(kr_u(spec(Family::C1, 2, 1)) == slots({1, 0, 0, 0}));
  CHECK(kr_valid(spec(Family::C1, 2, 1), slots({0, 0, 1, 0})));
  CHECK_FALSE(kr_valid(spec(Family::C1, 2, 1), slots({0, 0, 0, 0})));  // bad length
  CHECK_FALSE(kr_valid(spec(Family::B1, 3, 2), slots({0, 0, 0, 2, 0, 0, 0})));  // two nulls
  CHECK_FALSE(kr_valid(spec(Family::D1, 4, 2), slots({0, 0, 0, 1, 1, 0, 0, 0})));
  CHECK(kr_valid(spec(Family::A2EvenDag, 1, 2), slots({0, 0, 0})));
  CHECK_FALSE(kr_valid(spec(Family::A2EvenDag, 1, 2), slots({1, 0, 0})));  // odd length
}

TEST_CASE("underlying set sizes match component sums") {
  for (const auto& sp : invariant_specs()) {
    CAPTURE(sp.type.str());
    CAPTURE(sp.s);
    CAPTURE(sp.dual);
    CHECK((long)kr_set(sp).size() == expected_size(sp));
  }
  // Spot values fixed from the binomial formulas.
  CHECK(kr_set(spec(Family::B1, 3, 2)).size() == 27);
  CHECK(kr_set(spec(Family::A2Even, 2, 2)).size() == 15);
  CHECK(kr_set(spec(Family::A2EvenDag, 1, 1)).size() == 3);
  CHECK(kr_set(spec(Family::A2EvenDag, 1, 2)).size() == 6);
  CHECK(kr_set(spec(Family::D1, 4, 2)).size() == 35);
  CHECK(kr_set(spec(Family::D2, 2, 2)).size() == 20);
  CHECK(kr_set(spec(Family::A2Odd, 3, 2)).size() == 21);
  CHECK(kr_set(spec(Family::C1, 2, 2)).size() == 11);
}

TEST_CASE("classical highest elements are the row heads") {
  for (const auto& sp : invariant_specs()) {
    CAPTURE(sp.type.str());
    CAPTURE(sp.s);
    CAPTURE(sp.dual);
    std::vector<KRElt> heads;
    for (const auto& c : kr_set(sp)) {
      bool hw = true;
      for (int i = 1; i <= sp.type.n && hw; ++i)
        if (kr_eps(sp, c, i) != 0) hw = false;
      if (hw) heads.push_back(c);
    }
    std::vector<KRElt> want;
    for (long l : allowed_lengths(sp)) {
      KRElt u(slot_count(sp), 0);
      if (row_kind(sp) == RowKind::ADualRow) u.back() = l;
      else u.front() = l;
      want.push_back(u);
    }
    std::sort(heads.begin(), heads.end());
    std::sort(want.begin(), want.end());
    CHECK(heads == want);
  }
}

TEST_CASE("single operator actions") {
  // C_2: raising at node 2 sends the word 2bar to 2.
  auto c2 = spec(Family::C1, 2, 1);
  CHECK(kr_op(c2, slots({0, 0, 1, 0}), 2, false) == KRElt{0, 1, 0, 0});
  // B_3: node 3 flips the null letter up to 3 and down to 3bar.
  auto b3 = spec(Family::B1, 3, 1);
  KRElt null_word = slots({0, 0, 0, 1, 0, 0, 0});
  CHECK(kr_op(b3, null_word, 3, false) == KRElt{0, 0, 1, 0, 0, 0, 0});
  CHECK(kr_op(b3, null_word, 3, true) == KRElt{0, 0, 0, 0, 1, 0, 0});
  // C_2^(1): node 0 drops a leading pair 11.
  auto c2w = spec(Family::C1, 2, 2);
  CHECK(kr_op(c2w, slots({2, 0, 0, 0}), 0, false) == KRElt{0, 0, 0, 0});
  CHECK(kr_op(c2w, slots({0, 0, 0, 0}), 0, true) == KRElt{2, 0, 0, 0});
  CHECK(kr_op(c2w, slots({0, 0, 0, 2}), 0, true) == KRElt{0, 0, 0, 0});
  CHECK_FALSE(kr_op(c2w, slots({0, 0, 0, 2}), 0, false).has_value());
  // D_3^(2): node 0 grows the empty word to 1bar.
  auto d32 = spec(Family::D2, 2, 1);
  CHECK(kr_op(d32, slots({0, 0, 0, 0, 0}), 0, false) == KRElt{0, 0, 0, 0, 1});
  CHECK_FALSE(kr_op(d32, slots({0, 0, 0, 0, 1}), 0, false).has_value());
  // A_2^(2)+ at rank 1: node 1 walks 1 -> null -> 1bar.
  auto dag = spec(Family::A2EvenDag, 1, 1);
  CHECK(kr_op(dag, slots({1, 0, 0}), 1, true) == KRElt{0, 1, 0});
  CHECK(kr_op(dag, slots({0, 1, 0}), 1, true) == KRElt{0, 0, 1});
  CHECK(kr_eps(dag, slots({0, 1, 0}), 1) == 1);
  CHECK(kr_phi(dag, slots({0, 1, 0}), 1) == 1);
  // A_3^(1) row: node 0 trades a 1 for a 4.
  auto a3 = spec(Family::A1, 3, 2);
  CHECK(kr_op(a3, slots({2, 0, 0, 0}), 0, false) == KRElt{1, 0, 0, 1});
  // A_3^(1) column factor: node 0 trades a 4* for a 1*.
  auto a3d = spec(Family::A1, 3, 2, true);
  CHECK(kr_op(a3d, slots({0, 0, 0, 2}), 0, false) == KRElt{1, 0, 0, 1});
  CHECK(kr_eps(a3d, slots({0, 0, 0, 2}), 0) == 2);
}

TEST_CASE("operators are partial inverses") {
  for (const auto& sp : invariant_specs()) {
    if (sp.s > 3) continue;  // inverse checking needs no extra width
    CAPTURE(sp.type.str());
    CAPTURE(sp.s);
    CAPTURE(sp.dual);
    for (const auto& c : kr_set(sp)) {
      for (int i = 0; i <= sp.type.n; ++i) {
        if (auto dn = kr_op(sp, c, i, true)) {
          CHECK(kr_valid(sp, *dn));
          CHECK(kr_op(sp, *dn, i, false) == c);
        }
        if (auto up = kr_op(sp, c, i, false)) {
          CHECK(kr_valid(sp, *up));
          CHECK(kr_op(sp, *up, i, true) == c);
        }
      }
    }
  }
}

TEST_CASE("classical weights move by simple roots") {
  for (const auto& sp : invariant_specs()) {
    if (sp.s > 2) continue;
    CAPTURE(sp.type.str());
    CAPTURE(sp.s);
    CAPTURE(sp.dual);
    const DynkinData& dd = dynkin_data(sp.type);
    const int n = sp.type.n;
    for (const auto& c : kr_set(sp)) {
      Weight w = kr_weight(sp, c);
      for (int i = 1; i <= n; ++i) {
        auto dn = kr_op(sp, c, i, true);
        if (!dn) continue;
        Weight wd = kr_weight(sp, *dn);
        for (int a = 1; a <= n; ++a) CHECK(wd[a - 1] == w[a - 1] - dd.cartan[a][i]);
      }
    }
  }
}

TEST_CASE("highest weight values per alphabet") {
  CHECK(kr_weight(spec(Family::C1, 2, 3), kr_u(spec(Family::C1, 2, 3))) ==
        Weight{3, 0});
  CHECK(kr_weight(spec(Family::B1, 3, 2), kr_u(spec(Family::B1, 3, 2))) ==
        Weight{2, 0, 0});
  // Rank one null alphabet: the letter 1 weighs two fundamental units.
  CHECK(kr_weight(spec(Family::A2EvenDag, 1, 1), slots({1, 0, 0})) == Weight{2});
  CHECK(kr_weight(spec(Family::A2EvenDag, 1, 1), slots({0, 1, 0})) == Weight{0});
  // D_4 spin coordinates.
  auto d4 = spec(Family::D1, 4, 1);
  CHECK(kr_weight(d4, slots({0, 0, 0, 1, 0, 0, 0, 0})) == Weight{0, 0, -1, 1});
  CHECK(kr_weight(d4, slots({0, 0, 0, 0, 1, 0, 0, 0})) == Weight{0, 0, 1, -1});
  // Column factor weight of the head: s Lambda-bar_n.
  auto a3d = spec(Family::A1, 3, 2, true);
  CHECK(kr_weight(a3d, kr_u(a3d)) == Weight{0, 0, 2});
}

TEST_CASE("string lengths at the head") {
  auto c2 = spec(Family::C1, 2, 3);
  for (int i = 1; i <= 2; ++i) CHECK(kr_eps(c2, kr_u(c2), i) == 0);
  CHECK(kr_phi(c2, kr_u(c2), 1) == 3);
  CHECK(kr_phi(c2, kr_u(c2), 2) == 0);
  auto a2 = spec(Family::A1, 2, 2);
  CHECK(kr_eps(a2, kr_u(a2), 0) == 2);
}

TEST_CASE("tensor fold on two factors") {
  AffineType a1 = make_type(Family::A1, 1);
  TensorCrystal B = row_tensor(a1, {1, 1});
  TensorElt one_two = {slots({1, 0}), slots({0, 1})};
  auto up = tensor_op(B, one_two, 1, false);
  REQUIRE(up.has_value());
  CHECK(*up == TensorElt{slots({1, 0}), slots({1, 0})});
  // f_1 on 1 (x) 1 acts on the right factor under this bracketing rule.
  TensorElt ones = tensor_u(B);
  auto dn = tensor_op(B, ones, 1, true);
  REQUIRE(dn.has_value());
  CHECK(*dn == TensorElt{slots({1, 0}), slots({0, 1})});
  CHECK(tensor_eps(B, one_two, 1) == 1);
  CHECK(tensor_phi(B, one_two, 1) == 1);
  CHECK(tensor_weight(B, ones) == Weight{2});
}

TEST_CASE("fold agrees with the left-nested evaluation") {
  std::vector<TensorCrystal> cases;
  cases.push_back(row_tensor(make_type(Family::A1, 2), {1, 1, 1}));
  cases.push_back(row_tensor(make_type(Family::C1, 2), {2, 1}));
  cases.push_back(row_tensor(make_type(Family::A2EvenDag, 1), {2, 1}));
  cases.push_back(row_tensor(make_type(Family::D2, 2), {1, 1, 1}));
  for (const auto& B : cases) {
    for (const auto& b : tensor_set(B)) {
      for (int i = 0; i <= B.type.n; ++i) {
        CHECK(tensor_op(B, b, i, true) == left_op(B, b, i, true));
        CHECK(tensor_op(B, b, i, false) == left_op(B, b, i, false));
      }
    }
  }
}

TEST_CASE("graphs are connected and arcs invert") {
  std::vector<TensorCrystal> cases;
  cases.push_back(row_tensor(make_type(Family::A1, 1), {1, 1}));
  cases.push_back(row_tensor(make_type(Family::C1, 2), {2, 1}));
  cases.push_back(row_tensor(make_type(Family::A2Even, 1), {1, 1}));
  cases.push_back(row_tensor(make_type(Family::A2EvenDag, 1), {2}));
  cases.push_back(row_tensor(make_type(Family::D2, 2), {2}));
  cases.push_back(row_tensor(make_type(Family::B1, 3), {2}));
  cases.push_back(row_tensor(make_type(Family::A2Odd, 3), {1}));
  cases.push_back(row_tensor(make_type(Family::D1, 4), {1}));
  for (const auto& B : cases) {
    CrystalGraph g = generate_graph(B);
    CHECK(g.verts.size() == tensor_set(B).size());
    CHECK(g.verts[0] == tensor_u(B));
    for (int i = 0; i <= B.type.n; ++i) {
      for (int v = 0; v < (int)g.verts.size(); ++v) {
        int w = g.f_arc[i][v];
        if (w >= 0) CHECK(g.e_arc[i][w] == v);
        int e = g.e_arc[i][v];
        if (e >= 0) CHECK(g.f_arc[i][e] == v);
      }
    }
  }
}

TEST_CASE("graph generation respects the vertex cap") {
  TensorCrystal B = row_tensor(make_type(Family::C1, 2), {1});
  CHECK_THROWS_AS(generate_graph(B, 3), ResourceLimit);
}

TEST_CASE("restricted paths") {
  // A_1: the only classically restricted pair of weight zero is 2 (x) 1.
  TensorCrystal B = row_tensor(make_type(Family::A1, 1), {1, 1});
  auto paths = restricted_paths(B, Weight{0});
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == TensorElt{slots({0, 1}), slots({1, 0})});
  // A_2^(2) at rank one: two restricted pairs of weight Lambda-bar_1.
  TensorCrystal B2 = row_tensor(make_type(Family::A2Even, 1), {1, 1});
  CHECK(restricted_paths(B2, Weight{1}).size() == 2);
  // The null letter is not classically restricted.
  TensorCrystal Bd = row_tensor(make_type(Family::A2EvenDag, 1), {1});
  CHECK(restricted_paths(Bd, Weight{2}).size() == 1);
  CHECK(restricted_paths(Bd, Weight{0}).empty());
}

TEST_CASE("levels") {
  CHECK(crystal_level(row_tensor(make_type(Family::A1, 1), {1})) == 1);
  CHECK(crystal_level(row_tensor(make_type(Family::A2Even, 1), {1})) == 1);
}

TEST_CASE("duality on type A") {
  auto sp = spec(Family::A1, 2, 2);
  CHECK(dual_spec(dual_spec(sp)) == sp);
  CHECK(dual_spec(sp).dual);
  // Columns raise where rows lower, on identical counts.
  for (const auto& c : kr_set(sp)) {
    for (int i = 0; i <= 2; ++i)
      CHECK(kr_op(dual_spec(sp), c, i, false) == kr_op(sp, c, i, true));
  }
  // On products the factor order reverses.
  TensorCrystal B = row_tensor(make_type(Family::A1, 2), {1, 2});
  TensorCrystal D = dual_crystal(B);
  CHECK(D.factors[0].s == 2);
  CHECK(D.factors[0].dual);
  for (const auto& b : tensor_set(B)) {
    CHECK(dual_elt(dual_elt(b)) == b);
    CHECK(tensor_weight(D, dual_elt(b)) ==
          weight_scale(-1, tensor_weight(B, b)));
    for (int i = 0; i <= 2; ++i) {
      auto fb = tensor_op(B, b, i, true);
      auto ed = tensor_op(D, dual_elt(b), i, false);
      if (fb) {
        REQUIRE(ed.has_value());
        CHECK(*ed == dual_elt(*fb));
      } else {
        CHECK_FALSE(ed.has_value());
      }
    }
  }
}

TEST_CASE("star involution twists the arrows") {
  auto sp = spec(Family::A1, 3, 2);
  const int m1 = 4;  // letters
  for (const auto& c : kr_set(sp)) {
    CHECK(star_elt(sp, star_elt(sp, c)) == c);
    for (int i = 0; i <= 3; ++i) {
      int si = i == 0 ? 0 : m1 - i;
      auto lhs = kr_op(sp, star_elt(sp, c), i, true);
      auto rhs = kr_op(sp, c, si, false);
      if (rhs) {
        REQUIRE(lhs.has_value());
        CHECK(*lhs == star_elt(sp, *rhs));
      } else {
        CHECK_FALSE(lhs.has_value());
      }
    }
  }
}

TEST_CASE("element rendering") {
  CHECK(elt_str(spec(Family::B1, 3, 2), slots({1, 0, 0, 1, 0, 0, 0})) == "1 0");
  CHECK(elt_str(spec(Family::C1, 2, 2), slots({0, 0, 0, 0})) == ".");
  CHECK(elt_str(spec(Family::C1, 2, 2), slots({1, 0, 1, 0})) == "1 -2");
  CHECK(elt_str(spec(Family::A1, 2, 2, true), slots({1, 0, 1})) == "3v 1v");
}

}  // TEST_SUITE
