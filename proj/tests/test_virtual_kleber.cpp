/* Ambient realizations: folding data, the tree with admission rules,
   selection, and the graded multiplicity computed on the ambient side. */

#include <vector>

#include "doctest.h"
#include "kr/fermionic.hpp"
#include "kr/virtual_kleber.hpp"

using namespace kr;

namespace {

const AffineType C2 = make_type(Family::C1, 2);
const AffineType Y3 = make_type(Family::A1, 3);

// B^{1,2} (x) B^{1,1} (x) B^{2,1} for C_2^{(1)}.
TensorSpec c2_tensor() { return {{{1, 2}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}; }

std::vector<Weight> weight_box(int n, long cap) {
  std::vector<Weight> out;
  Weight w(n, 0);
  for (;;) {
    out.push_back(w);
    int pos = n - 1;
    while (pos >= 0 && w[pos] == cap) w[pos--] = 0;
    if (pos < 0) return out;
    ++w[pos];
  }
}

QPolynomial m_by_enumeration(AffineType t, const TensorSpec& B, const Weight& lambda) {
  QPolynomial out;
  for (const Configuration& nu : brute_force_configs(t, B, lambda)) out += config_term(t, B, nu);
  return out;
}

}  // namespace

TEST_SUITE("virtual_kleber") {

TEST_CASE("folding tables") {
  const EmbeddingData& c2 = embedding(C2);
  CHECK(c2.y.str() == "A3~1");
  CHECK(c2.iota == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  CHECK(c2.gamma == std::vector<int>{2, 1, 2});
  CHECK(c2.gamma_max == 2);
  CHECK(c2.orbits() == std::vector<std::vector<int>>{{1, 3}, {2}});

  const EmbeddingData& c3 = embedding(make_type(Family::C1, 3));
  CHECK(c3.y.str() == "A5~1");
  CHECK(c3.iota == std::vector<std::vector<int>>{{0}, {1, 5}, {2, 4}, {3}});
  CHECK(c3.gamma == std::vector<int>{2, 1, 1, 2});

  const EmbeddingData& a4 = embedding(make_type(Family::A2Even, 2));
  CHECK(a4.y.str() == "A3~1");
  CHECK(a4.iota == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  CHECK(a4.gamma == std::vector<int>{1, 1, 2});
  CHECK(a4.gamma_max == 1);  // widths stay put at node n

  const EmbeddingData& a4d = embedding(make_type(Family::A2EvenDag, 2));
  CHECK(a4d.y.str() == "A3~1");
  CHECK(a4d.gamma == std::vector<int>{2, 1, 1});
  CHECK(a4d.gamma_max == 1);

  const EmbeddingData& a2d = embedding(make_type(Family::A2EvenDag, 1));
  CHECK(a2d.y.str() == "A1~1");
  CHECK(a2d.iota == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(a2d.gamma == std::vector<int>{2, 1});
  CHECK(a2d.gamma_max == 1);

  const EmbeddingData& a2 = embedding(make_type(Family::A2Even, 1));
  CHECK(a2.y.str() == "A1~1");
  CHECK(a2.gamma == std::vector<int>{1, 2});
  CHECK(a2.gamma_max == 1);

  const EmbeddingData& d3 = embedding(make_type(Family::D2, 2));
  CHECK(d3.y.str() == "A3~1");
  CHECK(d3.gamma == std::vector<int>{1, 1, 1});
  CHECK(d3.gamma_max == 1);

  const EmbeddingData& b3 = embedding(make_type(Family::B1, 3));
  CHECK(b3.y.str() == "D4~1");
  CHECK(b3.iota == std::vector<std::vector<int>>{{0}, {1}, {2}, {3, 4}});
  CHECK(b3.gamma == std::vector<int>{2, 2, 2, 1});
  CHECK(b3.gamma_max == 2);

  const EmbeddingData& a5 = embedding(make_type(Family::A2Odd, 3));
  CHECK(a5.y.str() == "D4~1");
  CHECK(a5.iota == std::vector<std::vector<int>>{{0}, {1}, {2}, {3, 4}});
  CHECK(a5.gamma == std::vector<int>{1, 1, 1, 1});

  const EmbeddingData& f4 = embedding(make_type(Family::F41, 4));
  CHECK(f4.y.str() == "E6~1");
  CHECK(f4.iota == std::vector<std::vector<int>>{{0}, {6}, {3}, {2, 4}, {1, 5}});
  CHECK(f4.gamma == std::vector<int>{2, 2, 2, 1, 1});
  CHECK(f4.gamma_max == 2);

  const EmbeddingData& g2 = embedding(make_type(Family::G21, 2));
  CHECK(g2.y.str() == "D4~1");
  CHECK(g2.iota == std::vector<std::vector<int>>{{0}, {2}, {1, 3, 4}});
  CHECK(g2.gamma == std::vector<int>{3, 3, 1});
  CHECK(g2.gamma_max == 3);

  CHECK(embedding(make_type(Family::E62, 4)).gamma == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(embedding(make_type(Family::D43, 2)).y.str() == "D4~1");

  CHECK_THROWS_AS(embedding(Y3), UnsupportedType);
  CHECK_THROWS_AS(embedding(make_type(Family::A1, 1)), UnsupportedType);
}

TEST_CASE("weight images and preimages") {
  CHECK(psi_weight(C2, {3, 1}) == Weight{3, 2, 3});
  CHECK(devirtualize_weight(C2, {3, 2, 3}) == Weight{3, 1});
  CHECK(is_psi_image(C2, {3, 2, 3}));
  CHECK_FALSE(is_psi_image(C2, {3, 2, 2}));  // orbit coordinates differ
  CHECK_FALSE(is_psi_image(C2, {1, 1, 1}));  // middle not divisible by 2
  CHECK_THROWS_AS(devirtualize_weight(C2, {1, 1, 1}), std::invalid_argument);

  const AffineType b3 = make_type(Family::B1, 3);
  CHECK(psi_weight(b3, {1, 0, 1}) == Weight{2, 0, 1, 1});
  CHECK(devirtualize_weight(b3, {2, 0, 1, 1}) == Weight{1, 0, 1});

  const AffineType g2 = make_type(Family::G21, 2);
  CHECK(psi_weight(g2, {1, 1}) == Weight{1, 3, 1, 1});
  CHECK(devirtualize_weight(g2, {1, 3, 1, 1}) == Weight{1, 1});

  // Rank 1 of the dagger family: the fixed middle node maps at scale one;
  // the doubling sits in the two ambient copies, not in the weight map.
  const AffineType a2d = make_type(Family::A2EvenDag, 1);
  CHECK(psi_weight(a2d, {2}) == Weight{2});
  CHECK(devirtualize_weight(a2d, {4}) == Weight{4});
  CHECK(is_psi_image(a2d, {3}));
}

TEST_CASE("tensor lifts") {
  CHECK(lift_L(C2, c2_tensor()) ==
        TensorSpec{{{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}, {{3, 1}, 1}, {{3, 2}, 1}});
  CHECK(lift_L(make_type(Family::B1, 3), {{{1, 1}, 1}, {{3, 2}, 1}}) ==
        TensorSpec{{{1, 2}, 1}, {{3, 2}, 1}, {{4, 2}, 1}});
  CHECK(lift_L(make_type(Family::A2Even, 2), {{{2, 3}, 2}}) == TensorSpec{{{2, 3}, 4}});
  CHECK(lift_L(make_type(Family::A2Even, 2), {{{1, 2}, 1}}) ==
        TensorSpec{{{1, 2}, 1}, {{3, 2}, 1}});
  CHECK(lift_L(make_type(Family::A2EvenDag, 1), {{{1, 2}, 3}}) == TensorSpec{{{1, 2}, 6}});
  CHECK(lift_L(make_type(Family::A2EvenDag, 2), {{{1, 1}, 1}, {{2, 2}, 1}}) ==
        TensorSpec{{{1, 1}, 1}, {{3, 1}, 1}, {{2, 2}, 1}});
  CHECK(lift_L(make_type(Family::G21, 2), {{{1, 1}, 1}, {{2, 1}, 1}}) ==
        TensorSpec{{{2, 3}, 1}, {{1, 1}, 1}, {{3, 1}, 1}, {{4, 1}, 1}});
}

TEST_CASE("the eleven-node ambient tree comes out exactly") {
  const KleberTree tree = virtual_kleber_tree(C2, c2_tensor());

  struct Row {
    Weight final;
    Weight edge;
    int depth;
    int parent;
  };
  const std::vector<Row> expect = {
      {{3, 2, 3}, {}, 0, -1},        //
      {{1, 4, 1}, {1, 0, 1}, 1, 0},  // split off by a vanishing middle edge
      {{2, 2, 2}, {1, 1, 1}, 1, 0},  //
      {{1, 2, 1}, {2, 2, 2}, 1, 0},  //
      {{3, 0, 3}, {0, 1, 0}, 2, 2},  //
      {{1, 2, 1}, {1, 1, 1}, 2, 2},  //
      {{1, 0, 1}, {1, 2, 1}, 2, 3},  //
      {{2, 0, 2}, {0, 1, 0}, 3, 5},  //
      {{0, 2, 0}, {1, 1, 1}, 3, 5},  //
      {{0, 0, 0}, {1, 1, 1}, 3, 6},  //
      {{1, 0, 1}, {0, 1, 0}, 4, 8},  //
  };
  REQUIRE(tree.nodes.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CAPTURE(i);
    CHECK(tree.nodes[i].final_wt == expect[i].final);
    CHECK(tree.nodes[i].edge == expect[i].edge);
    CHECK(tree.nodes[i].depth == expect[i].depth);
    CHECK(tree.nodes[i].parent == expect[i].parent);
  }
  CHECK(tree.nodes[0].children == std::vector<int>{1, 2, 3});
  CHECK(tree.nodes[2].children == std::vector<int>{4, 5});
  CHECK(tree.nodes[3].children == std::vector<int>{6});
  CHECK(tree.nodes[5].children == std::vector<int>{7, 8});
  CHECK(tree.nodes[6].children == std::vector<int>{9});
  CHECK(tree.nodes[8].children == std::vector<int>{10});

  // The middle coordinate of every node weight is even and the outer two
  // agree: the admission rules enforce the folding symmetry.
  for (const KleberNode& node : tree.nodes) {
    CHECK(node.final_wt[0] == node.final_wt[2]);
    CHECK(node.final_wt[1] % 2 == 0);
  }
}

TEST_CASE("selection picks the six encoding nodes") {
  const TensorSpec B = c2_tensor();
  const KleberTree tree = virtual_kleber_tree(C2, B);
  const std::vector<SelectedNode> sel = select_nodes(C2, tree);

  REQUIRE(sel.size() == 6);
  const std::vector<int> idx = {0, 1, 4, 5, 6, 10};
  const std::vector<Weight> xw = {{3, 1}, {1, 2}, {3, 0}, {1, 1}, {1, 0}, {1, 0}};
  const std::vector<Configuration> ycfg = {
      Configuration(3),
      {{{1, 1}}, {}, {{1, 1}}},
      {{{1, 1}}, {{2, 1}}, {{1, 1}}},
      {{{2, 1}}, {{2, 1}}, {{2, 1}}},
      {{{1, 1}, {2, 1}}, {{2, 2}}, {{1, 1}, {2, 1}}},
      {{{3, 1}}, {{4, 1}}, {{3, 1}}},
  };
  const std::vector<Configuration> xcfg = {
      Configuration(2),
      {{{1, 1}}, {}},
      {{{1, 1}}, {{1, 1}}},
      {{{2, 1}}, {{1, 1}}},
      {{{1, 1}, {2, 1}}, {{1, 2}}},
      {{{3, 1}}, {{2, 1}}},
  };
  for (size_t k = 0; k < sel.size(); ++k) {
    CAPTURE(k);
    CHECK(sel[k].node == idx[k]);
    CHECK(sel[k].x_weight == xw[k]);
    CHECK(sel[k].y_config == ycfg[k]);
    CHECK(sel[k].x_config == xcfg[k]);
  }

  // Ambient vacancy numbers at the occupied rows, doubled on the middle
  // node relative to their preimages.
  const TensorSpec bhat = lift_L(C2, B);
  CHECK(vacancy(Y3, bhat, ycfg[2], 1, 1) == 1);
  CHECK(vacancy(Y3, bhat, ycfg[2], 2, 2) == 0);
  CHECK(vacancy(Y3, bhat, ycfg[2], 3, 1) == 1);
  CHECK(vacancy(Y3, bhat, ycfg[3], 1, 2) == 1);
  CHECK(vacancy(Y3, bhat, ycfg[3], 2, 2) == 2);
  CHECK(vacancy(Y3, bhat, ycfg[3], 3, 2) == 1);
  CHECK(vacancy(Y3, bhat, ycfg[4], 1, 1) == 0);
  CHECK(vacancy(Y3, bhat, ycfg[4], 1, 2) == 1);
  CHECK(vacancy(Y3, bhat, ycfg[4], 2, 2) == 0);
  CHECK(vacancy(Y3, bhat, ycfg[5], 1, 3) == 0);
  CHECK(vacancy(Y3, bhat, ycfg[5], 2, 4) == 0);
  CHECK(vacancy(Y3, bhat, ycfg[5], 3, 3) == 0);

  // Cocharge doubles (gamma_0 = 2).
  CHECK(cocharge(Y3, ycfg[4]) == 6);
  CHECK(cocharge(C2, xcfg[4]) == 3);
  CHECK(cocharge(Y3, ycfg[5]) == 4);
  CHECK(cocharge(C2, xcfg[5]) == 2);
}

TEST_CASE("pruning to the selected nodes gives the drawn tree") {
  const KleberTree tree = virtual_kleber_tree(C2, c2_tensor());
  std::vector<int> marked;
  for (const SelectedNode& s : select_nodes(C2, tree)) marked.push_back(s.node);

  const KleberTree drawn = prune_to_marked(tree, marked);
  REQUIRE(drawn.nodes.size() == 9);
  const std::vector<Weight> finals = {{3, 2, 3}, {1, 4, 1}, {2, 2, 2}, {1, 2, 1}, {3, 0, 3},
                                      {1, 2, 1}, {1, 0, 1}, {0, 2, 0}, {1, 0, 1}};
  const std::vector<int> parents = {-1, 0, 0, 0, 2, 2, 3, 5, 7};
  const std::vector<int> depths = {0, 1, 1, 1, 2, 2, 2, 3, 4};
  for (size_t i = 0; i < drawn.nodes.size(); ++i) {
    CAPTURE(i);
    CHECK(drawn.nodes[i].final_wt == finals[i]);
    CHECK(drawn.nodes[i].parent == parents[i]);
    CHECK(drawn.nodes[i].depth == depths[i]);
  }
  CHECK(drawn.nodes[0].children == std::vector<int>{1, 2, 3});
  CHECK(drawn.nodes[5].children == std::vector<int>{7});
  CHECK(drawn.nodes[7].children == std::vector<int>{8});

  CHECK(prune_to_marked(tree, {}).nodes.size() == 1);
}

TEST_CASE("configuration and rigging transport") {
  const Configuration deep_x = {{{1, 1}, {2, 1}}, {{1, 2}}};
  const Configuration deep_y = {{{1, 1}, {2, 1}}, {{2, 2}}, {{1, 1}, {2, 1}}};
  CHECK(virtualize_config(C2, deep_x) == deep_y);
  CHECK(devirtualize_config(C2, deep_y) == deep_x);

  const AffineType a4 = make_type(Family::A2Even, 2);
  const Configuration mixed_x = {{{1, 1}}, {{3, 1}, {1, 1}}};
  const Configuration mixed_y = {{{1, 1}}, {{3, 1}, {1, 1}}, {{1, 1}}};
  CHECK(virtualize_config(a4, mixed_x) == mixed_y);  // node n keeps row lengths
  CHECK(devirtualize_config(a4, mixed_y) == mixed_x);

  CHECK_THROWS_AS(devirtualize_config(C2, {{{1, 1}}, {{1, 1}}, {{1, 1}}}),
                  std::invalid_argument);  // middle row off the width grid
  CHECK_THROWS_AS(devirtualize_config(C2, {{{1, 1}}, {}, {{2, 1}}}),
                  std::invalid_argument);  // orbit mismatch

  RiggedConfiguration rc;
  rc.nu = {{{2, 1}}, {{1, 1}}};
  rc.riggings = {{{2, {1}}}, {{1, {1}}}};
  const RiggedConfiguration rchat = virtualize_rigged(C2, rc);
  CHECK(rchat.nu == Configuration{{{2, 1}}, {{2, 1}}, {{2, 1}}});
  CHECK(rchat.riggings ==
        std::vector<std::map<long, std::vector<long>>>{{{2, {1}}}, {{2, {2}}}, {{2, {1}}}});
  CHECK(devirtualize_rigged(C2, rchat) == rc);

  RiggedConfiguration odd = rchat;
  odd.riggings[1][2] = {1};  // label not divisible by gamma
  CHECK_THROWS_AS(devirtualize_rigged(C2, odd), std::invalid_argument);

  // Rank 1 of the dagger family keeps both rows and labels.
  const AffineType a2d = make_type(Family::A2EvenDag, 1);
  RiggedConfiguration rd;
  rd.nu = {{{2, 1}}};
  rd.riggings = {{{2, {3, 1}}}};
  const RiggedConfiguration rdhat = virtualize_rigged(a2d, rd);
  CHECK(rdhat.nu == Configuration{{{2, 1}}});
  CHECK(rdhat.riggings == std::vector<std::map<long, std::vector<long>>>{{{2, {3, 1}}}});
  CHECK(devirtualize_rigged(a2d, rdhat) == rd);
}

TEST_CASE("ambient-side multiplicities match the direct formula") {
  struct Case {
    AffineType t;
    TensorSpec B;
  };
  const std::vector<Case> cases = {
      {C2, c2_tensor()},
      {C2, {{{2, 2}, 1}}},
      {make_type(Family::B1, 3), {{{1, 1}, 1}, {{3, 1}, 1}}},
      {make_type(Family::D2, 2), {{{1, 1}, 1}, {{2, 1}, 1}}},
      {make_type(Family::A2Odd, 3), {{{1, 1}, 1}, {{2, 1}, 1}}},
      {make_type(Family::A2Even, 1), {{{1, 1}, 1}, {{1, 3}, 1}}},
      {make_type(Family::A2Even, 2), {{{1, 1}, 1}, {{2, 1}, 1}}},
  };
  for (const auto& [t, B] : cases) {
    CAPTURE(t.str());
    long cap = 0;
    for (const auto& [rs, count] : B) cap += rs.second * count;
    for (const Weight& lambda : weight_box(t.n, cap)) {
      CAPTURE(weight_str(lambda));
      const QPolynomial via = m_polynomial_via_virtual(t, B, lambda);
      CHECK(via == m_by_enumeration(t, B, lambda));
      CHECK(via.integral_exponents());
    }
  }
}

TEST_CASE("selected nodes scale vacancies and cocharge") {
  struct Case {
    AffineType t;
    TensorSpec B;
  };
  const std::vector<Case> cases = {
      {C2, c2_tensor()},
      {make_type(Family::B1, 3), {{{1, 1}, 1}, {{3, 1}, 1}}},
      {make_type(Family::A2Even, 2), {{{1, 1}, 1}, {{2, 1}, 1}}},
      {make_type(Family::A2Odd, 3), {{{2, 1}, 1}, {{1, 1}, 1}}},
  };
  for (const auto& [t, B] : cases) {
    CAPTURE(t.str());
    const EmbeddingData& e = embedding(t);
    const TensorSpec bhat = lift_L(t, B);
    const KleberTree tree = virtual_kleber_tree(t, B);
    for (const SelectedNode& s : select_nodes(t, tree)) {
      CHECK(virtualize_config(t, s.x_config) == s.y_config);
      CHECK(cocharge(e.y, s.y_config) == e.gamma[0] * cocharge(t, s.x_config));
      for (int a = 1; a <= t.n; ++a) {
        const bool keeps = t.family == Family::A2Even && a == t.n;
        const long wf = keeps ? 1 : e.gamma[a];
        const long lf = keeps ? 2 : e.gamma[a];
        for (const auto& [i, m] : s.x_config[a - 1])
          for (int b : e.iota[a]) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(i);
            CHECK(vacancy(e.y, bhat, s.y_config, b, wf * i) ==
                  lf * vacancy(t, B, s.x_config, a, i));
          }
      }
    }
  }
}

TEST_CASE("dagger multiplicities live on the half grid") {
  const AffineType a2d = make_type(Family::A2EvenDag, 1);
  const TensorSpec one = {{{1, 1}, 1}};
  CHECK(m_polynomial(a2d, one, {2}).str() == "1");
  CHECK(m_polynomial(a2d, one, {1}).str() == "0");
  CHECK(m_polynomial(a2d, one, {0}).str() == "q^(1/2)");
  CHECK_FALSE(m_polynomial(a2d, one, {0}).integral_exponents());

  const TensorSpec two = {{{1, 1}, 2}};
  CHECK(m_polynomial(a2d, two, {4}).str() == "1");
  CHECK(m_polynomial(a2d, two, {2}).str() == "q^(1/2) + q + q^(3/2)");
  CHECK(m_polynomial(a2d, two, {0}).str() == "q + q^2");

  const AffineType a4d = make_type(Family::A2EvenDag, 2);
  CHECK(m_polynomial(a4d, one, {1, 0}).str() == "1");
  CHECK(m_polynomial(a4d, one, {0, 0}).str() == "q^(1/2)");

  // The direct machinery refuses this family.
  CHECK_THROWS_AS(enumerate_rigged(a2d, one, {0}), UnsupportedType);
  CHECK_THROWS_AS(m_polynomial_via_virtual(Y3, {{{1, 1}, 1}}, {1, 0, 0}), UnsupportedType);
  CHECK_THROWS_AS(m_polynomial_via_virtual(C2, c2_tensor(), {1, -1}), std::invalid_argument);
}

}  // TEST_SUITE
