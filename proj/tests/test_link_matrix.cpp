#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "whitten/link_matrix.hpp"

using namespace whitten;

namespace {

Element el(const char* s) { return parse_element(s); }

std::vector<Element> sorted(std::vector<const char*> xs) {
  std::vector<Element> v;
  for (auto x : xs) v.push_back(el(x));
  std::sort(v.begin(), v.end());
  return v;
}

LinkingMatrix random_matrix(std::mt19937& rng, int mu, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  LinkingMatrix m(mu);
  for (int i = 0; i < mu; ++i)
    for (int j = i + 1; j < mu; ++j) m.set(i, j, d(rng));
  return m;
}

// Table of standard-form representatives with a, b, c = 1, 2, 3.
const std::vector<std::pair<Triple, std::size_t>> kTableOrders = {
    {{0, 0, 0}, 96}, {{1, 0, 0}, 16}, {{1, -1, 0}, 8}, {{1, 1, 0}, 8},  {{1, 2, 0}, 4},
    {{1, 1, -1}, 12}, {{1, 1, 1}, 12}, {{1, 2, -2}, 4}, {{1, 2, 2}, 4}, {{1, 2, 3}, 2}};

}  // namespace

TEST_CASE("linking matrix validation") {
  CHECK_THROWS(LinkingMatrix::from_rows({{0, 1}, {2, 0}}));
  CHECK_THROWS(LinkingMatrix::from_rows({{1, 0}, {0, 0}}));
  LinkingMatrix m = LinkingMatrix::from_rows({{0, -1, -1}, {-1, 0, 1}, {-1, 1, 0}});
  CHECK(m.rows()[1][2] == 1);
  CHECK(triple_of(m) == Triple{1, -1, -1});
  CHECK(matrix_of(triple_of(m)) == m);
}

TEST_CASE("act_matrix") {
  std::mt19937 rng(1);
  LinkingMatrix a = random_matrix(rng, 3);
  CHECK(act_matrix(Element::identity(3), a) == a);
  CHECK(act_matrix(el("(1,-1,-1,-1,e)"), a) == a);
  CHECK_THROWS(act_matrix(Element::identity(2), a));

  // group action, exhaustively over Gamma_3 x Gamma_3 on 50 matrices
  const auto& els = gamma(3).elements();
  for (int t = 0; t < 50; ++t) {
    LinkingMatrix m = random_matrix(rng, 3);
    for (const auto& g : els)
      for (const auto& h : els)
        REQUIRE(act_matrix(compose(g, h), m) == act_matrix(g, act_matrix(h, m)));
  }
  // entry formula in terms of the triple: z'_k = eps_k * eps * z_{p(k)}
  for (const auto& g : els) {
    int e = g.eps0 * g.eps[0] * g.eps[1] * g.eps[2];
    Triple z{1, 2, 3};
    Triple w = triple_of(act_matrix(g, matrix_of(z)));
    for (int k = 0; k < 3; ++k) CHECK(w[k] == g.eps[k] * e * z[g.perm[k]]);
  }
}

TEST_CASE("brute-force stabilizers") {
  for (const auto& [z, order] : kTableOrders) {
    Subgroup s = stabilizer_bruteforce(matrix_of(z));
    CHECK(s.order() == order);
    CHECK(is_subgroup(s.elements));
  }
}

TEST_CASE("f3") {
  CHECK(f3(el("(1,-1,-1,-1,e)")) == Element::identity(3));
  CHECK(f3(Element::identity(3)) == Element::identity(3));
  const auto& els = gamma(3).elements();
  std::set<Element> image, kernel;
  for (const auto& a : els) {
    image.insert(f3(a));
    if (f3(a).is_identity()) kernel.insert(a);
    for (const auto& b : els) REQUIRE(f3(compose(a, b)) == compose(f3(a), f3(b)));
    for (const auto& p : f3_preimage(f3(a))) CHECK(f3(p) == f3(a));
    auto pre = f3_preimage(f3(a));
    CHECK((pre[0] == a || pre[1] == a));
  }
  CHECK(image.size() == 48);
  CHECK(std::vector<Element>(kernel.begin(), kernel.end()) == sorted({"(1,1,1,1,e)", "(1,-1,-1,-1,e)"}));
  for (const auto& a : els) {
    Triple z{1, -2, 3};
    CHECK(triple_of(act_matrix(a, matrix_of(z))) == act_triple(f3(a), z));
  }
}

TEST_CASE("S(a,a,-a) and its preimage") {
  auto s = image_stabilizer_3(TripleType::AAmA);
  CHECK(s == sorted({"(1,1,1,1,e)", "(1,1,1,1,(12))", "(1,1,-1,-1,(23))", "(1,-1,1,-1,(13))",
                     "(1,1,-1,-1,(123))", "(1,-1,1,-1,(132))"}));
  Subgroup pre = stabilizer_structured_3(matrix_of(Triple{1, 1, -1}));
  CHECK(pre.elements ==
        sorted({"(1,1,1,1,e)", "(1,1,1,1,(12))", "(1,1,-1,-1,(23))", "(1,-1,-1,-1,e)", "(1,-1,-1,-1,(12))",
                "(1,-1,1,1,(23))", "(1,-1,1,-1,(13))", "(1,1,-1,-1,(123))", "(1,-1,1,-1,(132))",
                "(1,1,-1,1,(13))", "(1,-1,1,1,(123))", "(1,1,-1,1,(132))"}));
  CHECK(identify_group(pre) == "D6");
}

TEST_CASE("the twelve-element stabilizer of the 7^3_1 matrix") {
  LinkingMatrix m = LinkingMatrix::from_rows({{0, -1, -1}, {-1, 0, 1}, {-1, 1, 0}});
  TripleClass c = classify_triple(triple_of(m));
  CHECK(c.type == TripleType::AAmA);
  CHECK(c.normalizer == el("(1,1,1,1,(13))"));
  auto expected = sorted({"(1,1,1,1,e)", "(1,1,1,1,(23))", "(1,-1,-1,1,(12))", "(1,-1,-1,-1,e)",
                          "(1,-1,-1,-1,(23))", "(1,1,1,-1,(12))", "(1,-1,1,-1,(13))", "(1,-1,-1,1,(132))",
                          "(1,-1,1,-1,(123))", "(1,1,-1,1,(13))", "(1,1,1,-1,(132))", "(1,1,-1,1,(123))"});
  CHECK(stabilizer_structured_3(m).elements == expected);
  CHECK(stabilizer_bruteforce(m).elements == expected);
  Subgroup pre = stabilizer_structured_3(matrix_of(Triple{1, 1, -1}));
  CHECK(conjugate_subgroup(pre, el("(1,1,1,1,(13))")).elements == expected);
}

TEST_CASE("classification covers every small triple and agrees with brute force") {
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int w = -3; w <= 3; ++w) {
        Triple z{x, y, w};
        LinkingMatrix m = matrix_of(z);
        TripleClass c = classify_triple(z);
        CHECK(act_matrix(c.normalizer, m) == matrix_of(c.standard));
        Subgroup b = stabilizer_bruteforce(m);
        REQUIRE(stabilizer_structured_3(m).elements == b.elements);
        std::size_t table = 0;
        for (const auto& [rep, order] : kTableOrders)
          if (classify_triple(rep).type == c.type) table = order;
        CHECK(b.order() == table);
      }
  CHECK(classify_triple({0, 0, 0}).type == TripleType::Zero);
}

TEST_CASE("f4 and G0") {
  CHECK(g0_permutations().size() == 8);
  CHECK(f4(Element::identity(4)) == Element::identity(4));
  std::vector<Element> g;
  for (const auto& e : gamma(4).elements())
    if (in_g0(e)) g.push_back(e);
  CHECK(g.size() == 256);
  std::set<Element> kernel, image;
  for (const auto& a : g) {
    if (f4(a).is_identity()) kernel.insert(a);
    image.insert(f4(a));
    for (const auto& b : g) REQUIRE(f4(compose(a, b)) == compose(f4(a), f4(b)));
    auto pre = f4_preimage(f4(a));
    CHECK(std::find(pre.begin(), pre.end(), a) != pre.end());
    for (const auto& p : pre) CHECK(f4(p) == f4(a));
  }
  CHECK(std::vector<Element>(kernel.begin(), kernel.end()) ==
        sorted({"(1,1,1,1,1,e)", "(1,-1,-1,-1,-1,e)", "(-1,-1,1,1,-1,e)", "(-1,1,-1,-1,1,e)"}));
  CHECK(image.size() == 64);
  for (const auto& d : image) CHECK(d.eps[3] == d.eps[0] * d.eps[1] * d.eps[2]);
  CHECK_THROWS(f4(el("(1,1,1,1,1,(12))")));
}

TEST_CASE("quad stabilizers") {
  for (int a : {1, 2, -1}) {
    for (Quad q : {Quad{a, a, a, a}, Quad{a, a, -a, a}, Quad{a, -a, -a, a}}) {
      LinkingMatrix m = matrix_of(q);
      Subgroup s = stabilizer_structured_4(m);
      CHECK(s.order() == 32);
      CHECK(s.elements == stabilizer_bruteforce(m).elements);
      for (const auto& k : {"(1,-1,-1,-1,-1,e)", "(-1,-1,1,1,-1,e)", "(-1,1,-1,-1,1,e)"}) CHECK(s.contains(el(k)));
      for (const auto& g : s.elements) {
        bool swaps13 = g.perm[0] == 2 && g.perm[2] == 0;
        bool swaps24 = g.perm[1] == 3 && g.perm[3] == 1;
        CHECK((!swaps13 || swaps24));
      }
    }
  }
  auto mid = image_stabilizer_4(QuadType::AAmAA);
  CHECK(mid.size() == 8);
  CHECK(is_subgroup(mid));
  CHECK(identify_group(generate(4, mid)) == "D4");
  CHECK_THROWS(stabilizer_structured_4(matrix_of(Quad{1, 2, 1, 1})));
  CHECK_THROWS(quad_of(LinkingMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}})));
}

TEST_CASE("mirror elements force a vanishing linking number") {
  CHECK(!mirror_zero_linking_check(matrix_of(Triple{1, 2, 3})));
  CHECK(mirror_zero_linking_check(matrix_of(Triple{1, 0, 0})));
  CHECK(mirror_zero_linking_check(matrix_of(Triple{0, 0, 0})));
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int w = -2; w <= 2; ++w)
        if (mirror_zero_linking_check(matrix_of(Triple{x, y, w}))) CHECK((x == 0 || y == 0 || w == 0));
}
