#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "whitten/group.hpp"

using namespace whitten;

namespace {

Element el(const char* s) { return parse_element(s); }

Subgroup from_list(std::vector<const char*> xs) {
  Subgroup h;
  for (auto x : xs) h.elements.push_back(el(x));
  h.mu = h.elements.front().mu;
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

// Brute-force isomorphism: map a greedy generating set of h into k and check
// the assignment extends to a bijective homomorphism.
bool isomorphic(const Subgroup& h, const Subgroup& k) {
  if (h.order() != k.order()) return false;
  std::vector<Element> gens;
  {
    Subgroup cur = generate(h.mu, {});
    for (const auto& x : h.elements)
      if (!cur.contains(x)) {
        gens.push_back(x);
        cur = generate(h.mu, gens);
      }
  }
  std::vector<std::vector<Element>> choices;
  for (const auto& g : gens) {
    std::vector<Element> c;
    for (const auto& y : k.elements)
      if (element_order(y) == element_order(g)) c.push_back(y);
    choices.push_back(c);
  }
  std::vector<Element> img(gens.size(), Element::identity(k.mu));
  std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
    if (d == gens.size()) {
      std::map<Element, Element> phi;
      std::vector<Element> todo{Element::identity(h.mu)};
      phi[todo[0]] = Element::identity(k.mu);
      for (std::size_t t = 0; t < todo.size(); ++t)
        for (std::size_t s = 0; s < gens.size(); ++s) {
          Element x = compose(todo[t], gens[s]);
          Element y = compose(phi[todo[t]], img[s]);
          auto it = phi.find(x);
          if (it == phi.end()) {
            phi[x] = y;
            todo.push_back(x);
          } else if (!(it->second == y)) {
            return false;
          }
        }
      std::set<Element> image;
      for (auto& [a, b] : phi) image.insert(b);
      return image.size() == h.order();
    }
    for (const auto& y : choices[d]) {
      img[d] = y;
      if (rec(d + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(gamma(1).order() == 4);
  CHECK(gamma(2).order() == 16);
  CHECK(gamma(3).order() == 96);
  CHECK(gamma(4).order() == 768);
  CHECK(gamma(5).order() == 7680);
  for (int mu = 1; mu <= 4; ++mu) {
    std::set<Element> s(gamma(mu).elements().begin(), gamma(mu).elements().end());
    CHECK(s.size() == gamma_order(mu));
  }
  CHECK_THROWS(gamma(6));
  CHECK_THROWS(gamma(0));
}

TEST_CASE("element notation") {
  Element a = el("(1,-1,1,1,(123))");
  CHECK(a.mu == 3);
  CHECK(a.perm[0] == 1);
  CHECK(a.perm[1] == 2);
  CHECK(a.perm[2] == 0);
  CHECK(to_string(a) == "(1,-1,1,1,(123))");
  CHECK(to_string(el("(1,1,1,1,1,(1243))")) == "(1,1,1,1,1,(1243))");
  CHECK(to_string(el("(1,1,1,1,1,(13)(24))")) == "(1,1,1,1,1,(13)(24))");
  CHECK(el("(-1,1,1,e)").eps0 == -1);
  CHECK_THROWS(el("(1,1,(12)"));
  CHECK_THROWS(el("(1,2,1,e)"));
  CHECK_THROWS(el("(1,1,1,(13))"));
  CHECK(element_from_json(to_json(a)) == a);
}

TEST_CASE("compose and inverse") {
  CHECK(compose(el("(1,-1,-1,e)"), el("(1,-1,-1,e)")) == Element::identity(2));
  CHECK(compose(el("(1,-1,-1,-1,e)"), el("(1,-1,-1,-1,e)")) == Element::identity(3));
  CHECK(inverse(Element::identity(3)) == Element::identity(3));
  CHECK(inverse(el("(1,1,1,1,(123))")) == el("(1,1,1,1,(132))"));
  for (const auto& a : gamma(3).elements()) {
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(a, Element::identity(3)) == a);
  }
  CHECK_THROWS(compose(Element::identity(2), Element::identity(3)));
}

TEST_CASE("group axioms on Gamma_1..Gamma_3") {
  for (int mu = 1; mu <= 3; ++mu) {
    const auto& els = gamma(mu).elements();
    bool ok = true;
    for (const auto& a : els)
      for (const auto& b : els) {
        Element ab = compose(a, b);
        for (const auto& c : els)
          if (!(compose(ab, c) == compose(a, compose(b, c)))) ok = false;
      }
    CHECK(ok);
  }
  std::mt19937 rng(7);
  const auto& g4 = gamma(4).elements();
  std::uniform_int_distribution<std::size_t> pick(0, g4.size() - 1);
  for (int t = 0; t < 10000; ++t) {
    const auto &a = g4[pick(rng)], &b = g4[pick(rng)], &c = g4[pick(rng)];
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("index arithmetic agrees with compose") {
  for (int mu = 1; mu <= 3; ++mu) {
    const Gamma& g = gamma(mu);
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.index(g.element(i)) == i);
      CHECK(g.element(g.inv(i)) == inverse(g.element(i)));
      for (std::size_t j = 0; j < g.order(); ++j)
        REQUIRE(g.element(g.mul(i, j)) == compose(g.element(i), g.element(j)));
    }
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  }
  const Gamma& g5 = gamma(5);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, g5.order() - 1);
  for (int t = 0; t < 5000; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    REQUIRE(g5.element(g5.mul(i, j)) == compose(g5.element(i), g5.element(j)));
  }
}

TEST_CASE("generate") {
  CHECK(generate(2, {}).order() == 1);
  Subgroup s41 = generate(2, {el("(1,-1,-1,e)"), el("(1,1,1,(12))")});
  CHECK(s41.order() == 4);
  CHECK(match_named_subgroup_2(s41).name == "Sigma4,1");
  CHECK(generate(3, {el("(1,1,1,1,(12))"), el("(1,-1,1,1,(123))")}).order() == 12);
  CHECK(is_subgroup(s41.elements));
  CHECK(!is_subgroup({Element::identity(2), el("(1,1,1,(12))"), el("(1,-1,1,e)")}));
}

TEST_CASE("conjugation") {
  Subgroup h = generate(3, {el("(1,1,1,1,(12))"), el("(1,-1,1,1,(123))")});
  CHECK(conjugate_subgroup(h, Element::identity(3)) == h);
  std::mt19937 rng(3);
  const auto& els = gamma(3).elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int t = 0; t < 50; ++t) {
    Subgroup k = generate(3, {els[pick(rng)], els[pick(rng)]});
    Subgroup c = conjugate_subgroup(k, els[pick(rng)]);
    CHECK(c.order() == k.order());
    CHECK(is_subgroup(c.elements));
    CHECK(identify_group(c) == identify_group(k));
  }
}

TEST_CASE("subgroup lattice of small groups") {
  const std::size_t subs[] = {0, 5, 35, 420};
  const std::size_t classes[] = {0, 5, 27, 131};
  for (int mu = 1; mu <= 3; ++mu) {
    auto all = all_subgroups(mu);
    CHECK(all.size() == subs[mu]);
    std::set<std::vector<Element>> distinct;
    for (const auto& h : all) {
      distinct.insert(h.elements);
      CHECK(gamma_order(mu) % h.order() == 0);
    }
    CHECK(distinct.size() == all.size());
    if (mu <= 2)
      for (const auto& h : all) CHECK(is_subgroup(h.elements));
    auto cls = conjugacy_classes_of_subgroups(mu);
    CHECK(cls.size() == classes[mu]);
    std::size_t total = 0;
    for (const auto& c : cls) total += c.size;
    CHECK(total == all.size());
  }
  CHECK_THROWS_AS(all_subgroups(5), resource_limit_error);
  LatticeOptions tiny;
  tiny.max_subgroups = 10;
  CHECK_THROWS_AS(all_subgroups(3, tiny), resource_limit_error);
}

TEST_CASE("identify_group") {
  CHECK(identify_group(generate(2, {})) == "trivial");
  CHECK(identify_group(named_subgroup_2("Sigma2,1")) == "Z2");
  CHECK(identify_group(named_subgroup_2("Sigma4,1")) == "D2");
  CHECK(identify_group(named_subgroup_2("Sigma4,2")) == "D2");
  CHECK(identify_group(named_subgroup_2("Sigma4,3")) == "D2");
  CHECK(identify_group(named_subgroup_2("Sigma8,1")) == "D4");
  CHECK(identify_group(named_subgroup_2("Sigma8,2")) == "D4");
  CHECK(identify_group(named_subgroup_2("Sigma8,3")) == "Z2xZ2xZ2");
  CHECK(identify_group(full_group(2)) == "Z2xD4");
  CHECK(identify_group(full_group(3)) == "full");
  CHECK(identify_group(generate(4, {el("(1,1,1,1,1,(13)(24))"), el("(1,1,1,-1,1,(1243))")})) == "D8");
  CHECK(identify_group(generate(4, {el("(1,-1,-1,-1,-1,e)"), el("(1,1,1,1,1,(23))"),
                                    el("(1,1,1,1,1,(1243))")})) == "Z2xD4");
  CHECK(identify_group(generate(3, {el("(-1,1,1,1,e)"), el("(1,1,1,1,(123))"), el("(1,-1,1,1,(12))")})) ==
        "Z2xS3wr");
}

TEST_CASE("fingerprint labels are isomorphism classes on Gamma_3") {
  auto all = all_subgroups(3);
  std::map<std::string, const Subgroup*> ref;
  std::map<std::size_t, std::vector<const Subgroup*>> refs_by_order;
  for (const auto& h : all) {
    std::string label = identify_group(h);
    if (label.rfind("other", 0) == 0) continue;
    auto it = ref.find(label);
    if (it == ref.end()) {
      ref[label] = &h;
      refs_by_order[h.order()].push_back(&h);
    } else {
      CHECK_MESSAGE(isomorphic(*it->second, h), label);
    }
  }
  for (const auto& h : all) {
    if (identify_group(h).rfind("other", 0) != 0 || h.order() > 48) continue;
    for (const Subgroup* r : refs_by_order[h.order()]) CHECK(!isomorphic(*r, h));
  }
  // distinct labels of equal order are genuinely different groups
  for (auto& [order, rs] : refs_by_order)
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) CHECK(!isomorphic(*rs[i], *rs[j]));
}

TEST_CASE("named two-component groups") {
  CHECK(match_named_subgroup_2(from_list({"(1,1,1,e)", "(1,-1,-1,e)"})).name == "Sigma2,1");
  CHECK(match_named_subgroup_2(full_group(2)).name == "Gamma2");
  std::vector<Element> even;
  for (const auto& e : gamma(2).elements())
    if (e.eps0 * e.eps[0] * e.eps[1] == 1) even.push_back(e);
  Subgroup s82;
  s82.mu = 2;
  s82.elements = even;
  CHECK(match_named_subgroup_2(s82).name == "Sigma8,2");
  NamedMatch m = match_named_subgroup_2(from_list({"(1,1,1,e)", "(1,-1,1,e)"}));
  CHECK(m.name == "other");
  for (const auto& n : named_subgroup_2_names()) CHECK(is_subgroup(named_subgroup_2(n).elements));
}

TEST_CASE("coset index") {
  CHECK(coset_index(from_list({"(1,1,e)", "(1,-1,e)"})) == 2);
  CHECK(coset_index(named_subgroup_2("Sigma2,1")) == 8);
  CHECK(coset_index(full_group(2)) == 1);
}

TEST_CASE("subgroup json round trip") {
  Subgroup h = generate(3, {el("(1,1,1,1,(12))"), el("(1,-1,1,1,(123))")});
  h.name = "example";
  Subgroup back = subgroup_from_json(to_json(h));
  CHECK(back == h);
  CHECK(back.generators == h.generators);
  CHECK(back.name == "example");
}
