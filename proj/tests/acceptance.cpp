// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "whitten/census.hpp"
#include "whitten/invariants.hpp"
#include "whitten/link_matrix.hpp"
#include "whitten/poly.hpp"
#include "whitten/sym_filter.hpp"
#include "whitten/tables.hpp"

using namespace whitten;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::vector<Element> sorted(std::vector<const char*> xs) {
  std::vector<Element> v;
  for (auto x : xs) v.push_back(parse_element(x));
  std::sort(v.begin(), v.end());
  return v;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Census& census() {
  static const Census c = Census::load_default();
  return c;
}

Outcome c1() {
  Outcome o;
  const std::size_t want[] = {4, 16, 96, 768, 7680};
  for (int mu = 1; mu <= 5; ++mu) {
    o.require(gamma_order(mu) == want[mu - 1], "|Gamma_" + std::to_string(mu) + "|");
    o.require(gamma(mu).elements().size() == want[mu - 1], "enumerated Gamma_" + std::to_string(mu));
  }
  return o;
}

Outcome c2() {
  Outcome o;
  const std::size_t subs[] = {5, 35, 420, 9417}, classes[] = {5, 27, 131, 994};
  for (int mu = 1; mu <= 4; ++mu) {
    LatticeCounts c = lattice_counts(mu);
    o.require(c.subgroups == subs[mu - 1], "mu=" + std::to_string(mu) + " subgroups " + std::to_string(c.subgroups));
    o.require(c.classes == classes[mu - 1], "mu=" + std::to_string(mu) + " classes " + std::to_string(c.classes));
  }
  return o;
}

Outcome c3() {
  Outcome o;
  const std::vector<std::pair<Triple, std::size_t>> reps = {
      {{0, 0, 0}, 96}, {{1, 0, 0}, 16}, {{1, 1, 0}, 8},   {{1, -1, 0}, 8}, {{1, 2, 0}, 4},
      {{1, 1, 1}, 12}, {{1, 1, -1}, 12}, {{1, 2, 2}, 4}, {{1, 2, -2}, 4}, {{1, 2, 3}, 2}};
  for (const auto& [z, n] : reps)
    o.require(stabilizer_bruteforce(matrix_of(z)).order() == n, "order for triple " + matrix_of(z).str());
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int w = -3; w <= 3; ++w) {
        LinkingMatrix m = matrix_of(Triple{x, y, w});
        if (!(stabilizer_structured_3(m).elements == stabilizer_bruteforce(m).elements))
          o.require(false, "structured != brute force at " + m.str());
      }
  return o;
}

Outcome c4() {
  Outcome o;
  o.require(sorted(image_stabilizer_3(TripleType::AAmA)) ==
                sorted({"(1,1,1,1,e)", "(1,1,1,1,(12))", "(1,1,-1,-1,(23))", "(1,-1,1,-1,(13))",
                        "(1,1,-1,-1,(123))", "(1,-1,1,-1,(132))"}),
            "S(a,a,-a)");
  std::vector<Element> k3, k4;
  for (const auto& a : gamma(3).elements())
    if (f3(a).is_identity()) k3.push_back(a);
  for (const auto& a : gamma(4).elements())
    if (in_g0(a) && f4(a).is_identity()) k4.push_back(a);
  o.require(sorted(k3) == sorted({"(1,1,1,1,e)", "(1,-1,-1,-1,e)"}), "kernel of f3");
  o.require(sorted(k4) == sorted({"(1,1,1,1,1,e)", "(1,-1,-1,-1,-1,e)", "(-1,-1,1,1,-1,e)", "(-1,1,-1,-1,1,e)"}),
            "kernel of f4");
  o.require(stabilizer_structured_3(matrix_of(Triple{1, 1, -1})).elements ==
                sorted({"(1,1,1,1,e)", "(1,1,1,1,(12))", "(1,1,-1,-1,(23))", "(1,-1,-1,-1,e)", "(1,-1,-1,-1,(12))",
                        "(1,-1,1,1,(23))", "(1,-1,1,-1,(13))", "(1,1,-1,-1,(123))", "(1,-1,1,-1,(132))",
                        "(1,1,-1,1,(13))", "(1,-1,1,1,(123))", "(1,1,-1,1,(132))"}),
            "preimage of S(a,a,-a)");
  LinkingMatrix m731 = LinkingMatrix::from_rows({{0, -1, -1}, {-1, 0, 1}, {-1, 1, 0}});
  o.require(stabilizer_structured_3(m731).elements ==
                sorted({"(1,1,1,1,e)", "(1,1,1,1,(23))", "(1,-1,-1,1,(12))", "(1,-1,-1,-1,e)", "(1,-1,-1,-1,(23))",
                        "(1,1,1,-1,(12))", "(1,-1,1,-1,(13))", "(1,-1,-1,1,(132))", "(1,-1,1,-1,(123))",
                        "(1,1,-1,1,(13))", "(1,1,1,-1,(132))", "(1,1,-1,1,(123))"}),
            "stabilizer of the 7^3_1 matrix");
  return o;
}

Outcome c5() {
  Outcome o;
  for (Quad q : {Quad{1, 1, 1, 1}, Quad{1, 1, -1, 1}, Quad{1, -1, -1, 1}}) {
    LinkingMatrix m = matrix_of(q);
    Subgroup s = stabilizer_structured_4(m);
    o.require(s.order() == 32, "order for " + m.str());
    o.require(s.elements == stabilizer_bruteforce(m).elements, "structured != brute force for " + m.str());
    for (const auto& g : s.elements) {
      bool swaps13 = g.perm[0] == 2 && g.perm[2] == 0;
      bool swaps24 = g.perm[1] == 3 && g.perm[3] == 1;
      o.require(!swaps13 || swaps24, "1<->3 without 2<->4: " + to_string(g));
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  int n = 0;
  for (const auto& q : quoted_polynomials()) {
    const auto& r = census().find(q.link);
    // the two-component Jones displays and the 8^3_4 HOMFLYPT pair
    if (!(q.kind == "jones" && r.mu == 2) && q.kind != "homflypt") continue;
    LinkDiagram d = r.diagram;
    if (!q.element.empty()) d = apply_whitten(parse_element(q.element), d);
    bool ok = q.kind == "jones" ? jones(d) == parse_tex_poly(q.tex) : homflypt(d) == parse_tex_poly2(q.tex);
    o.require(ok, q.kind + " of " + q.link + (q.element.empty() ? "" : " under " + q.element));
    ++n;
  }
  o.require(n == 14, "expected 12 Jones and 2 HOMFLYPT displays, saw " + std::to_string(n));
  return o;
}

Outcome c7() {
  Outcome o;
  std::map<std::string, FilterReport> with, without;
  for (const auto& r : census().records()) {
    if (r.crossings == 0) continue;
    with[r.rolfsen] = symmetry_report(r, true);
    without[r.rolfsen] = symmetry_report(r, false);
    for (auto* rep : {&with[r.rolfsen], &without[r.rolfsen]}) {
      o.require(rep->verdict != Verdict::NotContaining, r.rolfsen + " misses true symmetries");
      o.require(rep->closed, r.rolfsen + " survivors not closed");
    }
    const auto& rep = with[r.rolfsen];
    if (r.rolfsen == "6^3_2") {
      o.require(rep.verdict == Verdict::Equal || rep.index_over_truth <= 2, "6^3_2 index over 2");
      if (rep.verdict == Verdict::ProperSuperset)
        o.notes.push_back("6^3_2: filtered group has index " + std::to_string(rep.index_over_truth) +
                          " (pure invertibility kept)");
    } else {
      o.require(rep.verdict == Verdict::Equal, r.rolfsen + " filtered order " + std::to_string(rep.sigma_prime.order()) +
                                                   ", true order " + std::to_string(r.ground_truth().order()));
    }
  }
  const Element pe = parse_element("(1,1,1,1,(23))");
  o.require(without["8^3_5"].sigma_prime.contains(pe), "8^3_5 pure exchange excluded without satellites");
  o.require(!with["8^3_5"].sigma_prime.contains(pe), "8^3_5 pure exchange not excluded with satellites");
  return o;
}

Outcome c8() {
  Outcome o;
  const std::vector<std::tuple<int, int, std::size_t>> cells = {
      {2, 2, 2}, {4, 2, 4}, {5, 2, 2}, {6, 2, 10}, {6, 3, 18}, {7, 2, 38}, {7, 3, 8}, {8, 2, 78}, {8, 3, 200}, {8, 4, 120}};
  for (const auto& [cr, mu, n] : cells) {
    std::size_t got = count_link_types(census(), cr, mu);
    o.require(got == n, "(" + std::to_string(cr) + "," + std::to_string(mu) + ") = " + std::to_string(got));
  }
  return o;
}

Outcome c9() {
  Outcome o;
  const std::vector<std::pair<const char*, const char*>> six = {
      {"Sigma2,1", "Z2"},   {"Sigma4,1", "D2"}, {"Sigma4,2", "D2"},       {"Sigma4,3", "D2"},
      {"Sigma8,1", "D4"},   {"Sigma8,2", "D4"}, {"Sigma8,3", "Z2xZ2xZ2"}, {"Gamma2", "Z2xD4"}};
  for (const auto& [name, label] : six) {
    std::string got = identify_group(named_subgroup_2(name));
    o.require(got == label, std::string(name) + " is " + got + ", expected " + label);
  }
  for (const auto& r : census().records()) {
    if (r.mu < 3) continue;
    std::string got = identify_group(r.ground_truth());
    o.require(got == r.sigma_label, r.rolfsen + " is " + got + ", expected " + r.sigma_label);
  }
  return o;
}

Outcome c10() {
  Outcome o;
  const auto& g3 = gamma(3).elements();
  const Element e3 = Element::identity(3);
  for (const auto& a : g3) {
    o.require(compose(a, e3) == a && compose(e3, a) == a, "identity");
    o.require(compose(a, inverse(a)) == e3 && compose(inverse(a), a) == e3, "inverse of " + to_string(a));
    for (const auto& b : g3)
      for (const auto& c : g3)
        if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
          o.require(false, "associativity");
          goto assoc_done;
        }
  }
assoc_done:
  for (const auto& r : census().records()) {
    if (r.mu != 2) continue;
    for (const auto& a : gamma(2).elements())
      for (const auto& b : gamma(2).elements())
        if (!(linking_matrix(apply_whitten(compose(a, b), r.diagram)) ==
              linking_matrix(apply_whitten(a, apply_whitten(b, r.diagram)))) ||
            !(act_matrix(compose(a, b), linking_matrix(r.diagram)) ==
              act_matrix(a, act_matrix(b, linking_matrix(r.diagram)))))
          o.require(false, "action axiom on " + r.rolfsen);
  }
  std::mt19937 rng(1969);
  std::vector<const LinkRecord*> links;
  for (const auto& r : census().records())
    if (r.crossings > 0) links.push_back(&r);
  std::uniform_int_distribution<std::size_t> pick_link(0, links.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const auto& r = *links[pick_link(rng)];
    const auto& els = gamma(r.mu).elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    const auto& a = els[pick(rng)];
    const auto& b = els[pick(rng)];
    o.require(jones(apply_whitten(compose(a, b), r.diagram)) == jones(apply_whitten(a, apply_whitten(b, r.diagram))),
              "Jones action axiom on " + r.rolfsen);
  }
  for (const auto& r : census().records()) {
    const auto& d = r.diagram;
    o.require(writhe(d) == 2 * overall_linking_number(d) + self_writhe(d), "writhe split on " + r.rolfsen);
    o.require(homflypt_specializes_to(homflypt(d), jones(d)), "specialization on " + r.rolfsen);
    if (r.crossings == 0) continue;
    LinkDiagram c = random_complication(d, rng, 3);
    o.require(jones(c) == jones(d), "Jones after Reidemeister moves on " + r.rolfsen);
    if (c.crossing_count() <= kHomflyLimit)
      o.require(homflypt(c) == homflypt(d), "HOMFLYPT after Reidemeister moves on " + r.rolfsen);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"group orders", c1},
      {"subgroup lattice counts, mu <= 4", c2},
      {"triple stabilizers", c3},
      {"explicit element sets", c4},
      {"quad stabilizers", c5},
      {"quoted Jones and HOMFLYPT displays", c6},
      {"filter containment and equality", c7},
      {"coset accounting", c8},
      {"isomorphism labels", c9},
      {"property suites", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    line.precision(1);
    line << std::fixed << " (" << s << " s)";
    std::cout << line.str() << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
