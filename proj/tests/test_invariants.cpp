#include <random>

#include "doctest.h"
#include "whitten/census.hpp"
#include "whitten/invariants.hpp"
#include "whitten/poly.hpp"

using namespace whitten;

namespace {

const Census& census() {
  static const Census c = Census::load_default();
  return c;
}

LaurentPoly z(int doubled, long long c = 1) { return LaurentPoly::monomial(doubled, c); }

const char* kHopf = "PD[X[1,3,2,4], X[3,1,4,2]]";
const char* kTrefoil = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]";

LinkDiagram image(const QuotedPolynomial& q, const LinkDiagram& d) {
  return q.element.empty() ? d : apply_whitten(parse_element(q.element), d);
}

// lk of component i with the rest of the link
int lk_with_rest(const LinkDiagram& d, int i) {
  LinkingMatrix a = linking_matrix(d);
  int s = 0;
  for (int j = 0; j < d.mu(); ++j) s += a(i, j);
  return s;
}

}  // namespace

TEST_CASE("unknot, unlink and kinks") {
  CHECK(jones(LinkDiagram::unknot()) == LaurentPoly(1));
  CHECK(homflypt(LinkDiagram::unknot()) == LaurentPoly2(1));
  CHECK(jones(LinkDiagram::unlink(2)) == z(1, -1) + z(-1, -1));
  // (a - a^-1) / z
  CHECK(homflypt(LinkDiagram::unlink(2)) == LaurentPoly2::monomial(2, -2) - LaurentPoly2::monomial(-2, -2));
  LinkDiagram k = LinkDiagram::unknot();
  for (int kind = 0; kind < 4; ++kind) {
    LinkDiagram kk = add_kink(k, k.arcs().front(), kind);
    CHECK(kk.crossing_count() == 1);
    CHECK(jones(kk) == LaurentPoly(1));
    CHECK(homflypt(kk) == LaurentPoly2(1));
  }
}

TEST_CASE("Hopf link and trefoil") {
  LinkDiagram hopf = parse_pd(kHopf);
  CHECK(jones(hopf) == z(1, -1) + z(5, -1));
  CHECK(conway(hopf) == z(2));
  LinkDiagram tre = parse_pd(kTrefoil);
  CHECK(writhe(tre) == 3);
  CHECK(jones(tre) == z(2) + z(6) - z(8));
  CHECK(homflypt(tre) == LaurentPoly2::monomial(-4, 4) + LaurentPoly2::monomial(-4, 0, 2) -
                             LaurentPoly2::monomial(-8, 0));
  CHECK(conway(tre) == LaurentPoly(1) + z(4));
}

TEST_CASE("frontier bracket equals the state sum") {
  for (const auto& r : census().records()) {
    CAPTURE(r.rolfsen);
    CHECK(kauffman_bracket(r.diagram) == kauffman_bracket_statesum(r.diagram));
  }
  CHECK(kauffman_bracket(parse_pd(kTrefoil)) == kauffman_bracket_statesum(parse_pd(kTrefoil)));
}

TEST_CASE("resource limits throw") {
  const auto& d = census().find("8^2_1").diagram;
  CHECK_THROWS_AS(kauffman_bracket(d, 7), resource_limit_error);
  CHECK_THROWS_AS(homflypt(d, 7), resource_limit_error);
  CHECK_NOTHROW(kauffman_bracket(d, 8));
}

TEST_CASE("quoted Jones, Conway and HOMFLYPT values") {
  int checked = 0;
  for (const auto& q : quoted_polynomials()) {
    if (q.kind == "satellite-jones") continue;
    CAPTURE(q.link);
    CAPTURE(q.element);
    LinkDiagram d = image(q, census().find(q.link).diagram);
    if (q.kind == "jones") CHECK(jones(d) == parse_tex_poly(q.tex));
    if (q.kind == "conway") CHECK(conway(d) == parse_tex_poly(q.tex));
    if (q.kind == "homflypt") CHECK(homflypt(d) == parse_tex_poly2(q.tex));
    ++checked;
  }
  CHECK(checked == 34);
}

TEST_CASE("the quoted image pairs differ") {
  // each quoted element is excluded by its own display
  for (const auto& q : quoted_polynomials()) {
    if (q.element.empty()) continue;
    const auto& d = census().find(q.link).diagram;
    CAPTURE(q.link);
    if (q.kind == "homflypt")
      CHECK_FALSE(homflypt(d) == homflypt(image(q, d)));
    else if (q.kind == "jones")
      CHECK_FALSE(jones(d) == jones(image(q, d)));
    else
      CHECK_FALSE(conway(d) == conway(image(q, d)));
  }
}

TEST_CASE("mirror and reversal rules") {
  for (const auto& r : census().records()) {
    CAPTURE(r.rolfsen);
    const auto& d = r.diagram;
    LaurentPoly v = jones(d);
    CHECK(jones(mirror(d)) == v.mirror());
    if (d.crossing_count() <= kHomflyLimit) CHECK(homflypt(mirror(d)) == homflypt(d).mirror());
    // V(L with K reversed) = t^(-3 lk(K, L-K)) V(L)
    for (int i = 0; i < d.mu(); ++i) CHECK(jones(reverse_component(d, i)) == v * z(-6 * lk_with_rest(d, i)));
    LinkDiagram all = d;
    for (int i = 0; i < d.mu(); ++i) all = reverse_component(all, i);
    CHECK(jones(all) == v);
    CHECK(homflypt(all) == homflypt(d));
  }
}

TEST_CASE("Reidemeister invariance") {
  std::mt19937 rng(20261019);
  for (const auto& r : census().records()) {
    if (r.crossings == 0) continue;
    CAPTURE(r.rolfsen);
    LinkDiagram c = random_complication(r.diagram, rng, 3);
    CHECK(c.crossing_count() > r.diagram.crossing_count());
    CHECK(jones(c) == jones(r.diagram));
    if (c.crossing_count() <= 14) CHECK(homflypt(c) == homflypt(r.diagram));
  }
}

TEST_CASE("HOMFLYPT specializes to Jones on the census") {
  for (const auto& r : census().records()) {
    CAPTURE(r.rolfsen);
    CHECK(homflypt_specializes_to(homflypt(r.diagram), jones(r.diagram)));
  }
  CHECK(homflypt_specializes_to(homflypt(parse_pd(kTrefoil)), jones(parse_pd(kTrefoil))));
  CHECK_FALSE(homflypt_specializes_to(homflypt(parse_pd(kTrefoil)), jones(mirror(parse_pd(kTrefoil)))));
}

TEST_CASE("component knot types") {
  LaurentPoly2 tre = homflypt(parse_pd(kTrefoil));
  const auto& d = census().find("7^2_5").diagram;
  std::vector<LaurentPoly2> fp = {component_fingerprint(d, 0), component_fingerprint(d, 1)};
  std::sort(fp.begin(), fp.end());
  CHECK(fp[0] != fp[1]);
  int unknots = 0, trefoils = 0;
  for (const auto& p : fp) {
    unknots += p == LaurentPoly2(1);
    trefoils += p == tre || p == tre.mirror();
  }
  CHECK(unknots == 1);
  CHECK(trefoils == 1);
  for (const auto& r : census().records()) {
    for (int i = 0; i < r.mu; ++i)
      CHECK(component_fingerprint(reverse_component(r.diagram, i), i) == component_fingerprint(r.diagram, i));
  }
}

TEST_CASE("satellite displays") {
  auto quote = [](const std::string& link, int comp) {
    for (const auto& q : quoted_polynomials())
      if (q.link == link && q.kind == "satellite-jones" && q.component == comp) return parse_tex_poly(q.tex);
    throw std::logic_error("missing quote");
  };
  SUBCASE("8^2_13 with a positive clasp") {
    const auto& d = census().find("8^2_13").diagram;
    CHECK(clasped_cable_jones(d, 0, 1) == quote("8^2_13", 1));
    CHECK(clasped_cable_jones(d, 1, 1) == quote("8^2_13", 2));
  }
  SUBCASE("7^2_6 with a negative clasp") {
    const auto& d = census().find("7^2_6").diagram;
    CHECK(clasped_cable_jones(d, 0, -1) == quote("7^2_6", 1));
    CHECK(clasped_cable_jones(d, 1, -1) == quote("7^2_6", 2));
    CHECK_FALSE(clasped_cable_jones(d, 0, 1) == clasped_cable_jones(d, 1, 1));
  }
  SUBCASE("8^3_5 quotes need clasps of opposite sign") {
    const auto& d = census().find("8^3_5").diagram;
    for (int twist : {-1, 0, 1}) CHECK(clasped_cable_jones(d, 1, twist) == clasped_cable_jones(d, 2, twist));
    CHECK(clasped_cable_jones(d, 1, -1) == quote("8^3_5", 2));
    CHECK(clasped_cable_jones(d, 2, 1) == quote("8^3_5", 3));
    CHECK(homflypt(cable2(d, 1, true), 30) == homflypt(cable2(d, 2, true), 30));
  }
}
