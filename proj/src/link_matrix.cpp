#include "whitten/link_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace whitten {

LinkingMatrix LinkingMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int mu = static_cast<int>(rows.size());
  LinkingMatrix m(mu);
  for (int i = 0; i < mu; ++i) {
    if (static_cast<int>(rows[i].size()) != mu) throw std::invalid_argument("linking matrix is not square");
    for (int j = 0; j < mu; ++j) m.a_[static_cast<std::size_t>(i) * mu + j] = rows[i][j];
  }
  for (int i = 0; i < mu; ++i) {
    if (m(i, i) != 0) throw std::invalid_argument("linking matrix has a nonzero diagonal entry");
    for (int j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("linking matrix is not symmetric");
  }
  return m;
}

void LinkingMatrix::set(int i, int j, int v) {
  if (i == j) throw std::invalid_argument("diagonal of a linking matrix is zero");
  a_[static_cast<std::size_t>(i) * mu_ + j] = v;
  a_[static_cast<std::size_t>(j) * mu_ + i] = v;
}

std::vector<std::vector<int>> LinkingMatrix::rows() const {
  std::vector<std::vector<int>> r(mu_, std::vector<int>(mu_));
  for (int i = 0; i < mu_; ++i)
    for (int j = 0; j < mu_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

std::string LinkingMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < mu_; ++i) {
    os << (i ? " / " : "");
    for (int j = 0; j < mu_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  return os.str();
}

LinkingMatrix act_matrix(const Element& g, const LinkingMatrix& a) {
  if (g.mu != a.mu()) throw std::invalid_argument("element and matrix sizes differ");
  LinkingMatrix r(a.mu());
  for (int i = 0; i < a.mu(); ++i)
    for (int j = i + 1; j < a.mu(); ++j)
      r.set(i, j, g.eps0 * g.eps[i] * g.eps[j] * a(g.perm[i], g.perm[j]));
  return r;
}

Subgroup stabilizer_bruteforce(const LinkingMatrix& a) {
  Subgroup h;
  h.mu = a.mu();
  for (const auto& g : gamma(a.mu()).elements())
    if (act_matrix(g, a) == a) h.elements.push_back(g);
  return h;
}

// ---------------------------------------------------------------- triples

Triple triple_of(const LinkingMatrix& a) {
  if (a.mu() != 3) throw std::invalid_argument("triples need a 3x3 matrix");
  return {a(1, 2), a(0, 2), a(0, 1)};
}

LinkingMatrix matrix_of(const Triple& z) {
  LinkingMatrix m(3);
  m.set(1, 2, z[0]);
  m.set(0, 2, z[1]);
  m.set(0, 1, z[2]);
  return m;
}

Element f3(const Element& g) {
  if (g.mu != 3) throw std::invalid_argument("f3 is defined on Gamma_3");
  int e = g.eps0 * g.eps[0] * g.eps[1] * g.eps[2];
  Element d = g;
  d.eps0 = 1;
  for (int k = 0; k < 3; ++k) d.eps[k] = g.eps[k] * e;
  return d;
}

std::array<Element, 2> f3_preimage(const Element& d) {
  Element a = d;
  a.eps0 = d.eps[0] * d.eps[1] * d.eps[2];
  Element b = a;
  for (int k = 0; k < 3; ++k) b.eps[k] = -a.eps[k];
  return {a, b};
}

Triple act_triple(const Element& d, const Triple& z) {
  Triple r;
  for (int k = 0; k < 3; ++k) r[k] = d.eps[k] * z[d.perm[k]];
  return r;
}

std::string to_string(TripleType t) {
  switch (t) {
    case TripleType::Zero: return "(0,0,0)";
    case TripleType::A00: return "(a,0,0)";
    case TripleType::AmA0: return "(a,-a,0)";
    case TripleType::AA0: return "(a,a,0)";
    case TripleType::AB0: return "(a,b,0)";
    case TripleType::AAmA: return "(a,a,-a)";
    case TripleType::AAA: return "(a,a,a)";
    case TripleType::ABmB: return "(a,b,-b)";
    case TripleType::ABB: return "(a,b,b)";
    case TripleType::ABC: return "(a,b,c)";
  }
  return "?";
}

namespace {

bool matches(TripleType t, const Triple& z) {
  int x = z[0], y = z[1], w = z[2];
  auto distinct = [](int p, int q) { return p != 0 && q != 0 && std::abs(p) != std::abs(q); };
  switch (t) {
    case TripleType::Zero: return x == 0 && y == 0 && w == 0;
    case TripleType::A00: return x != 0 && y == 0 && w == 0;
    case TripleType::AmA0: return x != 0 && y == -x && w == 0;
    case TripleType::AA0: return x != 0 && y == x && w == 0;
    case TripleType::AB0: return distinct(x, y) && w == 0;
    case TripleType::AAmA: return x != 0 && y == x && w == -x;
    case TripleType::AAA: return x != 0 && y == x && w == x;
    case TripleType::ABmB: return distinct(x, y) && w == -y;
    case TripleType::ABB: return distinct(x, y) && w == y;
    case TripleType::ABC:
      return distinct(x, y) && distinct(y, w) && distinct(x, w);
  }
  return false;
}

constexpr TripleType kTripleTypes[] = {TripleType::Zero, TripleType::A00, TripleType::AmA0, TripleType::AA0,
                                       TripleType::AB0,  TripleType::AAmA, TripleType::AAA, TripleType::ABmB,
                                       TripleType::ABB,  TripleType::ABC};

std::vector<Element> with_image(bool (*pred)(const Element&)) {
  std::vector<Element> out;
  for (const auto& g : gamma(3).elements())
    if (g.eps0 == 1 && pred(g)) out.push_back(g);
  return out;
}

}  // namespace

TripleClass classify_triple(const Triple& z) {
  static const char* order[] = {"(1,1,1,1,e)",     "(1,1,1,1,(23))",  "(1,1,1,1,(12))",
                                "(1,1,1,1,(13))",  "(1,1,1,1,(123))", "(1,1,1,1,(132))"};
  for (const char* s : order) {
    Element n = parse_element(s);
    Triple w = act_triple(f3(n), z);
    for (TripleType t : kTripleTypes)
      if (matches(t, w)) return {t, n, w};
  }
  throw std::logic_error("triple outside every orbit type");
}

std::vector<Element> image_stabilizer_3(TripleType t) {
  switch (t) {
    case TripleType::Zero: return with_image([](const Element&) { return true; });
    case TripleType::A00:
      return with_image([](const Element& g) {
        return g.eps[0] == 1 && (cycle_string(g) == "e" || cycle_string(g) == "(23)");
      });
    case TripleType::AmA0:
      return generate(3, {parse_element("(1,1,1,-1,e)"), parse_element("(1,-1,-1,1,(12))")}).elements;
    case TripleType::AA0:
      return with_image([](const Element& g) {
        return g.eps[0] == 1 && g.eps[1] == 1 && (cycle_string(g) == "e" || cycle_string(g) == "(12)");
      });
    case TripleType::AB0:
      return with_image([](const Element& g) { return g.eps[0] == 1 && g.eps[1] == 1 && g.perm[0] == 0 && g.perm[1] == 1; });
    case TripleType::AAmA: {
      std::vector<Element> s;
      for (const char* x : {"(1,1,1,1,e)", "(1,1,1,1,(12))", "(1,1,-1,-1,(23))", "(1,-1,1,-1,(13))",
                            "(1,1,-1,-1,(123))", "(1,-1,1,-1,(132))"})
        s.push_back(parse_element(x));
      std::sort(s.begin(), s.end());
      return s;
    }
    case TripleType::AAA:
      return with_image([](const Element& g) { return g.eps[0] == 1 && g.eps[1] == 1 && g.eps[2] == 1; });
    case TripleType::ABmB: return generate(3, {parse_element("(1,1,-1,-1,(23))")}).elements;
    case TripleType::ABB:
      return with_image([](const Element& g) {
        return g.eps[0] == 1 && g.eps[1] == 1 && g.eps[2] == 1 && (cycle_string(g) == "e" || cycle_string(g) == "(23)");
      });
    case TripleType::ABC: return {Element::identity(3)};
  }
  return {};
}

Subgroup stabilizer_structured_3(const LinkingMatrix& a) {
  TripleClass c = classify_triple(triple_of(a));
  Subgroup std_stab;
  std_stab.mu = 3;
  for (const auto& d : image_stabilizer_3(c.type))
    for (const auto& g : f3_preimage(d)) std_stab.elements.push_back(g);
  std::sort(std_stab.elements.begin(), std_stab.elements.end());
  return conjugate_subgroup(std_stab, inverse(c.normalizer));
}

// ---------------------------------------------------------------- quads

bool is_quad_form(const LinkingMatrix& a) { return a.mu() == 4 && a(0, 3) == 0 && a(1, 2) == 0; }

Quad quad_of(const LinkingMatrix& a) {
  if (!is_quad_form(a)) throw std::invalid_argument("matrix is not in the four-component special form");
  return {a(0, 1), a(1, 3), a(2, 0), a(3, 2)};
}

LinkingMatrix matrix_of(const Quad& z) {
  LinkingMatrix m(4);
  m.set(0, 1, z[0]);
  m.set(1, 3, z[1]);
  m.set(2, 0, z[2]);
  m.set(3, 2, z[3]);
  return m;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& f0_table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"e", "e"},       {"(14)", "(12)(34)"},     {"(23)", "(13)(24)"},     {"(13)(24)", "(14)"},
      {"(12)(34)", "(23)"}, {"(1243)", "(1243)"}, {"(14)(23)", "(14)(23)"}, {"(1342)", "(1342)"}};
  return t;
}

Element with_perm(const Element& g, const std::string& cyc) {
  Element p = parse_element("(1,1,1,1,1," + cyc + ")");
  Element r = g;
  r.perm = p.perm;
  return r;
}

}  // namespace

bool in_g0(const Element& g) {
  if (g.mu != 4) return false;
  std::string c = cycle_string(g);
  for (const auto& [from, to] : f0_table())
    if (from == c) return true;
  return false;
}

std::vector<Element> g0_permutations() {
  std::vector<Element> out;
  for (const auto& [from, to] : f0_table()) out.push_back(parse_element("(1,1,1,1,1," + from + ")"));
  std::sort(out.begin(), out.end());
  return out;
}

Element f0(const Element& g) {
  std::string c = cycle_string(g);
  for (const auto& [from, to] : f0_table())
    if (from == c) return with_perm(g, to);
  throw std::invalid_argument("permutation " + c + " is outside G0");
}

Element f4(const Element& g) {
  if (!in_g0(g)) throw std::invalid_argument("f4 needs a permutation in G0, got " + cycle_string(g));
  const auto& e = g.eps;
  int e0 = g.eps0;
  Element d = f0(g);
  d.eps0 = 1;
  d.eps[0] = e0 * e[0] * e[1];
  d.eps[1] = e0 * e[1] * e[3];
  d.eps[2] = e0 * e[0] * e[2];
  d.eps[3] = e0 * e[2] * e[3];
  return d;
}

std::array<Element, 4> f4_preimage(const Element& d) {
  const auto& dl = d.eps;
  if (dl[3] != dl[0] * dl[1] * dl[2]) throw std::invalid_argument("not in the image of f4 (delta4 != delta1 delta2 delta3)");
  Element base = d;
  std::string c = cycle_string(d);
  for (const auto& [from, to] : f0_table())
    if (to == c) base = with_perm(d, from);
  std::array<Element, 4> out;
  int k = 0;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      Element g = base;
      g.eps0 = e1 * e2 * dl[0];
      g.eps[0] = e1;
      g.eps[1] = e2;
      g.eps[2] = e2 * dl[0] * dl[2];
      g.eps[3] = e1 * dl[0] * dl[1];
      out[k++] = g;
    }
  return out;
}

std::string to_string(QuadType t) {
  switch (t) {
    case QuadType::AAAA: return "(a,a,a,a)";
    case QuadType::AAmAA: return "(a,a,-a,a)";
    case QuadType::AmAmAA: return "(a,-a,-a,a)";
  }
  return "?";
}

QuadType classify_quad(const Quad& z) {
  int a = z[0];
  if (a != 0) {
    if (z[1] == a && z[2] == a && z[3] == a) return QuadType::AAAA;
    if (z[1] == a && z[2] == -a && z[3] == a) return QuadType::AAmAA;
    if (z[1] == -a && z[2] == -a && z[3] == a) return QuadType::AmAmAA;
  }
  throw std::invalid_argument("quad outside the handled types");
}

std::vector<Element> image_stabilizer_4(QuadType t) {
  std::vector<const char*> list;
  switch (t) {
    case QuadType::AAAA:
      list = {"(1,1,1,1,1,e)",        "(1,1,1,1,1,(14))",     "(1,1,1,1,1,(23))",   "(1,1,1,1,1,(14)(23))",
              "(1,1,1,1,1,(12)(34))", "(1,1,1,1,1,(13)(24))", "(1,1,1,1,1,(1243))", "(1,1,1,1,1,(1342))"};
      break;
    case QuadType::AAmAA:
      list = {"(1,1,1,1,1,e)",           "(1,1,1,-1,-1,(12)(34))", "(1,1,1,-1,-1,(1243))",
              "(1,1,1,1,1,(14))",        "(1,-1,1,-1,1,(13)(24))", "(1,-1,1,-1,1,(1342))",
              "(1,1,-1,-1,1,(23))",      "(1,1,-1,-1,1,(14)(23))"};
      break;
    case QuadType::AmAmAA:
      list = {"(1,1,1,1,1,e)",          "(1,-1,-1,-1,-1,(12)(34))", "(1,-1,-1,-1,-1,(1243))",
              "(1,1,1,1,1,(14))",       "(1,-1,-1,-1,-1,(13)(24))", "(1,-1,-1,-1,-1,(1342))",
              "(1,1,1,1,1,(23))",       "(1,1,1,1,1,(14)(23))"};
      break;
  }
  std::vector<Element> out;
  for (auto s : list) out.push_back(parse_element(s));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup stabilizer_structured_4(const LinkingMatrix& a) {
  QuadType t = classify_quad(quad_of(a));
  Subgroup h;
  h.mu = 4;
  for (const auto& d : image_stabilizer_4(t))
    for (const auto& g : f4_preimage(d)) h.elements.push_back(g);
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

bool mirror_zero_linking_check(const LinkingMatrix& a) {
  if (a.mu() != 3) throw std::invalid_argument("the mirror lemma is about three components");
  for (const auto& g : stabilizer_bruteforce(a).elements)
    if (g.eps0 == -1) return true;
  return false;
}

}  // namespace whitten
