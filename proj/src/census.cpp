#include "whitten/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "whitten/invariants.hpp"
#include "whitten/poly.hpp"

namespace whitten {

const std::vector<QuotedPolynomial>& quoted_polynomials() {
  static const std::vector<QuotedPolynomial> v = {
      {"7^2_7", "", "jones", 0, R"(z^{-15/2} - z^{-13/2} - z^{-9/2} - z^{-5/2})"},
      {"7^2_7", "(-1,-1,1,e)", "jones", 0, R"(-{z^{-7/2}} -{z^{-3/2}} -\sqrt{z} +z^{3/2})"},
      {"8^2_11", "", "jones", 0,
       R"(-z^{9/2}+3 z^{7/2}-\frac{1}{z^{7/2}}-4 z^{5/2}+\frac{1}{z^{5/2}}+5 z^{3/2}-\frac{4}{z^{3/2}}-5 \sqrt{z}+\frac{4}{\sqrt{z}})"},
      {"8^2_11", "(-1,-1,1,e)", "jones", 0,
       R"(-\frac{4}{z^{9/2}}+\frac{1}{z^{7/2}}-\frac{1}{z^{5/2}}-\frac{1}{z^{21/2}}+\frac{3}{z^{19/2}}-\frac{4}{z^{17/2}}+\frac{5}{z^{15/2}}-\frac{5}{z^{13/2}}+\frac{4}{z^{11/2}})"},
      {"8^2_16", "", "jones", 0,
       R"(\frac{2}{z^{9/2}}-\frac{2}{z^{7/2}}+\frac{2}{z^{5/2}}-\frac{2}{z^{3/2}}-\frac{2}{z^{11/2}}-\sqrt{z}+\frac{1}{\sqrt{z}})"},
      {"8^2_16", "(-1,-1,1,e)", "jones", 0,
       R"(-\frac{2}{z^{9/2}}+\frac{2}{z^{7/2}}-\frac{2}{z^{5/2}}+\frac{2}{z^{3/2}}-\frac{1}{z^{13/2}}+\frac{1}{z^{11/2}}-\frac{2}{\sqrt{z}})"},
      {"7^2_8", "", "jones", 0,
       R"(-\frac{1}{z^{9/2}}+\frac{1}{z^{7/2}}-\frac{2}{z^{5/2}}+\frac{1}{z^{3/2}}+\frac{1}{z^{11/2}}-\frac{2}{\sqrt{z}})"},
      {"7^2_8", "(-1,1,1,e)", "jones", 0, R"(-z^{9/2}+z^{7/2}-2 z^{5/2}+z^{3/2}+z^{11/2}-2 \sqrt{z})"},
      {"8^2_10", "", "jones", 0,
       R"(-z^{9/2}+3 z^{7/2}-\frac{1}{z^{7/2}}-5 z^{5/2}+\frac{2}{z^{5/2}}+5 z^{3/2}-\frac{4}{z^{3/2}}-6 \sqrt{z}+\frac{5}{\sqrt{z}})"},
      {"8^2_10", "(-1,1,1,e)", "jones", 0,
       R"(-\frac{1}{z^{9/2}}-z^{7/2}+\frac{3}{z^{7/2}}+2 z^{5/2}-\frac{5}{z^{5/2}}-4 z^{3/2}+\frac{5}{z^{3/2}}+5 \sqrt{z}-\frac{6}{\sqrt{z}})"},
      {"8^2_15", "", "jones", 0,
       R"(-\frac{1}{z^{7/2}}-z^{5/2}+\frac{1}{z^{5/2}}+z^{3/2}-\frac{1}{z^{3/2}}-2 \sqrt{z}+\frac{1}{\sqrt{z}})"},
      {"8^2_15", "(-1,1,1,e)", "jones", 0,
       R"(-z^{7/2}+z^{5/2}-\frac{1}{z^{5/2}}-z^{3/2}+\frac{1}{z^{3/2}}+\sqrt{z}-\frac{2}{\sqrt{z}})"},
      {"8^3_4", "", "homflypt", 0,
       R"(a^2 z^4+\frac{z^4}{a^2}+3 a^2 z^2+\frac{3 z^2}{a^2}+\frac{a^2}{z^2}+\frac{1}{a^2 z^2}+4 a^2+\frac{4}{a^2}-z^6-5 z^4-10 z^2-\frac{2}{z^2}-8)"},
      {"8^3_4", "(-1,1,1,-1,e)", "homflypt", 0,
       R"(a^4+\frac{1}{a^4}-2 a^2 z^2+\frac{a^2}{z^2}-\frac{2 z^2}{a^2}+\frac{1}{a^2 z^2}+z^4-\frac{2}{z^2}-2)"},
      {"8^3_5", "", "jones", 0,
       R"(-\frac{1}{z^6}+\frac{3}{z^5}-\frac{4}{z^4}+\frac{6}{z^3}-z^2-\frac{5}{z^2}+3 z+\frac{6}{z}-3)"},
      {"8^3_5", "(-1,-1,-1,1,(23))", "jones", 0,
       R"(-\frac{1}{z^5}+\frac{3}{z^4}-z^3-\frac{3}{z^3}+3 z^2+\frac{6}{z^2}-4 z-\frac{5}{z}+6)"},
      {"8^3_9", "", "jones", 0, R"(z^7-2 z^6+3 z^5-2 z^4+4 z^3-2 z^2+2 z)"},
      {"8^3_9", "(-1,-1,-1,1,(23))", "jones", 0, R"(2 z^5-2 z^4+4 z^3-2 z^2+3 z+\frac{1}{z}-2)"},
      {"8^3_10", "", "jones", 0, R"(z^9+z^7+z^6+z^2)"},
      {"8^3_10", "(-1,-1,-1,1,(12))", "jones", 0, R"(z^{10}+z^6+z^5+z^3)"},
      {"8^4_1", "", "jones", 0,
       R"(4 z^{9/2}-6 z^{7/2}+3 z^{5/2}-z^{3/2}-z^{19/2}+z^{17/2}-5 z^{15/2}+4 z^{13/2}-7 z^{11/2})"},
      {"8^4_1", "(-1,1,-1,-1,1,e)", "jones", 0,
       R"(-5 z^{9/2}+z^{7/2}-z^{5/2}-z^{21/2}+3 z^{19/2}-6 z^{17/2}+4 z^{15/2}-7 z^{13/2}+4 z^{11/2})"},
      {"8^4_2", "", "jones", 0, R"(-4 z^{9/2}+z^{7/2}-4 z^{5/2}+2 z^{3/2}-z^{13/2}+z^{11/2}-3 \sqrt{z})"},
      {"8^4_2", "(-1,1,1,1,-1,(23))", "jones", 0,
       R"(2 z^{9/2}-4 z^{7/2}+z^{5/2}-4 z^{3/2}-3 z^{11/2}+\sqrt{z}-\frac{1}{\sqrt{z}})"},
      {"4^2_1", "", "conway", 0, "2z"},
      {"4^2_1", "(-1,-1,1,e)", "conway", 0, "z^3+2z"},
      {"6^2_1", "", "conway", 0, "-z^5-4z^3-3z"},
      {"6^2_1", "(-1,-1,1,e)", "conway", 0, "-3z"},
      {"8^2_1", "", "conway", 0, "-z^7-6z^5-10z^3-4z"},
      {"8^2_1", "(-1,-1,1,e)", "conway", 0, "-4z"},
      {"8^2_2", "", "conway", 0, "2z^5+7z^3+4z"},
      {"8^2_2", "(-1,-1,1,e)", "conway", 0, "3z^3+4z"},
      {"8^2_4", "", "conway", 0, "4z^3+4z"},
      {"8^2_4", "(-1,-1,1,e)", "conway", 0, "2z^5+6z^3+4z"},
      {"7^2_6", "", "satellite-jones", 1,
       R"(2 + 1/z^{10} - 2/z^9 + 1/z^8 - 1/z^6 + 2/z^5 - 1/z^4 + 2/z^3 - z + z^2 + z^3 - z^4)"},
      {"7^2_6", "", "satellite-jones", 2,
       R"(3 + 1/z^7 - 2/z^6 + 2/z^5 - 2/z^4 + 2/z^3 + 1/z^2 - 2 z + 2 z^2 - z^3)"},
      {"8^2_13", "", "satellite-jones", 1,
       R"(1 -\frac{1}{z^6} + \frac{2}{z^5} - \frac{3}{z^4} + \frac{4}{z^3} - \frac{2}{z^2} + \frac{1}{z} - 2 z + 4 z^2 - 2 z^3 + 3 z^4 - z^5)"},
      {"8^2_13", "", "satellite-jones", 2,
       R"(1 + \frac{1}{z^{11}} - \frac{2}{z^{10}} + \frac{2}{z^8} - \frac{2}{z^7} + \frac{1}{z^6} + \frac{1}{z^5} - \frac{2}{z^4} + \frac{2}{z^3} - \frac{1}{z^2} + \frac{1}{z} - 2 z + 4 z^2 - z^3 + 2 z^5 - z^6)"},
      {"8^3_5", "", "satellite-jones", 2,
       R"(-\frac{3}{z^{9/2}}+\frac{1}{z^{7/2}}-\frac{2}{z^{5/2}}+z^{3/2}-\frac{1}{z^{3/2}}+\frac{1}{z^{21/2}}-\frac{2}{z^{19/2}}+\frac{1}{z^{17/2}}-\frac{3}{z^{13/2}}-2 \sqrt{z}+\frac{1}{\sqrt{z}})"},
      {"8^3_5", "", "satellite-jones", 3,
       R"(-\frac{2}{z^{9/2}}+z^{7/2}+\frac{1}{z^{7/2}}-2 z^{5/2}-\frac{3}{z^{5/2}}+z^{3/2}+\frac{1}{z^{3/2}}+\frac{1}{z^{17/2}}-\frac{2}{z^{15/2}}+\frac{1}{z^{13/2}}-2 \sqrt{z}-\frac{3}{\sqrt{z}})"},
  };
  return v;
}

namespace {

std::vector<int> name_key(const std::string& s) {
  // "8^3_10" -> {8, 3, 10}
  std::vector<int> k;
  int cur = -1;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (cur >= 0) {
      k.push_back(cur);
      cur = -1;
    }
  }
  if (cur >= 0) k.push_back(cur);
  return k;
}

std::string pd_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (const auto& x : j["pd"]) {
    os << (first ? "X[" : ", X[") << x[0].get<int>() << ',' << x[1].get<int>() << ',' << x[2].get<int>() << ','
       << x[3].get<int>() << ']';
    first = false;
  }
  os << "] {";
  std::map<int, int> labels;
  for (const auto& [k, v] : j["components"].items()) labels[std::stoi(k)] = v.get<int>();
  first = true;
  for (const auto& [a, l] : labels) {
    os << (first ? "" : ", ") << a << ':' << l;
    first = false;
  }
  os << '}';
  return os.str();
}

LaurentPoly evaluate(const QuotedPolynomial& q, const LinkDiagram& d) {
  LinkDiagram x = q.element.empty() ? d : apply_whitten(parse_element(q.element), d);
  if (q.kind == "jones") return jones(x);
  return conway(x);
}

// Quoted Jones, Conway and HOMFLYPT values, base and images.
bool quoted_ok(const LinkRecord& r, const LinkDiagram& d) {
  for (const auto& q : quoted_polynomials()) {
    if (q.link != r.rolfsen || q.kind == "satellite-jones") continue;
    if (q.kind == "homflypt") {
      LinkDiagram x = q.element.empty() ? d : apply_whitten(parse_element(q.element), d);
      if (!(homflypt(x) == parse_tex_poly2(q.tex))) return false;
    } else if (!(evaluate(q, d) == parse_tex_poly(q.tex))) {
      return false;
    }
  }
  return true;
}

// Satellite quotes fix a relabeling only up to the clasp sign, which differs
// between drawings; any single sign reproducing all of them counts.
bool satellites_ok(const LinkRecord& r, const LinkDiagram& d) {
  for (int twist : {1, -1}) {
    bool all = true;
    for (const auto& q : quoted_polynomials()) {
      if (q.link != r.rolfsen || q.kind != "satellite-jones") continue;
      if (!(clasped_cable_jones(d, q.component - 1, twist) == parse_tex_poly(q.tex))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool has_quote(const std::string& name, bool satellite) {
  return std::any_of(quoted_polynomials().begin(), quoted_polynomials().end(), [&](const QuotedPolynomial& q) {
    return q.link == name && (q.kind == "satellite-jones") == satellite;
  });
}

}  // namespace

bool rolfsen_less(const std::string& a, const std::string& b) {
  auto ka = name_key(a), kb = name_key(b);
  // crossings, then components, then index
  return ka < kb;
}

Subgroup LinkRecord::ground_truth() const { return generate(mu, sigma_generators); }

FilterOptions LinkRecord::filter_options(bool satellites) const {
  FilterOptions o;
  o.use_satellites = satellites;
  o.alternating = alternating;
  return o;
}

nlohmann::json to_json(const Calibration& c) {
  const Element& e = c.element;
  nlohmann::json flips = nlohmann::json::array(), perm = nlohmann::json::array();
  for (int i = 0; i < e.mu; ++i) {
    flips.push_back(e.eps[i]);
    perm.push_back(e.perm[i] + 1);
  }
  return {{"mirror", e.eps0 < 0}, {"flips", flips}, {"perm", perm}, {"pinned", c.pinned}, {"basis", c.basis}};
}

Calibration calibration_from_json(const nlohmann::json& j, int mu) {
  Calibration c;
  c.element = Element::make(j.value("mirror", false) ? -1 : 1, j.at("flips").get<std::vector<int>>(),
                            j.at("perm").get<std::vector<int>>());
  if (c.element.mu != mu) throw census_error("calibration has the wrong number of components");
  c.pinned = j.value("pinned", false);
  c.basis = j.value("basis", "");
  return c;
}

LinkRecord record_from_json(const nlohmann::json& j) {
  LinkRecord r;
  r.rolfsen = j.at("rolfsen").get<std::string>();
  if (!j.at("thistlethwaite").is_null()) r.thistlethwaite = j["thistlethwaite"].get<std::string>();
  r.mu = j.at("mu").get<int>();
  r.crossings = j.at("crossings").get<int>();
  r.alternating = j.at("alternating").get<bool>();
  r.raw = parse_pd(pd_text(j));
  for (const auto& g : j.at("sigma_generators")) r.sigma_generators.push_back(parse_element(g.get<std::string>()));
  r.sigma_order = j.value("sigma_order", std::size_t{0});
  r.sigma_label = j.value("sigma_label", "");
  if (j.contains("quoted_linking_matrix"))
    r.quoted_linking_matrix = LinkingMatrix::from_rows(j["quoted_linking_matrix"].get<std::vector<std::vector<int>>>());
  if (j.contains("calibration"))
    r.calibration = calibration_from_json(j["calibration"], r.mu);
  else
    r.calibration.element = Element::identity(r.mu);
  r.diagram = apply_whitten(r.calibration.element, r.raw);
  return r;
}

std::vector<std::string> validate(const LinkRecord& r) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(r.rolfsen + ": " + what); };
  auto key = name_key(r.rolfsen);
  if (key.size() != 3 || key[0] != r.crossings || key[1] != r.mu) fail("name does not match crossings/components");
  if (r.diagram.mu() != r.mu) fail("diagram has " + std::to_string(r.diagram.mu()) + " components");
  if (r.diagram.crossing_count() != r.crossings) fail("diagram has the wrong crossing count");
  if (r.quoted_linking_matrix && !(linking_matrix(r.diagram) == *r.quoted_linking_matrix))
    fail("calibrated linking matrix " + linking_matrix(r.diagram).str() + " differs from the quoted one");
  for (const auto& g : r.sigma_generators)
    if (g.mu != r.mu) fail("generator " + to_string(g) + " has the wrong size");
  if (bad.empty()) {
    Subgroup truth = r.ground_truth();
    if (truth.order() != r.sigma_order)
      fail("generators give order " + std::to_string(truth.order()) + ", table says " +
           std::to_string(r.sigma_order));
    if (!truth.is_subset_of(stabilizer_bruteforce(linking_matrix(r.diagram))))
      fail("symmetry group is not inside the linking-matrix stabilizer");
  }
  return bad;
}

std::string default_census_path() {
  if (const char* env = std::getenv("WHITTEN_CENSUS"); env && *env) return env;
  return std::string(WHITTEN_DATA_DIR) + "/census.json";
}

Census Census::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw census_error("cannot open census file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw census_error(path + ": " + e.what());
  }
  if (j.value("schema_version", 0) != kCensusSchema)
    throw census_error(path + ": unsupported schema_version " + j.value("schema_version", nlohmann::json()).dump());
  Census c;
  c.path_ = path;
  std::vector<std::string> problems;
  for (const auto& rec : j.at("links")) {
    try {
      LinkRecord r = record_from_json(rec);
      auto bad = validate(r);
      problems.insert(problems.end(), bad.begin(), bad.end());
      c.records_.push_back(std::move(r));
    } catch (const std::exception& e) {
      problems.push_back(rec.value("rolfsen", "?") + ": " + e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "census validation failed:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw census_error(msg);
  }
  return c;
}

Census Census::load_default() { return load(default_census_path()); }

const LinkRecord& Census::find(const std::string& name) const {
  for (const auto& r : records_)
    if (r.rolfsen == name || (!r.thistlethwaite.empty() && r.thistlethwaite == name)) return r;
  throw unknown_link_error("unknown link: " + name);
}

Calibration calibrate(const LinkRecord& r, int jobs) {
  const bool quoted = has_quote(r.rolfsen, false);
  std::vector<Element> ok;
  for (const auto& c : gamma(r.mu).elements()) {
    LinkDiagram d = apply_whitten(c, r.raw);
    if (r.quoted_linking_matrix && !(linking_matrix(d) == *r.quoted_linking_matrix)) continue;
    if (quoted && !quoted_ok(r, d)) continue;
    ok.push_back(c);
  }
  if (ok.empty()) throw census_error(r.rolfsen + ": no relabeling reproduces the quoted data");
  Calibration best;
  std::string basis = r.quoted_linking_matrix ? "matrix" : "";
  if (quoted) basis += basis.empty() ? "polynomial" : "+polynomial";
  if (has_quote(r.rolfsen, true)) {
    std::vector<Element> sat;
    for (const auto& c : ok)
      if (satellites_ok(r, apply_whitten(c, r.raw))) sat.push_back(c);
    // Inconsistent satellite quotes leave the choice to the other data.
    if (!sat.empty()) {
      ok = std::move(sat);
      basis += basis.empty() ? "satellite" : "+satellite";
    }
  }
  best.element = ok.front();
  best.pinned = !basis.empty();

  Subgroup truth = r.ground_truth();
  FilterOptions fo = r.filter_options(true);
  fo.jobs = jobs;
  int rank = 3;  // 0 equal, 1 containing, 2 anything
  for (const auto& c : ok) {
    FilterReport rep = sigma_prime(apply_whitten(c, r.raw), fo);
    compare(rep, truth);
    int k = rep.verdict == Verdict::Equal ? 0 : rep.verdict == Verdict::ProperSuperset ? 1 : 2;
    if (k < rank) {
      rank = k;
      best.element = c;
      if (k == 0) break;
    }
  }
  if (ok.size() > 1) basis += basis.empty() ? "group" : "+group";
  best.basis = basis.empty() ? "identity" : basis;
  return best;
}

std::size_t count_link_types(const Census& c, int crossings, int mu) {
  std::size_t n = 0;
  for (const auto& r : c.records())
    if (r.crossings == crossings && r.mu == mu) n += coset_index(r.ground_truth());
  return n;
}

}  // namespace whitten
