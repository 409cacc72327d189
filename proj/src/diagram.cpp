#include "whitten/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace whitten {

namespace {

bool slot_is_in(int slot, int sign) {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return sign < 0;
    default: return sign > 0;
  }
}

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

LinkDiagram LinkDiagram::build(std::vector<Crossing> crossings, const std::map<int, int>& arc_label) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  std::map<int, int> seen;
  for (std::size_t c = 0; c < d.crossings_.size(); ++c) {
    const Crossing& x = d.crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw pd_error("crossing " + std::to_string(c + 1) + " has no sign");
    for (int s = 0; s < 4; ++s) {
      int a = x.arcs[s];
      if (a <= 0) throw pd_error("arc labels must be positive, got " + std::to_string(a));
      ++seen[a];
      Slot pos{static_cast<int>(c), s};
      auto& target = slot_is_in(s, x.sign) ? d.head_ : d.tail_;
      if (!target.emplace(a, pos).second)
        throw pd_error("inconsistent orientation at arc " + std::to_string(a));
    }
  }
  for (const auto& [a, n] : seen) {
    if (n != 2) throw pd_error("arc " + std::to_string(a) + " appears " + std::to_string(n) + " times");
    if (!d.head_.count(a) || !d.tail_.count(a))
      throw pd_error("inconsistent orientation at arc " + std::to_string(a));
    if (!arc_label.count(a)) throw pd_error("arc " + std::to_string(a) + " has no component label");
  }
  int mu = 0;
  for (const auto& [a, l] : arc_label) {
    if (a <= 0) throw pd_error("arc labels must be positive, got " + std::to_string(a));
    if (l <= 0) throw pd_error("bad component label " + std::to_string(l) + " on arc " + std::to_string(a));
    mu = std::max(mu, l);
  }
  d.comps_.assign(mu, {});
  std::set<int> visited;
  for (const auto& [a, l] : arc_label) {
    if (visited.count(a)) continue;
    std::vector<int> cyc;
    if (!seen.count(a)) {
      cyc.push_back(a);
    } else {
      int x = a;
      do {
        if (arc_label.at(x) != l)
          throw pd_error("arcs " + std::to_string(a) + " and " + std::to_string(x) +
                         " lie on one component but carry labels " + std::to_string(l) + " and " +
                         std::to_string(arc_label.at(x)));
        cyc.push_back(x);
        visited.insert(x);
        x = d.successor(x);
      } while (x != a);
    }
    visited.insert(a);
    if (!d.comps_[l - 1].empty()) throw pd_error("component label " + std::to_string(l) + " used by two components");
    d.comps_[l - 1] = std::move(cyc);
  }
  for (int i = 0; i < mu; ++i)
    if (d.comps_[i].empty()) throw pd_error("component label " + std::to_string(i + 1) + " is unused");
  for (int i = 0; i < mu; ++i)
    for (int a : d.comps_[i]) d.comp_of_[a] = i;
  return d;
}

LinkDiagram LinkDiagram::unknot() { return unlink(1); }

LinkDiagram LinkDiagram::unlink(int mu) {
  std::map<int, int> labels;
  for (int i = 1; i <= mu; ++i) labels[i] = i;
  return build({}, labels);
}

int LinkDiagram::component_of(int arc) const {
  auto it = comp_of_.find(arc);
  if (it == comp_of_.end()) throw std::out_of_range("no arc " + std::to_string(arc));
  return it->second;
}

bool LinkDiagram::is_free_loop(int comp) const { return !head_.count(comps_[comp].front()); }

Slot LinkDiagram::head(int arc) const {
  auto it = head_.find(arc);
  return it == head_.end() ? Slot{} : it->second;
}

Slot LinkDiagram::tail(int arc) const {
  auto it = tail_.find(arc);
  return it == tail_.end() ? Slot{} : it->second;
}

int LinkDiagram::successor(int arc) const {
  auto it = head_.find(arc);
  if (it == head_.end()) return arc;
  return crossings_[it->second.crossing].arcs[(it->second.slot + 2) % 4];
}

std::vector<int> LinkDiagram::arcs() const {
  std::vector<int> out;
  for (const auto& [a, c] : comp_of_) out.push_back(a);
  return out;
}

int LinkDiagram::max_arc() const { return comp_of_.empty() ? 0 : comp_of_.rbegin()->first; }

std::map<int, int> LinkDiagram::arc_labels() const {
  std::map<int, int> out;
  for (const auto& [a, c] : comp_of_) out[a] = c + 1;
  return out;
}

// ---------------------------------------------------------------- text

namespace {

class PdLexer {
 public:
  explicit PdLexer(const std::string& t) : t_(t) {}

  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool at_end() {
    skip();
    return i_ >= t_.size();
  }
  bool peek(char c) {
    skip();
    return i_ < t_.size() && t_[i_] == c;
  }
  bool peek_word(const std::string& w) {
    skip();
    return t_.compare(i_, w.size(), w) == 0;
  }
  void expect(const std::string& w) {
    skip();
    if (t_.compare(i_, w.size(), w) != 0) fail("expected '" + w + "'");
    i_ += w.size();
  }
  int integer() {
    skip();
    std::size_t j = i_;
    if (j < t_.size() && (t_[j] == '-' || t_[j] == '+')) ++j;
    std::size_t k = j;
    while (k < t_.size() && std::isdigit(static_cast<unsigned char>(t_[k]))) ++k;
    if (k == j) fail("expected an integer");
    int v = std::stoi(t_.substr(i_, k - i_));
    i_ = k;
    return v;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::size_t end = i_;
    while (end < t_.size() && !std::isspace(static_cast<unsigned char>(t_[end])) && end - i_ < 12) ++end;
    std::string tok = i_ < t_.size() ? t_.substr(i_, end - i_) : "end of input";
    throw pd_error("PD parse error at offset " + std::to_string(i_) + " ('" + tok + "'): " + what);
  }

 private:
  const std::string& t_;
  std::size_t i_ = 0;
};

std::map<int, int> default_labels(const std::vector<std::array<int, 4>>& xs, const std::set<int>& free_arcs) {
  // Undirected strand cycles, numbered by their smallest arc.
  std::map<int, std::vector<Slot>> pos;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int s = 0; s < 4; ++s) pos[xs[c][s]].push_back({static_cast<int>(c), s});
  std::map<int, int> cycle_of;
  std::vector<int> mins;
  for (const auto& [a, p] : pos) {
    if (cycle_of.count(a)) continue;
    int id = static_cast<int>(mins.size());
    mins.push_back(a);
    int x = a;
    Slot at = p[0];
    while (true) {
      cycle_of[x] = id;
      Slot out{at.crossing, (at.slot + 2) % 4};
      int y = xs[out.crossing][out.slot];
      const auto& py = pos[y];
      at = py[0] == out ? py[1] : py[0];
      x = y;
      if (cycle_of.count(x)) break;
    }
  }
  for (int a : free_arcs) {
    cycle_of[a] = static_cast<int>(mins.size());
    mins.push_back(a);
  }
  std::vector<int> order(mins.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return mins[x] < mins[y]; });
  std::vector<int> rank(mins.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;
  std::map<int, int> out;
  for (const auto& [a, id] : cycle_of) out[a] = rank[id];
  return out;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  PdLexer lx(text);
  lx.expect("PD");
  lx.expect("[");
  std::vector<std::array<int, 4>> xs;
  if (!lx.peek(']')) {
    while (true) {
      lx.expect("X");
      lx.expect("[");
      std::array<int, 4> x{};
      for (int s = 0; s < 4; ++s) {
        if (s) lx.expect(",");
        x[s] = lx.integer();
        if (x[s] <= 0) lx.fail("arc labels must be positive");
      }
      lx.expect("]");
      xs.push_back(x);
      if (lx.peek(',')) {
        lx.expect(",");
        continue;
      }
      break;
    }
  }
  lx.expect("]");
  std::map<int, int> labels;
  bool annotated = false;
  if (lx.peek('{')) {
    annotated = true;
    lx.expect("{");
    if (!lx.peek('}')) {
      while (true) {
        int a = lx.integer();
        lx.expect(":");
        int l = lx.integer();
        if (a <= 0) lx.fail("arc labels must be positive");
        if (!labels.emplace(a, l).second) lx.fail("arc " + std::to_string(a) + " labeled twice");
        if (lx.peek(',')) {
          lx.expect(",");
          continue;
        }
        break;
      }
    }
    lx.expect("}");
  }
  if (!lx.at_end()) lx.fail("trailing input");

  std::map<int, std::vector<Slot>> pos;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int s = 0; s < 4; ++s) pos[xs[c][s]].push_back({static_cast<int>(c), s});
  for (const auto& [a, p] : pos)
    if (p.size() != 2) throw pd_error("arc " + std::to_string(a) + " appears " + std::to_string(p.size()) + " times");

  std::set<int> free_arcs;
  if (annotated) {
    for (const auto& [a, l] : labels)
      if (!pos.count(a)) free_arcs.insert(a);
    for (const auto& [a, p] : pos)
      if (!labels.count(a)) throw pd_error("arc " + std::to_string(a) + " has no component label");
  } else if (xs.empty()) {
    free_arcs.insert(1);
  }
  if (!annotated) labels = default_labels(xs, free_arcs);

  // Orient each strand cycle from its under passages.
  std::vector<int> sign(xs.size(), 0);
  std::set<int> done;
  for (const auto& [start, p0] : pos) {
    if (done.count(start)) continue;
    // walk: (arc, entering slot) pairs in one direction
    std::vector<std::pair<int, Slot>> walk;
    int x = start;
    Slot in = p0[0];
    do {
      walk.push_back({x, in});
      Slot out{in.crossing, (in.slot + 2) % 4};
      int y = xs[out.crossing][out.slot];
      const auto& py = pos[y];
      in = py[0] == out ? py[1] : py[0];
      x = y;
    } while (!(x == start && in == p0[0]));
    bool fwd = false, rev = false;
    for (const auto& [a, s] : walk) {
      if (s.slot == 0) fwd = true;
      if (s.slot == 2) rev = true;
    }
    if (fwd && rev) throw pd_error("inconsistent orientation on the strand through arc " + std::to_string(start));
    bool flip = rev;
    if (!fwd && !rev) {
      // all over-passes: successor of the smallest arc should be its smaller neighbor
      int m = start;  // pos is ordered, so start is the smallest arc of the cycle
      int succ = walk.size() > 1 ? walk[1].first : m;
      int pred = walk.back().first;
      if (succ != pred) {
        flip = pred < succ;
      } else {
        Slot a = p0[0], b = p0[1];
        Slot lo = std::tie(a.crossing, a.slot) < std::tie(b.crossing, b.slot) ? a : b;
        flip = !(walk[0].second == lo);
      }
    }
    for (const auto& [a, s] : walk) {
      done.insert(a);
      // entering slot in the chosen direction
      Slot enter = s;
      if (flip) {
        const auto& pa = pos[a];
        enter = pa[0] == s ? pa[1] : pa[0];
      }
      if (enter.slot == 3) sign[enter.crossing] = 1;
      if (enter.slot == 1) sign[enter.crossing] = -1;
    }
  }
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < xs.size(); ++c) crossings.push_back({xs[c], sign[c]});
  return LinkDiagram::build(std::move(crossings), labels);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& a = d.crossings()[c].arcs;
    os << (c ? ", " : "") << "X[" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "]";
  }
  os << "]";
  std::vector<std::array<int, 4>> xs;
  std::set<int> free_arcs;
  for (const auto& x : d.crossings()) xs.push_back(x.arcs);
  for (int i = 0; i < d.mu(); ++i)
    if (d.is_free_loop(i)) free_arcs.insert(d.components()[i].front());
  std::map<int, int> labels = d.arc_labels();
  bool plain_unknot = xs.empty() && labels == std::map<int, int>{{1, 1}};
  if (!plain_unknot && (!free_arcs.empty() || default_labels(xs, free_arcs) != labels)) {
    os << " {";
    bool first = true;
    for (const auto& [a, l] : labels) {
      os << (first ? "" : ", ") << a << ":" << l;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

LinkDiagram normalize(const LinkDiagram& d) {
  std::map<int, int> renum;
  std::map<int, int> labels;
  int next = 1;
  for (int i = 0; i < d.mu(); ++i)
    for (int a : d.components()[i]) {
      renum[a] = next;
      labels[next] = i + 1;
      ++next;
    }
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs)
    for (int& a : x.arcs) a = renum.at(a);
  return LinkDiagram::build(std::move(xs), labels);
}

// ---------------------------------------------------------------- counts

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  int mu = d.mu();
  std::vector<std::vector<int>> twice(mu, std::vector<int>(mu, 0));
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    int u = d.strand_component(static_cast<int>(c), 0);
    int o = d.strand_component(static_cast<int>(c), 1);
    if (u == o) continue;
    twice[u][o] += d.crossings()[c].sign;
    twice[o][u] += d.crossings()[c].sign;
  }
  LinkingMatrix m(mu);
  for (int i = 0; i < mu; ++i)
    for (int j = i + 1; j < mu; ++j) {
      if (twice[i][j] % 2) throw std::logic_error("odd signed crossing count between two components");
      m.set(i, j, twice[i][j] / 2);
    }
  return m;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

int self_writhe(const LinkDiagram& d, int comp) {
  int s = 0;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    int u = d.strand_component(static_cast<int>(c), 0);
    int o = d.strand_component(static_cast<int>(c), 1);
    if (u == comp && o == comp) s += d.crossings()[c].sign;
  }
  return s;
}

int self_writhe(const LinkDiagram& d) {
  int s = 0;
  for (int i = 0; i < d.mu(); ++i) s += self_writhe(d, i);
  return s;
}

int overall_linking_number(const LinkDiagram& d) {
  LinkingMatrix m = linking_matrix(d);
  int t = 0;
  for (int i = 0; i < m.mu(); ++i)
    for (int j = i + 1; j < m.mu(); ++j) t += m(i, j);
  return t;
}

bool is_alternating(const LinkDiagram& d) {
  for (int a : d.arcs()) {
    Slot h = d.head(a), t = d.tail(a);
    if (h.crossing < 0) continue;
    if (h.slot % 2 == t.slot % 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------- action

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  for (const auto& x : d.crossings()) {
    const auto& a = x.arcs;
    if (x.sign > 0)
      xs.push_back({{a[3], a[0], a[1], a[2]}, -1});
    else
      xs.push_back({{a[1], a[2], a[3], a[0]}, 1});
  }
  return LinkDiagram::build(std::move(xs), d.arc_labels());
}

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  std::vector<Crossing> xs;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    Crossing x = d.crossings()[c];
    bool under = d.strand_component(static_cast<int>(c), 0) == comp;
    bool over = d.strand_component(static_cast<int>(c), 1) == comp;
    if (under) {
      const auto a = x.arcs;
      x.arcs = {a[2], a[3], a[0], a[1]};
    }
    if (under != over) x.sign = -x.sign;
    xs.push_back(x);
  }
  return LinkDiagram::build(std::move(xs), d.arc_labels());
}

LinkDiagram permute_components(const LinkDiagram& d, const Element& p) {
  if (p.mu != d.mu()) throw std::invalid_argument("permutation size does not match the diagram");
  std::vector<int> new_label(d.mu());
  for (int i = 0; i < d.mu(); ++i) new_label[p.perm[i]] = i + 1;
  std::map<int, int> labels;
  for (const auto& [a, l] : d.arc_labels()) labels[a] = new_label[l - 1];
  return LinkDiagram::build(d.crossings(), labels);
}

LinkDiagram apply_whitten(const Element& g, const LinkDiagram& d) {
  if (g.mu != d.mu()) throw std::invalid_argument("element and diagram have different component counts");
  LinkDiagram r = d;
  for (int i = 0; i < g.mu; ++i)
    if (g.eps[i] < 0) r = reverse_component(r, g.perm[i]);
  r = permute_components(r, g);
  if (g.eps0 < 0) r = mirror(r);
  return r;
}

// ---------------------------------------------------------------- surgery

namespace {

LinkDiagram rebuild(const std::vector<Crossing>& xs, UnionFind& uf, const std::map<int, int>& old_labels,
                    const std::set<int>& dropped, const std::map<int, int>& relabel_comp) {
  std::vector<Crossing> out = xs;
  for (auto& x : out)
    for (int& a : x.arcs) a = uf.find(a);
  std::map<int, int> labels;
  for (const auto& [a, l] : old_labels) {
    if (dropped.count(a)) continue;
    auto it = relabel_comp.find(l);
    if (it == relabel_comp.end()) continue;
    labels[uf.find(a)] = it->second;
  }
  return normalize(LinkDiagram::build(std::move(out), labels));
}

std::map<int, int> identity_labels(int mu) {
  std::map<int, int> m;
  for (int i = 1; i <= mu; ++i) m[i] = i;
  return m;
}

}  // namespace

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep_in) {
  std::set<int> keep(keep_in.begin(), keep_in.end());
  if (keep.empty()) throw std::invalid_argument("sublink needs at least one component");
  std::map<int, int> relabel;
  int next = 1;
  for (int k : keep) {
    if (k < 0 || k >= d.mu()) throw std::invalid_argument("no component " + std::to_string(k + 1));
    relabel[k + 1] = next++;
  }
  UnionFind uf;
  std::vector<Crossing> xs;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const Crossing& x = d.crossings()[c];
    bool u = keep.count(d.strand_component(static_cast<int>(c), 0)) > 0;
    bool o = keep.count(d.strand_component(static_cast<int>(c), 1)) > 0;
    if (u && o) {
      xs.push_back(x);
    } else if (u) {
      uf.unite(x.arcs[0], x.arcs[2]);
    } else if (o) {
      uf.unite(x.arcs[1], x.arcs[3]);
    }
  }
  return rebuild(xs, uf, d.arc_labels(), {}, relabel);
}

LinkDiagram cable2(const LinkDiagram& d, int i, bool clasp) {
  if (i < 0 || i >= d.mu()) throw std::invalid_argument("no component " + std::to_string(i + 1));
  const int mu = d.mu();
  int next = d.max_arc() + 1;
  std::map<int, int> labels;
  for (const auto& [a, l] : d.arc_labels())
    if (l != i + 1) labels[a] = l;
  struct Pair {
    int L, R;
  };
  auto fresh_pair = [&] {
    Pair p{next, next + 1};
    labels[p.L] = i + 1;
    labels[p.R] = mu + 1;
    next += 2;
    return p;
  };
  auto fresh = [&](int label) {
    labels[next] = label;
    return next++;
  };

  const auto& comp = d.components()[i];
  std::map<int, Pair> start, end;
  for (int x : comp) start[x] = end[x] = fresh_pair();

  std::vector<Crossing> out;
  int k = -self_writhe(d, i) + (clasp ? 1 : 0);
  if (k != 0) {
    int x0 = comp.front();
    if (!d.is_free_loop(i)) end[x0] = fresh_pair();
    Pair cur = start[x0];
    int n = std::abs(k);
    for (int t = 0; t < n; ++t) {
      Pair mid = fresh_pair();
      Pair nxt = t + 1 == n ? end[x0] : fresh_pair();
      if (k > 0) {
        out.push_back({{cur.R, mid.L, mid.R, cur.L}, 1});
        out.push_back({{mid.L, nxt.R, nxt.L, mid.R}, 1});
      } else {
        out.push_back({{cur.L, cur.R, mid.L, mid.R}, -1});
        out.push_back({{mid.R, mid.L, nxt.R, nxt.L}, -1});
      }
      cur = nxt;
    }
  }

  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const Crossing& x = d.crossings()[c];
    const auto& a = x.arcs;
    const int s = x.sign;
    const int cu = d.strand_component(static_cast<int>(c), 0);
    const int co = d.strand_component(static_cast<int>(c), 1);
    const int over_in = s > 0 ? 3 : 1, over_out = s > 0 ? 1 : 3;
    if (cu != i && co != i) {
      out.push_back(x);
    } else if (cu == i && co != i) {
      Pair in = end[a[0]], op = start[a[2]];
      int m = fresh(co + 1);
      out.push_back({{in.R, a[1], op.R, m}, s});
      out.push_back({{in.L, m, op.L, a[3]}, s});
    } else if (co == i && cu != i) {
      Pair oin = end[a[over_in]], oout = start[a[over_out]];
      int m = fresh(cu + 1);
      if (s > 0) {
        out.push_back({{a[0], oout.R, m, oin.R}, s});
        out.push_back({{m, oout.L, a[2], oin.L}, s});
      } else {
        out.push_back({{a[0], oin.L, m, oout.L}, s});
        out.push_back({{m, oin.R, a[2], oout.R}, s});
      }
    } else {
      Pair uin = end[a[0]], uout = start[a[2]];
      Pair oin = end[a[over_in]], oout = start[a[over_out]];
      int vW = fresh(i + 1), vE = fresh(mu + 1);
      if (s > 0) {
        int hS = fresh(mu + 1), hN = fresh(i + 1);
        out.push_back({{uin.L, hS, vW, oin.R}, s});
        out.push_back({{vW, hN, uout.L, oin.L}, s});
        out.push_back({{uin.R, oout.R, vE, hS}, s});
        out.push_back({{vE, oout.L, uout.R, hN}, s});
      } else {
        int hS = fresh(i + 1), hN = fresh(mu + 1);
        out.push_back({{uin.L, hS, vW, oout.L}, s});
        out.push_back({{vW, hN, uout.L, oout.R}, s});
        out.push_back({{uin.R, oin.L, vE, hS}, s});
        out.push_back({{vE, oin.R, uout.R, hN}, s});
      }
    }
  }
  return normalize(LinkDiagram::build(std::move(out), labels));
}

namespace {

// One R1 or R2 reduction; false when none applies.
bool reduce_once(const LinkDiagram& d, LinkDiagram& out) {
  const auto& xs = d.crossings();
  const auto relabel = identity_labels(d.mu());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto& a = xs[c].arcs;
    for (int s = 0; s < 4; ++s) {
      if (a[s] != a[(s + 1) % 4]) continue;
      UnionFind uf;
      uf.unite(a[(s + 2) % 4], a[(s + 3) % 4]);
      std::vector<Crossing> rest;
      for (std::size_t e = 0; e < xs.size(); ++e)
        if (e != c) rest.push_back(xs[e]);
      out = rebuild(rest, uf, d.arc_labels(), {a[s]}, relabel);
      return true;
    }
  }
  auto slot_of = [&](std::size_t c, int arc) {
    int found = -1, n = 0;
    for (int s = 0; s < 4; ++s)
      if (xs[c].arcs[s] == arc) {
        found = s;
        ++n;
      }
    return n == 1 ? found : -1;
  };
  for (std::size_t c1 = 0; c1 < xs.size(); ++c1) {
    for (int sx1 : {1, 3}) {
      int x = xs[c1].arcs[sx1];
      Slot other = d.head(x) == Slot{static_cast<int>(c1), sx1} ? d.tail(x) : d.head(x);
      std::size_t c2 = static_cast<std::size_t>(other.crossing);
      if (c2 == c1 || slot_of(c1, x) < 0) continue;
      int sx2 = other.slot;
      if (sx2 % 2 == 0 || slot_of(c2, x) < 0) continue;
      if (xs[c1].sign == xs[c2].sign) continue;
      for (int sy1 : {0, 2}) {
        int y = xs[c1].arcs[sy1];
        if (y == x || slot_of(c1, y) < 0) continue;
        int sy2 = slot_of(c2, y);
        if (sy2 < 0 || sy2 % 2 != 0) continue;
        bool follows1 = sy1 == (sx1 + 1) % 4;
        bool follows2 = sx2 == (sy2 + 1) % 4;
        if (follows1 != follows2) continue;
        UnionFind uf;
        uf.unite(xs[c1].arcs[(sx1 + 2) % 4], xs[c2].arcs[(sx2 + 2) % 4]);
        uf.unite(xs[c1].arcs[(sy1 + 2) % 4], xs[c2].arcs[(sy2 + 2) % 4]);
        std::vector<Crossing> rest;
        for (std::size_t e = 0; e < xs.size(); ++e)
          if (e != c1 && e != c2) rest.push_back(xs[e]);
        out = rebuild(rest, uf, d.arc_labels(), {x, y}, relabel);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& d) {
  LinkDiagram cur = normalize(d), nxt;
  while (reduce_once(cur, nxt)) cur = nxt;
  return cur;
}

// ---------------------------------------------------------------- complications

LinkDiagram add_kink(const LinkDiagram& d, int arc, int kind) {
  int x = d.max_arc() + 1;
  int eb = x + 1;
  std::map<int, int> labels = d.arc_labels();
  int label = labels.at(arc);
  std::vector<Crossing> xs = d.crossings();
  Slot h = d.head(arc);
  if (h.crossing < 0) {
    eb = arc;
  } else {
    xs[h.crossing].arcs[h.slot] = eb;
    labels[eb] = label;
  }
  labels[x] = label;
  int ea = arc;
  switch (kind & 3) {
    case 0: xs.push_back({{ea, x, x, eb}, -1}); break;
    case 1: xs.push_back({{ea, eb, x, x}, 1}); break;
    case 2: xs.push_back({{x, x, eb, ea}, 1}); break;
    default: xs.push_back({{x, ea, eb, x}, -1}); break;
  }
  return normalize(LinkDiagram::build(std::move(xs), labels));
}

namespace {

bool connected_without_free_loops(const LinkDiagram& d) {
  if (d.crossings().empty()) return false;
  for (int i = 0; i < d.mu(); ++i)
    if (d.is_free_loop(i)) return false;
  UnionFind uf;
  for (std::size_t c = 0; c < d.crossings().size(); ++c)
    for (int a : d.crossings()[c].arcs) uf.unite(-1 - static_cast<int>(c), 1 << 20 | a);
  int root = uf.find(-1);
  for (std::size_t c = 0; c < d.crossings().size(); ++c)
    if (uf.find(-1 - static_cast<int>(c)) != root) return false;
  return true;
}

}  // namespace

bool add_r2(const LinkDiagram& d, std::mt19937& rng, LinkDiagram& out) {
  if (!connected_without_free_loops(d)) return false;
  const auto& xs = d.crossings();
  auto other_end = [&](Slot s) {
    int a = xs[s.crossing].arcs[s.slot];
    return d.head(a) == s ? d.tail(a) : d.head(a);
  };
  // faces as orbits of darts, face on the left
  std::map<std::pair<int, int>, int> face_of;
  std::vector<std::vector<Slot>> faces;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (face_of.count({static_cast<int>(c), s})) continue;
      std::vector<Slot> f;
      Slot dart{static_cast<int>(c), s};
      while (!face_of.count({dart.crossing, dart.slot})) {
        face_of[{dart.crossing, dart.slot}] = static_cast<int>(faces.size());
        f.push_back(dart);
        Slot arr = other_end(dart);
        dart = {arr.crossing, (arr.slot + 3) % 4};
      }
      faces.push_back(f);
    }
  std::vector<std::pair<Slot, Slot>> choices;
  for (const auto& f : faces)
    for (std::size_t p = 0; p < f.size(); ++p)
      for (std::size_t q = 0; q < f.size(); ++q)
        if (xs[f[p].crossing].arcs[f[p].slot] != xs[f[q].crossing].arcs[f[q].slot]) choices.push_back({f[p], f[q]});
  if (choices.empty()) return false;
  auto [d1, d2] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
  int e1 = xs[d1.crossing].arcs[d1.slot], e2 = xs[d2.crossing].arcs[d2.slot];
  Slot q1 = other_end(d1), q2 = other_end(d2);
  bool fwd1 = d.tail(e1) == d1, fwd2 = d.tail(e2) == d2;

  std::map<int, int> labels = d.arc_labels();
  int next = d.max_arc() + 1;
  int l1 = labels.at(e1), l2 = labels.at(e2);
  int e1a = next++, e1b = next++, e1c = next++, e2a = next++, e2b = next++, e2c = next++;
  labels.erase(e1);
  labels.erase(e2);
  for (int a : {e1a, e1b, e1c}) labels[a] = l1;
  for (int a : {e2a, e2b, e2c}) labels[a] = l2;
  std::vector<Crossing> nx = xs;
  nx[d1.crossing].arcs[d1.slot] = e1a;
  nx[q1.crossing].arcs[q1.slot] = e1c;
  nx[d2.crossing].arcs[d2.slot] = e2a;
  nx[q2.crossing].arcs[q2.slot] = e2c;
  std::array<int, 4> x1 = fwd2 ? std::array<int, 4>{e2b, e1b, e2c, e1a} : std::array<int, 4>{e2c, e1a, e2b, e1b};
  std::array<int, 4> x2 = fwd2 ? std::array<int, 4>{e2a, e1b, e2b, e1c} : std::array<int, 4>{e2b, e1c, e2a, e1b};
  int over_in1 = fwd1 ? e1a : e1b, over_in2 = fwd1 ? e1b : e1c;
  nx.push_back({x1, x1[3] == over_in1 ? 1 : -1});
  nx.push_back({x2, x2[3] == over_in2 ? 1 : -1});
  out = normalize(LinkDiagram::build(std::move(nx), labels));
  return true;
}

LinkDiagram random_complication(const LinkDiagram& d, std::mt19937& rng, int moves) {
  LinkDiagram cur = d;
  for (int m = 0; m < moves; ++m) {
    LinkDiagram nxt;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0 && add_r2(cur, rng, nxt)) {
      cur = nxt;
      continue;
    }
    auto arcs = cur.arcs();
    int a = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)];
    cur = add_kink(cur, a, std::uniform_int_distribution<int>(0, 3)(rng));
  }
  return cur;
}

}  // namespace whitten
