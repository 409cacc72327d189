#include "whitten/invariants.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace whitten {

namespace {

LaurentPoly loop_value() { return LaurentPoly::monomial(4, -1) + LaurentPoly::monomial(-4, -1); }

int free_loops(const LinkDiagram& d) {
  int n = 0;
  for (int i = 0; i < d.mu(); ++i)
    if (d.is_free_loop(i)) ++n;
  return n;
}

}  // namespace

// ---------------------------------------------------------------- bracket

LaurentPoly kauffman_bracket_statesum(const LinkDiagram& d) {
  const auto& xs = d.crossings();
  const int n = static_cast<int>(xs.size());
  if (n > 20) throw resource_limit_error("state sum limited to 20 crossings");
  LaurentPoly dl = loop_value();
  int extra = free_loops(d);
  if (n == 0) return dl.pow(extra - 1);
  std::map<int, std::vector<int>> where;  // arc -> node ids (4c + slot)
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where[xs[c].arcs[s]].push_back(4 * c + s);
  LaurentPoly total;
  std::vector<int> parent(4 * n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long long state = 0; state < (1LL << n); ++state) {
    for (int i = 0; i < 4 * n; ++i) parent[i] = i;
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& [a, w] : where) unite(w[0], w[1]);
    int na = 0;
    for (int c = 0; c < n; ++c) {
      if (state >> c & 1) {
        unite(4 * c, 4 * c + 1);
        unite(4 * c + 2, 4 * c + 3);
        ++na;
      } else {
        unite(4 * c, 4 * c + 3);
        unite(4 * c + 1, 4 * c + 2);
      }
    }
    int loops = 0;
    for (int i = 0; i < 4 * n; ++i)
      if (find(i) == i) ++loops;
    total += LaurentPoly::monomial(2 * (na - (n - na))) * dl.pow(loops - 1 + extra);
  }
  return total;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d, int limit) {
  const auto& xs = d.crossings();
  const int n = static_cast<int>(xs.size());
  if (n > limit)
    throw resource_limit_error("bracket: " + std::to_string(n) + " crossings exceeds the limit of " +
                               std::to_string(limit));
  const LaurentPoly dl = loop_value();
  const int extra = free_loops(d);
  if (n == 0) return dl.pow(extra - 1);

  // crossing order: greedily close as many open arcs as possible
  std::map<int, std::pair<int, int>> ends;  // arc -> crossings of its two ends
  for (int a : d.arcs()) {
    Slot h = d.head(a), t = d.tail(a);
    if (h.crossing >= 0) ends[a] = {h.crossing, t.crossing};
  }
  std::vector<int> order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -100;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int s = 0; s < 4; ++s) {
        auto [c1, c2] = ends[xs[c].arcs[s]];
        int other = c1 == c ? c2 : c1;
        score += (other != c && done[other]) ? 1 : (other == c ? 1 : -1);
      }
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[best] = true;
    order.push_back(best);
  }

  // States: pairing of frontier arcs (by index) plus a "some loop closed" flag
  // in the last byte.
  using Key = std::vector<signed char>;
  std::vector<int> frontier;
  std::map<Key, LaurentPoly> states;
  states[Key{0}] = LaurentPoly(1);
  std::vector<bool> processed(n, false);
  const int pairs[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};

  for (int c : order) {
    const auto& arms = xs[c].arcs;
    // node ids: old frontier indices, then new arcs met at this crossing
    std::vector<int> arm_node(4);
    std::vector<int> extra_arcs;
    const int nf = static_cast<int>(frontier.size());
    for (int s = 0; s < 4; ++s) {
      int a = arms[s];
      auto it = std::find(frontier.begin(), frontier.end(), a);
      if (it != frontier.end()) {
        arm_node[s] = static_cast<int>(it - frontier.begin());
      } else {
        auto jt = std::find(extra_arcs.begin(), extra_arcs.end(), a);
        if (jt == extra_arcs.end()) {
          extra_arcs.push_back(a);
          arm_node[s] = nf + static_cast<int>(extra_arcs.size()) - 1;
        } else {
          arm_node[s] = nf + static_cast<int>(jt - extra_arcs.begin());
        }
      }
    }
    const int nodes = nf + static_cast<int>(extra_arcs.size());
    // degree of each node after this crossing decides the new frontier
    std::vector<int> arm_count(nodes, 0);
    for (int s = 0; s < 4; ++s) ++arm_count[arm_node[s]];
    std::vector<int> new_frontier, new_index(nodes, -1);
    for (int v = 0; v < nodes; ++v) {
      int deg = (v < nf ? 1 : 0) + arm_count[v];
      if (deg == 1) {
        new_index[v] = static_cast<int>(new_frontier.size());
        new_frontier.push_back(v < nf ? frontier[v] : extra_arcs[v - nf]);
      }
    }

    std::map<Key, LaurentPoly> next;
    for (const auto& [key, val] : states) {
      for (int sm = 0; sm < 2; ++sm) {
        // edges: frontier pairing, then the two smoothing arcs
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < nf; ++i)
          if (i < key[i]) edges.push_back({i, key[i]});
        for (int p = 0; p < 2; ++p) edges.push_back({arm_node[pairs[sm][p][0]], arm_node[pairs[sm][p][1]]});
        std::vector<std::vector<int>> inc(nodes);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
          inc[edges[e].first].push_back(e);
          inc[edges[e].second].push_back(e);
        }
        std::vector<bool> used(edges.size(), false);
        Key nk(new_frontier.size() + 1, -1);
        for (int v = 0; v < nodes; ++v) {
          if (new_index[v] < 0 || nk[new_index[v]] >= 0) continue;
          int cur = v, e = inc[v][0];
          while (true) {
            used[e] = true;
            int w = edges[e].first == cur ? edges[e].second : edges[e].first;
            if (new_index[w] >= 0 && w != v) {
              nk[new_index[v]] = static_cast<signed char>(new_index[w]);
              nk[new_index[w]] = static_cast<signed char>(new_index[v]);
              break;
            }
            int f = inc[w][0] == e ? inc[w][1] : inc[w][0];
            if (inc[w].size() == 2 && inc[w][0] == inc[w][1]) f = e;
            cur = w;
            e = f;
          }
        }
        int loops = 0;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
          if (used[e]) continue;
          ++loops;
          int cur = edges[e].first, f = e;
          while (!used[f]) {
            used[f] = true;
            int w = edges[f].first == cur ? edges[f].second : edges[f].first;
            int g = inc[w][0] == f ? inc[w][1] : inc[w][0];
            cur = w;
            f = g;
          }
        }
        bool closed = key.back() != 0;
        LaurentPoly factor = LaurentPoly::monomial(sm == 0 ? 2 : -2);
        if (loops > 0) {
          factor *= dl.pow(closed ? loops : loops - 1);
          closed = true;
        }
        nk.back() = closed ? 1 : 0;
        next[nk] += val * factor;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    states = std::move(next);
    frontier = std::move(new_frontier);
    processed[c] = true;
  }
  LaurentPoly total;
  for (const auto& [key, val] : states) total += val;
  return total * dl.pow(extra);
}

LaurentPoly jones(const LinkDiagram& d, int limit) {
  LaurentPoly b = kauffman_bracket(d, limit);
  int w = writhe(d);
  LaurentPoly out;
  for (const auto& [e, v] : b.terms()) {
    int k = e / 2 - 3 * w;  // A exponent
    if (k % 2) throw std::logic_error("odd A exponent in a normalized bracket");
    out += LaurentPoly::monomial(-k / 2, (w % 2 ? -v : v));
  }
  return out;
}

// ---------------------------------------------------------------- HOMFLYPT

namespace {

bool is_in(int slot, int sign) {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return sign < 0;
    default: return sign > 0;
  }
}

struct HState {
  std::vector<Crossing> xs;  // arcs numbered 0..m-1 by first appearance
  int free = 0;
};

HState canonical(std::vector<Crossing> xs, int free) {
  std::unordered_map<int, int> ren;
  for (auto& x : xs)
    for (int& a : x.arcs) {
      auto [it, fresh] = ren.emplace(a, static_cast<int>(ren.size()));
      a = it->second;
    }
  return {std::move(xs), free};
}

std::string key_of(const HState& h) {
  std::string k;
  k.reserve(h.xs.size() * 9 + 4);
  for (const auto& x : h.xs) {
    for (int a : x.arcs) k += static_cast<char>(a + 1);
    k += x.sign > 0 ? '+' : '-';
  }
  k += '|';
  k += std::to_string(h.free);
  return k;
}

class Homfly {
 public:
  explicit Homfly(long long budget) : budget_(budget) {
    unlink_ = LaurentPoly2::monomial(2, -2) + LaurentPoly2::monomial(-2, -2, -1);
  }

  LaurentPoly2 eval(const HState& h) {
    if (h.xs.empty()) return unlink_.pow(h.free - 1);
    std::string k = key_of(h);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    if (--budget_ < 0) throw resource_limit_error("HOMFLYPT recursion budget exhausted");

    const int n = static_cast<int>(h.xs.size());
    const int m = 2 * n;
    std::vector<int> head_c(m), head_s(m);
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s)
        if (is_in(s, h.xs[c].sign)) {
          head_c[h.xs[c].arcs[s]] = c;
          head_s[h.xs[c].arcs[s]] = s;
        }
    std::vector<bool> seen_arc(m, false), seen_x(n, false);
    int comps = 0, bad = -1;
    for (int start = 0; start < m && bad < 0; ++start) {
      if (seen_arc[start]) continue;
      ++comps;
      int a = start;
      while (!seen_arc[a]) {
        seen_arc[a] = true;
        int c = head_c[a], s = head_s[a];
        if (!seen_x[c]) {
          seen_x[c] = true;
          if (s == 0) {
            bad = c;
            break;
          }
        }
        a = h.xs[c].arcs[(s + 2) % 4];
      }
    }
    LaurentPoly2 result;
    if (bad < 0) {
      result = unlink_.pow(comps + h.free - 1);
    } else {
      const Crossing& x = h.xs[bad];
      const auto& p = x.arcs;
      std::vector<Crossing> sw = h.xs;
      if (x.sign > 0)
        sw[bad] = {{p[3], p[0], p[1], p[2]}, -1};
      else
        sw[bad] = {{p[1], p[2], p[3], p[0]}, 1};
      // same arc numbering, so the traversal and its base points are unchanged
      LaurentPoly2 switched = eval({std::move(sw), h.free});
      LaurentPoly2 smoothed = eval(smooth(h, bad));
      if (x.sign > 0)
        result = LaurentPoly2::monomial(-4, 0) * switched + LaurentPoly2::monomial(-2, 2) * smoothed;
      else
        result = LaurentPoly2::monomial(4, 0) * switched - LaurentPoly2::monomial(2, 2) * smoothed;
    }
    memo_.emplace(std::move(k), result);
    return result;
  }

 private:
  static HState smooth(const HState& h, int c) {
    const Crossing& x = h.xs[c];
    const auto& p = x.arcs;
    std::map<int, int> parent;
    auto find = [&](int a) {
      while (parent.count(a) && parent[a] != a) a = parent[a];
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    if (x.sign > 0) {
      unite(p[0], p[1]);
      unite(p[3], p[2]);
    } else {
      unite(p[0], p[3]);
      unite(p[1], p[2]);
    }
    std::vector<Crossing> rest;
    std::map<int, int> count;
    for (int e = 0; e < static_cast<int>(h.xs.size()); ++e) {
      if (e == c) continue;
      Crossing y = h.xs[e];
      for (int& a : y.arcs) {
        a = find(a);
        ++count[a];
      }
      rest.push_back(y);
    }
    int extra = 0;
    std::vector<int> roots;
    for (int a : p) roots.push_back(find(a));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (int r : roots)
      if (!count.count(r)) ++extra;
    return canonical(std::move(rest), h.free + extra);
  }

  long long budget_;
  LaurentPoly2 unlink_;
  std::unordered_map<std::string, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 homflypt(const LinkDiagram& d, int limit) {
  if (d.crossing_count() > limit)
    throw resource_limit_error("HOMFLYPT: " + std::to_string(d.crossing_count()) +
                               " crossings exceeds the limit of " + std::to_string(limit));
  Homfly h(4'000'000);
  return h.eval(canonical(d.crossings(), free_loops(d)));
}

LaurentPoly conway_of(const LaurentPoly2& p) {
  LaurentPoly out;
  for (const auto& [k, v] : p.terms()) out += LaurentPoly::monomial(k.second, v);
  return out;
}

LaurentPoly conway(const LinkDiagram& d, int limit) { return conway_of(homflypt(d, limit)); }

bool homflypt_specializes_to(const LaurentPoly2& p, const LaurentPoly& v) {
  int shift = p.is_zero() ? 0 : -p.min_z();  // doubled, even
  LaurentPoly zt = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  LaurentPoly lhs;
  for (const auto& [k, c] : p.terms()) {
    int zpow = (k.second + shift) / 2;
    lhs += LaurentPoly::monomial(-k.first, c) * zt.pow(zpow);
  }
  return lhs == v * zt.pow(shift / 2);
}

LaurentPoly clasped_cable_jones(const LinkDiagram& d, int i, int twist, int limit) {
  if (twist >= 0) return jones(cable2(d, i, twist > 0), limit);
  return jones(cable2(mirror(d), i, true), limit).mirror();
}

LaurentPoly2 component_fingerprint(const LinkDiagram& d, int i, int limit) {
  return homflypt(simplify(sublink(d, {i})), limit);
}

// ---------------------------------------------------------------- profiles

InvariantProfile profile(const LinkDiagram& d, const ProfileOptions& opts) {
  InvariantProfile p;
  p.linking = linking_matrix(d);
  if (opts.use_self_writhe) p.self_writhe = self_writhe(d);
  if (opts.use_jones) {
    try {
      p.jones = jones(d, opts.bracket_limit);
    } catch (const resource_limit_error&) {
    }
  }
  if (opts.use_homflypt) {
    try {
      p.homflypt = homflypt(d, opts.homfly_limit);
    } catch (const resource_limit_error&) {
    }
  }
  if (opts.use_fingerprints) {
    for (int i = 0; i < d.mu(); ++i) {
      try {
        p.fingerprints.push_back(component_fingerprint(d, i, opts.homfly_limit));
      } catch (const resource_limit_error&) {
        p.fingerprints.push_back(std::nullopt);
      }
    }
  }
  return p;
}

bool profiles_match(const InvariantProfile& a, const InvariantProfile& b) {
  if (!(a.linking == b.linking)) return false;
  if (a.self_writhe && b.self_writhe && *a.self_writhe != *b.self_writhe) return false;
  if (a.jones && b.jones && !(*a.jones == *b.jones)) return false;
  if (a.homflypt && b.homflypt && !(*a.homflypt == *b.homflypt)) return false;
  for (std::size_t i = 0; i < std::min(a.fingerprints.size(), b.fingerprints.size()); ++i)
    if (a.fingerprints[i] && b.fingerprints[i] && !(*a.fingerprints[i] == *b.fingerprints[i])) return false;
  return true;
}

}  // namespace whitten
