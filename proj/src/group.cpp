#include "whitten/group.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace whitten {

namespace {

void check_mu(int mu) {
  if (mu < 1 || mu > kMaxMu)
    throw std::invalid_argument("component count " + std::to_string(mu) + " outside 1.." +
                                std::to_string(kMaxMu));
}

void check_same(const Element& a, const Element& b) {
  if (a.mu != b.mu)
    throw std::invalid_argument("elements of different groups (mu " + std::to_string(a.mu) +
                                " vs " + std::to_string(b.mu) + ")");
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Element Element::identity(int mu) {
  check_mu(mu);
  Element e;
  e.mu = mu;
  return e;
}

Element Element::make(int eps0, const std::vector<int>& eps, const std::vector<int>& perm) {
  int mu = static_cast<int>(eps.size());
  check_mu(mu);
  if (perm.size() != eps.size())
    throw std::invalid_argument("sign vector and permutation have different lengths");
  Element e = identity(mu);
  if (eps0 != 1 && eps0 != -1) throw std::invalid_argument("eps0 must be +-1");
  e.eps0 = eps0;
  std::array<bool, kMaxMu> seen{};
  for (int i = 0; i < mu; ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw std::invalid_argument("eps entries must be +-1");
    int p = perm[i] - 1;
    if (p < 0 || p >= mu || seen[p]) throw std::invalid_argument("permutation is not a bijection");
    seen[p] = true;
    e.eps[i] = eps[i];
    e.perm[i] = p;
  }
  return e;
}

bool Element::is_identity() const { return *this == identity(mu); }

bool operator<(const Element& a, const Element& b) {
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.eps0 != b.eps0) return a.eps0 > b.eps0;
  for (int i = 0; i < a.mu; ++i)
    if (a.eps[i] != b.eps[i]) return a.eps[i] > b.eps[i];
  for (int i = 0; i < a.mu; ++i)
    if (a.perm[i] != b.perm[i]) return a.perm[i] < b.perm[i];
  return false;
}

Element compose(const Element& a, const Element& b) {
  check_same(a, b);
  Element r = Element::identity(a.mu);
  r.eps0 = a.eps0 * b.eps0;
  for (int i = 0; i < a.mu; ++i) {
    r.eps[i] = a.eps[i] * b.eps[a.perm[i]];
    r.perm[i] = b.perm[a.perm[i]];
  }
  return r;
}

Element inverse(const Element& a) {
  Element r = Element::identity(a.mu);
  r.eps0 = a.eps0;
  for (int i = 0; i < a.mu; ++i) {
    r.perm[a.perm[i]] = i;
    r.eps[a.perm[i]] = a.eps[i];
  }
  return r;
}

Element conjugate(const Element& g, const Element& x) { return compose(compose(g, x), inverse(g)); }

int element_order(const Element& a) {
  Element x = a;
  int n = 1;
  while (!x.is_identity()) {
    x = compose(x, a);
    ++n;
  }
  return n;
}

std::string cycle_string(const Element& a) {
  std::string out;
  std::array<bool, kMaxMu> seen{};
  for (int i = 0; i < a.mu; ++i) {
    if (seen[i] || a.perm[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = a.perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::string to_string(const Element& a) {
  std::string out = "(" + std::to_string(a.eps0);
  for (int i = 0; i < a.mu; ++i) out += "," + std::to_string(a.eps[i]);
  return out + "," + cycle_string(a) + ")";
}

Element parse_element(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad element '" + raw + "': " + why);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw fail("expected (...)");
  text = text.substr(1, text.size() - 2);

  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3) throw fail("too few fields");

  std::vector<int> signs;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const auto& s = parts[i];
    if (s == "1" || s == "+1") signs.push_back(1);
    else if (s == "-1") signs.push_back(-1);
    else throw fail("sign field '" + s + "'");
  }
  int mu = static_cast<int>(signs.size()) - 1;
  if (mu < 1 || mu > kMaxMu) throw fail("unsupported component count");

  std::vector<int> perm(mu);
  std::iota(perm.begin(), perm.end(), 1);
  const std::string& ptext = parts.back();
  if (ptext != "e" && ptext != "id") {
    std::size_t pos = 0;
    while (pos < ptext.size()) {
      if (ptext[pos] != '(') throw fail("permutation '" + ptext + "'");
      std::size_t close = ptext.find(')', pos);
      if (close == std::string::npos) throw fail("unclosed cycle");
      std::vector<int> cyc;
      for (std::size_t k = pos + 1; k < close; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(ptext[k]))) throw fail("cycle entry");
        int v = ptext[k] - '0';
        if (v < 1 || v > mu) throw fail("cycle entry out of range");
        cyc.push_back(v);
      }
      for (std::size_t k = 0; k < cyc.size(); ++k) perm[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
      pos = close + 1;
    }
  }
  std::vector<int> eps(signs.begin() + 1, signs.end());
  try {
    return Element::make(signs[0], eps, perm);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
}

std::size_t gamma_order(int mu) {
  check_mu(mu);
  return (std::size_t{2} << mu) * factorial(mu);
}

// ---------------------------------------------------------------- Gamma

Gamma::Gamma(int mu) : mu_(mu) {
  check_mu(mu);
  nperm_ = factorial(mu);
  order_ = gamma_order(mu);

  std::array<int, kMaxMu> p{0, 1, 2, 3, 4};
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + mu));

  perm_mul_.resize(nperm_ * nperm_);
  perm_inv_.resize(nperm_);
  for (std::size_t a = 0; a < nperm_; ++a) {
    std::array<int, kMaxMu> inv{0, 1, 2, 3, 4};
    for (int i = 0; i < mu; ++i) inv[perms_[a][i]] = i;
    perm_inv_[a] = static_cast<std::uint32_t>(perm_rank(inv));
    for (std::size_t b = 0; b < nperm_; ++b) {
      std::array<int, kMaxMu> q{0, 1, 2, 3, 4};
      for (int i = 0; i < mu; ++i) q[i] = perms_[b][perms_[a][i]];
      perm_mul_[a * nperm_ + b] = static_cast<std::uint32_t>(perm_rank(q));
    }
  }

  std::size_t nbits = std::size_t{1} << mu;
  shuffle_.resize(nperm_ * nbits);
  for (std::size_t a = 0; a < nperm_; ++a)
    for (std::size_t t = 0; t < nbits; ++t) {
      std::uint32_t u = 0;
      for (int i = 0; i < mu; ++i) {
        int src = perms_[a][i];
        std::uint32_t bit = (t >> (mu - 1 - src)) & 1u;
        u |= bit << (mu - 1 - i);
      }
      shuffle_[(a << mu) | t] = u;
    }

  elements_.reserve(order_);
  for (std::size_t idx = 0; idx < order_; ++idx) {
    std::size_t r = idx % nperm_;
    std::size_t s = (idx / nperm_) % nbits;
    std::size_t s0 = idx / nperm_ / nbits;
    Element e = Element::identity(mu);
    e.eps0 = s0 ? -1 : 1;
    for (int i = 0; i < mu; ++i) {
      e.eps[i] = ((s >> (mu - 1 - i)) & 1u) ? -1 : 1;
      e.perm[i] = perms_[r][i];
    }
    elements_.push_back(e);
  }
}

std::size_t Gamma::perm_rank(const std::array<int, kMaxMu>& p) const {
  std::size_t rank = 0;
  for (int i = 0; i < mu_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < mu_; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (mu_ - i) + smaller;
  }
  return rank;
}

std::size_t Gamma::index(const Element& e) const {
  if (e.mu != mu_) throw std::invalid_argument("element from a different group");
  std::size_t s = 0;
  for (int i = 0; i < mu_; ++i) s = (s << 1) | (e.eps[i] == -1 ? 1u : 0u);
  std::size_t s0 = e.eps0 == -1 ? 1 : 0;
  return ((s0 << mu_) | s) * nperm_ + perm_rank(e.perm);
}

std::size_t Gamma::mul(std::size_t a, std::size_t b) const {
  std::size_t nbits = std::size_t{1} << mu_;
  std::size_t ra = a % nperm_, rb = b % nperm_;
  std::size_t sa = (a / nperm_) % nbits, sb = (b / nperm_) % nbits;
  std::size_t a0 = a / nperm_ / nbits, b0 = b / nperm_ / nbits;
  std::size_t s = sa ^ shuffle_[(ra << mu_) | sb];
  return (((a0 ^ b0) << mu_) | s) * nperm_ + perm_mul_[ra * nperm_ + rb];
}

std::size_t Gamma::inv(std::size_t a) const {
  std::size_t nbits = std::size_t{1} << mu_;
  std::size_t ra = a % nperm_;
  std::size_t sa = (a / nperm_) % nbits;
  std::size_t a0 = a / nperm_ / nbits;
  std::size_t ri = perm_inv_[ra];
  return ((a0 << mu_) | shuffle_[(ri << mu_) | sa]) * nperm_ + ri;
}

std::vector<std::size_t> Gamma::generators() const {
  std::vector<std::size_t> gens;
  Element m = Element::identity(mu_);
  m.eps0 = -1;
  gens.push_back(index(m));
  Element f = Element::identity(mu_);
  f.eps[0] = -1;
  gens.push_back(index(f));
  if (mu_ >= 2) {
    Element t = Element::identity(mu_);
    std::swap(t.perm[0], t.perm[1]);
    gens.push_back(index(t));
  }
  if (mu_ >= 3) {
    Element c = Element::identity(mu_);
    for (int i = 0; i < mu_; ++i) c.perm[i] = (i + 1) % mu_;
    gens.push_back(index(c));
  }
  return gens;
}

const Gamma& gamma(int mu) {
  check_mu(mu);
  static std::array<std::unique_ptr<Gamma>, kMaxMu + 1> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  if (!cache[mu]) cache[mu] = std::make_unique<Gamma>(mu);
  return *cache[mu];
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(const Element& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return mu == other.mu &&
         std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull + (h >> 17);
    return h;
  }
};

inline bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::vector<std::size_t> bits_to_indices(const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t x = b[w];
    while (x) {
      int t = __builtin_ctzll(x);
      out.push_back(w * 64 + t);
      x &= x - 1;
    }
  }
  return out;
}

// Closure of a subgroup (given by its element list and bitset) with extra
// generators, by right multiplication.
void close_under(const Gamma& g, std::vector<std::size_t>& elems, Bits& bits,
                 const std::vector<std::size_t>& gens) {
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t s : gens) {
      std::size_t y = g.mul(elems[k], s);
      if (!test_bit(bits, y)) {
        set_bit(bits, y);
        elems.push_back(y);
      }
    }
  }
}

Subgroup subgroup_from_indices(const Gamma& g, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  Subgroup h;
  h.mu = g.mu();
  h.elements.reserve(idx.size());
  for (auto i : idx) h.elements.push_back(g.element(i));
  return h;
}

}  // namespace

Subgroup generate(int mu, const std::vector<Element>& gens) {
  const Gamma& g = gamma(mu);
  Bits bits((g.order() + 63) / 64, 0);
  std::vector<std::size_t> elems{0};
  set_bit(bits, 0);
  std::vector<std::size_t> gi;
  for (const auto& e : gens) gi.push_back(g.index(e));
  close_under(g, elems, bits, gi);
  Subgroup h = subgroup_from_indices(g, elems);
  h.generators = gens;
  return h;
}

Subgroup full_group(int mu) {
  const Gamma& g = gamma(mu);
  Subgroup h;
  h.mu = mu;
  h.elements = g.elements();
  for (auto i : g.generators()) h.generators.push_back(g.element(i));
  return h;
}

Subgroup conjugate_subgroup(const Subgroup& h, const Element& g) {
  Subgroup r;
  r.mu = h.mu;
  for (const auto& x : h.elements) r.elements.push_back(conjugate(g, x));
  std::sort(r.elements.begin(), r.elements.end());
  for (const auto& x : h.generators) r.generators.push_back(conjugate(g, x));
  return r;
}

bool is_subgroup(const std::vector<Element>& elements) {
  if (elements.empty()) return false;
  std::vector<Element> s = elements;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto has = [&](const Element& e) { return std::binary_search(s.begin(), s.end(), e); };
  if (!has(Element::identity(s.front().mu))) return false;
  for (const auto& a : s) {
    if (!has(inverse(a))) return false;
    for (const auto& b : s)
      if (!has(compose(a, b))) return false;
  }
  return true;
}

std::size_t coset_index(const Subgroup& h) { return gamma_order(h.mu) / h.order(); }

// ---------------------------------------------------------------- lattice

namespace {

struct Lattice {
  std::vector<Bits> subgroups;
  std::vector<std::size_t> class_of;  // union-find root per subgroup
  std::size_t nclasses = 0;
};

void check_lattice_mu(int mu, const LatticeOptions& opts) {
  check_mu(mu);
  if (mu == 5 && !opts.allow_long)
    throw resource_limit_error("the subgroup lattice of Gamma_5 is a long job; pass allow_long");
}

Lattice build_lattice(int mu, const LatticeOptions& opts) {
  check_lattice_mu(mu, opts);
  const Gamma& g = gamma(mu);
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;

  // One generator per cyclic subgroup.
  std::vector<std::size_t> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t x = 1; x < n; ++x) {
      Bits b(words, 0);
      std::size_t y = x;
      set_bit(b, 0);
      while (y != 0) {
        set_bit(b, y);
        y = g.mul(y, x);
      }
      if (seen.insert(std::move(b)).second) cyclic_gens.push_back(x);
    }
  }

  Lattice lat;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  std::vector<std::vector<std::size_t>> gens_of;

  Bits trivial(words, 0);
  set_bit(trivial, 0);
  index.emplace(trivial, 0);
  lat.subgroups.push_back(trivial);
  gens_of.push_back({});

  for (std::size_t k = 0; k < lat.subgroups.size(); ++k) {
    if (opts.progress && k % 1000 == 0)
      std::cerr << "lattice: " << k << " processed, " << lat.subgroups.size() << " found\n";
    const Bits base = lat.subgroups[k];
    const std::vector<std::size_t> base_elems = bits_to_indices(base);
    const std::vector<std::size_t> base_gens = gens_of[k];
    for (std::size_t c : cyclic_gens) {
      if (test_bit(base, c)) continue;
      Bits bits = base;
      std::vector<std::size_t> elems = base_elems;
      std::vector<std::size_t> gens = base_gens;
      gens.push_back(c);
      close_under(g, elems, bits, gens);
      if (index.find(bits) != index.end()) continue;
      if (lat.subgroups.size() >= opts.max_subgroups)
        throw resource_limit_error("subgroup enumeration exceeded " +
                                   std::to_string(opts.max_subgroups) + " subgroups");
      index.emplace(bits, lat.subgroups.size());
      lat.subgroups.push_back(std::move(bits));
      gens_of.push_back(std::move(gens));
    }
  }

  // Conjugacy classes: orbits under conjugation by generators of Gamma.
  std::vector<std::size_t> parent(lat.subgroups.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s : g.generators()) {
    std::size_t si = g.inv(s);
    for (std::size_t k = 0; k < lat.subgroups.size(); ++k) {
      Bits c(words, 0);
      for (std::size_t x : bits_to_indices(lat.subgroups[k])) set_bit(c, g.mul(g.mul(s, x), si));
      std::size_t j = index.at(c);
      std::size_t a = find(k), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  lat.class_of.resize(parent.size());
  for (std::size_t k = 0; k < parent.size(); ++k) {
    lat.class_of[k] = find(k);
    if (lat.class_of[k] == k) ++lat.nclasses;
  }
  return lat;
}

std::vector<std::size_t> sorted_order(const Lattice& lat) {
  // Deterministic output: by order, then by element lists.
  std::vector<std::size_t> order(lat.subgroups.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> idx(lat.subgroups.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = bits_to_indices(lat.subgroups[k]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (idx[a].size() != idx[b].size()) return idx[a].size() < idx[b].size();
    return idx[a] < idx[b];
  });
  return order;
}

}  // namespace

std::vector<Subgroup> all_subgroups(int mu, const LatticeOptions& opts) {
  Lattice lat = build_lattice(mu, opts);
  const Gamma& g = gamma(mu);
  std::vector<Subgroup> out;
  for (std::size_t k : sorted_order(lat)) out.push_back(subgroup_from_indices(g, bits_to_indices(lat.subgroups[k])));
  return out;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(int mu, const LatticeOptions& opts) {
  Lattice lat = build_lattice(mu, opts);
  const Gamma& g = gamma(mu);
  std::map<std::size_t, std::size_t> sizes;
  for (auto r : lat.class_of) ++sizes[r];
  std::vector<SubgroupClass> out;
  std::set<std::size_t> done;
  for (std::size_t k : sorted_order(lat)) {
    std::size_t r = lat.class_of[k];
    if (!done.insert(r).second) continue;
    out.push_back({subgroup_from_indices(g, bits_to_indices(lat.subgroups[k])), sizes[r]});
  }
  return out;
}

LatticeCounts lattice_counts(int mu, const LatticeOptions& opts) {
  Lattice lat = build_lattice(mu, opts);
  return {lat.subgroups.size(), lat.nclasses};
}

// ---------------------------------------------------------------- identification

Fingerprint fingerprint(const Subgroup& h) {
  const Gamma& g = gamma(h.mu);
  std::vector<std::size_t> idx;
  for (const auto& e : h.elements) idx.push_back(g.index(e));
  Fingerprint f;
  f.order = idx.size();
  for (std::size_t x : idx) {
    int k = 1;
    for (std::size_t y = x; y != 0; y = g.mul(y, x)) ++k;
    ++f.order_counts[k];
  }
  f.center = 0;
  for (std::size_t x : idx) {
    bool central = true;
    for (std::size_t y : idx)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) ++f.center;
  }
  f.abelian = f.center == f.order;

  Bits bits((g.order() + 63) / 64, 0);
  std::vector<std::size_t> elems{0};
  set_bit(bits, 0);
  std::vector<std::size_t> comms;
  {
    std::set<std::size_t> cs;
    for (std::size_t x : idx)
      for (std::size_t y : idx) cs.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    comms.assign(cs.begin(), cs.end());
  }
  close_under(g, elems, bits, comms);
  f.derived = elems.size();
  return f;
}

namespace {

Fingerprint fp(std::size_t order, bool abelian, std::map<int, std::size_t> counts, std::size_t center,
               std::size_t derived) {
  Fingerprint f;
  f.order = order;
  f.abelian = abelian;
  f.order_counts = std::move(counts);
  f.center = center;
  f.derived = derived;
  return f;
}

const std::vector<std::pair<std::string, Fingerprint>>& catalog() {
  static const std::vector<std::pair<std::string, Fingerprint>> c = {
      {"trivial", fp(1, true, {{1, 1}}, 1, 1)},
      {"Z2", fp(2, true, {{1, 1}, {2, 1}}, 2, 1)},
      {"D2", fp(4, true, {{1, 1}, {2, 3}}, 4, 1)},
      {"D4", fp(8, false, {{1, 1}, {2, 5}, {4, 2}}, 2, 2)},
      {"Z2xZ2xZ2", fp(8, true, {{1, 1}, {2, 7}}, 8, 1)},
      {"D6", fp(12, false, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, 2, 3)},
      {"D8", fp(16, false, {{1, 1}, {2, 9}, {4, 2}, {8, 4}}, 2, 4)},
      {"Z2xD4", fp(16, false, {{1, 1}, {2, 11}, {4, 4}}, 4, 2)},
      {"Z2xZ2xD4", fp(32, false, {{1, 1}, {2, 23}, {4, 8}}, 8, 2)},
      {"Z2xS3wr", fp(48, false, {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}, 2, 12)},
  };
  return c;
}

const Fingerprint& gamma_fingerprint(int mu) {
  static std::array<std::unique_ptr<Fingerprint>, kMaxMu + 1> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  if (!cache[mu]) cache[mu] = std::make_unique<Fingerprint>(fingerprint(full_group(mu)));
  return *cache[mu];
}

}  // namespace

std::string identify_group(const Subgroup& h) {
  Fingerprint f = fingerprint(h);
  for (const auto& [name, ref] : catalog())
    if (ref == f) return name;
  for (int k = 3; k <= kMaxMu; ++k)
    if (gamma_order(k) == f.order && gamma_fingerprint(k) == f) return "full";
  return "other(" + std::to_string(f.order) + ")";
}

namespace {

std::vector<Element> filter_gamma2(bool (*pred)(const Element&)) {
  std::vector<Element> out;
  for (const auto& e : gamma(2).elements())
    if (pred(e)) out.push_back(e);
  return out;
}

const std::vector<std::pair<std::string, Subgroup>>& catalog2() {
  static const std::vector<std::pair<std::string, Subgroup>> c = [] {
    auto mk = [](std::vector<Element> els) {
      Subgroup h;
      h.mu = 2;
      std::sort(els.begin(), els.end());
      h.elements = std::move(els);
      return h;
    };
    std::vector<std::pair<std::string, Subgroup>> v;
    v.emplace_back("trivial", mk({Element::identity(2)}));
    v.emplace_back("Sigma2,1", mk({Element::identity(2), parse_element("(1,-1,-1,e)")}));
    v.emplace_back("Sigma4,1", generate(2, {parse_element("(1,-1,-1,e)"), parse_element("(1,1,1,(12))")}));
    v.emplace_back("Sigma4,2", mk(filter_gamma2([](const Element& e) {
                     return e.eps0 == 1 && e.perm[0] == 0;
                   })));
    v.emplace_back("Sigma4,3", mk(filter_gamma2([](const Element& e) {
                     return e.eps0 * e.eps[0] * e.eps[1] == 1 && e.perm[0] == 0;
                   })));
    v.emplace_back("Sigma8,1", mk(filter_gamma2([](const Element& e) { return e.eps0 == 1; })));
    v.emplace_back("Sigma8,2", mk(filter_gamma2([](const Element& e) {
                     return e.eps0 * e.eps[0] * e.eps[1] == 1;
                   })));
    v.emplace_back("Sigma8,3", mk(filter_gamma2([](const Element& e) { return e.perm[0] == 0; })));
    v.emplace_back("Gamma2", full_group(2));
    for (auto& [name, h] : v) h.name = name;
    return v;
  }();
  return c;
}

}  // namespace

NamedMatch match_named_subgroup_2(const Subgroup& h) {
  if (h.mu != 2) throw std::invalid_argument("named two-component groups need mu = 2");
  for (const auto& [name, ref] : catalog2())
    if (ref == h) return {name, false};
  for (const auto& [name, ref] : catalog2()) {
    if (ref.order() != h.order()) continue;
    for (const auto& g : gamma(2).elements())
      if (conjugate_subgroup(ref, g) == h) return {name, true};
  }
  return {"other", false};
}

Subgroup named_subgroup_2(const std::string& name) {
  for (const auto& [n, h] : catalog2())
    if (n == name) return h;
  throw std::invalid_argument("unknown two-component group name '" + name + "'");
}

const std::vector<std::string>& named_subgroup_2_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, h] : catalog2()) v.push_back(n);
    return v;
  }();
  return names;
}

// ---------------------------------------------------------------- json

nlohmann::json to_json(const Element& e) {
  nlohmann::json eps = nlohmann::json::array(), perm = nlohmann::json::array();
  for (int i = 0; i < e.mu; ++i) {
    eps.push_back(e.eps[i]);
    perm.push_back(e.perm[i] + 1);
  }
  return nlohmann::json::array({e.eps0, eps, perm});
}

Element element_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_element(j.get<std::string>());
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("element must be [eps0, [eps], [perm]]");
  return Element::make(j[0].get<int>(), j[1].get<std::vector<int>>(), j[2].get<std::vector<int>>());
}

nlohmann::json to_json(const Subgroup& h) {
  nlohmann::json j;
  j["mu"] = h.mu;
  j["order"] = h.order();
  j["elements"] = nlohmann::json::array();
  for (const auto& e : h.elements) j["elements"].push_back(to_json(e));
  if (!h.generators.empty()) {
    j["generators"] = nlohmann::json::array();
    for (const auto& e : h.generators) j["generators"].push_back(to_json(e));
  }
  if (!h.name.empty()) j["name"] = h.name;
  return j;
}

Subgroup subgroup_from_json(const nlohmann::json& j) {
  Subgroup h;
  h.mu = j.at("mu").get<int>();
  for (const auto& e : j.at("elements")) h.elements.push_back(element_from_json(e));
  std::sort(h.elements.begin(), h.elements.end());
  if (j.contains("generators"))
    for (const auto& e : j["generators"]) h.generators.push_back(element_from_json(e));
  if (j.contains("name")) h.name = j["name"].get<std::string>();
  if (!is_subgroup(h.elements)) throw std::invalid_argument("element list is not a subgroup");
  return h;
}

}  // namespace whitten
