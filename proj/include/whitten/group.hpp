#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace whitten {

constexpr int kMaxMu = 5;

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (eps0, eps_1..eps_mu, p). The relabeled link puts old component p(i) in
// slot i, reversed when eps_i = -1, and mirrors everything when eps0 = -1.
// Permutations are stored 0-based; unused tail entries stay at their defaults
// so that defaulted equality works.
struct Element {
  int mu = 0;
  int eps0 = 1;
  std::array<int, kMaxMu> eps{1, 1, 1, 1, 1};
  std::array<int, kMaxMu> perm{0, 1, 2, 3, 4};

  static Element identity(int mu);
  // eps and perm are one-based one-line images, e.g. make(1, {1,-1,1}, {2,3,1}).
  static Element make(int eps0, const std::vector<int>& eps, const std::vector<int>& perm);

  bool is_identity() const;
  friend bool operator==(const Element&, const Element&) = default;
};

// Canonical order: eps0, then the eps vector, then the permutation in
// one-line form; +1 sorts before -1.
bool operator<(const Element& a, const Element& b);

Element compose(const Element& a, const Element& b);
Element inverse(const Element& a);
Element conjugate(const Element& g, const Element& x);  // g x g^-1
int element_order(const Element& a);

// "(1,-1,1,1,(123))", "(1,1,1,1,1,(13)(24))", "(-1,1,1,e)".
Element parse_element(const std::string& text);
std::string to_string(const Element& a);
std::string cycle_string(const Element& a);

std::size_t gamma_order(int mu);

// Index arithmetic on the whole group. Indices follow the canonical order, so
// index 0 is the identity and sorted index lists are sorted element lists.
class Gamma {
 public:
  explicit Gamma(int mu);

  int mu() const { return mu_; }
  std::size_t order() const { return order_; }
  const Element& element(std::size_t idx) const { return elements_[idx]; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t index(const Element& e) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  // Small generating set: mirror, one reversal, (12), (12..mu).
  std::vector<std::size_t> generators() const;

 private:
  int mu_;
  std::size_t nperm_;
  std::size_t order_;
  std::vector<std::array<int, kMaxMu>> perms_;
  std::vector<std::uint32_t> perm_mul_;   // [pa * nperm + pb] -> rank of pb o pa
  std::vector<std::uint32_t> perm_inv_;
  std::vector<std::uint32_t> shuffle_;    // [pa << mu | t] -> bits u with u_i = t_{pa(i)}
  std::vector<Element> elements_;

  std::size_t perm_rank(const std::array<int, kMaxMu>& p) const;
};

const Gamma& gamma(int mu);

struct Subgroup {
  int mu = 0;
  std::vector<Element> elements;  // canonical order
  std::vector<Element> generators;
  std::string name;

  std::size_t order() const { return elements.size(); }
  bool contains(const Element& e) const;
  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.mu == b.mu && a.elements == b.elements;
  }
};

Subgroup generate(int mu, const std::vector<Element>& gens);
Subgroup full_group(int mu);
Subgroup conjugate_subgroup(const Subgroup& h, const Element& g);
// Closure-and-inverse audit for an arbitrary element set.
bool is_subgroup(const std::vector<Element>& elements);
std::size_t coset_index(const Subgroup& h);

struct LatticeOptions {
  bool allow_long = false;           // needed for mu = 5
  std::size_t max_subgroups = 2000000;
  bool progress = false;
};

std::vector<Subgroup> all_subgroups(int mu, const LatticeOptions& opts = {});

struct SubgroupClass {
  Subgroup representative;
  std::size_t size = 0;
};
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(int mu, const LatticeOptions& opts = {});

struct LatticeCounts {
  std::size_t subgroups = 0;
  std::size_t classes = 0;
};
LatticeCounts lattice_counts(int mu, const LatticeOptions& opts = {});

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<int, std::size_t> order_counts;
  std::size_t center = 0;
  std::size_t derived = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Subgroup& h);

// One of trivial, Z2, D2, D4, D8, Z2xZ2xZ2, D6, Z2xD4, Z2xS3wr, Z2xZ2xD4,
// full, other(n).
std::string identify_group(const Subgroup& h);

struct NamedMatch {
  std::string name;        // trivial, Sigma2,1 ... Gamma2, other
  bool conjugate = false;  // matched only after conjugation
};
NamedMatch match_named_subgroup_2(const Subgroup& h);
// Catalog groups of Gamma_2 by name ("Sigma4,1", ...).
Subgroup named_subgroup_2(const std::string& name);
const std::vector<std::string>& named_subgroup_2_names();

nlohmann::json to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Subgroup& h);
Subgroup subgroup_from_json(const nlohmann::json& j);

}  // namespace whitten
