#pragma once

#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitten/group.hpp"
#include "whitten/link_matrix.hpp"

namespace whitten {

struct pd_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arcs counterclockwise from the incoming under-strand. The under strand runs
// slot 0 -> 2. sign +1: over strand runs 3 -> 1; sign -1: 1 -> 3.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Slot {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Crossings carry their signs; arc_label maps every arc (including free
  // loops, which appear in no crossing) to a component label 1..mu.
  static LinkDiagram build(std::vector<Crossing> crossings, const std::map<int, int>& arc_label);
  static LinkDiagram unknot();
  static LinkDiagram unlink(int mu);

  int mu() const { return static_cast<int>(comps_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  // Oriented arc sequence of each component, starting at its smallest arc.
  const std::vector<std::vector<int>>& components() const { return comps_; }
  int component_of(int arc) const;  // 0-based
  bool is_free_loop(int comp) const;
  // Where the arc enters (head) and leaves (tail) a crossing.
  Slot head(int arc) const;
  Slot tail(int arc) const;
  int successor(int arc) const;
  std::vector<int> arcs() const;
  int max_arc() const;
  // Component (0-based) passing along the given slot of a crossing.
  int strand_component(int crossing, int slot) const { return component_of(crossings_[crossing].arcs[slot]); }

  std::map<int, int> arc_labels() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.comps_ == b.comps_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> comps_;
  std::map<int, int> comp_of_;
  std::map<int, Slot> head_, tail_;
};

// PD[X[1,5,2,4], ...] {1:1, 2:1, ...}. The brace annotation maps arcs to
// component labels; without it components are labeled in order of their
// smallest arc. PD[] is the unknot; PD[] {1:1, 2:2} a two-component unlink.
LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);

// Renumber arcs 1..n: component 1 first, each from its smallest arc.
LinkDiagram normalize(const LinkDiagram& d);

LinkingMatrix linking_matrix(const LinkDiagram& d);
int writhe(const LinkDiagram& d);
int self_writhe(const LinkDiagram& d);
int self_writhe(const LinkDiagram& d, int comp);  // 0-based
int overall_linking_number(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse_component(const LinkDiagram& d, int comp);  // 0-based
// New component i is old component p(i).
LinkDiagram permute_components(const LinkDiagram& d, const Element& p);
LinkDiagram apply_whitten(const Element& g, const LinkDiagram& d);

// keep holds 0-based component indices.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep);

// Component i (0-based) becomes two parallel copies: one keeps label i+1, the
// other is appended as label mu+1. Full twists make the pair 0-framed; the
// clasp adds one positive full twist, turning the pair into a Hopf link.
LinkDiagram cable2(const LinkDiagram& d, int i, bool clasp);

// Reidemeister I and II reductions until none apply.
LinkDiagram simplify(const LinkDiagram& d);

// Random complications for invariance tests.
LinkDiagram add_kink(const LinkDiagram& d, int arc, int kind);  // kind 0..3
// Pushes a finger of one boundary arc of a face over another; false if the
// diagram has no face with two distinct arcs.
bool add_r2(const LinkDiagram& d, std::mt19937& rng, LinkDiagram& out);
LinkDiagram random_complication(const LinkDiagram& d, std::mt19937& rng, int moves);

bool is_alternating(const LinkDiagram& d);

}  // namespace whitten
