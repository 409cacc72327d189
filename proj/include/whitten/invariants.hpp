#pragma once

#include <optional>
#include <vector>

#include "whitten/diagram.hpp"
#include "whitten/link_matrix.hpp"
#include "whitten/poly.hpp"

namespace whitten {

constexpr int kBracketLimit = 40;
constexpr int kHomflyLimit = 20;

// Bracket in A, normalized so the crossingless unknot is 1. Throws
// resource_limit_error above the crossing limit.
LaurentPoly kauffman_bracket(const LinkDiagram& d, int limit = kBracketLimit);
// Plain 2^n state sum; only for cross-checking small diagrams.
LaurentPoly kauffman_bracket_statesum(const LinkDiagram& d);

// V = (-A^3)^-w <D> with t = A^-4, printed in z := t.
LaurentPoly jones(const LinkDiagram& d, int limit = kBracketLimit);

// a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1.
LaurentPoly2 homflypt(const LinkDiagram& d, int limit = kHomflyLimit);
// P at a = 1, a polynomial in z.
LaurentPoly conway(const LinkDiagram& d, int limit = kHomflyLimit);
LaurentPoly conway_of(const LaurentPoly2& p);
// Checks P(a = t^-1, z = t^1/2 - t^-1/2) == V.
bool homflypt_specializes_to(const LaurentPoly2& p, const LaurentPoly& v);

// Jones of the 2-cable of component i whose strands are joined by a full
// twist of the given sign (0: no clasp). A negative clasp is the mirror of a
// positive one on the mirror diagram.
LaurentPoly clasped_cable_jones(const LinkDiagram& d, int i, int twist, int limit = kBracketLimit);

// HOMFLYPT of the knot type of component i (0-based).
LaurentPoly2 component_fingerprint(const LinkDiagram& d, int i, int limit = kHomflyLimit);

struct ProfileOptions {
  bool use_self_writhe = false;  // only meaningful for reduced alternating diagrams
  bool use_jones = true;
  bool use_homflypt = true;
  bool use_fingerprints = true;
  int bracket_limit = kBracketLimit;
  int homfly_limit = kHomflyLimit;
};

// Fields left empty were not computed (disabled or over a resource limit)
// and never distinguish two profiles.
struct InvariantProfile {
  LinkingMatrix linking;
  std::optional<int> self_writhe;
  std::optional<LaurentPoly> jones;
  std::optional<LaurentPoly2> homflypt;
  std::vector<std::optional<LaurentPoly2>> fingerprints;
};

InvariantProfile profile(const LinkDiagram& d, const ProfileOptions& opts = {});
bool profiles_match(const InvariantProfile& a, const InvariantProfile& b);

}  // namespace whitten
