#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "whitten/diagram.hpp"
#include "whitten/group.hpp"
#include "whitten/invariants.hpp"

namespace whitten {

struct FilterOptions {
  bool use_satellites = false;
  bool alternating = false;  // enables the self-writhe test (reduced alternating diagrams only)
  int jobs = 0;              // 0: hardware concurrency
  int bracket_limit = kBracketLimit;
  int homfly_limit = kHomflyLimit;
};

enum class Verdict { Equal, ProperSuperset, NotContaining, Unknown };
std::string to_string(Verdict v);

struct StageCount {
  std::string stage;
  std::size_t remaining = 0;
};

struct FilterReport {
  std::string name;
  std::vector<StageCount> stages;
  std::vector<Element> survivors;  // canonical order
  Subgroup sigma_prime;
  bool closed = true;
  // gamma elements whose test hit a resource limit and were kept
  std::vector<Element> retained_on_limit;
  Verdict verdict = Verdict::Unknown;
  std::size_t index_over_truth = 0;  // |sigma'| / |truth| when containing
};

// Linking-matrix stabilizer cut down by component knot types and, for
// alternating diagrams, self-writhe.
std::vector<Element> candidate_stage(const LinkDiagram& d, const FilterOptions& opts = {});

FilterReport sigma_prime(const LinkDiagram& d, const FilterOptions& opts = {});

// Fills verdict and index against a known group.
void compare(FilterReport& r, const Subgroup& truth);

// Largest subgroup found inside an element set by greedy extension.
Subgroup largest_subgroup_in(int mu, const std::vector<Element>& set);

nlohmann::json to_json(const FilterReport& r);

}  // namespace whitten
