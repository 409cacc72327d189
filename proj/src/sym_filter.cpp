#include "whitten/sym_filter.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "whitten/link_matrix.hpp"

namespace whitten {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::ProperSuperset: return "proper_superset";
    case Verdict::NotContaining: return "not_containing";
    default: return "unknown";
  }
}

namespace {

enum class Test { Pass, Fail, Limit };

// Runs test(i) for i in [0, n) on up to `jobs` threads.
std::vector<Test> run_parallel(std::size_t n, int jobs, const std::function<Test(std::size_t)>& test) {
  std::vector<Test> out(n, Test::Pass);
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t threads = std::min<std::size_t>(n, jobs > 0 ? static_cast<std::size_t>(jobs) : hw);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = test(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = test(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::optional<LaurentPoly2> fp_under(const std::vector<std::optional<LaurentPoly2>>& fp, const Element& g, int i) {
  const auto& src = fp[g.perm[i]];
  if (!src) return std::nullopt;
  return g.eps0 < 0 ? src->mirror() : *src;
}

template <class T>
bool differ(const std::optional<T>& a, const std::optional<T>& b) {
  return a && b && !(*a == *b);
}

}  // namespace

std::vector<Element> candidate_stage(const LinkDiagram& d, const FilterOptions& opts) {
  Subgroup stab = stabilizer_bruteforce(linking_matrix(d));
  std::vector<std::optional<LaurentPoly2>> fp;
  for (int i = 0; i < d.mu(); ++i) {
    try {
      fp.push_back(component_fingerprint(d, i, opts.homfly_limit));
    } catch (const resource_limit_error&) {
      fp.push_back(std::nullopt);
    }
  }
  const int sw = self_writhe(d);
  std::vector<Element> out;
  for (const auto& g : stab.elements) {
    bool ok = true;
    for (int i = 0; i < d.mu() && ok; ++i) {
      if (differ(fp_under(fp, g, i), fp[i])) ok = false;
    }
    if (opts.alternating && g.eps0 < 0 && sw != 0) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

Subgroup largest_subgroup_in(int mu, const std::vector<Element>& set) {
  std::set<Element> s(set.begin(), set.end());
  auto inside = [&](const Subgroup& h) {
    return std::all_of(h.elements.begin(), h.elements.end(), [&](const Element& e) { return s.count(e) > 0; });
  };
  std::vector<Element> gens;
  Subgroup h = generate(mu, {});
  // Large cyclic pieces first so that the greedy pass tends to keep more.
  std::vector<Element> order(set.begin(), set.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Element& a, const Element& b) { return element_order(a) > element_order(b); });
  for (const auto& g : order) {
    if (h.contains(g)) continue;
    auto trial = gens;
    trial.push_back(g);
    Subgroup bigger = generate(mu, trial);
    if (inside(bigger)) {
      gens = std::move(trial);
      h = std::move(bigger);
    }
  }
  return h;
}

FilterReport sigma_prime(const LinkDiagram& d, const FilterOptions& opts) {
  FilterReport r;
  const int mu = d.mu();
  r.stages.push_back({"stabilizer", stabilizer_bruteforce(linking_matrix(d)).order()});
  FilterOptions no_sw = opts;
  no_sw.alternating = false;
  std::vector<Element> cand = candidate_stage(d, no_sw);
  r.stages.push_back({"knot types", cand.size()});
  if (opts.alternating) {
    cand = candidate_stage(d, opts);
    r.stages.push_back({"self-writhe", cand.size()});
  }

  ProfileOptions po;
  po.use_fingerprints = false;
  po.bracket_limit = opts.bracket_limit;
  po.homfly_limit = opts.homfly_limit;
  const InvariantProfile base = profile(d, po);
  std::set<Element> limited;
  auto poly_test = [&](std::size_t k) {
    InvariantProfile p = profile(apply_whitten(cand[k], d), po);
    if (!profiles_match(p, base)) return Test::Fail;
    if ((base.jones && !p.jones) || (base.homflypt && !p.homflypt) || !base.jones) return Test::Limit;
    return Test::Pass;
  };
  std::vector<Test> res = run_parallel(cand.size(), opts.jobs, poly_test);
  std::vector<Element> keep;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (res[k] == Test::Fail) continue;
    if (res[k] == Test::Limit) limited.insert(cand[k]);
    keep.push_back(cand[k]);
  }
  cand = std::move(keep);
  r.stages.push_back({"polynomials", cand.size()});

  if (opts.use_satellites) {
    std::vector<std::optional<LaurentPoly>> base_sat(mu);
    for (int i = 0; i < mu; ++i) {
      try {
        base_sat[i] = jones(cable2(d, i, true), opts.bracket_limit);
      } catch (const resource_limit_error&) {
      }
    }
    auto sat_test = [&](std::size_t k) {
      const Element& g = cand[k];
      bool moves = false;
      for (int i = 0; i < mu; ++i) moves |= g.perm[i] != i;
      if (!moves) return Test::Pass;
      LinkDiagram gd = apply_whitten(g, d);
      Test t = Test::Pass;
      for (int i = 0; i < mu; ++i) {
        if (!base_sat[i]) {
          t = Test::Limit;
          continue;
        }
        try {
          if (!(jones(cable2(gd, i, true), opts.bracket_limit) == *base_sat[i])) return Test::Fail;
        } catch (const resource_limit_error&) {
          t = Test::Limit;
        }
      }
      return t;
    };
    res = run_parallel(cand.size(), opts.jobs, sat_test);
    keep.clear();
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (res[k] == Test::Fail) continue;
      if (res[k] == Test::Limit) limited.insert(cand[k]);
      keep.push_back(cand[k]);
    }
    cand = std::move(keep);
    r.stages.push_back({"satellites", cand.size()});
  }

  std::sort(cand.begin(), cand.end());
  r.survivors = cand;
  for (const auto& g : cand)
    if (limited.count(g)) r.retained_on_limit.push_back(g);
  r.closed = is_subgroup(cand);
  r.sigma_prime = r.closed ? generate(mu, cand) : largest_subgroup_in(mu, cand);
  if (r.closed) r.sigma_prime.elements = cand;
  return r;
}

void compare(FilterReport& r, const Subgroup& truth) {
  if (!truth.is_subset_of(r.sigma_prime)) {
    r.verdict = Verdict::NotContaining;
    r.index_over_truth = 0;
    return;
  }
  r.index_over_truth = r.sigma_prime.order() / truth.order();
  r.verdict = r.index_over_truth == 1 ? Verdict::Equal : Verdict::ProperSuperset;
}

nlohmann::json to_json(const FilterReport& r) {
  nlohmann::json j;
  j["link"] = r.name;
  j["stages"] = nlohmann::json::array();
  for (const auto& s : r.stages) j["stages"].push_back({{"stage", s.stage}, {"remaining", s.remaining}});
  j["sigma_prime"] = to_json(r.sigma_prime);
  j["order"] = r.sigma_prime.order();
  j["isomorphism"] = identify_group(r.sigma_prime);
  j["coset_index"] = coset_index(r.sigma_prime);
  j["closed"] = r.closed;
  j["retained_on_limit"] = nlohmann::json::array();
  for (const auto& g : r.retained_on_limit) j["retained_on_limit"].push_back(to_string(g));
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::Equal || r.verdict == Verdict::ProperSuperset) j["index_over_truth"] = r.index_over_truth;
  return j;
}

}  // namespace whitten
