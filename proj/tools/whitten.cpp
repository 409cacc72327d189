#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "whitten/census.hpp"
#include "whitten/diagram.hpp"
#include "whitten/group.hpp"
#include "whitten/link_matrix.hpp"
#include "whitten/sym_filter.hpp"
#include "whitten/tables.hpp"

using namespace whitten;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kUnknown = 3, kLimit = 4, kMismatch = 5 };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw usage_error(s);
    } catch (const std::logic_error&) {
      throw usage_error("not a list of integers: " + s);
    }
  }
  return v;
}

// "0,1,1;1,0,1;1,1,0"
LinkingMatrix parse_matrix(const std::string& s) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row));
  try {
    return LinkingMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

void print_subgroup(const Subgroup& h, Format f, const std::string& title) {
  if (f == Format::Json) {
    json j = to_json(h);
    j["order"] = h.order();
    j["isomorphism"] = identify_group(h);
    if (h.mu == 2) j["name"] = match_named_subgroup_2(h).name;
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (f == Format::Tsv) {
    for (const auto& e : h.elements) std::cout << to_string(e) << '\n';
    return;
  }
  std::cout << title << '\n';
  std::cout << "order       " << h.order() << '\n';
  std::cout << "isomorphic  " << identify_group(h) << '\n';
  if (h.mu == 2) std::cout << "name        " << match_named_subgroup_2(h).name << '\n';
  std::cout << "elements\n";
  for (const auto& e : h.elements) std::cout << "  " << to_string(e) << '\n';
}

json census_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw census_error("cannot open " + path);
  return json::parse(in);
}

// One link per line keeps diffs of the data file readable.
void write_census_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  out << "{\n \"schema_version\": " << j["schema_version"].dump() << ",\n \"links\": [\n";
  const auto& links = j["links"];
  for (std::size_t i = 0; i < links.size(); ++i)
    out << "  " << links[i].dump() << (i + 1 < links.size() ? ",\n" : "\n");
  out << " ]\n}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitten symmetry groups of oriented, labeled links"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  std::string format_name = "text";
  app.add_option("--jobs", jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format_name, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));

  auto* group = app.add_subcommand("group", "Order, subgroups and conjugacy classes of Gamma_mu");
  int mu = 0;
  bool subgroups = false, conjugacy = false, allow_long = false;
  group->add_option("--mu", mu)->required()->check(CLI::Range(1, 5));
  group->add_flag("--subgroups", subgroups);
  group->add_flag("--conjugacy", conjugacy);
  group->add_flag("--allow-long", allow_long, "Permit mu = 5 lattice enumeration");

  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a linking matrix");
  std::string triple, quad, matrix;
  auto* ot = stab->add_option("--triple", triple, "a,b,c for the 3-component matrix");
  auto* oq = stab->add_option("--quad", quad, "a,b,c,d for the 4-component form");
  auto* om = stab->add_option("--matrix", matrix, "rows separated by ';'");
  ot->excludes(oq)->excludes(om);
  oq->excludes(om);

  auto* sym = app.add_subcommand("symmetry", "Filtered symmetry group of one link");
  std::string link_name, pd;
  bool satellites = false, compare_truth = false;
  auto* on = sym->add_option("name", link_name, "Rolfsen or Thistlethwaite name");
  auto* op = sym->add_option("--pd", pd, "PD code instead of a census name");
  on->excludes(op);
  sym->add_flag("--satellites", satellites);
  sym->add_flag("--compare", compare_truth, "Compare with the census ground truth");

  auto* table = app.add_subcommand("table", "Regenerate one of the symmetry tables");
  int table_id = 0;
  bool diff = false;
  table->add_option("which", table_id)->required()->check(CLI::IsMember(table_ids()));
  table->add_flag("--diff", diff, "Exit 5 if any cell differs from the expected value");
  table->add_flag("--allow-long", allow_long, "Table 2: include mu = 5");

  auto* census = app.add_subcommand("census", "Census maintenance");
  census->require_subcommand(1);
  census->fallthrough();
  auto* verify = census->add_subcommand("verify", "Validate every record");
  auto* calib = census->add_subcommand("calibrate", "Recompute the stored relabelings");
  bool write = false;
  calib->add_flag("--write", write, "Store the result in the census file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const Format fmt = parse_format(format_name);
  try {
    if (*group) {
      if (mu == 5 && (subgroups || conjugacy) && !allow_long) {
        std::cerr << "mu = 5 lattice enumeration needs --allow-long\n";
        return kUsage;
      }
      LatticeOptions lo;
      lo.allow_long = allow_long;
      json j;
      j["mu"] = mu;
      j["order"] = gamma_order(mu);
      if (subgroups || conjugacy) {
        LatticeCounts c = lattice_counts(mu, lo);
        if (subgroups) j["subgroups"] = c.subgroups;
        if (conjugacy) j["conjugacy_classes"] = c.classes;
      }
      if (fmt == Format::Json) {
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& [k, v] : j.items()) std::cout << k << (fmt == Format::Tsv ? "\t" : "  ") << v << '\n';
      }
      return kOk;
    }

    if (*stab) {
      LinkingMatrix a;
      if (!triple.empty()) {
        auto v = parse_ints(triple);
        if (v.size() != 3) throw usage_error("--triple needs three integers");
        a = matrix_of(Triple{v[0], v[1], v[2]});
      } else if (!quad.empty()) {
        auto v = parse_ints(quad);
        if (v.size() != 4) throw usage_error("--quad needs four integers");
        a = matrix_of(Quad{v[0], v[1], v[2], v[3]});
      } else if (!matrix.empty()) {
        a = parse_matrix(matrix);
      } else {
        throw usage_error("give --triple, --quad or --matrix");
      }
      print_subgroup(stabilizer_bruteforce(a), fmt, "stabilizer of " + a.str());
      return kOk;
    }

    if (*sym) {
      FilterReport rep;
      const LinkRecord* rec = nullptr;
      Census c;
      if (!pd.empty()) {
        LinkDiagram d;
        try {
          d = parse_pd(pd);
        } catch (const pd_error& e) {
          throw usage_error(e.what());
        }
        FilterOptions o;
        o.use_satellites = satellites;
        o.alternating = is_alternating(d);
        o.jobs = jobs;
        rep = sigma_prime(d, o);
        rep.name = "pd";
      } else {
        if (link_name.empty()) throw usage_error("give a link name or --pd");
        c = Census::load_default();
        rec = &c.find(link_name);
        rep = symmetry_report(*rec, satellites, jobs);
        if (!compare_truth) {
          rep.verdict = Verdict::Unknown;
          rec = nullptr;
        }
      }
      std::cout << render_report(rep, fmt, rec);
      return rep.retained_on_limit.empty() ? kOk : kLimit;
    }

    if (*table) {
      Census c = Census::load_default();
      TableOptions o;
      o.jobs = jobs;
      o.allow_long = allow_long;
      Table t = build_table(table_id, c, o);
      std::cout << render(t, fmt);
      if (diff && !t.mismatches.empty()) {
        for (const auto& m : t.mismatches) std::cerr << "mismatch: " << m << '\n';
        return kMismatch;
      }
      return kOk;
    }

    if (*verify) {
      const std::string path = default_census_path();
      json j = census_json(path);
      std::size_t bad = 0, n = 0;
      for (const auto& lj : j.at("links")) {
        LinkRecord r = record_from_json(lj);
        ++n;
        for (const auto& msg : validate(r)) {
          std::cout << msg << '\n';
          ++bad;
        }
      }
      if (j.value("schema_version", 0) != kCensusSchema) {
        std::cout << "unsupported schema_version\n";
        ++bad;
      }
      std::cout << n << " records, " << bad << " problems\n";
      return bad ? kMismatch : kOk;
    }

    if (*calib) {
      const std::string path = default_census_path();
      json j = census_json(path);
      for (auto& lj : j.at("links")) {
        LinkRecord r = record_from_json(lj);
        Calibration cal = calibrate(r, jobs);
        std::cout << r.rolfsen << '\t' << to_string(cal.element) << '\t' << (cal.pinned ? "pinned" : "free") << '\t'
                  << cal.basis << '\n';
        lj["calibration"] = to_json(cal);
      }
      if (write) write_census_json(path, j);
      return kOk;
    }
  } catch (const usage_error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const unknown_link_error& e) {
    std::cerr << e.what() << '\n';
    return kUnknown;
  } catch (const resource_limit_error& e) {
    std::cerr << e.what() << '\n';
    return kLimit;
  } catch (const census_error& e) {
    std::cerr << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}
