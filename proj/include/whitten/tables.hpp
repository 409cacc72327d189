#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "whitten/census.hpp"
#include "whitten/sym_filter.hpp"

namespace whitten {

enum class Format { Text, Json, Tsv };
Format parse_format(const std::string& s);  // throws std::invalid_argument

struct TableOptions {
  int jobs = 0;
  bool allow_long = false;  // table 2: include mu = 5
};

struct Table {
  int id = 0;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Cells that disagree with the values printed in the source tables.
  std::vector<std::string> mismatches;
};

const std::vector<int>& table_ids();  // 2, 3, 6, 8, 9, 10, 11

// Throws std::invalid_argument for an unknown id. Tables 2 and 6 do not read
// the census.
Table build_table(int id, const Census& census, const TableOptions& opts = {});
std::string render(const Table& t, Format f);

// Number of conjugacy classes among the ground-truth groups of the
// non-split links with mu components.
std::size_t distinct_symmetry_classes(const Census& census, int mu);

// Filter run for one census link, compared against its ground truth.
FilterReport symmetry_report(const LinkRecord& r, bool satellites, int jobs = 0);
std::string render_report(const FilterReport& r, Format f, const LinkRecord* rec = nullptr);

}  // namespace whitten
