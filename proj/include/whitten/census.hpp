#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "whitten/diagram.hpp"
#include "whitten/group.hpp"
#include "whitten/link_matrix.hpp"
#include "whitten/sym_filter.hpp"

namespace whitten {

struct census_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unknown_link_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

constexpr int kCensusSchema = 1;

// Relabeling applied to the stored PD code at load time. A whole Whitten
// element, so it can carry a mirror as well as reversals and a permutation.
struct Calibration {
  Element element;
  bool pinned = false;  // fixed by a quoted matrix or polynomial, not just by the group
  std::string basis;    // which data fixed it: "matrix", "matrix+polynomial", "satellite", "group", ...
};

struct LinkRecord {
  std::string rolfsen;
  std::string thistlethwaite;  // empty for the unlink
  int mu = 0;
  int crossings = 0;
  bool alternating = false;
  LinkDiagram raw;      // exactly as stored
  LinkDiagram diagram;  // calibrated
  Calibration calibration;
  std::vector<Element> sigma_generators;
  std::size_t sigma_order = 0;
  std::string sigma_label;  // Sigma4,1 ... for two components, isomorphism label otherwise
  std::optional<LinkingMatrix> quoted_linking_matrix;

  Subgroup ground_truth() const;
  FilterOptions filter_options(bool satellites) const;
};

// Polynomial values quoted for census links (Jones and Conway in z, HOMFLYPT in a, z),
// either for the link itself or for its image under an element.
struct QuotedPolynomial {
  std::string link;
  std::string element;  // "" for the link itself
  std::string kind;     // "jones", "conway", "homflypt", "satellite-jones"
  int component = 0;    // satellites: 1-based component that was cabled
  std::string tex;
};
const std::vector<QuotedPolynomial>& quoted_polynomials();

class Census {
 public:
  // Throws census_error naming every record that fails validation.
  static Census load(const std::string& path);
  static Census load_default();

  const std::vector<LinkRecord>& records() const { return records_; }
  const LinkRecord& find(const std::string& name) const;  // rolfsen or thistlethwaite
  const std::string& path() const { return path_; }

 private:
  std::vector<LinkRecord> records_;
  std::string path_;
};

// WHITTEN_CENSUS if set, else the data file shipped with the sources.
std::string default_census_path();

// Builds one record from JSON without validating it.
LinkRecord record_from_json(const nlohmann::json& j);
// All invariant violations for a record ("8^3_4: calibrated linking matrix ...").
std::vector<std::string> validate(const LinkRecord& r);

// Searches Gamma_mu for the relabeling of the raw diagram that reproduces the
// quoted linking matrix and polynomials and whose filtered group contains
// (ideally equals) the ground truth. Identity-first canonical order breaks ties.
Calibration calibrate(const LinkRecord& r, int jobs = 0);
nlohmann::json to_json(const Calibration& c);
Calibration calibration_from_json(const nlohmann::json& j, int mu);

// Sum of coset indices of the ground-truth groups over links with the given
// crossing number and component count.
std::size_t count_link_types(const Census& c, int crossings, int mu);

// Rolfsen names such as 8^3_10 sort by crossings then index.
bool rolfsen_less(const std::string& a, const std::string& b);

}  // namespace whitten
