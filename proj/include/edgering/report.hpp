#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgering/facets.hpp"
#include "edgering/serre.hpp"

namespace edgering {

/// One row of a facet table. Oracle columns are present only when the
/// lattice conditions were evaluated.
struct FacetRow {
  FacetDescriptor facet;
  SupportForm form;
  std::optional<bool> condition_one;
  std::optional<bool> condition_two;

  bool operator==(const FacetRow&) const = default;
};

struct Report {
  std::string input;
  int d = 0;
  int n = 0;
  ClassificationReport classification;
  std::optional<std::vector<FacetRow>> facets;
  /// Lattice-oracle verdict and whether it matches the combinatorial one.
  std::optional<bool> oracle_r1;
  std::optional<bool> agreement;

  bool operator==(const Report&) const = default;
};

Report make_report(std::string input, const Graph& g, ClassificationReport classification);

nlohmann::json to_json(const FacetDescriptor& f);
FacetDescriptor facet_from_json(const nlohmann::json& j);

/// Keys are sorted and no field depends on wall-clock time.
nlohmann::json to_json(const Report& r);
/// Throws nlohmann::json::exception or std::invalid_argument on schema errors.
Report report_from_json(const nlohmann::json& j);

/// Line-oriented "key: value" rendering.
std::string render_text(const Report& r);

}  // namespace edgering
