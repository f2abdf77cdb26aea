#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ccs {

enum class MarkerKind { Intervention, Uncertainty, Boundary };

std::string_view to_string(MarkerKind m);
MarkerKind marker_kind_from_string(std::string_view s);

// Parsed activation evidence from one substrate response; the unit every
// activation statistic counts.
struct InterventionAnnotation {
  bool fired = false;  // always equals (level >= 1)
  int level = 0;
  std::set<MarkerKind> markers;
  bool well_formed = true;
  std::vector<std::string> raw_marker_lines;

  bool operator==(const InterventionAnnotation&) const = default;
};

void to_json(nlohmann::json& j, const InterventionAnnotation& a);
void from_json(const nlohmann::json& j, InterventionAnnotation& a);

// Total, deterministic marker scan. No markers -> silent level 0. A single
// valid intervention marker -> its level. Multiple intervention markers take
// the maximum level and clear well_formed. Any "[CCS:" fragment that fails
// the grammar counts as fired at level >= 1 with well_formed=false, so
// misformatting inflates rather than hides intervention counts.
InterventionAnnotation parse_response(std::string_view response_text);

}  // namespace ccs
