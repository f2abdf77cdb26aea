#include "ccs/annotate.hpp"

#include <algorithm>

#include "ccs/errors.hpp"

namespace ccs {

using nlohmann::json;

std::string_view to_string(MarkerKind m) {
  switch (m) {
    case MarkerKind::Intervention: return "intervention";
    case MarkerKind::Uncertainty: return "uncertainty";
    case MarkerKind::Boundary: return "boundary";
  }
  return "intervention";
}

MarkerKind marker_kind_from_string(std::string_view s) {
  if (s == "intervention") return MarkerKind::Intervention;
  if (s == "uncertainty") return MarkerKind::Uncertainty;
  if (s == "boundary") return MarkerKind::Boundary;
  throw ValidationError("unknown marker kind: '" + std::string(s) + "'");
}

void to_json(json& j, const InterventionAnnotation& a) {
  json markers = json::array();
  for (const auto m : a.markers) markers.push_back(std::string(to_string(m)));
  j = json{{"fired", a.fired},
           {"level", a.level},
           {"markers", markers},
           {"well_formed", a.well_formed},
           {"raw_marker_lines", a.raw_marker_lines}};
}

void from_json(const json& j, InterventionAnnotation& a) {
  j.at("fired").get_to(a.fired);
  j.at("level").get_to(a.level);
  a.markers.clear();
  for (const auto& m : j.at("markers")) {
    a.markers.insert(marker_kind_from_string(m.get<std::string>()));
  }
  j.at("well_formed").get_to(a.well_formed);
  j.at("raw_marker_lines").get_to(a.raw_marker_lines);
}

namespace {

constexpr std::string_view kMarkerPrefix = "[CCS:";

bool is_word_char(char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
}

// Attempts to read "name=value" at text[pos]; value = [a-z0-9_]+.
bool consume_field(std::string_view text, std::size_t& pos, std::string_view name,
                   std::string_view& value) {
  if (text.substr(pos, name.size()) != name) return false;
  pos += name.size();
  const std::size_t start = pos;
  while (pos < text.size() && is_word_char(text[pos])) ++pos;
  if (pos == start) return false;
  value = text.substr(start, pos - start);
  return true;
}

struct MarkerScan {
  int intervention_count = 0;
  int max_level = -1;
  bool uncertainty = false;
  bool boundary = false;
  bool malformed = false;
};

// Parses one candidate marker starting at the "[CCS:" prefix. Advances pos
// past the marker (valid case) or past the '[' (malformed case).
void scan_marker(std::string_view text, std::size_t& pos, MarkerScan& scan) {
  const std::size_t start = pos;
  pos += kMarkerPrefix.size();

  auto rest = text.substr(pos);
  if (rest.starts_with("UNCERTAINTY]")) {
    scan.uncertainty = true;
    pos += std::string_view("UNCERTAINTY]").size();
    return;
  }
  if (rest.starts_with("BOUNDARY]")) {
    scan.boundary = true;
    pos += std::string_view("BOUNDARY]").size();
    return;
  }
  if (rest.starts_with("INTERVENTION ")) {
    std::size_t p = pos + std::string_view("INTERVENTION ").size();
    std::string_view level_str, partition_str, domain_str;
    if (consume_field(text, p, "level=", level_str) && level_str.size() == 1 &&
        level_str[0] >= '0' && level_str[0] <= '3' && p < text.size() && text[p] == ' ' &&
        (++p, consume_field(text, p, "partition=", partition_str)) &&
        (partition_str == "strong" || partition_str == "mixed" || partition_str == "weak") &&
        p < text.size() && text[p] == ' ' &&
        (++p, consume_field(text, p, "domain=", domain_str)) && p < text.size() &&
        text[p] == ']') {
      ++p;
      ++scan.intervention_count;
      scan.max_level = std::max(scan.max_level, level_str[0] - '0');
      pos = p;
      return;
    }
  }
  scan.malformed = true;
  pos = start + 1;
}

}  // namespace

InterventionAnnotation parse_response(std::string_view response_text) {
  MarkerScan scan;
  InterventionAnnotation annotation;

  std::size_t line_start = 0;
  while (line_start <= response_text.size()) {
    std::size_t line_end = response_text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = response_text.size();
    const std::string_view line = response_text.substr(line_start, line_end - line_start);
    if (line.find(kMarkerPrefix) != std::string_view::npos) {
      annotation.raw_marker_lines.emplace_back(line);
    }
    line_start = line_end + 1;
    if (line_end == response_text.size()) break;
  }

  std::size_t pos = 0;
  while (pos + kMarkerPrefix.size() <= response_text.size()) {
    const std::size_t next = response_text.find(kMarkerPrefix, pos);
    if (next == std::string_view::npos) break;
    pos = next;
    scan_marker(response_text, pos, scan);
  }

  annotation.level = std::max(scan.max_level, 0);
  if (scan.intervention_count > 0) annotation.markers.insert(MarkerKind::Intervention);
  if (scan.uncertainty) annotation.markers.insert(MarkerKind::Uncertainty);
  if (scan.boundary) annotation.markers.insert(MarkerKind::Boundary);

  // Conservative fallback: any unparseable [CCS: fragment counts as a firing
  // at level >= 1 so that misformatting inflates rather than hides counts.
  if (scan.malformed) {
    annotation.level = std::max(annotation.level, 1);
    annotation.well_formed = false;
  }
  if (scan.intervention_count > 1) annotation.well_formed = false;
  if ((scan.uncertainty || scan.boundary) && scan.intervention_count == 0) {
    annotation.level = std::max(annotation.level, 1);
    annotation.well_formed = false;
  }

  annotation.fired = annotation.level >= 1;
  return annotation;
}

}  // namespace ccs
