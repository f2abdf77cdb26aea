#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ccs::text {

// Lowercase word tokenization on non-alphanumerics: "Bayes' rule, ML-based"
// -> {"bayes", "rule", "ml", "based"}. ASCII only.
std::vector<std::string> tokenize(std::string_view s);

std::string to_lower(std::string_view s);

// Current UTC time as ISO-8601 ("2026-08-10T12:00:00Z").
std::string utc_timestamp();

}  // namespace ccs::text
