#pragma once

// JSON and CSV views of tables and verification reports. Big integers are
// always written as decimal strings; point lists are sorted by (k, n).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <qseries/partitions.hpp>
#include <qseries/series.hpp>
#include <qseries/verifier.hpp>

namespace qseries
{

using Json = nlohmann::ordered_json;

Json to_json(const Series &s);
Json to_json(const FunctionTable &t);
Json to_json(const IdentityReport &r);

// `kind` is the subcommand that produced the report: "inequality",
// "conjecture" or "parity".
Json to_json(const FamilyReport &r, std::string_view kind);

std::string to_csv(const FunctionTable &t);
std::string to_csv(const IdentityReport &r);
std::string to_csv(const FamilyReport &r);

// Outcome labels used in both views.
std::string_view outcome(const IdentityReport &r);
std::string_view outcome(const FamilyReport &r);

// Dump with two-space indentation and a trailing newline.
std::string render(const Json &j);

} // namespace qseries
