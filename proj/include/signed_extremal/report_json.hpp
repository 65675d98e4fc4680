#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "signed_extremal/bounds.hpp"
#include "signed_extremal/search.hpp"
#include "signed_extremal/spectral.hpp"
#include "signed_extremal/verify.hpp"

namespace sx {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { Table, Json, Csv };
OutputFormat parse_format(const std::string& name);

// Reports carry 15 significant digits.
double round15(double x);
std::string format_number(double x);

Json graph_json(const SignedGraph& g);
Json spectrum_json(const SignedGraph& g, const Spectrum& s);
Json bound_json(const BoundReport& r);
// wall_time is emitted only when `timing` is set, so default output is reproducible.
Json search_json(const SearchReport& r, bool timing);
Json properties_json(std::uint64_t seed, const std::vector<PropertySuiteResult>& results);

// CSV with a fixed header row; one row per item.
std::string spectrum_csv(const Spectrum& s);
std::string bounds_csv(const std::vector<BoundReport>& reports);
std::string search_csv(const SearchReport& r);
std::string properties_csv(const std::vector<PropertySuiteResult>& results);

}  // namespace sx
