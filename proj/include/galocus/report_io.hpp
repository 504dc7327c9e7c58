#pragma once

// Text, CSV and JSON emitters for census reports, plus the JSON parser used
// for round-tripping. All output is deterministic: identical reports render
// to identical bytes.

#include <string>

#include "galocus/locus.hpp"

namespace galocus {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(const std::string& label);

// Table 1 layout: every dimension from 0 to n-2 with explicit zeros and a
// "Total number" footer.
std::string render_table(const CensusReport& report);

// Header `dimension,count,group_order`, one row per nonzero record,
// ascending dimension.
std::string render_csv(const CensusReport& report);

// Stable schema (version 1):
// {"schema":1,"n":..,"N":..,"j":"generic"|"0"|"1728",
//  "components":[{"dimension":..,"count":..,"group_order":..,
//                 "constituents":[{"ell":..,"h_order":..,"psi":..}],
//                 "fiber_dim":int|null,"base":"E/H"|null}],
//  "total":..}
std::string render_json(const CensusReport& report);

// Inverse of render_json; throws std::invalid_argument on malformed input.
CensusReport parse_json_report(const std::string& text);

std::string render(const CensusReport& report, OutputFormat format);

}  // namespace galocus
