#pragma once

#include <ostream>
#include <string>

#include "ffdigit/construct.hpp"
#include "ffdigit/patterncount.hpp"
#include "ffdigit/sweep.hpp"

namespace ffdigit {

// JSON serialization (nlohmann::json objects rendered compact, stable key
// order via ordered_json so identical inputs give byte-identical output).
std::string to_json(const BoundCheckReport& rep);
std::string to_json(const FieldContext& ctx, const CounterexampleCertificate& cert);

// Sweep output: a header object (config echo, PRNG name, totals) followed by
// one JSON object per row, newline-delimited.
void write_ndjson(std::ostream& os, const RunReport& rep);

// CSV with a fixed, documented header row; same columns as the JSON rows.
extern const char* kCsvHeader;
std::string to_csv_row(const BoundCheckReport& rep);
void write_csv(std::ostream& os, const RunReport& rep);

}  // namespace ffdigit
