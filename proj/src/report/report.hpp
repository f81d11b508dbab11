#pragma once

#include <string>
#include <vector>

#include "burgess/burgess.hpp"
#include "constants/constants.hpp"
#include "optimizer/optimizer.hpp"
#include "verify/verify.hpp"

namespace pvc::report {

using Json = verify::Json;

enum class Format { json, csv, pretty };

/// "json", "csv" or "pretty"; usage error otherwise.
Format parse_format(const std::string& s);

/// {"sign", "ln"} plus "value" as a decimal string when it fits a double.
Json to_json(const numerics::LogReal& x);
Json to_json(const std::vector<constants::Constraint>& cs);
Json to_json(const verify::CheckReport& r);
Json to_json(const optimizer::TableRow& r);
Json to_json(const burgess::BurgessRow& r);
Json to_json(const burgess::GSearch& s);
Json to_json(const constants::PVBound& b);

/// One JSON line per record, CSV with a fixed header, or aligned text.
std::string render_checks(const std::vector<verify::SuiteResult>& suites, Format f);
/// Only the failing reports, one JSON line each.
std::string render_failures(const std::vector<verify::SuiteResult>& suites);
std::string render_table_rows(const std::vector<optimizer::TableRow>& rows, Format f);
std::string render_burgess(const std::vector<burgess::BurgessRow>& rows, Format f);
/// Flat records (crossover, eval, searches): CSV uses the keys of the first record,
/// nested values are written as compact JSON.
std::string render_records(const std::vector<Json>& records, Format f);

/// CSV header rows, kept stable.
extern const char* const kChecksCsvHeader;
extern const char* const kTableCsvHeader;
extern const char* const kBurgessCsvHeader;

}  // namespace pvc::report
