#include <sstream>

#include "doctest.h"
#include "numerics/error.hpp"
#include "report/report.hpp"

using namespace pvc;
using namespace pvc::report;

namespace {
std::vector<verify::SuiteResult> sample() {
  verify::SuiteResult s;
  s.suite = "demo";
  s.reports.push_back(verify::make_check("a", Json{{"q", 5}}, 1.0, 2.0, "note, with comma"));
  s.reports.push_back(verify::make_check("b", Json{{"q", 7}}, 3.0, 2.0));
  return {s};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("pretty") == Format::pretty);
  CHECK_THROWS_AS(parse_format("xml"), pvc::Error);
}

TEST_CASE("LogReal serialisation") {
  auto j = to_json(numerics::LogReal::from_real(-2.5));
  CHECK(j["sign"] == -1);
  CHECK(j["ln"].get<double>() == doctest::Approx(std::log(2.5)));
  CHECK(j["value"] == "-2.5");
  j = to_json(numerics::LogReal::from_ln(1e6));
  CHECK(j["value"].is_null());
  CHECK(j["ln"] == 1e6);
}

TEST_CASE("check rendering") {
  const auto s = sample();
  const auto js = lines(render_checks(s, Format::json));
  REQUIRE(js.size() == 2);
  const auto first = Json::parse(js[0]);
  CHECK(first["suite"] == "demo");
  CHECK(first["pass"] == true);
  CHECK(first["margin"] == 1.0);
  const auto csv = lines(render_checks(s, Format::csv));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == kChecksCsvHeader);
  CHECK(csv[1].find("\"note, with comma\"") != std::string::npos);
  CHECK(csv[1].find("\"{\"\"q\"\":5}\"") != std::string::npos);
  CHECK(render_checks(s, Format::pretty).find("FAIL demo b") != std::string::npos);
  const auto fl = lines(render_failures(s));
  REQUIRE(fl.size() == 1);
  CHECK(Json::parse(fl[0])["check_id"] == "b");
}

TEST_CASE("deterministic output") {
  const auto a = render_checks(sample(), Format::json);
  const auto b = render_checks(sample(), Format::json);
  CHECK(a == b);
}

TEST_CASE("table rendering") {
  optimizer::TableRow r;
  r.table = "table2";
  r.eps = 0.1;
  r.h = {1842.17, 3680.21};
  r.h_ceil = {1843, 3681};
  r.constraints = {{"x", true}, {"y", false}};
  r.binding = "x";
  const auto csv = lines(render_table_rows({r}, Format::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == kTableCsvHeader);
  CHECK(csv[1].rfind("table2,0.10000000000000001,", 0) == 0);
  CHECK(csv[1].find(",1/2,") != std::string::npos);
  const auto j = Json::parse(render_table_rows({r}, Format::json));
  CHECK(j["h1_ceil"] == 1843);
}

TEST_CASE("record rendering") {
  std::vector<Json> recs{Json{{"parity", "even"}, {"log_q", 1.5}, {"nested", {{"a", 1}}}}};
  const auto csv = lines(render_records(recs, Format::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "parity,log_q,nested");
  CHECK(csv[1] == "even,1.5,\"{\"\"a\"\":1}\"");
  CHECK(Json::parse(render_records(recs, Format::json))["parity"] == "even");
}
