#include "report/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "numerics/error.hpp"

namespace pvc::report {

const char* const kChecksCsvHeader = "suite,check_id,instance,lhs,rhs,margin,pass,notes";
const char* const kTableCsvHeader =
    "table,eps,loglog_q0_even,loglog_q0_odd,gamma_even,gamma_odd,E_even,E_odd,m,h1,h2,h1_ceil,h2_ceil,"
    "divisor_mode,constraints_passed,binding,binding_loglog_q";
const char* const kBurgessCsvHeader = "m,log10_q0,h,feasible,g,v3,slack,grid_fallback,min_m,hypotheses_passed,reason";

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// nlohmann writes non-finite doubles as null; keep them readable
Json real(double x) {
  if (std::isfinite(x)) return x;
  return num(x);
}

std::size_t passed(const std::vector<constants::Constraint>& cs) {
  std::size_t n = 0;
  for (const auto& c : cs) n += c.satisfied;
  return n;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw_usage("unknown format '" + s + "' (json, csv, pretty)");
}

Json to_json(const numerics::LogReal& x) {
  Json j{{"sign", x.sign()}, {"ln", real(x.ln_mag())}};
  if (x.in_ordinary_range()) j["value"] = num(x.to_real());
  else j["value"] = nullptr;
  return j;
}

Json to_json(const std::vector<constants::Constraint>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(Json{{"name", c.name}, {"satisfied", c.satisfied}});
  return a;
}

Json to_json(const verify::CheckReport& r) {
  return Json{{"check_id", r.check_id}, {"instance", r.instance}, {"lhs", real(r.lhs)}, {"rhs", real(r.rhs)},
              {"margin", real(r.margin)}, {"pass", r.pass},        {"notes", r.notes}};
}

Json to_json(const optimizer::TableRow& r) {
  return Json{{"table", r.table},
              {"eps", r.eps},
              {"loglog_q0", {r.loglog_q0[0], r.loglog_q0[1]}},
              {"gamma", {r.gamma[0], r.gamma[1]}},
              {"E", {r.E[0], r.E[1]}},
              {"m", r.m},
              {"h_tb", r.h_tb},
              {"h1", r.h[0]},
              {"h2", r.h[1]},
              {"h1_ceil", r.h_ceil[0]},
              {"h2_ceil", r.h_ceil[1]},
              {"c_branch", {std::string(1, r.c_branch[0]), std::string(1, r.c_branch[1])}},
              {"divisor_mode", r.divisor_mode.describe()},
              {"constraints", to_json(r.constraints)},
              {"binding", r.binding},
              {"binding_loglog_q", r.binding_loglog_q}};
}

Json to_json(const burgess::GSearch& s) {
  return Json{{"feasible", s.feasible}, {"g", real(s.g)},       {"v3", real(s.v3)},
              {"grid_fallback", s.grid_fallback}, {"reason", s.reason}, {"hypotheses", to_json(s.hypotheses)}};
}

Json to_json(const burgess::BurgessRow& r) {
  Json j{{"m", r.entry.m}, {"log10_q0", r.entry.log10_q0}, {"h", r.entry.h}, {"search", to_json(r.search)},
         {"slack", real(r.slack)}};
  j["min_m"] = r.min_m ? Json(*r.min_m) : Json(nullptr);
  return j;
}

Json to_json(const constants::PVBound& b) {
  Json c{{"value", to_json(b.c.value)},
         {"branch_a", real(b.c.branch_a)},
         {"branch_b", to_json(b.c.branch_b)},
         {"selected", std::string(1, b.c.selected)}};
  return Json{{"parity", characters::parity_name(b.parity)},
              {"q", b.q.describe()},
              {"leading", b.leading},
              {"constant", b.constant},
              {"j", b.j},
              {"n", b.n},
              {"c", c},
              {"params",
               {{"B", b.params.B},
                {"E", b.params.E},
                {"gamma", b.params.gamma},
                {"eps", b.params.eps},
                {"m", b.params.m},
                {"h", b.params.h},
                {"divisor_mode", b.params.divisor_mode.describe()}}},
              {"constraints", to_json(b.constraints)},
              {"notes", b.notes}};
}

std::string render_checks(const std::vector<verify::SuiteResult>& suites, Format f) {
  std::ostringstream os;
  if (f == Format::csv) os << kChecksCsvHeader << '\n';
  for (const auto& s : suites) {
    std::size_t fails = 0;
    for (const auto& r : s.reports) {
      fails += !r.pass;
      switch (f) {
        case Format::json: {
          Json j{{"suite", s.suite}};
          j.update(to_json(r));
          os << j.dump() << '\n';
          break;
        }
        case Format::csv:
          os << csv_field(s.suite) << ',' << csv_field(r.check_id) << ',' << csv_field(r.instance.dump()) << ','
             << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.margin) << ',' << (r.pass ? "true" : "false") << ','
             << csv_field(r.notes) << '\n';
          break;
        case Format::pretty:
          os << (r.pass ? "PASS " : "FAIL ") << s.suite << ' ' << r.check_id << ' ' << r.instance.dump()
             << "  lhs=" << short_num(r.lhs) << " rhs=" << short_num(r.rhs) << " margin=" << short_num(r.margin);
          if (!r.notes.empty()) os << "  (" << r.notes << ')';
          os << '\n';
          break;
      }
    }
    if (!s.summary.is_null()) {
      if (f == Format::json) os << Json{{"suite", s.suite}, {"summary", s.summary}}.dump() << '\n';
      if (f == Format::pretty) {
        Json brief = s.summary;
        brief.erase("by_q");
        os << s.suite << " summary " << brief.dump(2) << '\n';
      }
    }
    if (f == Format::pretty)
      os << s.suite << ": " << s.reports.size() - fails << '/' << s.reports.size() << " passed\n";
  }
  return os.str();
}

std::string render_failures(const std::vector<verify::SuiteResult>& suites) {
  std::ostringstream os;
  for (const auto& s : suites)
    for (const auto& r : s.reports)
      if (!r.pass) {
        Json j{{"suite", s.suite}};
        j.update(to_json(r));
        os << j.dump() << '\n';
      }
  return os.str();
}

std::string render_table_rows(const std::vector<optimizer::TableRow>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::csv) os << kTableCsvHeader << '\n';
  for (const auto& r : rows) {
    switch (f) {
      case Format::json: os << to_json(r).dump() << '\n'; break;
      case Format::csv:
        os << r.table << ',' << num(r.eps) << ',' << num(r.loglog_q0[0]) << ',' << num(r.loglog_q0[1]) << ','
           << num(r.gamma[0]) << ',' << num(r.gamma[1]) << ',' << num(r.E[0]) << ',' << num(r.E[1]) << ','
           << num(r.m) << ',' << num(r.h[0]) << ',' << num(r.h[1]) << ',' << num(r.h_ceil[0]) << ','
           << num(r.h_ceil[1]) << ',' << csv_field(r.divisor_mode.describe()) << ',' << passed(r.constraints) << '/'
           << r.constraints.size() << ',' << csv_field(r.binding) << ',' << num(r.binding_loglog_q) << '\n';
        break;
      case Format::pretty: {
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "%s eps=%-10.6g loglog q0=%.2f/%.2f  h1=%-6.0f h2=%-6.0f gamma=%.3g/%.3g E=%.3g/%.3g m=%.2f  "
                      "binding: %s (%.3f)\n",
                      r.table.c_str(), r.eps, r.loglog_q0[0], r.loglog_q0[1], r.h_ceil[0], r.h_ceil[1], r.gamma[0],
                      r.gamma[1], r.E[0], r.E[1], r.m, r.binding.c_str(), r.binding_loglog_q);
        os << buf;
        break;
      }
    }
  }
  return os.str();
}

std::string render_burgess(const std::vector<burgess::BurgessRow>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::csv) os << kBurgessCsvHeader << '\n';
  for (const auto& r : rows) {
    switch (f) {
      case Format::json: os << to_json(r).dump() << '\n'; break;
      case Format::csv:
        os << num(r.entry.m) << ',' << num(r.entry.log10_q0) << ',' << num(r.entry.h) << ','
           << (r.search.feasible ? "true" : "false") << ',' << num(r.search.g) << ',' << num(r.search.v3) << ','
           << num(r.slack) << ',' << (r.search.grid_fallback ? "true" : "false") << ','
           << (r.min_m ? num(*r.min_m) : std::string("none")) << ',' << passed(r.search.hypotheses) << '/'
           << r.search.hypotheses.size() << ',' << csv_field(r.search.reason) << '\n';
        break;
      case Format::pretty: {
        char buf[320];
        std::snprintf(buf, sizeof buf, "m=%-5.2f log10 q0=%-4.0f h=%-4.0f %s g=%-10.5g v3=%-9.5g min m=%s %s\n",
                      r.entry.m, r.entry.log10_q0, r.entry.h, r.search.feasible ? "feasible  " : "infeasible",
                      r.search.g, r.search.v3, r.min_m ? short_num(*r.min_m).c_str() : "none",
                      r.search.reason.c_str());
        os << buf;
        break;
      }
    }
  }
  return os.str();
}

std::string render_records(const std::vector<Json>& records, Format f) {
  std::ostringstream os;
  if (f == Format::json) {
    for (const auto& r : records) os << r.dump() << '\n';
    return os.str();
  }
  if (f == Format::pretty) {
    for (const auto& r : records) os << r.dump(2) << '\n';
    return os.str();
  }
  if (records.empty()) return {};
  std::vector<std::string> keys;
  for (auto it = records.front().begin(); it != records.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_field(keys[i]);
  os << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "");
      if (r.contains(keys[i])) os << csv_field(scalar_text(r.at(keys[i])));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pvc::report
