#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <variant>

#include "burgess/burgess.hpp"
#include "constants/constants.hpp"
#include "numerics/error.hpp"
#include "optimizer/optimizer.hpp"
#include "pvconst/pvconst.h"
#include "report/report.hpp"
#include "verify/verify.hpp"

using namespace pvc;
using report::Json;

struct pvc_context {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t pv_qmax = 5000;
};

namespace {

struct Section {
  std::vector<burgess::BurgessRow> burgess;
  std::vector<optimizer::TableRow> rows;
};

struct Records {
  std::vector<Json> items;
  bool passed = true;
};

}  // namespace

struct pvc_result {
  std::variant<std::vector<verify::SuiteResult>, std::vector<Section>, Records> body;
};

namespace {

thread_local std::string g_last_error;

pvc_status fail(pvc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
pvc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const pvc::Error& e) {
    switch (e.kind()) {
      case ErrorKind::usage: return fail(PVC_ERR_USAGE, e.what());
      case ErrorKind::domain: return fail(PVC_ERR_DOMAIN, e.what());
      case ErrorKind::resource: return fail(PVC_ERR_RESOURCE, e.what());
    }
    return fail(PVC_ERR_INTERNAL, e.what());
  } catch (const Json::exception& e) {
    return fail(PVC_ERR_USAGE, std::string("parameters: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(PVC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(PVC_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pvc_status emit(pvc_result** out, pvc_result value) {
  *out = new pvc_result(std::move(value));
  return PVC_OK;
}

constants::Parity to_parity(pvc_parity p) {
  if (p == PVC_EVEN) return constants::Parity::even;
  if (p == PVC_ODD) return constants::Parity::odd;
  throw_usage("parity must be PVC_EVEN or PVC_ODD");
}

// ---- eval parameters ----

double need(const Json& p, const char* key) {
  if (!p.contains(key)) throw_usage(std::string("missing parameter '") + key + "'");
  return p.at(key).get<double>();
}

double opt(const Json& p, const char* key, double dflt) { return p.contains(key) ? p.at(key).get<double>() : dflt; }

numerics::QScale q_of(const Json& p) {
  if (p.contains("q")) return numerics::QScale::exact(need(p, "q"));
  if (p.contains("log10_q")) return numerics::QScale::from_log10(need(p, "log10_q"));
  if (p.contains("loglog_q")) return numerics::QScale::from_loglog(need(p, "loglog_q"));
  throw_usage("one of 'q', 'log10_q', 'loglog_q' is required");
}

numerics::LogReal big_of(const Json& p, const char* name, const char* ln_name) {
  if (p.contains(ln_name)) return numerics::LogReal::from_ln(need(p, ln_name));
  return numerics::LogReal::from_real(need(p, name));
}

constants::DivisorMode mode_of(const Json& p) {
  const double U = opt(p, "divisor_U", 0);
  if (U == 0) return constants::DivisorMode::robin();
  if (!(U >= 1) || U != std::floor(U)) throw_usage("divisor_U must be a positive integer");
  return constants::DivisorMode::fixed(static_cast<std::uint64_t>(U));
}

constants::Parity parity_of(const Json& p) {
  const std::string s = p.contains("parity") ? p.at("parity").get<std::string>() : "even";
  if (s == "even") return constants::Parity::even;
  if (s == "odd") return constants::Parity::odd;
  throw_usage("parity must be 'even' or 'odd'");
}

constants::BoundParams bound_params_of(const Json& p) {
  constants::BoundParams b;
  b.B = opt(p, "B", b.B);
  b.E = opt(p, "E", b.E);
  b.gamma = opt(p, "gamma", b.gamma);
  b.eps = opt(p, "eps", b.eps);
  b.m = opt(p, "m", b.m);
  b.h = opt(p, "h", b.h);
  b.g = opt(p, "g", b.g);
  b.divisor_mode = mode_of(p);
  constants::validate(b);
  return b;
}

Json eval_expr(const std::string& expr, const Json& p) {
  Json out{{"expr", expr}};
  if (expr == "z") {
    out["value"] = report::to_json(constants::z_const());
  } else if (expr == "a") {
    const auto a = constants::coeffs_a(opt(p, "B", 1));
    for (int i = 0; i < 6; ++i) out["a" + std::to_string(i + 1)] = a[i];
  } else if (expr == "b") {
    const auto b = constants::b_funcs(opt(p, "B", 1), opt(p, "E", 4), big_of(p, "R", "ln_R"), q_of(p));
    out["b1"] = b.b1;
    out["b2"] = b.b2;
    out["b3"] = b.b3;
  } else if (expr == "c1c2") {
    const auto c = constants::c1_c2(opt(p, "B", 1), opt(p, "E", 4), big_of(p, "R", "ln_R"), q_of(p));
    out["c1"] = c.c1;
    out["c2"] = c.c2;
  } else if (expr == "delta") {
    out["value"] = constants::delta(q_of(p), mode_of(p));
  } else if (expr == "n") {
    out["value"] = constants::n_eps(q_of(p), need(p, "eps"));
  } else if (expr == "c") {
    const auto c = constants::c_big(bound_params_of(p), q_of(p));
    out["value"] = report::to_json(c.value);
    out["branch_a"] = c.branch_a;
    out["branch_b"] = report::to_json(c.branch_b);
    out["selected"] = std::string(1, c.selected);
  } else if (expr == "pv_bound") {
    out["value"] = report::to_json(constants::pv_bound(q_of(p), parity_of(p), bound_params_of(p)));
  } else if (expr == "tb_bound") {
    const double k = opt(p, "k", 1);
    if (!(k >= 1) || k != std::floor(k)) throw_usage("k must be a positive integer");
    out["value"] = report::to_json(constants::tb_bound(q_of(p), static_cast<std::uint64_t>(k), big_of(p, "N", "ln_N"),
                                                       need(p, "m"), need(p, "h"), mode_of(p)));
  } else if (expr == "constraints") {
    out["value"] = report::to_json(constants::constraint_set(q_of(p), opt(p, "gamma", 4), opt(p, "eps", 0.1),
                                                             opt(p, "h", 300), opt(p, "m", 0.53), mode_of(p)));
  } else if (expr == "fs_crossover") {
    out["log_q"] = report::to_json(optimizer::fs_crossover(need(p, "eps"), need(p, "h"), parity_of(p)));
  } else if (expr == "burgess_v") {
    const auto v = burgess::burgess_v(need(p, "m"), q_of(p), need(p, "g"), need(p, "h"));
    out["v1"] = v.v1;
    out["v2"] = v.v2;
    out["v3"] = v.v3;
  } else if (expr == "leverage") {
    out["value"] = burgess::leverage(need(p, "m"), q_of(p), need(p, "g"), need(p, "h"));
  } else {
    throw_usage("unknown expression '" + expr +
                "' (z, a, b, c1c2, delta, n, c, pv_bound, tb_bound, constraints, fs_crossover, burgess_v, leverage)");
  }
  return out;
}

}  // namespace

extern "C" {

const char* pvc_last_error(void) { return g_last_error.c_str(); }

const char* pvc_status_name(pvc_status s) {
  switch (s) {
    case PVC_OK: return "ok";
    case PVC_ERR_USAGE: return "usage";
    case PVC_ERR_DOMAIN: return "domain";
    case PVC_ERR_RESOURCE: return "resource";
    case PVC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

pvc_status pvc_context_create(pvc_context** out) {
  if (!out) return fail(PVC_ERR_USAGE, "null output pointer");
  return guarded([&] {
    *out = new pvc_context();
    return PVC_OK;
  });
}

void pvc_context_destroy(pvc_context* ctx) { delete ctx; }

pvc_status pvc_context_set_seed(pvc_context* ctx, uint64_t seed) {
  if (!ctx) return fail(PVC_ERR_USAGE, "null context");
  ctx->seed = seed;
  return PVC_OK;
}

pvc_status pvc_context_set_threads(pvc_context* ctx, unsigned threads) {
  if (!ctx) return fail(PVC_ERR_USAGE, "null context");
  ctx->threads = threads;
  return PVC_OK;
}

pvc_status pvc_context_set_pv_qmax(pvc_context* ctx, uint64_t q_max) {
  if (!ctx) return fail(PVC_ERR_USAGE, "null context");
  if (q_max < 3 || q_max > 100000) return fail(PVC_ERR_USAGE, "pv q_max must lie in [3, 100000]");
  ctx->pv_qmax = q_max;
  return PVC_OK;
}

pvc_status pvc_tables(pvc_context* ctx, const char* which, pvc_result** out) {
  if (!ctx || !which || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    const std::string w = which;
    std::vector<std::string> names;
    if (w == "all") names = {"table1", "table2", "table3", "table4"};
    else if (w == "table1" || w == "table2" || w == "table3" || w == "table4") names = {w};
    else throw_usage("unknown table '" + w + "' (table1, table2, table3, table4, all)");
    std::vector<Section> sections;
    for (const auto& n : names) {
      Section s;
      if (n == "table1") s.burgess = burgess::table1(ctx->threads);
      else s.rows = optimizer::reproduce_table(n, ctx->threads);
      sections.push_back(std::move(s));
    }
    return emit(out, pvc_result{std::move(sections)});
  });
}

pvc_status pvc_verify(pvc_context* ctx, const char* suite, pvc_result** out) {
  if (!ctx || !suite || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    const std::string s = suite;
    std::vector<verify::SuiteResult> res;
    auto one = [&](const std::string& name) {
      if (name == "pv") {
        auto pv = verify::empirical_pv(3, ctx->pv_qmax, ctx->threads);
        res.push_back({"pv", std::move(pv.reports), std::move(pv.summary)});
      } else {
        auto r = verify::run_suite(name, ctx->seed, ctx->threads);
        res.push_back(std::move(r.front()));
      }
    };
    if (s == "all") {
      for (const auto& n : verify::suite_names()) one(n);
    } else {
      one(s);
    }
    return emit(out, pvc_result{std::move(res)});
  });
}

pvc_status pvc_burgess_search(pvc_context* ctx, double log10_q, double h, double m, pvc_result** out) {
  if (!ctx || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    if (!(h > 0)) throw_usage("h must be positive");
    const auto q = numerics::QScale::from_log10(log10_q);
    Records r;
    Json j{{"log10_q", log10_q}, {"h", h}};
    if (m > 0) {
      const auto s = burgess::search_g(m, q, h);
      j["m"] = m;
      j["search"] = report::to_json(s);
      r.passed = s.feasible;
    } else {
      const auto mm = burgess::minimal_m(q, h);
      j["min_m"] = mm ? Json(*mm) : Json(nullptr);
      if (mm) j["search"] = report::to_json(burgess::search_g(*mm, q, h));
      r.passed = mm.has_value();
    }
    r.items.push_back(std::move(j));
    return emit(out, pvc_result{std::move(r)});
  });
}

pvc_status pvc_crossover(pvc_context* ctx, double eps, pvc_parity parity, double h, pvc_result** out) {
  if (!ctx || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto par = to_parity(parity);
    if (!(eps > 0 && eps < 0.125)) throw_usage("eps must lie in (0, 1/8)");
    Json j{{"eps", eps}, {"parity", characters::parity_name(par)}};
    if (!(h > 0)) {
      // smallest admissible log log q for eps, by bisection on feasibility
      auto feasible = [&](double ll) {
        try {
          optimizer::optimize_h(eps, numerics::QScale::from_loglog(ll));
          return true;
        } catch (const pvc::Error&) {
          return false;
        }
      };
      double lo = 1, hi = 2;
      while (!feasible(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1e7) throw_domain("no admissible q found for this eps");
      }
      while (hi - lo > 1e-4 * hi) ((feasible(0.5 * (lo + hi))) ? hi : lo) = 0.5 * (lo + hi);
      const auto row = optimizer::optimize_h(eps, numerics::QScale::from_loglog(hi));
      h = row.h[par == constants::Parity::even ? 0 : 1];
      j["h_source"] = Json{{"loglog_q", hi}, {"optimized", true}};
    }
    j["h"] = h;
    const auto t = optimizer::fs_crossover(eps, h, par);
    j["log_q"] = report::to_json(t);
    j["loglog_q"] = std::log(t.to_real());
    Records r;
    r.items.push_back(std::move(j));
    return emit(out, pvc_result{std::move(r)});
  });
}

pvc_status pvc_eval(pvc_context* ctx, const char* expr, const char* params_json, pvc_result** out) {
  if (!ctx || !expr || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    const Json p = params_json && *params_json ? Json::parse(params_json) : Json::object();
    if (!p.is_object()) throw_usage("parameters must be a JSON object");
    Records r;
    r.items.push_back(eval_expr(expr, p));
    return emit(out, pvc_result{std::move(r)});
  });
}

pvc_status pvc_result_passed(const pvc_result* res, int* out) {
  if (!res || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    bool ok = true;
    if (auto* s = std::get_if<std::vector<verify::SuiteResult>>(&res->body)) {
      for (const auto& suite : *s)
        for (const auto& r : suite.reports) ok = ok && r.pass;
    } else if (auto* t = std::get_if<std::vector<Section>>(&res->body)) {
      for (const auto& sec : *t) {
        for (const auto& b : sec.burgess) ok = ok && b.search.feasible;
        for (const auto& row : sec.rows)
          for (const auto& c : row.constraints) ok = ok && c.satisfied;
      }
    } else {
      ok = std::get<Records>(res->body).passed;
    }
    *out = ok ? 1 : 0;
    return PVC_OK;
  });
}

pvc_status pvc_result_render(const pvc_result* res, pvc_format format, char** out) {
  if (!res || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    report::Format f;
    switch (format) {
      case PVC_FORMAT_JSON: f = report::Format::json; break;
      case PVC_FORMAT_CSV: f = report::Format::csv; break;
      case PVC_FORMAT_PRETTY: f = report::Format::pretty; break;
      default: throw_usage("unknown format");
    }
    std::string text;
    if (auto* s = std::get_if<std::vector<verify::SuiteResult>>(&res->body)) {
      text = report::render_checks(*s, f);
    } else if (auto* t = std::get_if<std::vector<Section>>(&res->body)) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        if (i && f != report::Format::json) text += '\n';
        const auto& sec = (*t)[i];
        if (!sec.burgess.empty()) text += report::render_burgess(sec.burgess, f);
        if (!sec.rows.empty()) text += report::render_table_rows(sec.rows, f);
      }
    } else {
      text = report::render_records(std::get<Records>(res->body).items, f);
    }
    *out = dup_string(text);
    return PVC_OK;
  });
}

pvc_status pvc_result_render_failures(const pvc_result* res, char** out) {
  if (!res || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string text;
    if (auto* s = std::get_if<std::vector<verify::SuiteResult>>(&res->body)) {
      text = report::render_failures(*s);
    } else if (auto* t = std::get_if<std::vector<Section>>(&res->body)) {
      for (const auto& sec : *t)
        for (const auto& b : sec.burgess)
          if (!b.search.feasible) text += report::to_json(b).dump() + '\n';
    } else {
      const auto& r = std::get<Records>(res->body);
      if (!r.passed)
        for (const auto& j : r.items) text += j.dump() + '\n';
    }
    *out = dup_string(text);
    return PVC_OK;
  });
}

void pvc_result_destroy(pvc_result* res) { delete res; }

void pvc_string_free(char* s) { std::free(s); }

void pvc_bound_params_default(pvc_bound_params* p) {
  if (!p) return;
  const constants::BoundParams d;
  *p = {d.B, d.E, d.gamma, d.eps, d.m, d.h, 0};
}

pvc_status pvc_z_const(double* out) {
  if (!out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = constants::z_const().to_real();
    return PVC_OK;
  });
}

pvc_status pvc_pv_bound(double loglog_q, pvc_parity parity, const pvc_bound_params* p, pvc_pv_bound_out* out) {
  if (!p || !out) return fail(PVC_ERR_USAGE, "null argument");
  return guarded([&] {
    constants::BoundParams b;
    b.B = p->B;
    b.E = p->E;
    b.gamma = p->gamma;
    b.eps = p->eps;
    b.m = p->m;
    b.h = p->h;
    b.divisor_mode = p->divisor_U == 0 ? constants::DivisorMode::robin() : constants::DivisorMode::fixed(p->divisor_U);
    const auto r = constants::pv_bound(numerics::QScale::from_loglog(loglog_q), to_parity(parity), b);
    bool ok = true;
    for (const auto& c : r.constraints) ok = ok && c.satisfied;
    *out = {r.leading, r.constant, r.j, r.n, r.c.value.to_real(), r.c.selected, ok ? 1 : 0};
    return PVC_OK;
  });
}

}  // extern "C"
