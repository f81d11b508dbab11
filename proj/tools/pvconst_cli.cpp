// Command-line front end over the C interface.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pvconst/pvconst.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "json";
  std::string output;
  double seed = 1;
  double pv_qmax = 5000;
  std::string which = "all";
  std::string suite = "all";
  double log10_q = 0, h = 0, m = 0;
  double eps = 0;
  std::string parity;
  std::string expr, params;
};

bool integral(double x) { return x >= 0 && std::floor(x) == x && x < 1.8e19; }

std::string read_params(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg == "-" ? "/dev/stdin" : arg);
  if (!in) throw std::runtime_error("cannot read parameter file '" + arg + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int status_exit(pvc_status s) {
  std::cerr << "error (" << pvc_status_name(s) << "): " << pvc_last_error() << '\n';
  return s == PVC_ERR_USAGE ? kExitUsage : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Polya-Vinogradov constants: tables, checks, searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output,-o", o.output, "write the report here instead of stdout");
  app.add_option("--seed", o.seed, "seed of the randomized suites");

  auto* tables = app.add_subcommand("tables", "reproduce the parameter tables");
  tables->add_option("--which", o.which, "table1, table2, table3, table4 or all")
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "all"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "dis, primes, li2, congruence, moment4, bilinear, t1c1, pv or all")
      ->check(CLI::IsMember({"dis", "primes", "li2", "congruence", "moment4", "bilinear", "t1c1", "pv", "all"}));
  verify->add_option("--pv-qmax", o.pv_qmax, "upper end of the partial-sum sweep");

  auto* burgess = app.add_subcommand("burgess-search", "search g for the Burgess-type induction");
  burgess->set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  burgess->add_option("--loglog10-q", o.log10_q, "log10 q")->required();
  burgess->add_option("--h", o.h, "h")->required();
  burgess->add_option("--m", o.m, "test this m; without it the minimal m is searched");

  auto* cross = app.add_subcommand("crossover", "where the bound beats the F-S constants");
  cross->set_help_flag("--help", "print this help and exit");
  cross->add_option("--eps", o.eps, "eps in (0, 1/8)")->required();
  cross->add_option("--parity", o.parity, "even or odd")->required()->check(CLI::IsMember({"even", "odd"}));
  cross->add_option("--h", o.h, "constant h1/h2; optimized when omitted");

  auto* eval = app.add_subcommand("eval", "evaluate a named constant");
  eval->add_option("--expr", o.expr, "z, a, b, c1c2, delta, n, c, pv_bound, tb_bound, constraints, ...")->required();
  eval->add_option("--params", o.params, "JSON parameter file (or inline JSON object)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!integral(o.seed) || !integral(o.pv_qmax)) {
    std::cerr << "error (usage): --seed and --pv-qmax take non-negative integers\n";
    return kExitUsage;
  }

  pvc_context* ctx = nullptr;
  if (pvc_status s = pvc_context_create(&ctx); s != PVC_OK) return status_exit(s);
  struct Guard {
    pvc_context* c;
    pvc_result* r = nullptr;
    ~Guard() {
      pvc_result_destroy(r);
      pvc_context_destroy(c);
    }
  } guard{ctx};

  pvc_status s = pvc_context_set_seed(ctx, static_cast<uint64_t>(o.seed));
  if (s == PVC_OK && verify->parsed()) s = pvc_context_set_pv_qmax(ctx, static_cast<uint64_t>(o.pv_qmax));
  if (s != PVC_OK) return status_exit(s);

  if (tables->parsed()) {
    s = pvc_tables(ctx, o.which.c_str(), &guard.r);
  } else if (verify->parsed()) {
    s = pvc_verify(ctx, o.suite.c_str(), &guard.r);
  } else if (burgess->parsed()) {
    s = pvc_burgess_search(ctx, o.log10_q, o.h, o.m, &guard.r);
  } else if (cross->parsed()) {
    s = pvc_crossover(ctx, o.eps, o.parity == "even" ? PVC_EVEN : PVC_ODD, o.h, &guard.r);
  } else if (eval->parsed()) {
    std::string params;
    try {
      params = read_params(o.params);
    } catch (const std::exception& e) {
      std::cerr << "error (usage): " << e.what() << '\n';
      return kExitUsage;
    }
    s = pvc_eval(ctx, o.expr.c_str(), params.c_str(), &guard.r);
  }
  if (s != PVC_OK) return status_exit(s);

  const pvc_format fmt = o.format == "csv" ? PVC_FORMAT_CSV : o.format == "pretty" ? PVC_FORMAT_PRETTY : PVC_FORMAT_JSON;
  char* text = nullptr;
  if ((s = pvc_result_render(guard.r, fmt, &text)) != PVC_OK) return status_exit(s);
  if (o.output.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(o.output, std::ios::binary);
    out << text;
    if (!out) {
      pvc_string_free(text);
      std::cerr << "error (resource): cannot write '" << o.output << "'\n";
      return kExitFail;
    }
  }
  pvc_string_free(text);

  int passed = 0;
  if ((s = pvc_result_passed(guard.r, &passed)) != PVC_OK) return status_exit(s);
  if (!passed) {
    char* failures = nullptr;
    if (pvc_result_render_failures(guard.r, &failures) == PVC_OK) {
      std::fputs(failures, stderr);
      pvc_string_free(failures);
    }
    return kExitFail;
  }
  return kExitPass;
}
