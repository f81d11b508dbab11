#include "optimizer/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "burgess/burgess.hpp"
#include "numerics/error.hpp"
#include "numerics/parallel.hpp"

namespace pvc::optimizer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

bool all_hold(const std::vector<Constraint>& cs) {
  for (const auto& c : cs)
    if (!c.satisfied) return false;
  return true;
}

// Best (smallest) Table 1 m usable at q and gamma.
const burgess::TableOneEntry* pick_m(const QScale& q, double gamma, double eps, const DivisorMode& mode) {
  const double log10_q = (q.log_q() / LogReal::from_real(std::numbers::ln10)).to_real();
  const burgess::TableOneEntry* best = nullptr;
  for (const auto& row : burgess::table1_entries()) {
    if (row.log10_q0 > log10_q) continue;
    if (!all_hold(constants::constraint_set(q, gamma, eps, row.h, row.m, mode))) continue;
    if (!best || row.m < best->m) best = &row;
  }
  return best;
}

struct Eval {
  double h = kInf;
  char branch = '?';
};

Eval evaluate(double eps, const QScale& q, const DivisorMode& mode, double gamma, double E, Parity parity) {
  const auto* row = pick_m(q, gamma, eps, mode);
  if (!row) return {};
  constants::BoundParams p;
  p.E = E;
  p.gamma = gamma;
  p.eps = eps;
  p.m = row->m;
  p.h = row->h;
  p.divisor_mode = mode;
  try {
    const auto b = constants::pv_bound(q, parity, p);
    return {b.constant, b.c.selected};
  } catch (const pvc::Error&) {
    return {};
  }
}

template <class F>
double golden(F f, double lo, double hi, int iters = 60) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

struct Optimum {
  double gamma = 0, E = 0, h = kInf;
  char branch = '?';
};

Optimum minimize(double eps, const QScale& q, const DivisorMode& mode, const SearchGrid& g, Parity parity) {
  Optimum best;
  const double lE_lo = std::log(g.E_lo), lE_hi = std::log(g.E_hi);
  const double dE = (lE_hi - lE_lo) / (g.E_points - 1);
  const int n_gamma = static_cast<int>(std::floor((g.gamma_hi - g.gamma_lo) / g.gamma_step + 1e-9)) + 1;
  for (int i = 0; i < n_gamma; ++i) {
    const double gamma = g.gamma_lo + i * g.gamma_step;
    for (int j = 0; j < g.E_points; ++j) {
      const double E = std::exp(lE_lo + j * dE);
      const Eval e = evaluate(eps, q, mode, gamma, E, parity);
      // h is flat in gamma once the c2 term is negligible; ties go to the point nearest gamma = 4
      const bool tie = std::isfinite(best.h) && std::fabs(e.h - best.h) <= 1e-12 * best.h;
      if ((e.h < best.h && !tie) || (tie && std::fabs(gamma - 4) < std::fabs(best.gamma - 4)))
        best = {gamma, E, e.h, e.branch};
    }
  }
  if (!std::isfinite(best.h)) return best;
  // alternate golden-section passes inside the neighbouring grid cells
  double gamma = best.gamma, lE = std::log(best.E);
  const double glo = std::max(g.gamma_lo, gamma - g.gamma_step), ghi = std::min(g.gamma_hi, gamma + g.gamma_step);
  const double elo = std::max(lE_lo, lE - dE), ehi = std::min(lE_hi, lE + dE);
  for (int round = 0; round < 4; ++round) {
    gamma = golden([&](double x) { return evaluate(eps, q, mode, x, std::exp(lE), parity).h; }, glo, ghi);
    lE = golden([&](double x) { return evaluate(eps, q, mode, gamma, std::exp(x), parity).h; }, elo, ehi);
  }
  const Eval e = evaluate(eps, q, mode, gamma, std::exp(lE), parity);
  if (e.h < best.h * (1 - 1e-12)) best = {gamma, std::exp(lE), e.h, e.branch};
  return best;
}

// Smallest log log q in [lo, hi] where pred holds, assuming monotone.
template <class P>
double bisect_loglog(P pred, double lo, double hi) {
  for (int i = 0; i < 60 && hi - lo > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

void attach_binding(TableRow& row, const QScale& q) {
  // for each constraint, the smallest log log q at which it holds with the row's parameters
  const double LL = q.loglog_q();
  const auto names = constants::constraint_set(q, row.gamma[0], row.eps, row.h_tb, row.m, row.divisor_mode);
  double worst = -kInf;
  for (std::size_t k = 0; k < names.size(); ++k) {
    auto holds = [&](double ll) {
      return constants::constraint_set(QScale::from_loglog(ll), row.gamma[0], row.eps, row.h_tb, row.m,
                                       row.divisor_mode)[k]
          .satisfied;
    };
    if (!holds(LL)) continue;
    const double t = holds(0.5) ? 0.5 : bisect_loglog(holds, 0.5, LL);
    if (t > worst) {
      worst = t;
      row.binding = names[k].name;
    }
  }
  row.binding_loglog_q = worst;
}

}  // namespace

TableRow optimize_h(double eps, const QScale& q, const DivisorMode& mode, const SearchGrid& grid) {
  if (!(eps > 0 && eps < 0.125)) throw_usage("optimize_h: eps must lie in (0, 1/8)");
  TableRow row;
  row.eps = eps;
  row.divisor_mode = mode;
  row.loglog_q0 = {q.loglog_q(), q.loglog_q()};
  const Parity parities[2] = {Parity::even, Parity::odd};
  for (int p = 0; p < 2; ++p) {
    const Optimum o = minimize(eps, q, mode, grid, parities[p]);
    if (!std::isfinite(o.h)) {
      std::string msg = "optimize_h: no admissible (gamma, E) at " + q.describe() + ";";
      const auto cs = constants::constraint_set(q, 4.0, eps, 300.0, 0.53, mode);
      for (const auto& c : cs)
        if (!c.satisfied) msg += " fails '" + c.name + "' at gamma = 4, h = 300;";
      throw_domain(msg);
    }
    row.gamma[p] = o.gamma;
    row.E[p] = o.E;
    row.h[p] = o.h;
    row.h_ceil[p] = std::ceil(o.h);
    row.c_branch[p] = o.branch;
  }
  const auto* m = pick_m(q, row.gamma[0], eps, mode);
  row.m = m->m;
  row.h_tb = m->h;
  row.constraints = constants::constraint_set(q, row.gamma[0], eps, row.h_tb, row.m, mode);
  attach_binding(row, q);
  return row;
}

LogReal fs_crossover(double eps, double h_const, Parity parity) {
  const auto fs = constants::comparison_bounds(parity).fs;
  const double leading = parity == Parity::even ? 2.0 / (kPi * kPi) * (0.375 + eps) : (0.375 + eps) / kPi;
  const double gap = fs.lead - leading;
  if (!(gap > 0)) throw_domain("fs_crossover: leading coefficient not below F-S; no crossover");
  return LogReal::from_real((h_const - fs.constant) / gap);
}

std::vector<std::pair<double, double>> table_rows(const std::string& which) {
  if (which == "table2") return {{0.1, 22}, {0.01, 209}, {0.001, 2081}, {0.0001, 20800}};
  if (which == "table3" || which == "table4")
    return {{0.125 * (1 - 1e-1), 19.7}, {0.125 * (1 - 1e-2), 17.99}, {0.125 * (1 - 1e-3), 17.89}, {0.125 * (1 - 1e-4), 17.83}};
  throw_usage("unknown table '" + which + "'");
}

std::vector<TableRow> reproduce_table(const std::string& which, unsigned threads) {
  if (threads == 0) threads = default_threads();
  const auto rows = table_rows(which);
  std::vector<TableRow> out(rows.size());
  if (which != "table4") {
    parallel_for(rows.size(), threads, [&](std::size_t i) {
      out[i] = optimize_h(rows[i].first, QScale::from_loglog(rows[i].second));
      out[i].table = which;
    });
    return out;
  }
  // d(q) = 2: per parity, the smallest log log q where the constraints hold and the bound beats F-S
  const DivisorMode mode = DivisorMode::fixed(2);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const double eps = rows[i].first;
    const Parity parities[2] = {Parity::even, Parity::odd};
    TableRow row;
    for (int p = 0; p < 2; ++p) {
      auto ok = [&](double ll) {
        const QScale q = QScale::from_loglog(ll);
        const Optimum o = minimize(eps, q, mode, SearchGrid{}, parities[p]);
        if (!std::isfinite(o.h)) return false;
        return q.log_q() >= fs_crossover(eps, o.h, parities[p]);
      };
      const double hi = rows[i].second + 10;
      if (!ok(hi)) throw_domain("table4: no admissible log log q below " + std::to_string(hi));
      const double ll = bisect_loglog(ok, 3.0, hi);
      TableRow r = optimize_h(eps, QScale::from_loglog(ll), mode);
      if (p == 0) {
        row = r;
      } else {
        row.gamma[1] = r.gamma[1];
        row.E[1] = r.E[1];
        row.h[1] = r.h[1];
        row.h_ceil[1] = r.h_ceil[1];
        row.c_branch[1] = r.c_branch[1];
      }
      row.loglog_q0[p] = ll;
    }
    row.table = which;
    row.binding = "bound below F-S";
    row.binding_loglog_q = row.loglog_q0[0];
    out[i] = row;
  });
  return out;
}

}  // namespace pvc::optimizer
