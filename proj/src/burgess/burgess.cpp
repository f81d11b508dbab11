#include "burgess/burgess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "numerics/error.hpp"
#include "numerics/parallel.hpp"

namespace pvc::burgess {

namespace {

constexpr double kGMax = 1e6;

struct Logs {
  double L;   // log q
  double LL;  // log log q
};

Logs logs_of(const QScale& q) { return {q.log_q().to_real(), q.loglog_q()}; }

// log of m^2 q^{3/8} log q log log q
double ln_base_length(double m, const Logs& s) { return 2.0 * std::log(m) + 0.375 * s.L + s.LL + std::log(s.LL); }

}  // namespace

double leverage(double m, const QScale& q, double g, double h) {
  const Logs s = logs_of(q);
  return 1.0 - 1.0 / h - std::exp(std::log(g) + 0.25 * s.L - ln_base_length(m, s));
}

VValues burgess_v(double m, const QScale& q, double g, double h) {
  if (!(g >= 2)) throw_domain("burgess_v: g >= 2 required");
  if (!(m > 0 && h > 0)) throw_domain("burgess_v: m and h must be positive");
  const Logs s = logs_of(q);
  if (!(s.LL > 1)) throw_domain("burgess_v: log log q > 1 required");
  const double v1 = 2.0 * (1.0 + 2.0 / (std::numbers::e * s.L)) / m;
  const double ln_arg = std::log(1.85) + 2.0 * std::log(v1) + 0.375 * s.L + s.LL - std::log(g) - std::log(s.LL);
  const double v2 = std::pow(v1, 4) / g + s.LL * s.LL * ln_arg / (s.L * s.L);
  if (!(v2 > 0)) throw_domain("burgess_v: v2 is not positive");
  const double den = leverage(m, q, g, h);
  if (!(den > 0)) throw_domain("burgess_v: induction leverage lost (nonpositive denominator in v3)");
  const double v3 = 2.0 * g / den * std::pow(17.0 * v2 / (4.0 * g * g * g), 0.25) *
                        (std::exp(constants::kEulerGamma) + 2.51 / (s.LL * s.LL)) +
                    2.0 / std::sqrt(g);
  return {v1, v2, v3};
}

std::vector<Constraint> hypotheses(double m, const QScale& q, double g, double h, std::uint64_t k) {
  const Logs s = logs_of(q);
  const double lk = std::log(static_cast<double>(k));
  const double base = ln_base_length(m, s);
  return {
      {"q > (29g/(m^2 log q log log q))^8",
       s.L > 8.0 * (std::log(29.0 * g) - 2.0 * std::log(m) - s.LL - std::log(s.LL))},
      {"q > (12/g)^4", s.L > 4.0 * std::log(12.0 / g)},
      {"q > k", s.L > lk},
      {"q > (hk)^4", s.L > 4.0 * (std::log(h) + lk)},
      {"q >= m^2 q^(3/8) log q log log q", s.L >= base},
      {"m^2 q^(3/8) log q log log q >= g q^(1/4)", base >= std::log(g) + 0.25 * s.L},
      {"g >= 2", g >= 2.0},
  };
}

GSearch search_g(double m, const QScale& q, double h, std::uint64_t k) {
  GSearch out;
  if (!(m > 0 && h > 0)) throw_usage("search_g: m and h must be positive");
  const Logs s = logs_of(q);
  if (!(s.LL > 1)) throw_domain("search_g: log log q > 1 required");

  // g-window allowed by the hypotheses and by a positive leverage factor
  const double base = ln_base_length(m, s);
  double ln_hi = std::log(kGMax);
  ln_hi = std::min(ln_hi, s.L / 8.0 + 2.0 * std::log(m) + s.LL + std::log(s.LL) - std::log(29.0));
  ln_hi = std::min(ln_hi, base - 0.25 * s.L);
  if (h > 1) ln_hi = std::min(ln_hi, base - 0.25 * s.L + std::log1p(-1.0 / h));
  const double ln_lo = std::max(std::log(2.0), std::log(12.0) - s.L / 4.0);

  auto v3_at = [&](double lng) -> double {
    try {
      return burgess_v(m, q, std::exp(lng), h).v3;
    } catch (const Error&) {
      return INFINITY;
    }
  };

  if (!(ln_hi > ln_lo)) {
    out.reason = "no admissible g";
    out.g = 2.0;
    out.v3 = v3_at(std::log(2.0));
    out.hypotheses = hypotheses(m, q, 2.0, h, k);
    return out;
  }

  // coarse scan to detect non-unimodality
  constexpr int kCoarse = 65;
  std::vector<double> xs(kCoarse), ys(kCoarse);
  for (int i = 0; i < kCoarse; ++i) {
    xs[i] = ln_lo + (ln_hi - ln_lo) * i / (kCoarse - 1);
    ys[i] = v3_at(xs[i]);
  }
  int turns = 0;
  for (int i = 1; i + 1 < kCoarse; ++i) {
    const bool down_before = ys[i] < ys[i - 1];
    const bool up_after = ys[i + 1] > ys[i];
    if (!down_before && !up_after && ys[i] > ys[i - 1]) ++turns;  // a local maximum
  }

  double best_x, best_y;
  if (turns == 0) {
    const std::size_t i0 = std::min_element(ys.begin(), ys.end()) - ys.begin();
    double a = xs[i0 == 0 ? 0 : i0 - 1], b = xs[std::min<std::size_t>(i0 + 1, kCoarse - 1)];
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = v3_at(c), fd = v3_at(d);
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
      if (fc < fd) {
        b = d; d = c; fd = fc; c = b - r * (b - a); fc = v3_at(c);
      } else {
        a = c; c = d; fc = fd; d = a + r * (b - a); fd = v3_at(d);
      }
    }
    best_x = (a + b) / 2;
    best_y = v3_at(best_x);
    if (ys[i0] < best_y) { best_x = xs[i0]; best_y = ys[i0]; }
  } else {
    out.grid_fallback = true;
    constexpr int kGrid = 10000;
    best_x = ln_lo;
    best_y = INFINITY;
    for (int i = 0; i < kGrid; ++i) {
      const double x = ln_lo + (ln_hi - ln_lo) * i / (kGrid - 1);
      const double y = v3_at(x);
      if (y < best_y) { best_y = y; best_x = x; }
    }
  }

  out.g = std::exp(best_x);
  out.v3 = best_y;
  out.hypotheses = hypotheses(m, q, out.g, h, k);
  const bool hyps_ok = std::all_of(out.hypotheses.begin(), out.hypotheses.end(), [](const Constraint& c) { return c.satisfied; });
  out.feasible = hyps_ok && std::isfinite(out.v3) && out.v3 <= m;
  if (!out.feasible) {
    if (!hyps_ok) {
      for (const auto& c : out.hypotheses)
        if (!c.satisfied) { out.reason = "hypothesis fails: " + c.name; break; }
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "min v3 = %.6g exceeds m = %.6g", out.v3, m);
      out.reason = buf;
    }
  }
  return out;
}

std::optional<double> minimal_m(const QScale& q, double h, double precision, std::uint64_t k) {
  if (!(precision > 0)) throw_usage("minimal_m: precision must be positive");
  const auto s = logs_of(q);
  // q >= m^2 q^{3/8} log q log log q caps m from above
  const double m_cap = std::exp(0.5 * (0.625 * s.L - s.LL - std::log(s.LL)));
  double hi = std::min(100.0, m_cap * (1.0 - 1e-12));
  auto feasible = [&](double m) { return search_g(m, q, h, k).feasible; };
  if (!feasible(hi)) return std::nullopt;
  double lo = precision;
  if (feasible(lo)) return lo;
  while (hi - lo > precision / 8) {
    const double mid = (lo + hi) / 2;
    (feasible(mid) ? hi : lo) = mid;
  }
  double m = std::ceil(hi / precision - 1e-9) * precision;
  while (!feasible(m)) m += precision;
  return m;
}

const std::vector<TableOneEntry>& table1_entries() {
  static const std::vector<TableOneEntry> rows = {
      {2.29, 5, 10},   {1.55, 10, 20},  {1.29, 15, 30},  {1.15, 20, 40},
      {0.73, 100, 40}, {0.61, 200, 40}, {0.55, 300, 200}, {0.53, 400, 300},
  };
  return rows;
}

std::vector<BurgessRow> table1(unsigned threads) {
  const auto& rows = table1_entries();
  std::vector<BurgessRow> out(rows.size());
  parallel_for(rows.size(), threads == 0 ? default_threads() : threads, [&](std::size_t i) {
    const auto& r = rows[i];
    const auto q = QScale::from_log10(r.log10_q0);
    const GSearch s = search_g(r.m, q, r.h, 1);
    out[i] = {r, s, r.m - s.v3, minimal_m(q, r.h, 0.01, 1)};
  });
  return out;
}

}  // namespace pvc::burgess
