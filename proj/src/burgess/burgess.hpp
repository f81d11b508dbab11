#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constants/constants.hpp"
#include "numerics/qscale.hpp"

namespace pvc::burgess {

using constants::Constraint;
using numerics::QScale;

struct VValues {
  double v1, v2, v3;
};

/// v1(m, q), v2(m, q, g) and v3(m, q, g, h). Domain error if g < 2,
/// log log q <= 1, v2 <= 0, or the leverage factor in v3 is not positive.
VValues burgess_v(double m, const QScale& q, double g, double h);

/// 1 - 1/h - g q^{1/4} / (m^2 q^{3/8} log q log log q).
double leverage(double m, const QScale& q, double g, double h);

/// One entry per hypothesis, evaluated in log space. Never throws.
std::vector<Constraint> hypotheses(double m, const QScale& q, double g, double h, std::uint64_t k = 1);

struct GSearch {
  bool feasible = false;  // v3 <= m at the witness and every hypothesis holds
  double g = 0;
  double v3 = 0;
  bool grid_fallback = false;
  std::string reason;  // set when infeasible
  std::vector<Constraint> hypotheses;
};

/// Minimises v3 over g in [2, g_max] on a log scale, g_max being the largest g
/// allowed by the hypotheses (capped at 1e6).
GSearch search_g(double m, const QScale& q, double h, std::uint64_t k = 1);

/// Smallest m on a `precision` grid with search_g feasible; nullopt if none up to 100.
std::optional<double> minimal_m(const QScale& q, double h, double precision = 0.01, std::uint64_t k = 1);

struct TableOneEntry {
  double m;
  double log10_q0;
  double h;
};

/// The eight (m, log10 q0, h) rows of the Burgess-type table.
const std::vector<TableOneEntry>& table1_entries();

struct BurgessRow {
  TableOneEntry entry;
  GSearch search;
  double slack;  // m - v3
  std::optional<double> min_m;
};

std::vector<BurgessRow> table1(unsigned threads = 0);

}  // namespace pvc::burgess
