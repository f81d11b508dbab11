#pragma once

#include <array>
#include <string>
#include <vector>

#include "constants/constants.hpp"

namespace pvc::optimizer {

using constants::Constraint;
using constants::DivisorMode;
using constants::Parity;
using numerics::LogReal;
using numerics::QScale;

/// Index 0 is the even case (h1), 1 the odd case (h2).
struct TableRow {
  std::string table;
  double eps = 0;
  std::array<double, 2> loglog_q0{};
  std::array<double, 2> gamma{};
  std::array<double, 2> E{};
  double m = 0;
  double h_tb = 0;  // h of the Table 1 row that supplied m
  std::array<double, 2> h{};
  std::array<double, 2> h_ceil{};
  std::array<char, 2> c_branch{};
  DivisorMode divisor_mode;
  std::vector<Constraint> constraints;  // at the even optimum
  std::string binding;                  // constraint that fails last as log log q decreases
  double binding_loglog_q = 0;
};

struct SearchGrid {
  double gamma_lo = 2, gamma_hi = 12, gamma_step = 0.25;
  double E_lo = 4, E_hi = 64;
  int E_points = 33;
};

/// Minimizes h1 and h2 over (gamma, E) with m from Table 1.
/// Domain error when no grid point satisfies the constraints.
TableRow optimize_h(double eps, const QScale& q, const DivisorMode& mode = DivisorMode::robin(),
                    const SearchGrid& grid = {});

/// log q where the bound's sqrt(q) log q coefficient plus h_const drops below F-S.
/// Domain error when the leading gap is not positive.
LogReal fs_crossover(double eps, double h_const, Parity parity);

/// "table2", "table3" or "table4".
std::vector<TableRow> reproduce_table(const std::string& which, unsigned threads = 0);

/// Row parameters (eps, log log q0) of Tables 2 and 3.
std::vector<std::pair<double, double>> table_rows(const std::string& which);

}  // namespace pvc::optimizer
