#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "characters/characters.hpp"
#include "numerics/logreal.hpp"
#include "numerics/qscale.hpp"

namespace pvc::constants {

using characters::Parity;
using numerics::LogReal;
using numerics::QScale;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// How d(q) enters: the general Robin-type bound, or d(q) = U exactly.
struct DivisorMode {
  enum class Kind { robin, fixed } kind = Kind::robin;
  std::uint64_t U = 2;

  static DivisorMode robin() { return {}; }
  static DivisorMode fixed(std::uint64_t U) { return {Kind::fixed, U}; }
  std::string describe() const;
};

struct BoundParams {
  double B = 1.0;
  double E = 4.0;
  double gamma = 4.0;
  double eps = 0.1;
  double m = 0.53;
  double h = 300.0;
  double g = 2.0;
  DivisorMode divisor_mode;
};

/// Usage error unless B >= 1, E >= 4, gamma >= 2, 0 < eps < 1/8, m > 0, h > 0.
void validate(const BoundParams& p);

struct Constraint {
  std::string name;
  bool satisfied;
};

/// 8 sqrt(2 P) with P the upper bracket of prod_{p>2}(1 + 1/(p^3 - p^2 - 2p)). Cached.
LogReal z_const();

/// a_1..a_6 (index 0..5).
std::array<double, 6> coeffs_a(double B);

struct BValues {
  double b1, b2, b3;
};
struct CValues {
  double c1, c2;
};

/// Requires E >= 4, R > e^3/E and log q > 1; R is passed as an extended real
/// because the callers use R = (log q)^gamma.
BValues b_funcs(double B, double E, const LogReal& R, const QScale& q);
/// As b_funcs, plus log log R > 1.
CValues c1_c2(double B, double E, const LogReal& R, const QScale& q);

/// Exponent delta(q) with d(q)^{3/2} <= q^delta.
double delta(const QScale& q, const DivisorMode& mode);

/// The admissibility conditions for the main bound at (q, gamma, eps, h, m).
std::vector<Constraint> constraint_set(const QScale& q, double gamma, double eps, double h, double m,
                                       const DivisorMode& mode = DivisorMode::robin());

struct CBig {
  LogReal value;
  double branch_a;
  LogReal branch_b;
  char selected;  // 'A' or 'B'
};

/// max of the two branches; branch B is evaluated in log space.
/// Domain error when eps/2 <= delta(q) or h (log q)^gamma >= q^{1/4}.
CBig c_big(const BoundParams& p, const QScale& q);

/// C + log 2 + 3/((1/4 + eps) q).
double n_eps(const QScale& q, double eps);

struct PVBound {
  Parity parity;
  double leading;   // coefficient of sqrt(q) log q
  double constant;  // h_1 (even) or h_2 (odd)
  double j;
  double n;
  CBig c;
  BoundParams params;
  QScale q;
  std::vector<Constraint> constraints;
  std::vector<std::string> notes;
};

PVBound pv_bound(const QScale& q, Parity parity, const BoundParams& p);

/// m k d(q)^{3/2} N^{1/2} q^{3/16} (log q log log q)^{1/2}.
/// Domain error unless q > (hk)^4 and N < q.
LogReal tb_bound(const QScale& q, std::uint64_t k, const LogReal& N, double m, double h,
                 const DivisorMode& mode = DivisorMode::robin());

/// Coefficients of sqrt(q) log q, sqrt(q) log log q and sqrt(q).
struct BoundShape {
  std::string name;
  double lead;
  double loglog;
  double constant;
  double q_min;  // smallest q where the bound is claimed (0 for all q)

  LogReal evaluate(const QScale& q) const;
};

struct ComparisonBounds {
  BoundShape fs, pomerance, classical;
};

ComparisonBounds comparison_bounds(Parity parity);

}  // namespace pvc::constants
