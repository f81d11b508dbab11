#include "constants/constants.hpp"

#include <cmath>
#include <numbers>

#include "numerics/error.hpp"
#include "numerics/prime_series.hpp"

namespace pvc::constants {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double ln_plus_exp(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string DivisorMode::describe() const { return kind == Kind::robin ? "robin" : "fixed(" + std::to_string(U) + ")"; }

void validate(const BoundParams& p) {
  if (!(p.B >= 1)) throw_usage("B must be at least 1");
  if (!(p.E >= 4)) throw_usage("E must be at least 4");
  if (!(p.gamma >= 2)) throw_usage("gamma must be at least 2");
  if (!(p.eps > 0 && p.eps < 0.125)) throw_usage("eps must lie in (0, 1/8)");
  if (!(p.m > 0)) throw_usage("m must be positive");
  if (!(p.h > 0)) throw_usage("h must be positive");
  if (p.divisor_mode.kind == DivisorMode::Kind::fixed && p.divisor_mode.U < 1) throw_usage("U must be positive");
}

LogReal z_const() {
  static const LogReal z = [] {
    const auto br = numerics::prime_series(numerics::SeriesKind::product, "1+1/(p^3-p^2-2p)");
    return LogReal::from_real(8.0) * (LogReal::from_real(2.0) * br.upper).sqrt();
  }();
  return z;
}

std::array<double, 6> coeffs_a(double B) {
  if (!(B >= 1)) throw_usage("coeffs_a: B must be at least 1");
  const double z = z_const().to_real();
  const double B2 = B * B;
  return {1.59 * B2, B2 * z * kPi * kPi / 6.0, 0.96 * B2 * z, B2 * z, 0.96 * B2 * z, 1.32 * B2 * z};
}

BValues b_funcs(double B, double E, const LogReal& R, const QScale& q) {
  if (!(E >= 4)) throw_domain("b_funcs: E >= 4 required");
  if (R.sign() <= 0) throw_domain("b_funcs: R must be positive");
  const double lnR = R.ln_mag();
  if (!(lnR > 3.0 - std::log(E))) throw_domain("b_funcs: hypothesis R > e^3/E violated");
  const auto a = coeffs_a(B);
  const double B2 = B * B;

  const double b1 = B + 9.82 * B2 + 8.12 * (a[0] + a[3]) * E + 18.9 * a[2] + 3.46 * a[0] + 4.06 * a[3];
  const double b2 = a[1] * (std::numbers::sqrt2 * E + 1.0) / kLn2;

  const double lnER = std::log(E) + lnR;
  const double ln4ER = std::log(4.0) + lnER;
  const double ln2R = kLn2 + lnR;
  const double lnER32 = std::pow(lnER, 1.5);
  const double inv_logq = std::exp(-q.loglog_q());
  const double b3 = B2 * 7.63 / std::sqrt(E) * ln4ER / lnER32 * (1.0 + (std::log(64.0 / E) + 1.0) * inv_logq) +
                    a[4] * 1.48 + 1.48 * a[5] / std::sqrt(lnER) + a[4] / kLn2 * ln2R / lnER32 +
                    a[5] / kLn2 / lnER32;
  return {b1, b2, b3};
}

CValues c1_c2(double B, double E, const LogReal& R, const QScale& q) {
  const BValues b = b_funcs(B, E, R, q);
  const double lnR = R.ln_mag();
  const double lnlnR = std::log(lnR);
  if (!(lnlnR > 1.0)) throw_domain("c1_c2: log log R > 1 required");
  // 2 log R / R^2 in log space
  const double tail = 2.0 * lnR * std::exp(-2.0 * lnR);
  const double c1 = (1.0 + 2.0 * kPi) * b.b1 + B * 2.0 * kPi * tail;
  const double lnER = std::log(E) + lnR;
  const double phi_factor = std::sqrt(std::exp(kEulerGamma) * lnlnR + 2.51 / lnlnR);
  const double c2 = (1.0 + 2.0 * kPi) * (b.b2 * phi_factor / std::pow(lnER, 1.5) + b.b3);
  return {c1, c2};
}

double delta(const QScale& q, const DivisorMode& mode) {
  if (mode.kind == DivisorMode::Kind::fixed) {
    // d(q)^{3/2} = U^{3/2} = q^{1.5 log U / log q}
    return (LogReal::from_real(1.5 * std::log(static_cast<double>(mode.U))) / q.log_q()).to_real();
  }
  const double LL = q.loglog_q();
  return 3.0 * kLn2 / (2.0 * LL) * (1.0 + 1.0 / LL + 4.7626 / (LL * LL));
}

std::vector<Constraint> constraint_set(const QScale& q, double gamma, double eps, double h, double m,
                                       const DivisorMode& mode) {
  (void)m;
  const double LL = q.loglog_q();
  const LogReal L = q.log_q();
  const double lnh_gLL = std::log(h) + gamma * LL;
  return {
      {"q > (h log^gamma q)^4", L > LogReal::from_real(4.0 * lnh_gLL)},
      {"log^2 q (log log q)^3 <= log^gamma q", 2.0 * LL + 3.0 * std::log(LL) <= gamma * LL},
      {"eps < 1/8", eps < 0.125},
      {"eps/2 > delta(q)", eps / 2.0 > delta(q, mode)},
      {"h log^gamma q < q^(1/4)", LogReal::from_real(lnh_gLL) < L / LogReal::from_real(4.0)},
  };
}

CBig c_big(const BoundParams& p, const QScale& q) {
  validate(p);
  const double LL = q.loglog_q();
  const LogReal L = q.log_q();
  const double d = delta(q, p.divisor_mode);
  const double expo = p.eps / 2.0 - d;
  if (!(expo > 0)) {
    // threshold on log log q where eps/2 = delta, for the message
    throw_domain("c_big: q below e^{e^{...}} threshold for this eps (eps/2 = " + fmt(p.eps / 2) +
                 " <= delta(q) = " + fmt(d) + " at log log q = " + fmt(LL) + ")");
  }
  if (!(LogReal::from_real(std::log(p.h) + p.gamma * LL) < L / LogReal::from_real(4.0)))
    throw_domain("c_big: hypothesis h (log q)^gamma < q^(1/4) violated");

  const LogReal R = LogReal::from_ln(p.gamma * LL);
  const CValues c = c1_c2(1.0, p.E, R, q);
  const double lnER = std::log(p.E) + p.gamma * LL;
  const double branch_a =
      c.c1 / (0.375 + p.eps) + c.c2 * std::exp(1.5 * std::log(lnER) - (p.gamma / 2.0 - 1.0) * LL);

  const double ln_b = std::log(3.0 * p.m) + (2.0 * p.gamma + 1.0) * LL +
                      ln_plus_exp(0.0, std::log(4.0 * kPi) + p.gamma * LL) + 0.5 * (LL + std::log(LL)) -
                      (LogReal::from_real(expo) * L).to_real();
  const LogReal branch_b = LogReal::from_ln(ln_b);
  const LogReal a = LogReal::from_real(branch_a);
  if (branch_b > a) return {branch_b, branch_a, branch_b, 'B'};
  return {a, branch_a, branch_b, 'A'};
}

double n_eps(const QScale& q, double eps) {
  if (!(eps > 0 && eps < 0.125)) throw_usage("n_eps: eps must lie in (0, 1/8)");
  const double third = 3.0 / (0.25 + eps) * q.q_pow(-1.0).to_real();
  return kEulerGamma + kLn2 + third;
}

PVBound pv_bound(const QScale& q, Parity parity, const BoundParams& p) {
  validate(p);
  const CBig c = c_big(p, q);
  if (!c.value.in_ordinary_range()) throw_domain("pv_bound: c(E, q, gamma, eps, m) is outside double range");
  const double c_chi = parity == Parity::even ? 1.0 : 2.0;
  const double inv_logq = std::exp(-q.loglog_q());
  const double j = c_chi / kPi * (inv_logq + 0.625 - p.eps) * c.value.to_real() + 1.0 +
                   (std::exp(kPi) - 1.0 - kPi) / (2.0 * kPi);
  const double n = n_eps(q, p.eps);
  PVBound out{parity,
              parity == Parity::even ? 2.0 / (kPi * kPi) * (0.375 + p.eps) : (0.375 + p.eps) / kPi,
              parity == Parity::even ? 2.0 * n / (kPi * kPi) + j : n / kPi + j,
              j,
              n,
              c,
              p,
              q,
              constraint_set(q, p.gamma, p.eps, p.h, p.m, p.divisor_mode),
              {}};
  out.notes.push_back("b1 uses 4.06 a4; the longer derivation gives 4.6 a4");
  out.notes.push_back("n(q,eps) uses 3/((1/4+eps) q); the longer derivation gives 3/q1 with q1 = q^(3/8+eps)");
  out.notes.push_back("c2 takes q explicitly through b3");
  if (p.divisor_mode.kind == DivisorMode::Kind::fixed) out.notes.push_back("d(q) = " + std::to_string(p.divisor_mode.U));
  return out;
}

LogReal tb_bound(const QScale& q, std::uint64_t k, const LogReal& N, double m, double h, const DivisorMode& mode) {
  if (k < 1) throw_usage("tb_bound: k must be positive");
  if (!(m > 0 && h > 0)) throw_usage("tb_bound: m and h must be positive");
  const LogReal L = q.log_q();
  if (!(LogReal::from_real(4.0 * std::log(h * static_cast<double>(k))) < L))
    throw_domain("tb_bound: hypothesis q > (hk)^4 violated");
  if (N.sign() < 0 || !(N.is_zero() || N.ln_mag() < L.to_real())) throw_domain("tb_bound: N < q required");
  const double LL = q.loglog_q();
  // d(q)^{3/2} <= q^delta
  const LogReal d32 = q.q_pow(delta(q, mode));
  return LogReal::from_real(m * static_cast<double>(k)) * d32 * N.sqrt() * q.q_pow(3.0 / 16.0) *
         (L * LogReal::from_real(LL)).sqrt();
}

LogReal BoundShape::evaluate(const QScale& q) const {
  const LogReal L = q.log_q();
  const LogReal inner = LogReal::from_real(lead) * L + LogReal::from_real(loglog * q.loglog_q() + constant);
  return q.q_pow(0.5) * inner;
}

ComparisonBounds comparison_bounds(Parity parity) {
  if (parity == Parity::even)
    return {{"frolenkov-soundararajan", 1.0 / (kPi * kPi), 0.0, 0.5, 1200.0},
            {"pomerance", 1.0 / (kPi * kPi), 2.0 / (kPi * kPi), 0.75, 0.0},
            {"classical", 1.0, 0.0, 0.0, 0.0}};
  return {{"frolenkov-soundararajan", 1.0 / (2.0 * kPi), 0.0, 1.0, 40.0},
          {"pomerance", 1.0 / (2.0 * kPi), 1.0 / kPi, 1.0, 0.0},
          {"classical", 1.0, 0.0, 0.0, 0.0}};
}

}  // namespace pvc::constants
