#include "numerics/logreal.hpp"

#include <cstdio>
#include <limits>

#include "numerics/error.hpp"

namespace pvc::numerics {

namespace {

constexpr double kLossyRelative = 1e-12;

}  // namespace

LogReal LogReal::from_real(double x) {
  if (std::isnan(x)) throw_domain("LogReal::from_real: NaN");
  if (x == 0.0) return LogReal();
  return LogReal(x > 0 ? 1 : -1, std::log(std::fabs(x)), false);
}

LogReal LogReal::from_ln(double ln_mag, int sign) {
  if (std::isnan(ln_mag)) throw_domain("LogReal::from_ln: NaN");
  if (sign == 0 || ln_mag == -std::numeric_limits<double>::infinity()) return LogReal();
  return LogReal(sign > 0 ? 1 : -1, ln_mag, false);
}

double LogReal::to_real() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(ln_mag_);
}

double LogReal::ln() const {
  if (sign_ <= 0) throw_domain("LogReal::ln of a nonpositive value");
  return ln_mag_;
}

bool LogReal::in_ordinary_range() const {
  if (sign_ == 0) return true;
  return ln_mag_ < 709.0 && ln_mag_ > -708.0;
}

LogReal LogReal::operator-() const { return LogReal(-sign_, ln_mag_, lossy_); }

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool hi_is_a = a.ln_mag_ >= b.ln_mag_;
  const LogReal& hi = hi_is_a ? a : b;
  const LogReal& lo = hi_is_a ? b : a;
  const bool carried = a.lossy_ || b.lossy_;
  if (std::isinf(hi.ln_mag_)) {
    if (hi.sign_ != lo.sign_ && std::isinf(lo.ln_mag_)) return LogReal(0, 0.0, true);
    return LogReal(hi.sign_, hi.ln_mag_, carried);
  }
  const double d = lo.ln_mag_ - hi.ln_mag_;  // <= 0
  if (a.sign_ == b.sign_) return LogReal(hi.sign_, hi.ln_mag_ + std::log1p(std::exp(d)), carried);
  const double rel = -std::expm1(d);  // 1 - e^d, the surviving fraction of |hi|
  const bool lossy = carried || rel < kLossyRelative;
  if (rel <= 0.0) return LogReal(0, 0.0, lossy);
  return LogReal(hi.sign_, hi.ln_mag_ + std::log(rel), lossy);
}

LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

LogReal operator*(const LogReal& a, const LogReal& b) {
  const bool lossy = a.lossy_ || b.lossy_;
  if (a.sign_ == 0 || b.sign_ == 0) return LogReal(0, 0.0, lossy);
  const double ln = a.ln_mag_ + b.ln_mag_;
  if (ln == -std::numeric_limits<double>::infinity()) return LogReal(0, 0.0, lossy);
  return LogReal(a.sign_ * b.sign_, ln, lossy);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.sign_ == 0) throw_domain("LogReal division by zero");
  const bool lossy = a.lossy_ || b.lossy_;
  if (a.sign_ == 0) return LogReal(0, 0.0, lossy);
  const double ln = a.ln_mag_ - b.ln_mag_;
  if (ln == -std::numeric_limits<double>::infinity()) return LogReal(0, 0.0, lossy);
  return LogReal(a.sign_ * b.sign_, ln, lossy);
}

LogReal LogReal::pow(double r) const {
  if (std::isnan(r)) throw_domain("LogReal::pow: NaN exponent");
  const bool integral = std::floor(r) == r;
  if (sign_ < 0 && !integral) throw_domain("LogReal::pow: negative base with non-integer exponent");
  if (sign_ == 0) {
    if (r > 0) return LogReal(0, 0.0, lossy_);
    if (r == 0) return LogReal(1, 0.0, lossy_);
    throw_domain("LogReal::pow: zero to a negative power");
  }
  if (r == 0) return LogReal(1, 0.0, lossy_);
  const double ln = r * ln_mag_;
  if (ln == -std::numeric_limits<double>::infinity()) return LogReal(0, 0.0, lossy_);
  int s = 1;
  if (sign_ < 0 && std::fmod(std::fabs(r), 2.0) == 1.0) s = -1;
  return LogReal(s, ln, lossy_);
}

std::partial_ordering operator<=>(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  if (a.sign_ > 0) return a.ln_mag_ <=> b.ln_mag_;
  return b.ln_mag_ <=> a.ln_mag_;
}

bool operator==(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) return false;
  return a.sign_ == 0 || a.ln_mag_ == b.ln_mag_;
}

std::string LogReal::to_string(int digits) const {
  char buf[64];
  if (in_ordinary_range()) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, to_real());
    return buf;
  }
  const double log10_mag = ln_mag_ / std::log(10.0);
  std::snprintf(buf, sizeof buf, "%s10^(%.*g)", sign_ < 0 ? "-" : "", digits, log10_mag);
  return buf;
}

LogReal logreal_arith(const LogReal& a, const LogReal& b, Arith op) {
  switch (op) {
    case Arith::add: return a + b;
    case Arith::sub: return a - b;
    case Arith::mul: return a * b;
    case Arith::div: return a / b;
    case Arith::pow_real: return a.pow(b.to_real());
  }
  throw_usage("logreal_arith: unknown op");
}

std::partial_ordering logreal_cmp(const LogReal& a, const LogReal& b) { return a <=> b; }

}  // namespace pvc::numerics
