#include "numerics/qscale.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "numerics/error.hpp"

namespace pvc::numerics {

QScale::QScale(Kind kind, LogReal value, double raw) : kind_(kind), value_(value), raw_(raw) {
  if (!(log_q() > LogReal::from_real(1.0))) throw_domain("QScale: log q must exceed 1 (got " + describe() + ")");
}

QScale QScale::exact(double q) {
  if (!(q > 0)) throw_domain("QScale::exact: q must be positive");
  return QScale(Kind::exact, LogReal::from_real(q), q);
}

QScale QScale::from_log10(double log10_q) {
  if (!(log10_q > 0)) throw_domain("QScale::from_log10: log10 q must be positive");
  return QScale(Kind::log10, LogReal::from_real(log10_q), log10_q);
}

QScale QScale::from_loglog(double loglog_q) {
  if (!std::isfinite(loglog_q)) throw_domain("QScale::from_loglog: loglog q must be finite");
  return QScale(Kind::loglog, LogReal::from_real(loglog_q), loglog_q);
}

LogReal QScale::log_q() const {
  switch (kind_) {
    case Kind::exact: return LogReal::from_real(std::log(raw_));
    case Kind::log10: return LogReal::from_real(raw_ * std::numbers::ln10);
    case Kind::loglog: return LogReal::from_ln(raw_);
  }
  return {};
}

double QScale::loglog_q() const {
  switch (kind_) {
    case Kind::exact: return std::log(std::log(raw_));
    case Kind::log10: return std::log(raw_) + std::log(std::numbers::ln10);
    case Kind::loglog: return raw_;
  }
  return 0.0;
}

LogReal QScale::q_pow(double x) const {
  // ln(q^x) = x log q; infinite once x log q leaves double range
  const double ln = (LogReal::from_real(x) * log_q()).to_real();
  return LogReal::from_ln(ln);
}

std::string QScale::describe() const {
  char buf[96];
  switch (kind_) {
    case Kind::exact: std::snprintf(buf, sizeof buf, "q=%s", value_.to_string().c_str()); break;
    case Kind::log10: std::snprintf(buf, sizeof buf, "log10 q=%s", value_.to_string().c_str()); break;
    case Kind::loglog: std::snprintf(buf, sizeof buf, "loglog q=%s", value_.to_string().c_str()); break;
  }
  return buf;
}

}  // namespace pvc::numerics
