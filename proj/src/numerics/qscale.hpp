#pragma once

#include <cstdint>
#include <string>

#include "numerics/logreal.hpp"

namespace pvc::numerics {

/// Magnitude of a modulus q, given exactly, as log10 q, or as log log q.
///
/// Every q-dependent formula in the library reads q only through log_q() and
/// loglog_q(); q itself is never materialised.
class QScale {
 public:
  enum class Kind { exact, log10, loglog };

  static QScale exact(double q);
  static QScale from_log10(double log10_q);
  static QScale from_loglog(double loglog_q);

  Kind kind() const { return kind_; }
  const LogReal& value() const { return value_; }

  /// Natural log of q (extended range).
  LogReal log_q() const;
  /// log log q; always an ordinary double (at most ~2e4 in practice).
  double loglog_q() const;
  /// q^x for real x, as an extended-range value.
  LogReal q_pow(double x) const;
  /// q as an extended-range value.
  LogReal q() const { return q_pow(1.0); }

  std::string describe() const;

 private:
  QScale(Kind kind, LogReal value, double raw);

  Kind kind_;
  LogReal value_;
  double raw_;  // the input as given, kept to avoid a round trip through logs
};

}  // namespace pvc::numerics
