#pragma once

#include <cmath>
#include <compare>
#include <string>

namespace pvc::numerics {

/// Extended-range real stored as a sign and the natural log of the magnitude.
///
/// Quantities such as q^{3/16} with log log q ~ 2e4 have no double
/// representation, but their logarithms do. `ln_mag` may itself be +inf for
/// values whose log overflows a double; a log that underflows to -inf is
/// normalised to an exact zero.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal from_real(double x);
  /// The value e^{ln_mag} with the given sign (sign 0 yields zero).
  static LogReal from_ln(double ln_mag, int sign = 1);
  static LogReal zero() { return LogReal(); }

  int sign() const { return sign_; }
  double ln_mag() const { return ln_mag_; }
  bool is_zero() const { return sign_ == 0; }
  /// Set when a subtraction lost more than 12 digits to cancellation.
  bool lossy() const { return lossy_; }

  /// Ordinary double; overflows to +-inf and underflows to 0.
  double to_real() const;
  /// Natural log of the value; requires a positive value.
  double ln() const;
  /// True when to_real() is finite and nonzero (or the value is zero).
  bool in_ordinary_range() const;

  LogReal operator-() const;
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b);
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);

  LogReal& operator+=(const LogReal& o) { return *this = *this + o; }
  LogReal& operator-=(const LogReal& o) { return *this = *this - o; }
  LogReal& operator*=(const LogReal& o) { return *this = *this * o; }
  LogReal& operator/=(const LogReal& o) { return *this = *this / o; }

  /// Real power. Negative bases need an integral exponent.
  LogReal pow(double r) const;
  LogReal sqrt() const { return pow(0.5); }

  /// Exact on (sign, ln_mag).
  friend std::partial_ordering operator<=>(const LogReal& a, const LogReal& b);
  friend bool operator==(const LogReal& a, const LogReal& b);

  /// Decimal rendering, e.g. "1.2345e+300" or "10^(1.3e9)" past double range.
  std::string to_string(int digits = 12) const;

 private:
  constexpr LogReal(int sign, double ln_mag, bool lossy) : sign_(sign), ln_mag_(ln_mag), lossy_(lossy) {}

  int sign_ = 0;
  double ln_mag_ = 0.0;
  bool lossy_ = false;
};

enum class Arith { add, sub, mul, div, pow_real };

LogReal logreal_arith(const LogReal& a, const LogReal& b, Arith op);
std::partial_ordering logreal_cmp(const LogReal& a, const LogReal& b);

inline LogReal max(const LogReal& a, const LogReal& b) { return (a < b) ? b : a; }

}  // namespace pvc::numerics
