#include "numerics/prime_series.hpp"

#include <cmath>

#include "numerics/error.hpp"
#include "numerics/sieve.hpp"

namespace pvc::numerics {

namespace {

// Slack for accumulated rounding in the partial sums.
constexpr double kRoundingSlack = 1e-13;

struct Term {
  PrimeTermInfo info;
  std::uint32_t first_prime;
  double (*value)(double p);     // summand, or log of the product factor
  double (*tail)(double cutoff); // bound on the remaining sum (log-sum for products)
};

// Sum over integers t > P of log t/(t-1)^2 is below the integral from P.
double tail_log_over_pm1_sq(double P) { return std::log(P) / (P - 1.0) + std::log(P / (P - 1.0)); }

const std::vector<Term>& terms() {
  static const std::vector<Term> table = {
      {{"(log p)^2/p^2", SeriesKind::sum, "p >= 2", "(log t)^2/t^2"},
       2,
       [](double p) { const double l = std::log(p); return l * l / (p * p); },
       [](double P) { const double l = std::log(P); return (l * l + 2.0 * l + 2.0) / P; }},
      {{"log p/(p-1)^2", SeriesKind::sum, "p >= 2", "log t/(t-1)^2"},
       2,
       [](double p) { return std::log(p) / ((p - 1.0) * (p - 1.0)); },
       tail_log_over_pm1_sq},
      {{"log p/(p(p-1))", SeriesKind::sum, "p >= 2", "log t/(t-1)^2"},
       2,
       [](double p) { return std::log(p) / (p * (p - 1.0)); },
       tail_log_over_pm1_sq},
      // sum_{j>=2} j x^j = x^2 (2 - x)/(1 - x)^2 at x = 1/p
      {{"j log p/p^j", SeriesKind::sum, "p >= 2, j >= 2", "2 log t/(t-1)^2"},
       2,
       [](double p) { return std::log(p) * (2.0 * p - 1.0) / (p * (p - 1.0) * (p - 1.0)); },
       [](double P) { return 2.0 * tail_log_over_pm1_sq(P); }},
      // t^3 - t^2 - 2t >= t^3/2 for t >= 4
      {{"1+1/(p^3-p^2-2p)", SeriesKind::product, "p > 2", "2/t^3 (log of tail)"},
       3,
       [](double p) { return std::log1p(1.0 / (p * p * p - p * p - 2.0 * p)); },
       [](double P) { return 1.0 / (P * P); }},
  };
  return table;
}

const Term& lookup(SeriesKind kind, std::string_view id) {
  for (const auto& t : terms()) {
    if (t.info.id != id) continue;
    if (t.info.kind != kind) throw_usage("prime_series: term '" + std::string(id) + "' registered with the other kind");
    return t;
  }
  throw_usage("prime_series: unregistered term '" + std::string(id) + "'");
}

}  // namespace

const std::vector<PrimeTermInfo>& registered_prime_terms() {
  static const std::vector<PrimeTermInfo> infos = [] {
    std::vector<PrimeTermInfo> v;
    for (const auto& t : terms()) v.push_back(t.info);
    return v;
  }();
  return infos;
}

Bracket prime_series(SeriesKind kind, std::string_view term, std::uint64_t cutoff) {
  const Term& t = lookup(kind, term);  // validate before sieving
  (void)t;
  if (cutoff < 1000) throw_usage("prime_series: cutoff must be at least 1000");
  const auto primes = primes_upto(cutoff);
  return prime_series(kind, term, cutoff, primes);
}

Bracket prime_series(SeriesKind kind, std::string_view term, std::uint64_t cutoff,
                     std::span<const std::uint32_t> primes) {
  const Term& t = lookup(kind, term);
  if (cutoff < 1000) throw_usage("prime_series: cutoff must be at least 1000");
  if (primes.empty() || primes.back() < cutoff / 2) throw_usage("prime_series: prime list does not cover the cutoff");

  // Neumaier summation in long double.
  long double sum = 0.0L, comp = 0.0L;
  for (std::uint32_t p : primes) {
    if (p > cutoff) break;
    if (p < t.first_prime) continue;
    const long double x = t.value(static_cast<double>(p));
    const long double s = sum + x;
    comp += (std::fabs(sum) >= std::fabs(x)) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  const double partial = static_cast<double>(sum + comp);
  const double tail = t.tail(static_cast<double>(cutoff));

  if (kind == SeriesKind::sum) {
    return {LogReal::from_real(partial * (1.0 - kRoundingSlack)),
            LogReal::from_real((partial + tail) * (1.0 + kRoundingSlack))};
  }
  return {LogReal::from_ln(partial - kRoundingSlack), LogReal::from_ln(partial + tail + kRoundingSlack)};
}

}  // namespace pvc::numerics
