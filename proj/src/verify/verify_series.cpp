#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "constants/constants.hpp"
#include "numerics/error.hpp"
#include "numerics/prime_series.hpp"
#include "numerics/sieve.hpp"
#include "verify/verify.hpp"

namespace pvc::verify {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-13;

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// sum_{n>=1} t(n) with t eventually decaying at least like a geometric series
// of ratio r(M) beyond M; returns an upper bracket.
template <class Term, class Ratio>
double series_upper(Term t, Ratio ratio, int M) {
  long double s = 0;
  for (int n = 1; n <= M; ++n) s += t(n);
  const double r = ratio(M);
  return static_cast<double>(s) * (1 + kSlack) + t(M + 1) / (1 - r);
}

// Relative margin (rhs - lhs)/|rhs|, used to pick the worst instance.
double rel_margin(double lhs, double rhs) { return (rhs - lhs) / std::max(std::fabs(rhs), 1e-300); }

struct Worst {
  double rel = INFINITY;
  double lhs = 0, rhs = 0;
  Json instance;
  void offer(double l, double r, Json inst) {
    const double m = rel_margin(l, r);
    if (m < rel) {
      rel = m;
      lhs = l;
      rhs = r;
      instance = std::move(inst);
    }
  }
};

}  // namespace

CheckReport make_check(std::string id, Json instance, double lhs, double rhs, std::string notes, double rel_tol) {
  CheckReport r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && r.margin >= -rel_tol * std::fabs(rhs);
  r.notes = std::move(notes);
  return r;
}

std::vector<CheckReport> check_lemma_dis(std::uint64_t cutoff) {
  std::vector<CheckReport> out;
  const auto primes = numerics::primes_upto(cutoff);

  {
    // exponent counter from 0: sum_{n>=1} 2^{-(n-1)/2}
    const double value = series_upper([](int n) { return std::pow(2.0, -(n - 1) / 2.0); },
                                      [](int) { return 1 / kSqrt2; }, 200);
    const double closed = kSqrt2 / (kSqrt2 - 1);
    CheckReport r = make_check("dis.geometric", Json{{"terms", "2^{-(n-1)/2}"}}, value, closed,
                               "identity; value " + fmt(value, 15) + " vs 2+sqrt2; from n = 1 literally the sum is 1+sqrt2");
    r.pass = std::fabs(value - closed) <= 1e-12;
    out.push_back(r);
  }
  {
    // sum_{n=1}^{floor(log2 N)} 2^{(n-1)/2} <= (sqrt N - 1)/(sqrt2 - 1); tight at N = 2^K
    Worst w;
    for (int K = 1; K <= 60; ++K) {
      const double N = std::ldexp(1.0, K);
      long double s = 0;
      for (int n = 1; n <= K; ++n) s += std::pow(2.0L, (n - 1) / 2.0L);
      w.offer(static_cast<double>(s), (std::sqrt(N) - 1) / (kSqrt2 - 1), Json{{"N", "2^" + std::to_string(K)}});
    }
    out.push_back(make_check("dis.geometric_partial", w.instance, w.lhs, w.rhs,
                             "checked at N = 2^K, K <= 60 (worst case for each K); with 2^{n/2} literally the sum is sqrt2 times larger"));
  }
  out.push_back(make_check(
      "dis.sqrt_n", Json{{"series", "sqrt(n)/2^{n/2}"}},
      series_upper([](int n) { return std::sqrt(n) / std::pow(2.0, n / 2.0); },
                   [](int M) { return std::sqrt((M + 2.0) / (M + 1.0)) / kSqrt2; }, 400),
      4.15));
  out.push_back(make_check(
      "dis.sqrt_n_plus_1", Json{{"series", "sqrt(n+1)/2^{n/2}"}},
      series_upper([](int n) { return std::sqrt(n + 1.0) / std::pow(2.0, n / 2.0); },
                   [](int M) { return std::sqrt((M + 3.0) / (M + 2.0)) / kSqrt2; }, 400),
      4.87));

  auto prime_item = [&](const char* id, numerics::SeriesKind kind, const char* term, double bound,
                        double p2_term) {
    const auto br = numerics::prime_series(kind, term, cutoff, primes);
    const double up = br.upper.to_real();
    std::string notes = "bracket [" + fmt(br.lower.to_real(), 10) + ", " + fmt(up, 10) + "]";
    if (p2_term > 0) notes += "; without p = 2: " + fmt(up - p2_term, 6);
    out.push_back(make_check(id, Json{{"term", term}, {"cutoff", cutoff}}, up, bound, notes));
  };
  const double l2 = std::log(2.0);
  prime_item("dis.log2p_over_p2", numerics::SeriesKind::sum, "(log p)^2/p^2", 0.71, l2 * l2 / 4);
  prime_item("dis.logp_over_pm1_sq", numerics::SeriesKind::sum, "log p/(p-1)^2", 1.27, 0);
  prime_item("dis.logp_over_p_pm1", numerics::SeriesKind::sum, "log p/(p(p-1))", 0.8, 0);
  {
    const auto br = numerics::prime_series(numerics::SeriesKind::product, "1+1/(p^3-p^2-2p)", cutoff, primes);
    out.push_back(make_check("dis.product", Json{{"term", "1+1/(p^3-p^2-2p)"}, {"cutoff", cutoff}},
                             br.upper.to_real(), std::exp(0.1),
                             "bracket [" + fmt(br.lower.to_real(), 12) + ", " + fmt(br.upper.to_real(), 12) + "]"));
  }
  prime_item("dis.j_logp_over_pj", numerics::SeriesKind::sum, "j log p/p^j", 0.96, l2 * 3.0 / 2.0);
  {
    long double s = 0;
    for (std::uint64_t n = 2; n <= cutoff; ++n) {
      const double x = static_cast<double>(n);
      s += std::log(x) / (x * x);
    }
    const double P = static_cast<double>(cutoff);
    const double up = static_cast<double>(s) * (1 + kSlack) + (std::log(P) + 1) / P;
    out.push_back(make_check("dis.logn_over_n2", Json{{"series", "log n/n^2"}, {"cutoff", cutoff}}, up, 0.94));
  }
  return out;
}

double log_integral(double x) {
  if (!(x >= 2)) throw_usage("log_integral: x >= 2 required");
  if (x == 2) return 0;
  double err = 0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [](double t) { return 1.0 / std::log(t); }, 2.0, x, 20, 1e-13, &err);
  return v;
}

std::vector<CheckReport> check_prime_bounds(std::uint64_t x_max, std::uint64_t n_max, unsigned threads) {
  (void)threads;
  if (x_max < 3 || n_max < 3) throw_usage("check_prime_bounds: budgets must be at least 3");
  std::vector<CheckReport> out;
  const auto primes = numerics::primes_upto(std::max<std::uint64_t>(x_max, 2));
  {
    Worst w;
    w.offer(1, 1.25506 * std::numbers::e, Json{{"x", "e"}});
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const double p = primes[i];
      if (i == 0) continue;  // x in (1, 3): pi(x) <= 1 and x/log x >= e
      w.offer(static_cast<double>(i + 1), 1.25506 * p / std::log(p), Json{{"x", primes[i]}});
    }
    out.push_back(make_check("primes.pi", w.instance, w.lhs, w.rhs,
                             "pi(x) < 1.25506 x/log x at every prime x <= " + std::to_string(x_max) + " (worst shown)"));
  }
  {
    Worst w;
    constexpr int kPoints = 1000;
    const double lx = std::log(static_cast<double>(x_max) / 2);
    for (int i = 1; i <= kPoints; ++i) {
      const double x = 2 * std::exp(lx * i / kPoints);
      w.offer(log_integral(x), 1.37 * x / std::log(x), Json{{"x", x}});
    }
    out.push_back(make_check("primes.li", w.instance, w.lhs, w.rhs,
                             "Li(x) <= 1.37 x/log x at 1000 log-spaced x in (2, " + std::to_string(x_max) + "]"));
  }
  const auto t = numerics::arith_tables(static_cast<std::uint32_t>(n_max));
  {
    Worst w;
    const double eC = std::exp(constants::kEulerGamma);
    for (std::uint64_t n = 3; n <= n_max; ++n) {
      const double ll = std::log(std::log(static_cast<double>(n)));
      const double lower = static_cast<double>(n) / (eC * ll + 2.51 / ll);
      // phi(n) > lower, written as lower <= phi(n)
      w.offer(lower, t.phi[n], Json{{"n", n}});
    }
    out.push_back(make_check("primes.phi", w.instance, w.lhs, w.rhs,
                             "n/(e^C log log n + 2.51/log log n) < phi(n) for 3 <= n <= " + std::to_string(n_max)));
  }
  {
    Worst w;
    for (std::uint64_t n = 3; n <= n_max; ++n) {
      const double L = std::log(static_cast<double>(n)), ll = std::log(L);
      const double rhs = L / ll * (std::numbers::ln2 + std::numbers::ln2 / ll + 4.7626 * std::numbers::ln2 / (ll * ll));
      w.offer(std::log(static_cast<double>(t.divisors[n])), rhs, Json{{"n", n}, {"d", t.divisors[n]}});
    }
    out.push_back(make_check("primes.divisor", w.instance, w.lhs, w.rhs,
                             "log d(n) bound with n in place of q, 3 <= n <= " + std::to_string(n_max)));
  }
  {
    // weak form of the twin-type sieve bound; needs ab even for ap+b to be prime infinitely often
    const std::pair<std::int64_t, std::int64_t> ab[] = {{1, 2}, {1, 4}, {3, 2}, {1, 6}, {5, 2}, {3, 4}};
    const double c0 = 16.0 * 8.0 / (kPi * kPi);
    for (auto [a, b] : ab) {
      double odd_factor = 1;
      for (auto [p, e] : numerics::factorize(static_cast<std::uint64_t>(a * b))) {
        (void)e;
        if (p > 2) odd_factor *= (p - 1.0) / (p - 2.0);
      }
      for (std::uint64_t x = 1000; x <= x_max; x *= 10) {
        std::uint64_t count = 0;
        for (auto p : primes) {
          if (p > x) break;
          if (numerics::is_prime_u64(static_cast<std::uint64_t>(a) * p + static_cast<std::uint64_t>(b))) ++count;
        }
        const double lx = std::log(static_cast<double>(x));
        out.push_back(make_check("primes.siebert", Json{{"a", a}, {"b", b}, {"x", x}}, static_cast<double>(count),
                                 c0 * odd_factor * static_cast<double>(x) / (lx * lx)));
      }
    }
  }
  return out;
}

std::vector<CheckReport> check_li2(double x_max, int alpha_steps, int x_points) {
  if (!(x_max >= 1) || alpha_steps < 1 || x_points < 2) throw_usage("check_li2: bad grid");
  const std::uint64_t n_max = static_cast<std::uint64_t>(std::floor(x_max));
  std::vector<double> xs(x_points);
  for (int j = 0; j < x_points; ++j) xs[j] = std::exp(std::log(x_max) * j / (x_points - 1));
  xs.back() = x_max;
  std::vector<double> cos_t(alpha_steps), sin_t(alpha_steps);
  for (int r = 0; r < alpha_steps; ++r) {
    cos_t[r] = std::cos(2 * kPi * r / alpha_steps);
    sin_t[r] = std::sin(2 * kPi * r / alpha_steps);
  }
  const double base = constants::kEulerGamma + std::numbers::ln2;
  Worst w1, w2;
  for (int i = 0; i < alpha_steps; ++i) {
    long double s1 = 0, s2 = 0;
    std::uint64_t n = 0;
    std::uint64_t r = 0;  // i n mod steps
    for (int j = 0; j < x_points; ++j) {
      const std::uint64_t upto = std::min<std::uint64_t>(n_max, static_cast<std::uint64_t>(std::floor(xs[j])));
      while (n < upto) {
        ++n;
        r += static_cast<std::uint64_t>(i);
        r %= static_cast<std::uint64_t>(alpha_steps);
        s1 += (1.0 - cos_t[r]) / n;
        s2 += std::fabs(sin_t[r]) / n;
      }
      const double x = xs[j];
      const double rhs1 = std::log(x) + base + 3 / x;
      const Json inst{{"alpha", static_cast<double>(i) / alpha_steps}, {"x", x}};
      w1.offer(static_cast<double>(s1), rhs1, inst);
      w2.offer(static_cast<double>(s2), 2 / kPi * rhs1, inst);
    }
  }
  const std::string grid = std::to_string(alpha_steps) + " x " + std::to_string(x_points) + " grid, worst point";
  return {make_check("li2.cos", w1.instance, w1.lhs, w1.rhs, grid),
          make_check("li2.sin", w2.instance, w2.lhs, w2.rhs, grid)};
}

}  // namespace pvc::verify
