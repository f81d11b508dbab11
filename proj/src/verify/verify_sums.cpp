#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "constants/constants.hpp"
#include "numerics/error.hpp"
#include "numerics/logreal.hpp"
#include "numerics/parallel.hpp"
#include "numerics/qscale.hpp"
#include "numerics/sieve.hpp"
#include "verify/verify.hpp"

namespace pvc::verify {

using characters::MultSpec;
using numerics::LogReal;
using numerics::QScale;
using Complex = std::complex<double>;

namespace {

Complex e_of(double x) {
  const double f = x - std::floor(x);
  return std::polar(1.0, 2 * std::numbers::pi * f);
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

PhaseSpec phase_zero() { return {"0", [](std::uint64_t) { return 0.0; }}; }
PhaseSpec phase_linear(double theta) {
  return {"n*" + fmt(theta), [theta](std::uint64_t n) { return std::fmod(static_cast<double>(n) * theta, 1.0); }};
}
PhaseSpec phase_quadratic(double theta) {
  return {"n^2*" + fmt(theta), [theta](std::uint64_t n) {
            const double nn = static_cast<double>(n);
            return std::fmod(std::fmod(nn * nn, 1e12) * theta, 1.0);
          }};
}

CheckReport check_bilinear_reduction(const MultSpec& f, const PhaseSpec& g, std::uint64_t N) {
  if (N < 4) throw_usage("bilinear reduction: N >= 4 required");
  const auto w = characters::mult_values(f, N);
  std::vector<Complex> ph(N + 1);
  for (std::uint64_t n = 1; n <= N; ++n) ph[n] = e_of(g.g(n));
  Complex lhs{};
  for (std::uint64_t n = 1; n <= N; ++n) lhs += w[n] * ph[n];
  Complex second{};
  for (auto p : numerics::primes_upto(N)) {
    const Complex fp = w[p] * std::log(static_cast<double>(p));
    Complex inner{};
    for (std::uint64_t n = 1; n * p <= N; ++n) inner += w[n] * ph[n * p];
    second += fp * inner;
  }
  const double B = f.bound, lN = std::log(static_cast<double>(N));
  const double first = (B + 2.56 * B * B) * static_cast<double>(N) / lN;
  return make_check("bilinear", Json{{"f", f.name}, {"g", g.name}, {"N", N}}, std::abs(lhs), first + std::abs(second) / lN,
                    "first term " + fmt(first) + ", bilinear term " + fmt(std::abs(second) / lN));
}

std::vector<CheckReport> bilinear_suite(std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.push_back(check_bilinear_reduction(characters::mult_ones(), phase_zero(), 100));
  out.push_back(check_bilinear_reduction(characters::mult_mobius(), phase_linear(0.137), 1000));
  out.push_back(check_bilinear_reduction(characters::mult_delta(), phase_zero(), 50));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double B = 1 + unit(rng);
    const auto f = characters::mult_random_disk(rng(), B);
    const double theta = unit(rng);
    const auto g = i % 2 == 0 ? phase_linear(theta) : phase_quadratic(theta);
    const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(4, 20000)(rng);
    out.push_back(check_bilinear_reduction(f, g, N));
  }
  return out;
}

CheckReport check_t1(const MultSpec& f, std::int64_t a, std::uint64_t q, std::uint64_t N, double E) {
  if (q < 4 || q > N) throw_usage("t1: hypothesis 4 <= q <= N violated");
  if (std::gcd(static_cast<std::uint64_t>(std::llabs(a)), q) != 1) throw_usage("t1: hypothesis gcd(a, q) = 1 violated");
  if (!(E >= 4)) throw_usage("t1: hypothesis E >= 4 violated");
  const double R = static_cast<double>(N) / static_cast<double>(q);
  if (!(std::log(R) > 3 - std::log(E))) throw_usage("t1: N/q > e^3/E needed for the b3 term");
  const auto b = constants::b_funcs(f.bound, E, LogReal::from_real(R), QScale::exact(static_cast<double>(q)));
  const auto w = characters::mult_values(f, N);
  const double lhs = std::abs(characters::exp_sum_rational(w, a, q));
  const double Nd = static_cast<double>(N), qd = static_cast<double>(q);
  const double phi = static_cast<double>(numerics::euler_phi(q));
  const double rhs = b.b1 * Nd / std::log(Nd) + b.b2 * Nd / std::sqrt(phi) +
                     b.b3 * std::sqrt(Nd * qd) * std::pow(std::log(E * R), 1.5);
  return make_check("t1", Json{{"f", f.name}, {"a", a}, {"q", q}, {"N", N}, {"E", E}}, lhs, rhs);
}

CheckReport check_c1(const MultSpec& f, std::int64_t a, std::uint64_t q, std::uint64_t N, double E, double R,
                     double alpha) {
  const double qd = static_cast<double>(q), Nd = static_cast<double>(N);
  if (std::gcd(static_cast<std::uint64_t>(std::llabs(a)), q) != 1) throw_usage("c1: hypothesis gcd(a, q) = 1 violated");
  if (!(std::fabs(alpha - static_cast<double>(a) / qd) <= 1 / (qd * qd) * (1 + 1e-12)))
    throw_usage("c1: hypothesis |alpha - a/q| <= q^-2 violated");
  if (!(E >= 4)) throw_usage("c1: hypothesis E >= 4 violated");
  if (!(R >= std::exp(3.0) / E && R <= qd && qd <= Nd / R)) throw_usage("c1: hypothesis e^3/E <= R <= q <= N/R violated");
  if (!(std::log(std::log(R)) > 1)) throw_usage("c1: log log R > 1 needed for c2");
  const auto c = constants::c1_c2(f.bound, E, LogReal::from_real(R), QScale::exact(qd));
  const auto w = characters::mult_values(f, N);
  const double lhs = std::abs(characters::exp_sum(w, alpha));
  const double rhs = c.c1 * Nd / std::log(Nd) + c.c2 * Nd * std::pow(std::log(E * R), 1.5) / std::sqrt(R);
  return make_check("c1", Json{{"f", f.name}, {"a", a}, {"q", q}, {"N", N}, {"E", E}, {"R", R}, {"alpha", alpha}}, lhs,
                    rhs);
}

std::vector<CheckReport> t1c1_suite(std::uint64_t seed, int count, unsigned threads) {
  if (threads == 0) threads = default_threads();
  std::vector<std::function<CheckReport()>> jobs;
  jobs.push_back([] { return check_t1(characters::mult_ones(), 1, 5, 1000, 4); });
  jobs.push_back([] { return check_t1(characters::mult_mobius(), 3, 7, 10000, 4); });
  jobs.push_back([] { return check_c1(characters::mult_ones(), 2, 101, 5000, 4, 20, 2.0 / 101); });
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto pick_f = [&](int i) -> MultSpec {
    switch (i % 3) {
      case 0: return characters::mult_random_disk(rng(), 1 + unit(rng));
      case 1: return characters::mult_mobius();
      default: return characters::mult_ones();
    }
  };
  auto coprime = [&](std::uint64_t q) {
    for (;;) {
      const auto a = std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(q) - 1)(rng);
      if (std::gcd(static_cast<std::uint64_t>(a), q) == 1) return a;
    }
  };
  for (int i = 0; i < count; ++i) {
    const MultSpec f = pick_f(i / 2);
    const double E = 4 * std::exp(std::log(4.0) * unit(rng));  // [4, 16]
    if (i % 2 == 0) {
      const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(4, 300)(rng);
      const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(6 * q, 20000)(rng);
      const auto a = coprime(q);
      jobs.push_back([=] { return check_t1(f, a, q, N, E); });
    } else {
      const double R = 16 + 24 * unit(rng);
      const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(R)), 300)(rng);
      const auto lo = static_cast<std::uint64_t>(std::ceil(R * static_cast<double>(q)));
      const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(lo, std::max<std::uint64_t>(lo, 20000))(rng);
      const auto a = coprime(q);
      const double qd = static_cast<double>(q);
      const double alpha = static_cast<double>(a) / qd + (2 * unit(rng) - 1) / (qd * qd);
      jobs.push_back([=] { return check_c1(f, a, q, N, E, R, alpha); });
    }
  }
  std::vector<CheckReport> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = jobs[i](); });
  return out;
}

}  // namespace pvc::verify
