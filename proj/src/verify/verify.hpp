#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "characters/multiplicative.hpp"
#include "json.hpp"

namespace pvc::verify {

using Json = nlohmann::ordered_json;

/// One checked inequality lhs <= rhs at one instance.
struct CheckReport {
  std::string check_id;
  Json instance;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;  // rhs - lhs
  bool pass = false;
  std::string notes;
};

inline constexpr double kDefaultRelTol = 1e-9;

/// pass iff rhs - lhs >= -rel_tol |rhs|.
CheckReport make_check(std::string id, Json instance, double lhs, double rhs, std::string notes = {},
                       double rel_tol = kDefaultRelTol);

// ---- series and prime bounds ----

/// The ten sums and products of the elementary-series lemma, with tail brackets.
std::vector<CheckReport> check_lemma_dis(std::uint64_t cutoff = 10'000'000);

/// pi(x), Li(x), phi(n), d(n) bounds and the weak Siebert check.
std::vector<CheckReport> check_prime_bounds(std::uint64_t x_max = 1'000'000, std::uint64_t n_max = 1'000'000,
                                            unsigned threads = 0);

/// Li(x) = int_2^x dt/log t by adaptive Gauss-Kronrod quadrature.
double log_integral(double x);

/// Both trigonometric-sum inequalities over an alpha grid of `alpha_steps` points
/// in [0, 1) and `x_points` log-spaced x in [1, x_max]; one report each (worst point).
std::vector<CheckReport> check_li2(double x_max = 1e4, int alpha_steps = 1000, int x_points = 200);

// ---- character-sum lemmas ----

/// Exhaustive count of n1 u1 = n2 u2 mod q against 2UN(NU/q + log(1.85U)).
/// Usage error unless N < q and 28 <= U <= N/12.
CheckReport check_congruence_count(std::uint64_t q, std::uint64_t N, std::uint64_t U, std::uint64_t M);
std::uint64_t congruence_count(std::uint64_t q, std::uint64_t N, std::uint64_t U, std::uint64_t M);
std::vector<CheckReport> congruence_suite(std::uint64_t seed, int count = 20);

/// One report per primitive character mod q. Usage error unless V < q and q <= 500.
std::vector<CheckReport> check_fourth_moment(std::uint64_t q, std::uint64_t k, std::uint64_t V);
/// q <= q_max, k in {1,2,3}, V in {1, q^{1/4}, q^{1/2}}; worst character per (q, k, V).
std::vector<CheckReport> fourth_moment_suite(std::uint64_t q_max = 200, unsigned threads = 0);

/// A real phase function n -> g(n), used as e(g(n)).
struct PhaseSpec {
  std::string name;
  std::function<double(std::uint64_t)> g;
};
PhaseSpec phase_zero();
PhaseSpec phase_linear(double theta);
PhaseSpec phase_quadratic(double theta);

/// The bilinear-reduction inequality by direct summation. Usage error if N < 4.
CheckReport check_bilinear_reduction(const characters::MultSpec& f, const PhaseSpec& g, std::uint64_t N);
std::vector<CheckReport> bilinear_suite(std::uint64_t seed);

/// Rational-point mode: 4 <= q <= N, gcd(a, q) = 1, E >= 4.
CheckReport check_t1(const characters::MultSpec& f, std::int64_t a, std::uint64_t q, std::uint64_t N, double E);
/// Approximation mode: |alpha - a/q| <= q^-2 and e^3/E <= R <= q <= N/R.
CheckReport check_c1(const characters::MultSpec& f, std::int64_t a, std::uint64_t q, std::uint64_t N, double E, double R,
                     double alpha);
std::vector<CheckReport> t1c1_suite(std::uint64_t seed, int count = 100, unsigned threads = 0);

struct PVResult {
  std::vector<CheckReport> reports;
  Json summary;
};

/// Maximal partial sums of every primitive character with q in [q_lo, q_hi]
/// against the F-S bound (asserted inside its validity range) and Pomerance's.
PVResult empirical_pv(std::uint64_t q_lo, std::uint64_t q_hi, unsigned threads = 0);

// ---- suites ----

const std::vector<std::string>& suite_names();

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;
  Json summary;  // null unless the suite produces one
};

/// Runs one named suite ("dis", "primes", ..., "pv") or all of them for "all".
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed = 1, unsigned threads = 0);

}  // namespace pvc::verify
