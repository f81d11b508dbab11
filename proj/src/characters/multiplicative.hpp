#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pvc::characters {

inline constexpr std::uint64_t kMaxExpSumLength = 10'000'000;

/// A multiplicative f given by its values on prime powers, with |f(p^k)| <= bound.
struct MultSpec {
  std::string name;
  double bound = 1.0;
  std::function<std::complex<double>(std::uint64_t p, int k)> prime_power;
};

MultSpec mult_ones();
MultSpec mult_mobius();
/// f(1) = 1 and f vanishes on every prime power.
MultSpec mult_delta();
/// Values on prime powers uniform in the disk of radius B, fixed by the seed.
MultSpec mult_random_disk(std::uint64_t seed, double B);

/// f(0..N) with f(0) = 0, built from the smallest-prime-factor sieve.
/// Usage error if some |f(p^k)| exceeds the bound or N > kMaxExpSumLength.
std::vector<std::complex<double>> mult_values(const MultSpec& f, std::uint64_t N);

/// sum_{1<=n<N'} w[n] e(n alpha) where N' = w.size().
std::complex<double> exp_sum(std::span<const std::complex<double>> w, double alpha);
/// Same with alpha = a/q, reducing n a mod q exactly.
std::complex<double> exp_sum_rational(std::span<const std::complex<double>> w, std::int64_t a, std::uint64_t q);

/// sum_{n<=N} f(n) e(n alpha).
std::complex<double> partial_exp_sum(const MultSpec& f, double alpha, std::uint64_t N);

}  // namespace pvc::characters
