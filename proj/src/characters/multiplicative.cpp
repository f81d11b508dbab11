#include "characters/multiplicative.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "numerics/error.hpp"

namespace pvc::characters {

using Complex = std::complex<double>;

MultSpec mult_ones() {
  return {"ones", 1.0, [](std::uint64_t, int) { return Complex(1.0); }};
}

MultSpec mult_mobius() {
  return {"mobius", 1.0, [](std::uint64_t, int k) { return Complex(k == 1 ? -1.0 : 0.0); }};
}

MultSpec mult_delta() {
  return {"delta", 1.0, [](std::uint64_t, int) { return Complex(0.0); }};
}

MultSpec mult_random_disk(std::uint64_t seed, double B) {
  if (!(B > 0)) throw_usage("random multiplicative function: bound must be positive");
  return {"random_disk", B, [seed, B](std::uint64_t p, int k) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32),
                              static_cast<std::uint32_t>(k)};
            std::mt19937_64 rng(seq);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double r = B * std::sqrt(u(rng));
            const double t = 2.0 * std::numbers::pi * u(rng);
            return std::polar(r, t);
          }};
}

std::vector<Complex> mult_values(const MultSpec& f, std::uint64_t N) {
  if (N > kMaxExpSumLength) throw_usage("exponential sum length above budget");
  if (!f.prime_power) throw_usage("multiplicative function has no prime-power values");
  const double limit = f.bound * (1.0 + 1e-12);
  std::vector<Complex> out(N + 1, 0.0);
  if (N == 0) return out;
  out[1] = 1.0;
  std::vector<std::uint32_t> spf(N + 1, 0);
  // prime-power part of n for its smallest prime, and the exponent
  std::vector<std::uint32_t> ppart(N + 1, 0);
  std::vector<std::uint8_t> pexp(N + 1, 0);
  for (std::uint64_t i = 2; i <= N; ++i) {
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= N; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint32_t p = spf[n];
    const std::uint64_t r = n / p;
    if (r % p == 0) {
      ppart[n] = ppart[r] * p;
      pexp[n] = pexp[r] + 1;
    } else {
      ppart[n] = p;
      pexp[n] = 1;
    }
    if (ppart[n] == n) {
      const Complex v = f.prime_power(p, pexp[n]);
      if (std::abs(v) > limit)
        throw_usage("multiplicative function '" + f.name + "' exceeds its bound at " + std::to_string(p) + "^" +
                    std::to_string(pexp[n]));
      out[n] = v;
    } else {
      out[n] = out[ppart[n]] * out[n / ppart[n]];
    }
  }
  return out;
}

Complex exp_sum(std::span<const Complex> w, double alpha) {
  Complex s = 0.0;
  for (std::size_t n = 1; n < w.size(); ++n) {
    if (w[n] == 0.0) continue;
    const double x = static_cast<double>(n) * alpha;
    const double t = 2.0 * std::numbers::pi * (x - std::floor(x));
    s += w[n] * Complex(std::cos(t), std::sin(t));
  }
  return s;
}

Complex exp_sum_rational(std::span<const Complex> w, std::int64_t a, std::uint64_t q) {
  if (q == 0) throw_usage("exp_sum_rational: q must be positive");
  const std::int64_t qq = static_cast<std::int64_t>(q);
  const std::uint64_t ar = static_cast<std::uint64_t>(((a % qq) + qq) % qq);
  Complex s = 0.0;
  std::uint64_t r = 0;
  for (std::size_t n = 1; n < w.size(); ++n) {
    r += ar;
    if (r >= q) r -= q;
    if (w[n] == 0.0) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    s += w[n] * Complex(std::cos(t), std::sin(t));
  }
  return s;
}

Complex partial_exp_sum(const MultSpec& f, double alpha, std::uint64_t N) {
  const auto w = mult_values(f, N);
  return exp_sum(w, alpha);
}

}  // namespace pvc::characters
