#pragma once

#include <cstdint>
#include <vector>

namespace pvc::numerics {

inline constexpr std::uint64_t kSieveBudget = 1'000'000'000;

/// All primes <= x in ascending order (segmented sieve of Eratosthenes).
/// Requires 2 <= x <= kSieveBudget.
std::vector<std::uint32_t> primes_upto(std::uint64_t x, unsigned threads = 0);

/// Multiplicative-function tables on [0, n]: smallest prime factor, Euler phi,
/// divisor count and Moebius, from a linear sieve. Index 0 is unused.
struct ArithTables {
  std::vector<std::uint32_t> spf;
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> divisors;
  std::vector<std::int8_t> mobius;
  std::vector<std::uint32_t> primes;

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf.size() - 1); }
};

ArithTables arith_tables(std::uint32_t n);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Trial-division factorisation into (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace pvc::numerics
