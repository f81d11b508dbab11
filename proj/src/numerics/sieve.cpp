#include "numerics/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numerics/error.hpp"
#include "numerics/parallel.hpp"

namespace pvc::numerics {

namespace {

constexpr std::uint64_t kSegmentSpan = 1u << 20;  // integers per segment

std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

// Odd primes in [lo, hi), lo odd.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint32_t>& out) {
  const std::uint64_t count = (hi - lo + 1) / 2;  // odd numbers lo, lo+2, ...
  std::vector<char> composite(count, 0);
  for (std::uint32_t p : base) {
    if (p == 2) continue;
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t j = start; j < hi; j += 2 * p) composite[(j - lo) / 2] = 1;
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t v = lo + 2 * i;
    if (v >= hi) break;
    if (!composite[i] && v > 1) out.push_back(static_cast<std::uint32_t>(v));
  }
}

}  // namespace

std::vector<std::uint32_t> primes_upto(std::uint64_t x, unsigned threads) {
  if (x < 2) throw_usage("primes_upto: x must be at least 2");
  if (x > kSieveBudget) throw_resource("primes_upto: x=" + std::to_string(x) + " exceeds the sieve budget of 1e9");
  if (threads == 0) threads = default_threads();

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(x))) + 1;
  const std::vector<std::uint32_t> base = simple_sieve(root);

  const std::uint64_t end = x + 1;  // exclusive
  const std::uint64_t segments = (end + kSegmentSpan - 1) / kSegmentSpan;
  std::vector<std::vector<std::uint32_t>> parts(segments);
  parallel_for(segments, threads, [&](std::size_t s) {
    std::uint64_t lo = s * kSegmentSpan;
    const std::uint64_t hi = std::min(end, lo + kSegmentSpan);
    if (lo % 2 == 0) ++lo;
    if (lo < hi) sieve_segment(lo, hi, base, parts[s]);
  });

  std::vector<std::uint32_t> out;
  std::size_t total = 1;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  out.push_back(2);
  for (const auto& p : parts)
    for (std::uint32_t v : p)
      if (v != 1) out.push_back(v);
  return out;
}

ArithTables arith_tables(std::uint32_t n) {
  if (n < 1) throw_usage("arith_tables: n must be positive");
  if (n > 100'000'000) throw_resource("arith_tables: n exceeds 1e8");
  ArithTables t;
  t.spf.assign(n + 1, 0);
  t.phi.assign(n + 1, 0);
  t.divisors.assign(n + 1, 0);
  t.mobius.assign(n + 1, 0);
  // Exponent of the smallest prime in i, needed to update the divisor count.
  std::vector<std::uint8_t> spf_exp(n + 1, 0);
  t.phi[1] = 1;
  t.divisors[1] = 1;
  t.mobius[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = static_cast<std::uint32_t>(i);
      t.primes.push_back(static_cast<std::uint32_t>(i));
      t.phi[i] = static_cast<std::uint32_t>(i - 1);
      t.divisors[i] = 2;
      t.mobius[i] = -1;
      spf_exp[i] = 1;
    }
    for (std::uint32_t p : t.primes) {
      const std::uint64_t ip = i * p;
      if (p > t.spf[i] || ip > n) break;
      t.spf[ip] = p;
      if (p == t.spf[i]) {
        t.phi[ip] = t.phi[i] * p;
        spf_exp[ip] = static_cast<std::uint8_t>(spf_exp[i] + 1);
        t.divisors[ip] = t.divisors[i] / (spf_exp[i] + 1) * (spf_exp[ip] + 1);
        t.mobius[ip] = 0;
      } else {
        t.phi[ip] = t.phi[i] * (p - 1);
        spf_exp[ip] = 1;
        t.divisors[ip] = t.divisors[i] * 2;
        t.mobius[ip] = static_cast<std::int8_t>(-t.mobius[i]);
      }
    }
  }
  return t;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

}  // namespace pvc::numerics
