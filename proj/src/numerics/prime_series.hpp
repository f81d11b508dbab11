#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numerics/logreal.hpp"

namespace pvc::numerics {

/// Rigorous enclosure [lower, upper] of a real value.
struct Bracket {
  LogReal lower;
  LogReal upper;
};

enum class SeriesKind { sum, product };

inline constexpr std::uint64_t kDefaultPrimeCutoff = 10'000'000;

/// A registered prime sum or product with its tail majorant.
struct PrimeTermInfo {
  std::string id;
  SeriesKind kind;
  std::string range;     // e.g. "p >= 2"
  std::string majorant;  // integrand used for the tail bound
};

/// Ids of all registered terms, in a fixed order.
const std::vector<PrimeTermInfo>& registered_prime_terms();

/// Partial sum (product) over primes <= cutoff plus an integral tail bound.
///
/// Registered ids: "(log p)^2/p^2", "log p/(p-1)^2", "log p/(p(p-1))",
/// "j log p/p^j", "1+1/(p^3-p^2-2p)". Throws usage errors for an unknown id,
/// a kind that does not match the id, or cutoff < 1000.
Bracket prime_series(SeriesKind kind, std::string_view term, std::uint64_t cutoff = kDefaultPrimeCutoff);

/// Same, reusing a caller-supplied ascending prime list covering [2, cutoff].
Bracket prime_series(SeriesKind kind, std::string_view term, std::uint64_t cutoff,
                     std::span<const std::uint32_t> primes);

}  // namespace pvc::numerics
