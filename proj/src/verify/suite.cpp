#include <stdexcept>

#include "numerics/error.hpp"
#include "numerics/parallel.hpp"
#include "verify/verify.hpp"

namespace pvc::verify {

namespace {
constexpr std::uint64_t kPvRange = 5000;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dis", "primes", "li2", "congruence", "moment4", "bilinear", "t1c1", "pv"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, unsigned threads) {
  if (threads == 0) threads = default_threads();
  if (name == "all") {
    std::vector<SuiteResult> all;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, seed, threads);
      all.push_back(std::move(r.front()));
    }
    return all;
  }
  SuiteResult r;
  r.suite = name;
  if (name == "dis") r.reports = check_lemma_dis();
  else if (name == "primes") r.reports = check_prime_bounds(1'000'000, 1'000'000, threads);
  else if (name == "li2") r.reports = check_li2();
  else if (name == "congruence") r.reports = congruence_suite(seed);
  else if (name == "moment4") r.reports = fourth_moment_suite(200, threads);
  else if (name == "bilinear") r.reports = bilinear_suite(seed);
  else if (name == "t1c1") r.reports = t1c1_suite(seed, 100, threads);
  else if (name == "pv") {
    auto pv = empirical_pv(3, kPvRange, threads);
    r.reports = std::move(pv.reports);
    r.summary = std::move(pv.summary);
  } else {
    throw_usage("unknown suite '" + name + "'");
  }
  return {std::move(r)};
}

}  // namespace pvc::verify
