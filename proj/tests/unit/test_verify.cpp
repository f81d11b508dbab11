#include <cmath>
#include <map>

#include "characters/characters.hpp"
#include "doctest.h"
#include "numerics/error.hpp"
#include "verify/verify.hpp"

using namespace pvc;
using namespace pvc::verify;

namespace {
const CheckReport& by_id(const std::vector<CheckReport>& v, const std::string& id) {
  for (const auto& r : v)
    if (r.check_id == id) return r;
  FAIL("missing check " << id);
  return v.front();
}
}  // namespace

TEST_CASE("make_check tolerance") {
  CHECK(make_check("x", {}, 1.0, 1.0).pass);
  CHECK(make_check("x", {}, 1.0 + 1e-12, 1.0).pass);
  CHECK_FALSE(make_check("x", {}, 1.001, 1.0).pass);
  CHECK_FALSE(make_check("x", {}, NAN, 1.0).pass);
}

TEST_CASE("elementary series") {
  const auto r = check_lemma_dis(1'000'000);
  REQUIRE(r.size() == 10);
  CHECK(by_id(r, "dis.geometric").pass);
  CHECK(by_id(r, "dis.geometric").lhs == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(by_id(r, "dis.geometric_partial").pass);
  CHECK(by_id(r, "dis.sqrt_n").lhs == doctest::Approx(4.145044402656633).epsilon(1e-12));
  CHECK(by_id(r, "dis.sqrt_n_plus_1").lhs == doctest::Approx(4.861978010875695).epsilon(1e-12));
  CHECK(by_id(r, "dis.sqrt_n").pass);
  CHECK(by_id(r, "dis.logp_over_pm1_sq").pass);
  CHECK(by_id(r, "dis.logp_over_p_pm1").pass);
  CHECK(by_id(r, "dis.product").pass);
  CHECK(by_id(r, "dis.logn_over_n2").pass);
  CHECK(by_id(r, "dis.logn_over_n2").lhs == doctest::Approx(0.9375482543).epsilon(1e-5));
  // with p = 2 included these two exceed their constants
  CHECK_FALSE(by_id(r, "dis.log2p_over_p2").pass);
  CHECK(by_id(r, "dis.log2p_over_p2").lhs == doctest::Approx(0.741596).epsilon(1e-3));
  CHECK_FALSE(by_id(r, "dis.j_logp_over_pj").pass);
}

TEST_CASE("log integral") {
  CHECK(log_integral(100) == doctest::Approx(29.080977803962137).epsilon(1e-11));
  CHECK(log_integral(2) == 0);
  CHECK_THROWS_AS(log_integral(1.5), pvc::Error);
}

TEST_CASE("prime bounds") {
  const auto r = check_prime_bounds(100'000, 100'000);
  for (const auto& c : r) CHECK_MESSAGE(c.pass, c.check_id << " " << c.instance.dump());
  const auto& pi = by_id(r, "primes.pi");
  CHECK(pi.instance["x"] == 113);
  CHECK(pi.lhs == 30);
  CHECK(pi.rhs == doctest::Approx(30.00003).epsilon(1e-6));
}

TEST_CASE("trigonometric sums") {
  // hand check at alpha = 1/2, x = 10
  double s = 0;
  for (int n = 1; n <= 10; ++n) s += (1 - std::cos(std::acos(-1.0) * n)) / n;
  CHECK(s == doctest::Approx(3.5746).epsilon(1e-4));
  const auto r = check_li2(1e3, 200, 60);
  REQUIRE(r.size() == 2);
  CHECK(r[0].pass);
  CHECK(r[1].pass);
}

TEST_CASE("congruence count") {
  CHECK(congruence_count(499, 400, 28, 0) == 256760);
  CHECK(congruence_count(997, 600, 33, 0) == 407347);
  CHECK(congruence_count(1009, 500, 30, 17) == 233928);
  const auto r = check_congruence_count(499, 400, 28, 0);
  CHECK(r.pass);
  CHECK(r.rhs == doctest::Approx(591187.0704056701).epsilon(1e-12));
  CHECK_THROWS_AS(check_congruence_count(499, 500, 28, 0), pvc::Error);
  CHECK_THROWS_AS(check_congruence_count(499, 300, 27, 0), pvc::Error);

  // brute force over ordered pairs, both orientations
  const std::uint64_t q = 101, N = 40, U = 7, M = 5;
  std::uint64_t forward = 0, swapped = 0;
  for (std::uint64_t n1 = M; n1 <= M + N; ++n1)
    for (std::uint64_t u1 = 1; u1 <= U; ++u1)
      for (std::uint64_t n2 = M; n2 <= M + N; ++n2)
        for (std::uint64_t u2 = 1; u2 <= U; ++u2) {
          forward += (n1 * u1) % q == (n2 * u2) % q;
          swapped += (n2 * u2) % q == (n1 * u1) % q;
        }
  CHECK(congruence_count(q, N, U, M) == forward);
  CHECK(forward == swapped);

  const auto suite = congruence_suite(7, 20);
  CHECK(suite.size() == 23);
  for (const auto& c : suite) CHECK(c.pass);
}

TEST_CASE("fourth moment") {
  const auto r3 = check_fourth_moment(3, 1, 1);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].lhs == doctest::Approx(2.0));
  CHECK(r3[0].rhs == doctest::Approx(48 + 4 * std::sqrt(3.0) * 64));
  const auto r7 = check_fourth_moment(7, 2, 2);
  CHECK(r7.size() == 5);
  for (const auto& c : r7) CHECK(c.pass);

  // conjugate pairs give equal LHS
  const auto r = check_fourth_moment(45, 2, 3);
  const auto chars = characters::enumerate_characters(45, characters::CharFilter::primitive);
  REQUIRE(chars.size() == r.size());
  std::map<std::vector<std::uint32_t>, double> lhs;
  for (const auto& c : r) lhs[c.instance["chi"].get<std::vector<std::uint32_t>>()] = c.lhs;
  for (const auto& chi : chars)
    CHECK(lhs.at(chi.exponents()) == doctest::Approx(lhs.at(chi.conjugate().exponents())).epsilon(1e-9));
  CHECK_THROWS_AS(check_fourth_moment(7, 1, 7), pvc::Error);
}

TEST_CASE("bilinear reduction") {
  const auto a = check_bilinear_reduction(characters::mult_ones(), phase_zero(), 100);
  CHECK(a.lhs == doctest::Approx(100));
  CHECK(a.pass);
  CHECK(check_bilinear_reduction(characters::mult_mobius(), phase_linear(0.137), 1000).pass);
  const auto d = check_bilinear_reduction(characters::mult_delta(), phase_zero(), 50);
  CHECK(d.lhs == doctest::Approx(1));
  CHECK(d.pass);
  for (const auto& c : bilinear_suite(3)) CHECK_MESSAGE(c.pass, c.instance.dump());
}

TEST_CASE("t1 and c1") {
  CHECK(check_t1(characters::mult_ones(), 1, 5, 1000, 4).pass);
  CHECK(check_t1(characters::mult_mobius(), 3, 7, 10000, 4).pass);
  CHECK(check_c1(characters::mult_ones(), 2, 101, 5000, 4, 20, 2.0 / 101).pass);
  CHECK_THROWS_AS(check_t1(characters::mult_ones(), 2, 6, 1000, 4), pvc::Error);
  CHECK_THROWS_AS(check_t1(characters::mult_ones(), 1, 5, 4, 4), pvc::Error);
  CHECK_THROWS_AS(check_c1(characters::mult_ones(), 2, 101, 5000, 4, 20, 0.5), pvc::Error);
  const auto suite = t1c1_suite(11, 30, 1);
  CHECK(suite.size() == 33);
  for (const auto& c : suite) CHECK_MESSAGE(c.pass, c.instance.dump());
}

TEST_CASE("empirical partial sums") {
  const auto res = empirical_pv(3, 400, 1);
  for (const auto& r : res.reports) CHECK_MESSAGE(r.pass, r.instance.dump());
  bool seen = false;
  for (const auto& row : res.summary["by_q"])
    if (row["q"] == 5 && row["parity"] == "even") {
      CHECK(row["max_ratio"].get<double>() == doctest::Approx(0.27786943009413507).epsilon(1e-12));
      seen = true;
    }
  CHECK(seen);
  CHECK(res.summary["odd"]["characters"].get<std::uint64_t>() > 0);
}

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 8);
  CHECK_THROWS_AS(run_suite("nope"), pvc::Error);
}
