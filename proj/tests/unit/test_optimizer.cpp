#include <cmath>
#include <numbers>

#include "doctest.h"
#include "numerics/error.hpp"
#include "optimizer/optimizer.hpp"

using namespace pvc;
using namespace pvc::optimizer;

TEST_CASE("constraint examples") {
  auto cs = constants::constraint_set(QScale::from_loglog(22), 4, 0.1, 300, 0.53);
  for (const auto& c : cs) CHECK_MESSAGE(c.satisfied, c.name);
  cs = constants::constraint_set(QScale::from_loglog(17), 4, 0.125 * (1 - 1e-4), 300, 0.53);
  CHECK_FALSE(cs[3].satisfied);
  cs = constants::constraint_set(QScale::from_loglog(50), 2, 0.1, 300, 0.53);
  CHECK_FALSE(cs[1].satisfied);
}

TEST_CASE("F-S crossover") {
  CHECK(fs_crossover(0.1, 2727, Parity::even).to_real() == doctest::Approx(538189.5279914027).epsilon(1e-12));
  CHECK(fs_crossover(0.1, 5449, Parity::odd).to_real() == doctest::Approx(684615.8710702877).epsilon(1e-12));
  CHECK(fs_crossover(0.1, 3000, Parity::even) > fs_crossover(0.1, 2727, Parity::even));
  CHECK(fs_crossover(0.11, 2727, Parity::even) > fs_crossover(0.1, 2727, Parity::even));
  CHECK(fs_crossover(0.12, 5449, Parity::odd) > fs_crossover(0.1, 5449, Parity::odd));
  CHECK_THROWS_AS(fs_crossover(0.125, 2727, Parity::even), pvc::Error);
}

TEST_CASE("optimize at the first small-eps row") {
  const auto r = optimize_h(0.1, QScale::from_loglog(22));
  CHECK(r.h[0] == doctest::Approx(1842.17).epsilon(1e-5));
  CHECK(r.h[1] == doctest::Approx(3680.21).epsilon(1e-5));
  CHECK(r.m == 0.53);
  CHECK(r.E[0] == doctest::Approx(4.0));
  for (const auto& c : r.constraints) CHECK(c.satisfied);
  CHECK(r.binding == "eps/2 > delta(q)");
  CHECK(r.binding_loglog_q == doctest::Approx(21.947).epsilon(1e-3));
  CHECK(r.h_ceil[0] == std::ceil(r.h[0]));
}

TEST_CASE("grid refinement stability") {
  SearchGrid fine;
  fine.gamma_step = 0.125;
  for (auto [eps, ll] : table_rows("table3")) {
    const auto a = optimize_h(eps, QScale::from_loglog(ll));
    const auto b = optimize_h(eps, QScale::from_loglog(ll), DivisorMode::robin(), fine);
    CHECK(std::fabs(a.h[0] - b.h[0]) <= 0.5);
    CHECK(std::fabs(a.h[1] - b.h[1]) <= 0.5);
  }
}

TEST_CASE("infeasible point") {
  CHECK_THROWS_AS(optimize_h(0.125 * (1 - 1e-4), QScale::from_loglog(17)), pvc::Error);
  CHECK_THROWS_AS(optimize_h(0.2, QScale::from_loglog(22)), pvc::Error);
}

TEST_CASE("tables") {
  const auto t2 = reproduce_table("table2", 1);
  REQUIRE(t2.size() == 4);
  for (std::size_t i = 1; i < t2.size(); ++i) CHECK(t2[i].h[0] > t2[i - 1].h[0]);
  const auto t4 = reproduce_table("table4", 1);
  REQUIRE(t4.size() == 4);
  for (const auto& r : t4) {
    CHECK(r.loglog_q0[1] > r.loglog_q0[0]);
    const auto q = QScale::from_loglog(r.loglog_q0[0]);
    CHECK(q.log_q() >= fs_crossover(r.eps, r.h[0], Parity::even));
  }
  CHECK_THROWS_AS(reproduce_table("table9"), pvc::Error);
}
