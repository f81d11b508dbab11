#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "characters/characters.hpp"
#include "characters/multiplicative.hpp"
#include "doctest.h"
#include "numerics/error.hpp"
#include "numerics/sieve.hpp"

using namespace pvc;
using namespace pvc::characters;

namespace {

bool close(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// Number of primitive characters mod d as sum_{e|d} mu(d/e) phi(e).
long primitive_count(std::uint64_t d, const numerics::ArithTables& t) {
  long s = 0;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) s += t.mobius[d / e] * static_cast<long>(t.phi[e]);
  return s;
}

const CharacterRep& quadratic(const std::vector<CharacterRep>& chars) {
  for (const auto& c : chars)
    if (!c.principal() && close(c.value(2) * c.value(2), 1.0) && close(c.value(3) * c.value(3), 1.0)) return c;
  throw std::runtime_error("no quadratic character");
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_characters(5, CharFilter::primitive).size() == 3);
  CHECK(enumerate_characters(3, CharFilter::all).size() == 2);
  CHECK_THROWS_AS(enumerate_characters(2, CharFilter::all), pvc::Error);
  CHECK_THROWS_AS(enumerate_characters(1'000'001, CharFilter::all), pvc::Error);
  // q = 4 lies in range only through the group API; the odd character is the lone primitive one
  auto g4 = std::make_shared<const CharacterGroup>(4);
  CharacterRep odd4(g4, {1});
  CHECK(odd4.primitive());
  CHECK(odd4.parity() == Parity::odd);
  CHECK(!CharacterRep(g4, {0}).primitive());

  const auto t = numerics::arith_tables(1000);
  for (std::uint64_t q = 3; q <= 1000; ++q) {
    const auto all = enumerate_characters(q, CharFilter::all);
    REQUIRE(all.size() == t.phi[q]);
    std::map<std::uint64_t, long> by_conductor;
    long even = 0, odd = 0;
    for (const auto& c : all) {
      CHECK(q % c.conductor() == 0);
      ++by_conductor[c.conductor()];
      if (c.primitive()) (c.parity() == Parity::even ? even : odd)++;
    }
    // characters with conductor d are those induced from primitive ones mod d
    for (std::uint64_t d = 1; d <= q; ++d)
      if (q % d == 0) CHECK(by_conductor[d] == primitive_count(d, t));
    CHECK(static_cast<long>(enumerate_characters(q, CharFilter::primitive_even).size()) == even);
    CHECK(static_cast<long>(enumerate_characters(q, CharFilter::primitive_odd).size()) == odd);
  }
}

TEST_CASE("induced characters keep their conductor") {
  for (std::uint64_t q = 3; q <= 100; ++q) {
    const auto all = enumerate_characters(q, CharFilter::all);
    for (std::uint64_t d = 3; d < q; ++d) {
      if (q % d) continue;
      for (const auto& prim : enumerate_characters(d, CharFilter::primitive)) {
        int matches = 0;
        for (const auto& c : all) {
          bool same = true;
          for (std::uint64_t n = 1; n < q && same; ++n)
            if (std::gcd(n, q) == 1 && !close(c.value(n), prim.value(n))) same = false;
          if (same) {
            ++matches;
            CHECK(c.conductor() == d);
          }
        }
        CHECK(matches == 1);
      }
    }
  }
}

TEST_CASE("values") {
  const auto mod5 = enumerate_characters(5, CharFilter::all);
  const auto& quad5 = quadratic(mod5);
  CHECK(close(quad5.value(2), -1.0));
  CHECK(close(quad5.value(4), 1.0));
  for (const auto& c : mod5) CHECK(close(c.value(1), 1.0));
  for (const auto& c : enumerate_characters(6, CharFilter::all)) CHECK(c.value(3) == Complex(0.0));
  for (const auto& c : mod5) CHECK(close(c.value(0), 0.0));
}

TEST_CASE("parity matches chi(-1)") {
  for (std::uint64_t q = 3; q <= 300; ++q)
    for (const auto& c : enumerate_characters(q, CharFilter::all))
      CHECK(close(c.value(q - 1), c.parity() == Parity::even ? 1.0 : -1.0));
}

TEST_CASE("orthogonality") {
  for (std::uint64_t q = 3; q <= 100; ++q) {
    const auto all = enumerate_characters(q, CharFilter::all);
    const double phi = static_cast<double>(all.size());
    for (std::uint64_t n = 0; n < 2 * q; ++n) {
      Complex s = 0.0;
      for (const auto& c : all) s += c.value(n);
      CHECK(close(s, n % q == 1 ? phi : 0.0, 1e-8));
    }
  }
}

TEST_CASE("multiplicativity") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {7ull, 16ull, 45ull, 360ull, 1000ull, 9973ull, 65536ull}) {
    const auto all = enumerate_characters(q, CharFilter::all);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<std::uint64_t> num(1, 10 * q);
    for (int j = 0; j < 5; ++j) {
      const auto& c = all[pick(rng)];
      int done = 0;
      while (done < 500) {
        const auto m = num(rng), n = num(rng);
        if (std::gcd(m * n, q) != 1) continue;
        CHECK(close(c.value(m * n), c.value(m) * c.value(n)));
        ++done;
      }
    }
  }
}

TEST_CASE("sweep tables agree with direct evaluation") {
  for (std::uint64_t q : {3ull, 8ull, 12ull, 32ull, 105ull, 243ull, 720ull}) {
    const auto list = enumerate_characters(q, CharFilter::all);
    std::size_t i = 0;
    for_each_character(q, CharFilter::all, [&](const CharacterRep& c, const SweepView& v) {
      CHECK(c == list[i]);
      const auto direct = index_table(c);
      bool same = v.units.size() == v.index.size();
      for (std::size_t k = 0; k < v.units.size() && same; ++k) same = direct[v.units[k]] == v.index[k];
      CHECK(same);
      CHECK(max_partial_sum(c, v).value == doctest::Approx(max_partial_sum(c).value));
      ++i;
    });
    CHECK(i == list.size());
  }
}

TEST_CASE("gauss sums") {
  const auto mod3 = enumerate_characters(3, CharFilter::primitive);
  const auto& quad3 = mod3.front();
  CHECK(close(gauss_sum(quad3), Complex(0.0, std::sqrt(3.0))));
  CHECK(std::abs(std::abs(gauss_sum(quadratic(enumerate_characters(5, CharFilter::all)))) - std::sqrt(5.0)) < 1e-9);
  for (std::uint64_t q = 3; q <= 200; ++q)
    for (const auto& c : enumerate_characters(q, CharFilter::primitive))
      CHECK(std::abs(std::abs(gauss_sum(c)) - std::sqrt(static_cast<double>(q))) < 1e-9);
}

TEST_CASE("max partial sums") {
  const auto mod5 = enumerate_characters(5, CharFilter::all);
  const auto r5 = max_partial_sum(quadratic(mod5));
  CHECK(r5.value == doctest::Approx(1.0));
  CHECK(r5.argmax == 1);
  const auto mod3 = enumerate_characters(3, CharFilter::primitive);
  const auto r3 = max_partial_sum(mod3.front());
  CHECK(r3.value == doctest::Approx(1.0));
  CHECK(r3.argmax == 1);
  auto g4 = std::make_shared<const CharacterGroup>(4);
  CHECK(max_partial_sum(CharacterRep(g4, {1})).value == doctest::Approx(1.0));

  // half scan against a full brute-force scan
  for (std::uint64_t q = 3; q <= 80; ++q) {
    for (const auto& c : enumerate_characters(q, CharFilter::all)) {
      double best = -1;
      std::uint64_t arg = 0;
      Complex s = 0.0;
      for (std::uint64_t n = 1; n <= q; ++n) {
        s += c.value(n);
        if (std::abs(s) > best + 1e-9) { best = std::abs(s); arg = n; }
      }
      const auto r = max_partial_sum(c);
      CHECK(r.value == doctest::Approx(best).epsilon(1e-12));
      CHECK(r.argmax == arg);
    }
  }
}

TEST_CASE("exponential sums of multiplicative functions") {
  CHECK(close(partial_exp_sum(mult_ones(), 0.0, 100), 100.0));
  CHECK(close(partial_exp_sum(mult_ones(), 0.5, 2), 0.0));
  // direct summation oracle
  CHECK(close(partial_exp_sum(mult_mobius(), 1.0 / 3.0, 1000), Complex(11.000000000001199, 3.4641016151390494), 1e-8));
  const auto mu = mult_values(mult_mobius(), 1000);
  CHECK(close(exp_sum_rational(mu, 1, 3), Complex(11.0, 3.4641016151390494), 1e-9));
  CHECK(mu[30] == Complex(-1.0));
  CHECK(mu[12] == Complex(0.0));
  const auto d = mult_values(mult_delta(), 50);
  CHECK(d[1] == Complex(1.0));
  CHECK(d[6] == Complex(0.0));

  const auto r = mult_values(mult_random_disk(99, 2.0), 5000);
  const auto r2 = mult_values(mult_random_disk(99, 2.0), 5000);
  CHECK(r == r2);
  CHECK(close(r[6], r[2] * r[3], 1e-12));
  CHECK(close(r[360], r[8] * r[9] * r[5], 1e-12));
  for (std::size_t p : {2, 3, 5, 4999}) CHECK(std::abs(r[p]) <= 2.0);

  MultSpec bad{"bad", 1.0, [](std::uint64_t p, int) { return Complex(p == 7 ? 1.5 : 1.0); }};
  CHECK_THROWS_AS(mult_values(bad, 100), pvc::Error);
  CHECK_THROWS_AS(mult_values(mult_ones(), kMaxExpSumLength + 1), pvc::Error);
}
