#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "characters/characters.hpp"
#include "constants/constants.hpp"
#include "numerics/error.hpp"
#include "numerics/parallel.hpp"
#include "numerics/qscale.hpp"
#include "numerics/sieve.hpp"
#include "verify/verify.hpp"

namespace pvc::verify {

using characters::CharFilter;
using characters::Complex;
using characters::Parity;

namespace {

double rel_margin(const CheckReport& r) { return r.margin / std::max(std::fabs(r.rhs), 1e-300); }

std::uint64_t divisor_count(std::uint64_t q) {
  std::uint64_t d = 1;
  for (auto [p, e] : numerics::factorize(q)) {
    (void)p;
    d *= static_cast<std::uint64_t>(e + 1);
  }
  return d;
}

}  // namespace

std::uint64_t congruence_count(std::uint64_t q, std::uint64_t N, std::uint64_t U, std::uint64_t M) {
  if (q < 2) throw_usage("congruence_count: q >= 2 required");
  // histogram of n u mod q over the box; the count is the sum of squares
  std::vector<std::uint64_t> hist(q, 0);
  for (std::uint64_t u = 1; u <= U; ++u) {
    if (std::gcd(u, q) != 1) continue;
    std::uint64_t r = (M % q) * (u % q) % q;
    const std::uint64_t step = u % q;
    for (std::uint64_t n = 0; n <= N; ++n) {
      ++hist[r];
      r += step;
      if (r >= q) r -= q;
    }
  }
  std::uint64_t total = 0;
  for (auto c : hist) total += c * c;
  return total;
}

CheckReport check_congruence_count(std::uint64_t q, std::uint64_t N, std::uint64_t U, std::uint64_t M) {
  if (!(N < q)) throw_usage("congruence count: N < q required");
  if (U < 28 || 12 * U > N) throw_usage("congruence count: 28 <= U <= N/12 required");
  const std::uint64_t count = congruence_count(q, N, U, M);
  std::uint64_t units = 0;
  for (std::uint64_t u = 1; u <= U; ++u) units += std::gcd(u, q) == 1;
  const double Ud = static_cast<double>(U), Nd = static_cast<double>(N);
  const double rhs = 2 * Ud * Nd * (Nd * Ud / static_cast<double>(q) + std::log(1.85 * Ud));
  const std::uint64_t diagonal = (N + 1) * units;
  return make_check("congruence", Json{{"q", q}, {"N", N}, {"U", U}, {"M", M}}, static_cast<double>(count), rhs,
                    "diagonal lower bound " + std::to_string(diagonal) +
                        (count >= diagonal ? "" : " VIOLATED"));
}

std::vector<CheckReport> congruence_suite(std::uint64_t seed, int count) {
  std::vector<CheckReport> out;
  out.push_back(check_congruence_count(499, 400, 28, 0));
  out.push_back(check_congruence_count(997, 600, 33, 0));
  out.push_back(check_congruence_count(1009, 500, 30, 17));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(400, 2000)(rng);
    const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(336, q - 1)(rng);
    const std::uint64_t U = std::uniform_int_distribution<std::uint64_t>(28, N / 12)(rng);
    const std::uint64_t M = std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng);
    out.push_back(check_congruence_count(q, N, U, M));
  }
  return out;
}

std::vector<CheckReport> check_fourth_moment(std::uint64_t q, std::uint64_t k, std::uint64_t V) {
  if (q < 3 || q > 500) throw_usage("fourth moment: 3 <= q <= 500 required");
  if (V < 1 || V >= q || k < 1) throw_usage("fourth moment: 1 <= V < q and k >= 1 required");
  const double qd = static_cast<double>(q), kd = static_cast<double>(k), Vd = static_cast<double>(V);
  const double d = static_cast<double>(divisor_count(q));
  const double rhs = 16 * qd * kd * kd * Vd * Vd + 4 * std::sqrt(qd) * std::pow(kd, 4) * std::pow(Vd, 4) * std::pow(d, 6);
  std::vector<CheckReport> out;
  std::vector<Complex> val(q);
  characters::for_each_character(q, CharFilter::primitive, [&](const characters::CharacterRep& chi,
                                                               const characters::SweepView& view) {
    const auto& roots = chi.group().roots();
    std::fill(val.begin(), val.end(), Complex{});
    for (std::size_t i = 0; i < view.units.size(); ++i) val[view.units[i]] = roots[view.index[i]];
    long double lhs = 0;
    for (std::uint64_t lam = 1; lam <= q; ++lam) {
      Complex s{};
      for (std::uint64_t v = 1; v <= V; ++v) s += val[(lam + k * v) % q];
      const double a2 = std::norm(s);
      lhs += static_cast<long double>(a2) * a2;
    }
    Json exps = chi.exponents();
    out.push_back(make_check("moment4", Json{{"q", q}, {"k", k}, {"V", V}, {"chi", exps}}, static_cast<double>(lhs), rhs));
  });
  return out;
}

std::vector<CheckReport> fourth_moment_suite(std::uint64_t q_max, unsigned threads) {
  if (threads == 0) threads = default_threads();
  struct Job {
    std::uint64_t q, k, V;
  };
  std::vector<Job> jobs;
  for (std::uint64_t q = 3; q <= q_max; ++q) {
    if (q % 4 == 2) continue;  // no primitive characters
    std::vector<std::uint64_t> Vs{1, static_cast<std::uint64_t>(std::floor(std::pow(q, 0.25))),
                                  static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(q))))};
    std::sort(Vs.begin(), Vs.end());
    Vs.erase(std::unique(Vs.begin(), Vs.end()), Vs.end());
    for (std::uint64_t k = 1; k <= 3; ++k)
      for (auto V : Vs)
        if (V < q) jobs.push_back({q, k, V});
  }
  std::vector<CheckReport> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    auto reps = check_fourth_moment(jobs[i].q, jobs[i].k, jobs[i].V);
    std::size_t worst = 0, failures = 0;
    for (std::size_t j = 0; j < reps.size(); ++j) {
      failures += !reps[j].pass;
      if (rel_margin(reps[j]) < rel_margin(reps[worst])) worst = j;
    }
    out[i] = reps[worst];
    out[i].notes = std::to_string(reps.size()) + " primitive characters, " + std::to_string(failures) + " failing";
  });
  return out;
}

PVResult empirical_pv(std::uint64_t q_lo, std::uint64_t q_hi, unsigned threads) {
  if (q_lo < 3 || q_hi < q_lo || q_hi > characters::kMaxCharacterModulus) throw_usage("empirical_pv: need 3 <= q_lo <= q_hi <= 1e6");
  if (threads == 0) threads = default_threads();
  const auto even = constants::comparison_bounds(Parity::even);
  const auto odd = constants::comparison_bounds(Parity::odd);

  struct Extreme {
    double value = -INFINITY;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> chi;
    std::uint64_t argmax = 0;
    double m = 0;
    void offer(double v, std::uint64_t qq, const characters::CharacterRep& c, const characters::PartialSumMax& pm) {
      if (v > value) {
        value = v;
        q = qq;
        chi = c.exponents();
        argmax = pm.argmax;
        m = pm.value;
      }
    }
    void merge(const Extreme& o) {
      if (o.value > value) *this = o;
    }
    Json json() const {
      if (q == 0) return nullptr;
      return Json{{"value", value}, {"q", q}, {"chi", chi}, {"argmax", argmax}, {"max_partial_sum", m}};
    }
  };
  struct PerQ {
    std::uint64_t count[2] = {0, 0};
    Extreme ratio[2], fs[2], pom[2];  // fs, pom: lhs/rhs
    std::vector<CheckReport> failures;
  };
  const std::size_t n = q_hi - q_lo + 1;
  std::vector<PerQ> per(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const std::uint64_t q = q_lo + i;
    if (q % 4 == 2) return;
    const auto Q = numerics::QScale::exact(static_cast<double>(q));
    const double base = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
    double fs_b[2], pom_b[2];
    fs_b[0] = even.fs.evaluate(Q).to_real();
    fs_b[1] = odd.fs.evaluate(Q).to_real();
    pom_b[0] = even.pomerance.evaluate(Q).to_real();
    pom_b[1] = odd.pomerance.evaluate(Q).to_real();
    const bool fs_valid[2] = {static_cast<double>(q) >= even.fs.q_min, static_cast<double>(q) >= odd.fs.q_min};
    PerQ& slot = per[i];
    characters::for_each_character(q, CharFilter::primitive, [&](const characters::CharacterRep& chi,
                                                                 const characters::SweepView& view) {
      const int par = chi.parity() == Parity::even ? 0 : 1;
      const auto pm = characters::max_partial_sum(chi, view);
      ++slot.count[par];
      slot.ratio[par].offer(pm.value / base, q, chi, pm);
      slot.pom[par].offer(pm.value / pom_b[par], q, chi, pm);
      if (fs_valid[par]) {
        slot.fs[par].offer(pm.value / fs_b[par], q, chi, pm);
        if (pm.value > fs_b[par]) {
          Json exps = chi.exponents();
          slot.failures.push_back(make_check("pv.fs_" + std::string(characters::parity_name(chi.parity())),
                                             Json{{"q", q}, {"chi", exps}, {"argmax", pm.argmax}}, pm.value,
                                             fs_b[par]));
        }
      }
    });
  });

  PVResult res;
  Extreme ratio[2], fs[2], pom[2];
  std::uint64_t count[2] = {0, 0};
  std::vector<CheckReport> failures;
  Json by_q = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (int p = 0; p < 2; ++p) {
      count[p] += per[i].count[p];
      ratio[p].merge(per[i].ratio[p]);
      fs[p].merge(per[i].fs[p]);
      pom[p].merge(per[i].pom[p]);
      if (per[i].count[p] > 0)
        by_q.push_back(Json{{"q", q_lo + i}, {"parity", p == 0 ? "even" : "odd"}, {"count", per[i].count[p]},
                            {"max_ratio", per[i].ratio[p].value}});
    }
    for (auto& f : per[i].failures) failures.push_back(std::move(f));
  }
  const char* names[2] = {"even", "odd"};
  const constants::ComparisonBounds* cb[2] = {&even, &odd};
  for (int p = 0; p < 2; ++p) {
    const std::uint64_t lo = std::max<std::uint64_t>(q_lo, static_cast<std::uint64_t>(cb[p]->fs.q_min));
    if (fs[p].q == 0) continue;
    const auto Q = numerics::QScale::exact(static_cast<double>(fs[p].q));
    CheckReport r = make_check(std::string("pv.fs_") + names[p],
                               Json{{"q_range", {lo, q_hi}}, {"worst", fs[p].json()}}, fs[p].m,
                               cb[p]->fs.evaluate(Q).to_real(),
                               "worst primitive character over the range; " + std::to_string(failures.size()) +
                                   " failing characters listed separately");
    res.reports.push_back(r);
  }
  for (auto& f : failures) res.reports.push_back(std::move(f));

  Json summary{{"q_range", {q_lo, q_hi}}};
  for (int p = 0; p < 2; ++p) {
    summary[names[p]] = Json{{"characters", count[p]},
                             {"max_ratio_sqrtq_logq", ratio[p].json()},
                             {"max_over_fs", fs[p].json()},
                             {"fs_q_min", cb[p]->fs.q_min},
                             {"max_over_pomerance", pom[p].json()}};
  }
  summary["by_q"] = std::move(by_q);
  res.summary = std::move(summary);
  return res;
}

}  // namespace pvc::verify
