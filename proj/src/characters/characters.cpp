#include "characters/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "numerics/error.hpp"
#include "numerics/sieve.hpp"

namespace pvc::characters {

namespace {

constexpr std::uint32_t kNonUnit = UINT32_MAX;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Smallest generator of (Z/p^a)* for odd p.
std::uint64_t primitive_root(std::uint64_t p, int a) {
  const auto fac = numerics::factorize(p - 1);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto [r, e] : fac) {
      (void)e;
      if (powmod(g, (p - 1) / r, p) == 1) { ok = false; break; }
    }
    if (ok) break;
  }
  if (a >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

}  // namespace

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

CharacterGroup::CharacterGroup(std::uint64_t q) : q_(q) {
  if (q < 1 || q > kMaxCharacterModulus) throw_usage("character modulus out of range: " + std::to_string(q));
  factors_ = q == 1 ? decltype(factors_){} : numerics::factorize(q);
  for (auto [p, a] : factors_) {
    const std::uint64_t m = ipow(p, a);
    if (p == 2) {
      if (a == 1) continue;
      std::vector<std::uint32_t> sign(m, kNonUnit);
      for (std::uint64_t n = 1; n < m; n += 2) sign[n] = (n % 4 == 3) ? 1 : 0;
      tables_.push_back(std::move(sign));
      components_.push_back({Component::Type::two_sign, 2, a, m, 2, 0, tables_.size() - 1});
      if (a >= 3) {
        // n = (-1)^s 5^t mod 2^a
        const std::uint32_t order = static_cast<std::uint32_t>(m / 4);
        std::vector<std::uint32_t> five(m, kNonUnit);
        std::uint64_t x = 1;
        for (std::uint32_t t = 0; t < order; ++t) {
          five[x] = t;
          five[m - x] = t;
          x = x * 5 % m;
        }
        tables_.push_back(std::move(five));
        components_.push_back({Component::Type::two_five, 2, a, m, order, 0, tables_.size() - 1});
      }
    } else {
      const std::uint64_t g = primitive_root(p, a);
      const std::uint32_t order = static_cast<std::uint32_t>(m / p * (p - 1));
      std::vector<std::uint32_t> log(m, kNonUnit);
      std::uint64_t x = 1;
      for (std::uint32_t k = 0; k < order; ++k) {
        log[x] = k;
        x = x * g % m;
      }
      tables_.push_back(std::move(log));
      components_.push_back({Component::Type::odd_prime_power, p, a, m, order, 0, tables_.size() - 1});
    }
  }
  std::uint64_t lam = 1;
  for (const auto& c : components_) lam = std::lcm(lam, static_cast<std::uint64_t>(c.order));
  exponent_ = static_cast<std::uint32_t>(lam);
  for (auto& c : components_) c.scale = exponent_ / c.order;
  roots_.resize(exponent_ + 1);
  for (std::uint32_t k = 0; k < exponent_; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / exponent_;
    roots_[k] = {std::cos(t), std::sin(t)};
  }
  roots_[exponent_] = 0.0;
}

std::uint32_t CharacterGroup::dlog(std::size_t c, std::uint64_t n) const {
  const auto& comp = components_[c];
  return tables_[comp.table][n % comp.modulus];
}

CharacterRep::CharacterRep(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint32_t> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
  const auto& comps = group_->components();
  if (exps_.size() != comps.size()) throw_usage("character: wrong number of component exponents");
  int odd = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (exps_[c] >= comps[c].order) throw_usage("character: component exponent out of range");
    if (comps[c].type != Component::Type::two_five) odd += static_cast<int>(exps_[c] & 1u);
  }
  parity_ = (odd % 2 == 0) ? Parity::even : Parity::odd;

  conductor_ = 1;
  std::uint32_t s = 0, t = 0;
  int a2 = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    switch (comp.type) {
      case Component::Type::odd_prime_power:
        if (exps_[c] != 0) {
          const int v = std::min(valuation(exps_[c], comp.p), comp.a - 1);
          conductor_ *= ipow(comp.p, comp.a - v);
        }
        break;
      case Component::Type::two_sign: s = exps_[c]; a2 = comp.a; break;
      case Component::Type::two_five: t = exps_[c]; break;
    }
  }
  if (t != 0) {
    conductor_ *= ipow(2, a2 - valuation(t, 2));
  } else if (s != 0) {
    conductor_ *= 4;
  }
}

bool CharacterRep::principal() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

std::uint32_t CharacterRep::index(std::uint64_t n) const {
  const std::uint64_t q = modulus();
  const std::uint32_t lam = group_->exponent();
  if (std::gcd(n % q, q) != 1) return lam;
  const auto& comps = group_->components();
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < comps.size(); ++c)
    acc += static_cast<std::uint64_t>(exps_[c]) * comps[c].scale % lam * group_->dlog(c, n) % lam;
  return static_cast<std::uint32_t>(acc % lam);
}

Complex CharacterRep::value(std::uint64_t n) const { return group_->roots()[index(n)]; }

CharacterRep CharacterRep::conjugate() const {
  std::vector<std::uint32_t> e(exps_);
  const auto& comps = group_->components();
  for (std::size_t c = 0; c < e.size(); ++c) e[c] = (comps[c].order - e[c]) % comps[c].order;
  return CharacterRep(group_, std::move(e));
}

bool passes(const CharacterRep& chi, CharFilter filter) {
  switch (filter) {
    case CharFilter::all: return true;
    case CharFilter::primitive: return chi.primitive();
    case CharFilter::primitive_even: return chi.primitive() && chi.parity() == Parity::even;
    case CharFilter::primitive_odd: return chi.primitive() && chi.parity() == Parity::odd;
  }
  return false;
}

namespace {

void check_modulus(std::uint64_t q) {
  if (q < 3 || q > kMaxCharacterModulus)
    throw_usage("modulus must lie in [3, " + std::to_string(kMaxCharacterModulus) + "], got " + std::to_string(q));
}

// Advances the mixed-radix exponent vector; returns the components touched.
template <class OnTouch>
void advance(std::vector<std::uint32_t>& exps, const std::vector<Component>& comps, OnTouch&& touch) {
  for (std::size_t c = 0; c < comps.size(); ++c) {
    touch(c);
    if (++exps[c] < comps[c].order) return;
    exps[c] = 0;
  }
}

}  // namespace

std::vector<CharacterRep> enumerate_characters(std::uint64_t q, CharFilter filter) {
  check_modulus(q);
  auto group = std::make_shared<const CharacterGroup>(q);
  const auto& comps = group->components();
  std::uint64_t total = 1;
  for (const auto& c : comps) total *= c.order;
  std::vector<CharacterRep> out;
  std::vector<std::uint32_t> exps(comps.size(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    CharacterRep chi(group, exps);
    if (passes(chi, filter)) out.push_back(std::move(chi));
    advance(exps, comps, [](std::size_t) {});
  }
  return out;
}

void for_each_character(std::uint64_t q, CharFilter filter,
                        const std::function<void(const CharacterRep&, const SweepView&)>& fn) {
  check_modulus(q);
  auto group = std::make_shared<const CharacterGroup>(q);
  const auto& comps = group->components();
  const std::uint32_t lam = group->exponent();

  std::vector<std::uint32_t> units;
  for (std::uint64_t n = 1; n < q; ++n)
    if (std::gcd(n, q) == 1) units.push_back(static_cast<std::uint32_t>(n));
  std::vector<std::vector<std::uint32_t>> step(comps.size(), std::vector<std::uint32_t>(units.size()));
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i = 0; i < units.size(); ++i)
      step[c][i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(comps[c].scale) * group->dlog(c, units[i]) % lam);

  std::vector<std::uint32_t> index(units.size(), 0);
  const SweepView view{units, index};

  std::uint64_t total = 1;
  for (const auto& c : comps) total *= c.order;
  std::vector<std::uint32_t> exps(comps.size(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    CharacterRep chi(group, exps);
    if (passes(chi, filter)) fn(chi, view);
    if (i + 1 == total) break;
    // a wrap adds the step once more, which returns that component to zero mod lam
    advance(exps, comps, [&](std::size_t c) {
      const std::uint32_t* st = step[c].data();
      std::uint32_t* ix = index.data();
      const std::size_t n = index.size();
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t v = ix[k] + st[k];
        ix[k] = v >= lam ? v - lam : v;
      }
    });
  }
}

std::vector<std::uint32_t> index_table(const CharacterRep& chi) {
  std::vector<std::uint32_t> t(chi.modulus());
  for (std::uint64_t n = 0; n < t.size(); ++n) t[n] = chi.index(n);
  return t;
}

Complex gauss_sum(const CharacterRep& chi) {
  const std::uint64_t q = chi.modulus();
  const auto& roots = chi.group().roots();
  Complex s = 0.0;
  for (std::uint64_t a = 1; a < q; ++a) {
    const std::uint32_t k = chi.index(a);
    if (k == chi.group().exponent()) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(q);
    s += roots[k] * Complex(std::cos(t), std::sin(t));
  }
  return s;
}

PartialSumMax max_partial_sum(const CharacterRep& chi) {
  const std::uint64_t q = chi.modulus();
  std::vector<std::uint32_t> units, index;
  for (std::uint64_t n = 1; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    units.push_back(static_cast<std::uint32_t>(n));
    index.push_back(chi.index(n));
  }
  return max_partial_sum(chi, SweepView{units, index});
}

PartialSumMax max_partial_sum(const CharacterRep& chi, const SweepView& view) {
  const std::uint64_t q = chi.modulus();
  if (view.units.size() != view.index.size()) throw_usage("max_partial_sum: malformed sweep view");
  const auto& roots = chi.group().roots();
  // the principal character keeps growing to q - 1; S(q) = S(q - 1)
  const std::uint64_t limit = chi.principal() ? q : std::max<std::uint64_t>(1, (q - 1) / 2);
  double re = 0.0, im = 0.0, best = 0.0;
  std::uint64_t arg = 1;
  const std::size_t n = view.units.size();
  for (std::size_t k = 0; k < n && view.units[k] <= limit; ++k) {
    const Complex& z = roots[view.index[k]];
    re += z.real();
    im += z.imag();
    const double v = re * re + im * im;
    if (v > best + 1e-9) {
      best = v;
      arg = view.units[k];
    }
  }
  return {arg, std::sqrt(best)};
}

}  // namespace pvc::characters
