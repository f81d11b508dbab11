#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace pvc::characters {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kMaxCharacterModulus = 1'000'000;

enum class Parity { even, odd };
enum class CharFilter { all, primitive, primitive_even, primitive_odd };

const char* parity_name(Parity p);

/// One cyclic factor of (Z/qZ)*. A power of two above 4 contributes two:
/// the sign factor generated by -1 and the factor generated by 5.
struct Component {
  enum class Type { odd_prime_power, two_sign, two_five };
  Type type;
  std::uint64_t p;
  int a;                  // exponent of p in q
  std::uint64_t modulus;  // p^a
  std::uint32_t order;
  std::uint32_t scale;    // group exponent / order
  std::size_t table;      // index into the group's discrete-log tables
};

/// Discrete-log tables for (Z/qZ)*, shared by every character mod q.
class CharacterGroup {
 public:
  explicit CharacterGroup(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  const std::vector<std::pair<std::uint64_t, int>>& factorization() const { return factors_; }
  const std::vector<Component>& components() const { return components_; }
  /// Exponent of the group: lcm of the component orders.
  std::uint32_t exponent() const { return exponent_; }
  /// e(k/exponent) for k < exponent; entry `exponent` is 0 (the non-unit sentinel).
  const std::vector<Complex>& roots() const { return roots_; }

  /// Discrete log of n in component c, or UINT32_MAX when gcd(n, p) > 1.
  std::uint32_t dlog(std::size_t c, std::uint64_t n) const;

 private:
  std::uint64_t q_;
  std::vector<std::pair<std::uint64_t, int>> factors_;
  std::vector<Component> components_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::uint32_t exponent_ = 1;
  std::vector<Complex> roots_;
};

/// A Dirichlet character mod q, fixed by one exponent per cyclic component.
class CharacterRep {
 public:
  CharacterRep(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint32_t> exps);

  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  const CharacterGroup& group() const { return *group_; }
  std::shared_ptr<const CharacterGroup> group_ptr() const { return group_; }
  Parity parity() const { return parity_; }
  std::uint64_t conductor() const { return conductor_; }
  bool primitive() const { return conductor_ == modulus(); }
  bool principal() const;

  /// Index k with chi(n) = e(k/exponent), or exponent() when gcd(n, q) > 1.
  std::uint32_t index(std::uint64_t n) const;
  Complex value(std::uint64_t n) const;
  /// The complex-conjugate character.
  CharacterRep conjugate() const;

  friend bool operator==(const CharacterRep& a, const CharacterRep& b) {
    return a.modulus() == b.modulus() && a.exps_ == b.exps_;
  }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::uint32_t> exps_;
  Parity parity_ = Parity::even;
  std::uint64_t conductor_ = 1;
};

bool passes(const CharacterRep& chi, CharFilter filter);

/// All characters mod q matching the filter, in mixed-radix exponent order.
/// Requires 3 <= q <= kMaxCharacterModulus.
std::vector<CharacterRep> enumerate_characters(std::uint64_t q, CharFilter filter);

/// Units of Z/qZ in increasing order and the character's index at each.
struct SweepView {
  std::span<const std::uint32_t> units;
  std::span<const std::uint32_t> index;
};

/// Visits the characters mod q that match `filter`. The index table is
/// updated incrementally between characters, so a sweep costs O(phi(q)) each.
void for_each_character(std::uint64_t q, CharFilter filter,
                        const std::function<void(const CharacterRep&, const SweepView&)>& fn);

/// Index table of one character over [0, q).
std::vector<std::uint32_t> index_table(const CharacterRep& chi);

Complex gauss_sum(const CharacterRep& chi);

struct PartialSumMax {
  std::uint64_t argmax;
  double value;
};

/// max over 1 <= N <= q of |sum_{n<=N} chi(n)| and the smallest N attaining it.
PartialSumMax max_partial_sum(const CharacterRep& chi);
/// Same from a sweep view. Non-principal characters scan only N <= (q-1)/2,
/// since |S(q-1-N)| = |S(N)|; |S| only changes at units.
PartialSumMax max_partial_sum(const CharacterRep& chi, const SweepView& view);

}  // namespace pvc::characters
