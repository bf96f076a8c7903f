#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coxkit {

using Generator = std::uint8_t;

inline constexpr std::size_t kMaxRank = 32;

/// A subset of the generating set S, stored as a bit mask over generator indices.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;

  static constexpr GeneratorSet from_bits(std::uint32_t bits) { return GeneratorSet(bits); }
  static constexpr GeneratorSet single(Generator s) { return GeneratorSet(std::uint32_t{1} << s); }
  static constexpr GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }
  static GeneratorSet of(std::initializer_list<Generator> gens) {
    GeneratorSet out;
    for (Generator s : gens) out.insert(s);
    return out;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Generator s) const { return (bits_ >> s) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr void insert(Generator s) { bits_ |= std::uint32_t{1} << s; }
  constexpr void erase(Generator s) { bits_ &= ~(std::uint32_t{1} << s); }
  constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    return out;
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr auto operator<=>(GeneratorSet, GeneratorSet) = default;

 private:
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// All subsets of {0..rank-1}, in increasing bit-mask order.
inline std::vector<GeneratorSet> all_subsets(std::size_t rank) {
  std::vector<GeneratorSet> out;
  const std::uint32_t n = std::uint32_t{1} << rank;
  out.reserve(n);
  for (std::uint32_t b = 0; b < n; ++b) out.push_back(GeneratorSet::from_bits(b));
  return out;
}

}  // namespace coxkit
