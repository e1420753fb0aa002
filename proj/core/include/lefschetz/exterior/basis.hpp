#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lefschetz {

/// Maximum number of degree-1 generators supported by the bitmask encoding.
inline constexpr int kMaxGenerators = 30;

/// A strictly increasing tuple of generator indices (1-based), encoded as a
/// bitmask: generator i sets bit i-1. The empty tuple is the unit.
class BasisIndex {
 public:
  constexpr BasisIndex() = default;
  constexpr explicit BasisIndex(std::uint32_t bits) : bits_(bits) {}
  /// From 1-based indices; they need not be sorted but must be distinct.
  static BasisIndex from_indices(const std::vector<int>& indices);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  std::vector<int> indices() const;
  constexpr bool contains(int generator) const { return (bits_ >> (generator - 1)) & 1u; }

  /// "e135", or "1" for the empty tuple.
  std::string to_string() const;
  /// Index word in the `.lie` term syntax: "135", or "1.10.12" when any index > 9.
  std::string to_word() const;

  friend constexpr bool operator==(BasisIndex, BasisIndex) = default;
  friend constexpr auto operator<=>(BasisIndex a, BasisIndex b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Sign of e_a ∧ e_b relative to e_{a∪b}: 0 if they share a generator,
/// otherwise (-1)^(number of pairs i in a, j in b with i > j).
int wedge_sign(BasisIndex a, BasisIndex b);

/// All C(n,k) basis indices of degree k, lexicographic in their tuples.
std::vector<BasisIndex> basis_of_degree(int n, int k);

/// Position of `idx` inside basis_of_degree(n, idx.degree()).
std::size_t lex_position(int n, BasisIndex idx);

/// C(n, k) as a size; zero outside 0 <= k <= n.
std::size_t choose(int n, int k);

/// e_1 ∧ ... ∧ e_n.
inline BasisIndex top_index(int n) {
  return BasisIndex(n >= 32 ? ~0u : ((1u << n) - 1u));
}

}  // namespace lefschetz
