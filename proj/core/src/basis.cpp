#include "lefschetz/exterior/basis.hpp"

#include <stdexcept>

namespace lefschetz {

BasisIndex BasisIndex::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw std::invalid_argument("BasisIndex: generator index out of range");
    const std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) throw std::invalid_argument("BasisIndex: repeated generator");
    bits |= bit;
  }
  return BasisIndex(bits);
}

std::vector<int> BasisIndex::indices() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string BasisIndex::to_string() const {
  if (bits_ == 0) return "1";
  const auto idx = indices();
  const bool dotted = idx.back() > 9;
  std::string s = "e";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (dotted && i) s += '.';
    s += std::to_string(idx[i]);
  }
  return s;
}

std::string BasisIndex::to_word() const {
  const auto idx = indices();
  const bool dotted = !idx.empty() && idx.back() > 9;
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (dotted && i) s += '.';
    s += std::to_string(idx[i]);
  }
  return s;
}

int wedge_sign(BasisIndex a, BasisIndex b) {
  if (a.bits() & b.bits()) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b.bits(); rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    // elements of a strictly above position j must move past e_j
    const std::uint32_t above = j >= 31 ? 0u : (a.bits() >> (j + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

std::size_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<BasisIndex> basis_of_degree(int n, int k) {
  std::vector<BasisIndex> out;
  if (k < 0 || k > n) return out;
  out.reserve(choose(n, k));
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(BasisIndex::from_indices(c));
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t lex_position(int n, BasisIndex idx) {
  // Count the k-subsets that precede idx lexicographically.
  const auto c = idx.indices();
  const int k = static_cast<int>(c.size());
  std::size_t pos = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < c[static_cast<std::size_t>(i)]; ++v) pos += choose(n - v, k - i - 1);
    prev = c[static_cast<std::size_t>(i)];
  }
  return pos;
}

}  // namespace lefschetz
