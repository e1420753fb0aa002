#include "lefschetz/exterior/basis.hpp"
#include "lefschetz/exterior/form.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lefschetz;

namespace {

Form<> random_form(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> v(-3, 3);
  Form<> f(n, k);
  for (auto idx : basis_of_degree(n, k)) f.add_term(idx, v(rng));
  return f;
}

}  // namespace

TEST(Basis, CountsAndLexOrder) {
  for (int n = 0; n <= 8; ++n) {
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) {
      const auto b = basis_of_degree(n, k);
      EXPECT_EQ(b.size(), choose(n, k));
      for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(lex_position(n, b[i]), i);
        if (i > 0) {
          EXPECT_LT(b[i - 1].indices(), b[i].indices());
        }
      }
      total += b.size();
    }
    EXPECT_EQ(total, std::size_t{1} << n);
  }
}

TEST(Basis, WedgeSignIsPermutationSign) {
  const int n = 6;
  for (int ka = 0; ka <= n; ++ka)
    for (int kb = 0; ka + kb <= n; ++kb)
      for (auto a : basis_of_degree(n, ka))
        for (auto b : basis_of_degree(n, kb)) {
          if ((a.bits() & b.bits()) != 0) {
            EXPECT_EQ(wedge_sign(a, b), 0);
            continue;
          }
          std::vector<int> seq = a.indices();
          for (int i : b.indices()) seq.push_back(i);
          EXPECT_EQ(wedge_sign(a, b), oracle::permutation_sign(seq));
        }
}

TEST(Basis, WordsAndStrings) {
  EXPECT_EQ(BasisIndex::from_indices({3, 1, 5}).to_word(), "135");
  EXPECT_EQ(BasisIndex::from_indices({1, 10, 12}).to_word(), "1.10.12");
  EXPECT_EQ(BasisIndex::from_indices({2, 4}).to_string(), "e24");
  EXPECT_EQ(BasisIndex().to_string(), "1");
}

TEST(Form, GradedCommutativity) {
  std::mt19937 rng(23);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const auto a = random_form(rng, 6, p), b = random_form(rng, 6, q);
      const Scalar sign = (p * q) % 2 ? -1 : 1;
      EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
    }
}

TEST(Form, Associativity) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_form(rng, 7, 1 + trial % 2), b = random_form(rng, 7, 2), c = random_form(rng, 7, 1);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(Form, OddFormsSquareToZero) {
  std::mt19937 rng(31);
  for (int k : {1, 3}) {
    const auto a = random_form(rng, 6, k);
    EXPECT_TRUE(wedge(a, a).is_zero());
  }
}

TEST(Form, VectorRoundTrip) {
  std::mt19937 rng(37);
  const auto a = random_form(rng, 5, 2);
  const auto v = a.to_vector();
  EXPECT_EQ(Form<>::from_vector(5, 2, std::span<const Scalar>(v)), a);
}

TEST(Form, DarbouxPowerIsFactorialVolume) {
  for (int n = 1; n <= 4; ++n) {
    Form<> w(2 * n, 2);
    for (int i = 1; i < 2 * n; i += 2) w += Form<>::basis(2 * n, BasisIndex::from_indices({i, i + 1}));
    Scalar fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(power(w, n).top_coefficient(), fact);
    EXPECT_TRUE(power(w, n + 1).is_zero());
  }
}
