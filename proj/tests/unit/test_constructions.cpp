#include "lefschetz/constructions/auroux.hpp"
#include "lefschetz/constructions/blowup.hpp"
#include "lefschetz/constructions/determinant.hpp"
#include "lefschetz/constructions/donaldson.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/symplectic/analysis.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lefschetz;

namespace {

SymplecticModel nil6() {
  const auto ls = parse_structure("0,0,0,12,14,15+23+24");
  return SymplecticModel(ls, parse_form("16+25-34", 6, 2));
}

SymplecticModel torus6() {
  const auto ls = parse_structure("0,0,0,0,0,0");
  return SymplecticModel(ls, parse_form("12+34+56", 6, 2));
}

// b_i = b_i(CP^m) + Σ_{j=1}^{m−n−1} b_{i−2j}(M)
BettiVector mcduff(int m, const BettiVector& sub) {
  const int n = static_cast<int>(sub.size() - 1) / 2;
  BettiVector out(static_cast<std::size_t>(2 * m + 1), 0);
  for (int i = 0; i <= 2 * m; i += 2) out[static_cast<std::size_t>(i)] = 1;
  for (int j = 1; j <= m - n - 1; ++j)
    for (int i = 0; i <= 2 * n; ++i) out[static_cast<std::size_t>(i + 2 * j)] += sub[static_cast<std::size_t>(i)];
  return out;
}

struct Product {
  CohomologyRing base, ring;
  ClassVector lift(const ClassVector& c) const { return ring.tensor(c, ring.right_factor().unit()); }
};

Product nil6_times_cp(int m) {
  const auto b = nil6().ring();
  return {b, kunneth(b, cp_ring(m))};
}

}  // namespace

TEST(Blowup, MatchesMcDuffFormula) {
  const BettiVector kt{1, 3, 4, 3, 1};
  for (int m = 3; m <= 9; ++m) {
    const auto r = blowup_betti(m, kt);
    EXPECT_EQ(r.result_betti, mcduff(m, kt)) << m;
    EXPECT_EQ(r.thom_generators.size(), static_cast<std::size_t>(m - 3));
    EXPECT_TRUE(r.odd_formula_holds);
    EXPECT_EQ(r.warnings.empty(), m >= 5);
  }
}

TEST(Blowup, DualitySimplyConnected) {
  const BettiVector nil{1, 3, 5, 6, 5, 3, 1};
  for (int m = 4; m <= 10; ++m) {
    const auto b = blowup_betti(m, nil).result_betti;
    EXPECT_EQ(b[1], 0);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], b[b.size() - 1 - i]);
  }
  EXPECT_THROW(blowup_betti(5, BettiVector{1, 2, 1, 0}), DimensionMismatch);
  EXPECT_THROW(blowup_betti(2, nil), DimensionMismatch);
}

TEST(Blowup, TowerStages) {
  const auto m2 = blowup_betti(5, kodaira_thurston_betti());
  EXPECT_EQ(m2.result_betti[3], 3);
  const auto m4 = blowup_betti(11, m2.result_betti);
  EXPECT_EQ(m4.result_betti[1], 0);
  EXPECT_EQ(m4.result_betti[3], 0);
  EXPECT_EQ(m4.result_betti[5], 3);
  EXPECT_EQ(tower(4).stages.back().betti, m4.result_betti);
}

TEST(Tower, ClosedForms) {
  for (int r = 1; r <= 5; ++r) {
    const auto t = tower(2 * r);
    EXPECT_EQ(t.m, t.m_closed_form);
    EXPECT_EQ(t.m.back(), 6 * (std::int64_t{1} << r) - 1);
    EXPECT_EQ(t.l_s, t.l_s_closed_form);
    EXPECT_EQ(t.dim_w, 2 * (2 * r + 2));
    EXPECT_EQ(t.b_s_plus_1, 3);
    EXPECT_TRUE(t.low_odd_vanish);
    EXPECT_EQ(t.stages.back().dim, static_cast<int>(2 * t.m[t.m.size() - 2]));
  }
  EXPECT_THROW(tower(3), BadParameter);
  EXPECT_THROW(tower(0), BadParameter);
}

TEST(Donaldson, IdentityAndComposition) {
  const auto prof = harmonic_dims(nil6());
  const auto b = bounded(prof);
  EXPECT_EQ(donaldson_transfer(b, 0), b);
  const auto once = donaldson_transfer(bounded(harmonic_dims(kunneth(nil6().ring(), cp_ring(4)))), 3);
  const auto twice =
      donaldson_transfer(donaldson_transfer(bounded(harmonic_dims(kunneth(nil6().ring(), cp_ring(4)))), 1), 2);
  ASSERT_EQ(once.n, twice.n);
  for (std::size_t i = 0; i < once.degrees.size(); ++i)
    if (once.degrees[i].exact() && twice.degrees[i].exact()) {
      EXPECT_EQ(once.degrees[i], twice.degrees[i]) << i;
    }
  EXPECT_THROW(donaldson_transfer(prof, 4, 1), DimensionMismatch);
}

TEST(Donaldson, HardLefschetzAmbientHasNoGaps) {
  const auto z = donaldson_transfer(bounded(harmonic_dims(torus6())), 1);
  for (const auto& d : z.degrees) {
    const auto g = d.gap_parity();
    if (g) {
      EXPECT_EQ(*g, 0);
    }
  }
}

TEST(Donaldson, TowerTransferGivesOddGap) {
  for (int s : {2, 4, 6}) {
    const auto t = tower(s);
    const auto w = donaldson_transfer(tower_profile(s), static_cast<int>(t.l_s));
    EXPECT_EQ(2 * w.n, t.dim_w);
    const auto& d = w.degrees[static_cast<std::size_t>(s + 3)];
    EXPECT_EQ(d.betti, std::optional<std::int64_t>(3));
    EXPECT_EQ(d.gap_parity(), std::optional<int>(1));
  }
}

TEST(Auroux, AmbientKernelFormula) {
  EXPECT_EQ(ambient_b3hr(nil6().ring()), 4);
  EXPECT_EQ(ambient_b3hr(torus6().ring()), 20);
  for (int r : {1, 2, 3}) {
    const auto x = nil6_times_cp(r + 1);
    EXPECT_EQ(ambient_b3hr(x.ring), 7);
    EXPECT_EQ(ambient_b3hr(x.ring), harmonic_dims(x.ring).betti_hr[3]);
  }
}

TEST(Auroux, TrivialBundleReproducesAmbient) {
  for (int r : {1, 2, 3}) {
    for (const auto& base : {nil6().ring(), torus6().ring()}) {
      const auto x = kunneth(base, cp_ring(r + 1));
      const auto res = auroux_b3hr({x, r, {}});
      EXPECT_EQ(res.b3hr, ambient_b3hr(x));
      EXPECT_TRUE(res.first.consistent() && res.second.consistent());
    }
  }
}

TEST(Auroux, Nil6TimesCP2WithC1E13) {
  const auto x = nil6_times_cp(2);
  const auto a = x.lift(x.base.class_of(parse_form("13", 6, 2)));
  const auto res = auroux_b3hr({x.ring, 1, {a}});
  EXPECT_EQ(res.b3hr, 7);
  EXPECT_TRUE(res.first.consistent() && res.second.consistent());
}

TEST(Auroux, Nil6TimesCP2CupWithAlpha1IsNotExact) {
  const auto m = nil6();
  const auto& ls = m.structure();
  // A ∧ α1 = α126 − α145 is closed but not in the image of d: Λ² → Λ³
  const Form<> prod = wedge(Form<>::generator(6, 1), parse_form("26-45", 6, 2));
  EXPECT_TRUE(ls.d(prod).is_zero());
  const auto v = prod.to_vector();
  EXPECT_FALSE(solve(ls.differential_matrix(2), std::span<const Scalar>(v)).has_value());
  // so for generic k, (3k[ω] + A) ∪ x vanishes on no nonzero x ∈ H¹ and the
  // first kernel is 0, while the second is spanned by [α1]
  const auto x = nil6_times_cp(2);
  const auto a = x.lift(x.base.class_of(parse_form("26-45", 6, 2)));
  const auto res = auroux_b3hr({x.ring, 1, {a}});
  EXPECT_EQ(res.first.kernel, 0u);
  EXPECT_EQ(res.second.kernel, 1u);
  EXPECT_EQ(res.b3hr, 9 + 0 - 1);
  EXPECT_GT(res.b3hr, ambient_b3hr(x.ring));
}

TEST(Auroux, Nil6TimesCP4WhitneySumIsTrivial) {
  const auto x = nil6_times_cp(4);
  const auto a = x.lift(x.base.class_of(parse_form("26-45", 6, 2)));
  const auto c = whitney_sum(x.ring, {a}, 1, {Scalar(-1) * a, x.ring.cup(a, a)}, 2);
  ASSERT_EQ(c.size(), 3u);
  // (1 + A)(1 − A + A²) = 1 + A³
  EXPECT_TRUE(c[0].is_zero());
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], x.ring.cup_power(a, 3));
  const auto z3 = auroux_b3hr({x.ring, 3, c});
  const auto z1 = auroux_b3hr({x.ring, 1, {a}});
  EXPECT_EQ(z3.b3hr, 7);
  EXPECT_LT(z3.b3hr, z1.b3hr);
}

TEST(Auroux, PoincareDualExpansion) {
  const auto x = nil6_times_cp(2);
  const auto a = x.lift(x.base.class_of(parse_form("26-45", 6, 2)));
  const auto pd = poincare_dual({x.ring, 1, {a}});
  const auto& w = *x.ring.distinguished();
  for (std::size_t i = 0; i < pd.size(); ++i) {
    EXPECT_EQ(pd[i].coefficient(1), w.coeffs[i]);
    EXPECT_EQ(pd[i].coefficient(0), a.coeffs[i]);
  }
}

TEST(Auroux, HypothesesAreChecked) {
  const auto x = nil6_times_cp(2);
  EXPECT_THROW(auroux_b3hr({x.ring, 2, {}}), HypothesisNotMet);
  EXPECT_THROW(auroux_b3hr({x.ring, 1, {x.ring.zero(4)}}), BadParameter);
  EXPECT_THROW(auroux_b3hr({x.ring, 1, {x.ring.zero(2), x.ring.zero(4)}}), BadParameter);
}

TEST(NormalBundle, BinomialClasses) {
  const auto c = normal_chern(5, 2, 2);
  EXPECT_EQ(c, (std::vector<std::int64_t>{1, 6, 15}));
  EXPECT_THROW(normal_chern(5, 2, 3), BadParameter);
  const auto ring = nil6().ring();
  const auto cls = normal_chern_classes(ring, 5, 2);
  EXPECT_EQ(cls[0], Scalar(6) * *ring.distinguished());
  EXPECT_EQ(cls[1], Scalar(15) * ring.cup_power(*ring.distinguished(), 2));
}

namespace {

// B_μ with (i, j) block C(m−k, m−n−i−j) ε^{m−n−i−j} A, built entry by entry.
Matrix<Polynomial> block_matrix(int m, int n, int k, int mu, const Matrix<Scalar>& a) {
  const std::size_t d = a.rows();
  Matrix<Polynomial> b(static_cast<std::size_t>(mu) * d, static_cast<std::size_t>(mu) * d);
  for (int i = 1; i <= mu; ++i)
    for (int j = 1; j <= mu; ++j) {
      const int e = m - n - i - j;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          b(static_cast<std::size_t>(i - 1) * d + r, static_cast<std::size_t>(j - 1) * d + c) =
              e < 0 ? Polynomial() : Polynomial::monomial(binomial(m - k, e) * a(r, c), static_cast<unsigned>(e));
    }
  return b;
}

}  // namespace

TEST(Determinant, SingleBlock) {
  for (int m = 3; m <= 14; ++m)
    for (int n = 1; n + 1 < m; ++n)
      for (int k = 2; k <= n + 1; ++k) {
        const auto c = pairing_determinant_check({m, n, k, 1});
        EXPECT_TRUE(c.holds);
        EXPECT_EQ(c.brute, Polynomial::monomial(binomial(m - k, m - n - 2), static_cast<unsigned>(m - n - 2)));
      }
}

TEST(Determinant, TwoBlocksAgainstLeibniz) {
  const auto c = pairing_determinant_check({11, 5, 4, 2});
  const auto expected = oracle::leibniz_determinant(block_matrix(11, 5, 4, 2, Matrix<Scalar>::identity(1)));
  EXPECT_EQ(c.brute, expected);
  // C(7,4)·C(7,2) − C(7,3)² = 735 − 1225 = −490
  EXPECT_EQ(expected, Polynomial::monomial(Scalar(-490), 6));
  // the closed form has the same magnitude and exponent, opposite sign
  EXPECT_EQ(c.closed, Polynomial::monomial(Scalar(490), 6));
  EXPECT_FALSE(c.holds);
  EXPECT_TRUE(c.magnitude_agrees);
  EXPECT_EQ(c.ratio, std::optional<Scalar>(Scalar(-1)));
}

TEST(Determinant, IdentityBlockOfSizeTwo) {
  const auto a = Matrix<Scalar>::identity(2);
  const auto c = pairing_determinant_check({11, 5, 5, 2, a});
  EXPECT_EQ(c.brute, oracle::leibniz_determinant(block_matrix(11, 5, 5, 2, a)));
  EXPECT_TRUE(c.lambda_nonzero);
  EXPECT_EQ(c.brute, c.closed);
  EXPECT_EQ(c.exponent, 12);
}

TEST(Determinant, SweepRatioIsBlockReversalSign) {
  std::size_t count = 0;
  for (int m = 1; m <= 14; ++m)
    for (int n = 1; n < m; ++n)
      for (int k = 0; k <= n + 1; ++k)
        for (int mu = 1; mu <= 3; ++mu) {
          if (!valid_determinant_parameters(m, n, k, mu)) continue;
          ++count;
          const auto c = pairing_determinant_check({m, n, k, mu});
          ASSERT_TRUE(c.ratio.has_value());
          EXPECT_EQ(*c.ratio, Scalar((mu * (mu - 1) / 2) % 2 ? -1 : 1)) << m << ' ' << n << ' ' << k << ' ' << mu;
          EXPECT_TRUE(c.lambda_nonzero);
          if (mu <= 2) {
            EXPECT_EQ(c.brute, oracle::leibniz_determinant(block_matrix(m, n, k, mu, Matrix<Scalar>::identity(1))));
          }
        }
  EXPECT_EQ(count, 585u);
}

TEST(Determinant, RejectsInvalidParameters) {
  EXPECT_THROW(pairing_determinant_check({11, 5, 3, 2}), BadParameter);
  EXPECT_THROW(pairing_determinant_check({7, 5, 4, 2}), BadParameter);
  EXPECT_THROW(pairing_determinant_check({11, 0, 1, 1}), BadParameter);
  EXPECT_THROW(pairing_determinant_check({11, 5, 4, 1, Matrix<Scalar>(1, 2)}), BadParameter);
}
