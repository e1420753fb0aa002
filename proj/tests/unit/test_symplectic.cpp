#include "lefschetz/errors.hpp"
#include "lefschetz/symplectic/analysis.hpp"
#include "lefschetz/symplectic/model.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lefschetz;

namespace {

struct Entry {
  const char* name;
  const char* d;
  const char* omega;
};

const Entry kEntries[] = {
    {"kt", "0,0,-12,0", "13+24"},
    {"nil6", "0,0,0,12,14,15+23+24", "16+25-34"},
    {"solv6", "0,0,-13-25,14-26,-15,16", "12+36+45"},
    {"torus4", "0,0,0,0", "12+34"},
    {"torus6", "0,0,0,0,0,0", "12+34+56"},
};

SymplecticModel model(const Entry& e) {
  const auto ls = parse_structure(e.d).renamed(e.name);
  return SymplecticModel(ls, parse_form(e.omega, ls.n(), 2));
}

SymplecticModel model(const char* name) {
  for (const auto& e : kEntries)
    if (std::string(e.name) == name) return model(e);
  throw std::logic_error(name);
}

}  // namespace

TEST(Model, RejectsDegenerateOrOpenForms) {
  const auto t4 = parse_structure("0,0,0,0");
  EXPECT_THROW(SymplecticModel(t4, parse_form("12", 4, 2)), NotSymplectic);
  const auto kt = parse_structure("0,0,-12,0");
  EXPECT_THROW(SymplecticModel(kt, parse_form("34+12", 4, 2)), NotSymplectic);  // d(e34) ≠ 0
  EXPECT_THROW(SymplecticModel(parse_structure("0,0,0"), parse_form("12", 3, 2)), NotSymplectic);
}

TEST(Model, BivectorInvertsOmega) {
  for (const auto& e : kEntries) {
    const auto m = model(e);
    const int d = m.dim();
    Matrix<Scalar> w(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        const auto c = m.omega().coefficient(BasisIndex::from_indices({i, j}));
        w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = c;
        w(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -c;
      }
    EXPECT_EQ(m.G() * w, Matrix<Scalar>::identity(static_cast<std::size_t>(d))) << e.name;
  }
}

TEST(Model, StarOfOneIsVolume) {
  for (const auto& e : kEntries) {
    const auto m = model(e);
    EXPECT_EQ(star(m, Form<>::constant(m.dim(), 1)), m.volume()) << e.name;
    Scalar fact(1);
    for (int i = 2; i <= m.n(); ++i) fact *= i;
    EXPECT_EQ(m.volume() * fact, power(m.omega(), m.n()));
  }
}

TEST(Model, StarCharacterization) {
  // β ∧ *α = Λᵏ(G)(β, α) v_M on basis forms
  const auto m = model("nil6");
  for (int k = 0; k <= 6; ++k)
    for (auto a : basis_of_degree(6, k))
      for (auto b : basis_of_degree(6, k)) {
        const auto lhs = wedge(Form<>::basis(6, b), star(m, Form<>::basis(6, a)));
        EXPECT_EQ(lhs, m.pairing(b, a) * m.volume());
      }
}

TEST(Model, PairingIsMinorDeterminant) {
  const auto m = model("solv6");
  for (int k = 1; k <= 3; ++k)
    for (auto I : basis_of_degree(6, k))
      for (auto J : basis_of_degree(6, k)) {
        const auto ii = I.indices(), jj = J.indices();
        Matrix<Scalar> sub(ii.size(), jj.size());
        for (std::size_t a = 0; a < ii.size(); ++a)
          for (std::size_t b = 0; b < jj.size(); ++b)
            sub(a, b) = m.G()(static_cast<std::size_t>(jj[b] - 1), static_cast<std::size_t>(ii[a] - 1));
        EXPECT_EQ(m.pairing(I, J), oracle::leibniz_determinant(sub));
      }
}

TEST(Identities, FullSuiteOnRegistry) {
  for (const auto& e : kEntries) {
    const auto m = model(e);
    const auto r = verify_operator_identities(m);
    EXPECT_EQ(r.basis_forms, std::size_t{1} << m.dim());
    for (const auto& [name, ok] : r.checks) EXPECT_TRUE(ok) << e.name << ": " << name;
  }
}

TEST(Identities, CommutatorOnRandomForms) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> v(-4, 4);
  const auto m = model("solv6");
  for (int k = 0; k <= 4; ++k) {
    Form<> a(6, k);
    for (auto idx : basis_of_degree(6, k)) a.add_term(idx, v(rng));
    Form<> lhs = koszul_delta(m, wedge(m.omega(), a));
    lhs -= wedge(m.omega(), koszul_delta(m, a));
    // [L, δ] = d, i.e. Lδ − δL = d
    EXPECT_EQ(-lhs, m.structure().d(a));
    EXPECT_EQ(koszul_delta(m, a), koszul_bracket(m, a));
  }
}

TEST(Harmonic, PublishedDimensions) {
  EXPECT_EQ(harmonic_dims(model("kt")).betti_hr, (BettiVector{1, 3, 4, 2, 1}));
  EXPECT_EQ(harmonic_dims(model("nil6")).betti_hr[3], 4);
  const auto s = harmonic_dims(model("solv6"));
  EXPECT_EQ(s.betti_hr[4], 2);
  for (std::size_t k = 0; k < s.betti.size(); ++k)
    if (k != 4) {
      EXPECT_EQ(s.betti_hr[k], s.betti[k]);
    }
}

TEST(Harmonic, FormLevelMatchesYamada) {
  for (const auto& e : kEntries) {
    const auto m = model(e);
    const auto prof = harmonic_dims(m);
    for (int k = 0; k <= m.dim(); ++k)
      EXPECT_EQ(static_cast<std::int64_t>(form_level_hr(m, k)), prof.betti_hr[static_cast<std::size_t>(k)])
          << e.name << " k=" << k;
  }
}

TEST(Harmonic, RepresentativesAreClosedAndCoclosed) {
  const auto m = model("solv6");
  const auto& ring = m.ring();
  const auto hs = harmonic_subspaces(ring);
  for (int k = 0; k <= 6; ++k)
    for (const auto& v : hs[static_cast<std::size_t>(k)].basis()) {
      ClassVector c{k, v};
      const auto rep = harmonic_representative(m, c);
      ASSERT_TRUE(rep.has_value());
      EXPECT_TRUE(m.structure().d(*rep).is_zero());
      EXPECT_TRUE(koszul_delta(m, *rep).is_zero());
      EXPECT_EQ(ring.class_of(*rep), c);
    }
}

TEST(Harmonic, ScalingOmegaChangesNothing) {
  for (const char* name : {"kt", "nil6", "solv6"}) {
    const auto m = model(name);
    for (int c : {2, -3}) {
      const auto s = m.scaled(Scalar(c));
      EXPECT_EQ(harmonic_dims(s), harmonic_dims(m));
      EXPECT_EQ(parity_report(s).parity_bound, parity_report(m).parity_bound);
    }
  }
}

TEST(Lefschetz, Levels) {
  EXPECT_EQ(lefschetz_level(model("kt")), 0);
  EXPECT_EQ(lefschetz_level(model("nil6")), 0);
  EXPECT_EQ(lefschetz_level(model("solv6")), 1);
  // hard Lefschetz on tori: level n − 1
  EXPECT_EQ(lefschetz_level(model("torus4")), 1);
  EXPECT_EQ(lefschetz_level(model("torus6")), 2);
}

TEST(Lefschetz, Nil6KernelsOnH1) {
  const auto m = model("nil6");
  const auto ker = rank_kernel_image(lefschetz_matrix(m, 1, 1)).kernel;
  ASSERT_EQ(ker.dim(), 1u);
  EXPECT_TRUE(ker.contains(m.ring().class_of(Form<>::generator(6, 1)).coeffs));
  EXPECT_TRUE(lefschetz_matrix(m, 1, 2).is_zero());
}

TEST(Lefschetz, Solv6OmegaKillsDeltaClass) {
  const auto m = model("solv6");
  const auto c = m.ring().class_of(parse_form("56", 6, 2));
  EXPECT_TRUE(m.ring().cup(*m.ring().distinguished(), c).is_zero());
}

TEST(Lefschetz, PrimitiveSpaces) {
  const auto m = model("torus6");
  // P_k = ker L^{n−k+1}; on the torus dim P_k = C(6,k) − C(6,k−2)
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(primitive_space(m, k).dim(), choose(6, k) - (k >= 2 ? choose(6, k - 2) : 0));
  EXPECT_EQ(primitive_space(m, 0).dim(), 1u);
  EXPECT_EQ(primitive_decomposition(m, 2), (std::vector<std::size_t>{14, 1}));
  EXPECT_THROW(primitive_decomposition(m, 3), HypothesisNotMet);
  EXPECT_THROW(primitive_decomposition(model("kt"), 1), HypothesisNotMet);
}

TEST(Parity, BoundsAndClaims) {
  const auto kt = parity_report(model("kt"));
  EXPECT_EQ(kt.parity_bound, 0);
  EXPECT_TRUE(kt.holds());
  const auto s = parity_report(model("solv6"));
  EXPECT_TRUE(s.holds());
  EXPECT_GE(s.parity_bound, s.lefschetz_level);
  for (const auto& e : kEntries) {
    const auto r = parity_report(model(e));
    EXPECT_TRUE(r.holds()) << e.name;
    EXPECT_LE(r.lefschetz_level, r.parity_bound) << e.name;
    for (const auto& p : r.pairings)
      if (p.degree <= r.lefschetz_level) {
        EXPECT_EQ(p.rank, model(e).ring().betti(p.degree));
      }
  }
}

TEST(LefschetzEquivalences, OnRegistry) {
  const auto kt = check_prop26(model("kt")).rows;
  EXPECT_TRUE(kt[0].lefschetz && kt[0].low_and_high && kt[0].high);
  const auto s = check_prop26(model("solv6")).rows;
  EXPECT_TRUE(s[1].lefschetz && s[1].low_and_high && s[1].high);
  EXPECT_FALSE(s[2].lefschetz);
  EXPECT_FALSE(s[2].high);
  for (const auto& e : kEntries) EXPECT_NO_THROW(check_prop26(model(e))) << e.name;
}
