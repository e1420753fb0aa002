#include "lefschetz_cli/paper_checks.hpp"

#include "lefschetz/constructions/auroux.hpp"
#include "lefschetz/constructions/blowup.hpp"
#include "lefschetz/constructions/donaldson.hpp"
#include "lefschetz/symplectic/analysis.hpp"
#include "lefschetz_cli/registry.hpp"
#include "lefschetz_cli/space.hpp"

#include <sstream>

namespace lefschetz::cli {

namespace {

std::string join(const BettiVector& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Board {
 public:
  void add(std::string id, std::string what, const std::string& expected, const std::string& actual) {
    out_.push_back({std::move(id), std::move(what), expected, actual, expected == actual});
  }
  void add(std::string id, std::string what, std::int64_t expected, std::int64_t actual) {
    add(std::move(id), std::move(what), std::to_string(expected), std::to_string(actual));
  }
  std::vector<PaperCheck> take() { return std::move(out_); }

 private:
  std::vector<PaperCheck> out_;
};

}  // namespace

std::vector<PaperCheck> paper_checks() {
  Board b;
  const auto kt = registry_model("kt");
  const auto nil6 = registry_model("nil6");
  const auto solv6 = registry_model("solv6");
  const auto hkt = harmonic_dims(kt), hnil = harmonic_dims(nil6), hsolv = harmonic_dims(solv6);

  b.add("betti.kt", "Betti numbers of KT", "(1,3,4,3,1)", join(hkt.betti));
  b.add("betti.nil6", "Betti numbers of the 6-nilmanifold", "(1,3,5,6,5,3,1)", join(hnil.betti));
  b.add("betti.solv6", "Betti numbers of the completely solvable 6-manifold", "(1,2,3,4,3,2,1)", join(hsolv.betti));

  b.add("hr.kt.3", "b3^hr(KT)", 2, hkt.betti_hr[3]);
  b.add("hr.nil6.3", "b3^hr(nil6) = 6+1-3", 4, hnil.betti_hr[3]);
  b.add("hr.nil6.3.kernel", "b3^hr(nil6) from the kernel formula", 4, ambient_b3hr(nil6.ring()));
  b.add("hr.solv6.4", "b4^hr(solv6)", 2, hsolv.betti_hr[4]);
  {
    bool rest = true;
    for (std::size_t k = 0; k < hsolv.betti.size(); ++k)
      if (k != 4 && hsolv.betti[k] != hsolv.betti_hr[k]) rest = false;
    b.add("hr.solv6.other", "b_k^hr(solv6) = b_k for k != 4", "yes", yes_no(rest));
  }

  b.add("level.kt", "KT is not 1-Lefschetz", 0, lefschetz_level(kt));
  b.add("level.nil6", "nil6 is not 1-Lefschetz", 0, lefschetz_level(nil6));
  b.add("level.solv6", "solv6 is 1-Lefschetz but not 2-Lefschetz", 1, lefschetz_level(solv6));
  b.add("parity.kt", "b1(KT) odd bounds the Lefschetz level by 0", 0, parity_report(kt).parity_bound);

  {
    const auto rows = check_prop26(kt).rows;
    b.add("equiv.kt", "KT at s=0: the three conditions hold", "yes",
          yes_no(rows[0].lefschetz && rows[0].low_and_high && rows[0].high));
    const auto srows = check_prop26(solv6).rows;
    b.add("equiv.solv6.1", "solv6 at s=1: conditions hold", "yes",
          yes_no(srows[1].lefschetz && srows[1].low_and_high && srows[1].high));
    b.add("equiv.solv6.2", "solv6 at s=2: (i) and (iii) fail", "yes", yes_no(!srows[2].lefschetz && !srows[2].high));
  }

  {
    const auto& R = nil6.ring();
    const auto ker = rank_kernel_image(lefschetz_matrix(R, 1, 1)).kernel;
    const auto a1 = R.class_of(parse_form("1", 6, 1));
    b.add("nil6.L1", "ker(L: H1 -> H3) on nil6 is spanned by [a1]", "yes",
          yes_no(ker.dim() == 1 && ker.contains(a1.coeffs)));
    b.add("nil6.L2", "L^2: H1 -> H5 is zero on nil6", "yes", yes_no(lefschetz_matrix(R, 1, 2).is_zero()));
    bool closed_harmonic = true;
    for (const auto& v : R.cocycles(1).basis()) {
      if (!koszul_delta(nil6, Form<>::from_vector(6, 1, v)).is_zero()) closed_harmonic = false;
    }
    b.add("nil6.delta1", "closed invariant 1-forms on nil6 are coclosed", "yes", yes_no(closed_harmonic));
  }
  {
    const auto& R = solv6.ring();
    const auto c = R.cup(*R.distinguished(), R.class_of(parse_form("56", 6, 2)));
    b.add("solv6.cup", "[w] u [d1 d2] = 0 in H4(solv6)", "yes", yes_no(c.is_zero()));
  }

  const auto x2 = parse_space("nil6xcp2");
  const auto x4 = parse_space("nil6xcp4");
  b.add("product.b3", "b3(nil6 x CP2) = 6+3", 9, static_cast<std::int64_t>(x2.ring.betti(3)));
  b.add("product.b1", "b1(nil6 x CP2) = b1(nil6)", 3, static_cast<std::int64_t>(x2.ring.betti(1)));
  b.add("product.hr.r1", "b3^hr(nil6 x CP2) = 9+1-3", 7, ambient_b3hr(x2.ring));
  b.add("product.hr.r3", "b3^hr(nil6 x CP4) = 9+1-3", 7, ambient_b3hr(x4.ring));
  b.add("product.hr.r1.yamada", "b3^hr(nil6 x CP2) by the Yamada recursion", 7, harmonic_dims(x2.ring).betti_hr[3]);

  const auto a2 = x2.base_class("26-45", 2);
  const auto z1 = auroux_b3hr({x2.ring, 1, {a2}}).b3hr;
  const auto z1p = auroux_b3hr({x2.ring, 1, {x2.base_class("13", 2)}}).b3hr;
  b.add("auroux.ex1", "Z1 in nil6 x CP2 with c1 = [a26 - a45]: 9+1-1", 9, z1);
  b.add("auroux.ex1.gt", "b3^hr(Z1) > b3^hr(X)", "yes", yes_no(z1 > ambient_b3hr(x2.ring)));
  b.add("auroux.ex2", "Z1' in nil6 x CP2 with c1 = [a13]", 7, z1p);

  const auto a4 = x4.base_class("26-45", 2);
  const auto sum = whitney_sum(x4.ring, {a4}, 1, {Scalar(-1) * a4, x4.ring.cup(a4, a4)}, 2);
  const auto z3 = auroux_b3hr({x4.ring, 3, sum}).b3hr;
  const auto z1_4 = auroux_b3hr({x4.ring, 1, {a4}}).b3hr;
  b.add("auroux.ex3.z3", "Z3 in nil6 x CP4 for the trivial bundle E + F", 7, z3);
  b.add("auroux.ex3.z1", "Z1 in nil6 x CP4 for E", 9, z1_4);
  b.add("auroux.ex3.lt", "b3^hr(Z3) < b3^hr(Z1)", "yes", yes_no(z3 < z1_4));

  {
    const auto m2 = blowup_betti(5, kodaira_thurston_betti());
    b.add("blowup.m2.b3", "b3(M2) = b1(KT)", 3, m2.result_betti[3]);
    const auto m4 = blowup_betti(11, m2.result_betti);
    b.add("blowup.m4.b1", "b1(M4)", 0, m4.result_betti[1]);
    b.add("blowup.m4.b3", "b3(M4)", 0, m4.result_betti[3]);
    b.add("blowup.m4.b5", "b5(M4)", 3, m4.result_betti[5]);
  }
  for (int r = 1; r <= 5; ++r) {
    const auto t = tower(2 * r);
    b.add("tower.m." + std::to_string(2 * r), "m_s = 6*2^r - 1 for s = " + std::to_string(2 * r),
          6 * (std::int64_t{1} << r) - 1, t.m.back());
    b.add("tower.w." + std::to_string(2 * r), "dim W_s = 2(s+2) for s = " + std::to_string(2 * r), 2 * (2 * r + 2),
          t.dim_w);
  }
  for (int s : {2, 4}) {
    const auto t = tower(s);
    const auto w = donaldson_transfer(tower_profile(s), static_cast<int>(t.l_s));
    const auto& deg = w.degrees[static_cast<std::size_t>(s + 3)];
    b.add("donaldson.b." + std::to_string(s), "b_{s+3}(W_s) for s = " + std::to_string(s), 3, deg.betti.value_or(-1));
    const auto gap = deg.gap_parity();
    b.add("donaldson.gap." + std::to_string(s), "b_{s+3} - b^hr_{s+3} is odd on W_s for s = " + std::to_string(s), "1",
          gap ? std::to_string(*gap) : "unknown");
  }
  return b.take();
}

}  // namespace lefschetz::cli
