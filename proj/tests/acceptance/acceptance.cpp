// One line per acceptance criterion; exit status is nonzero if any fails.

#include "lefschetz/constructions/auroux.hpp"
#include "lefschetz/constructions/blowup.hpp"
#include "lefschetz/constructions/determinant.hpp"
#include "lefschetz/constructions/donaldson.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/symplectic/analysis.hpp"
#include "lefschetz_cli/registry.hpp"

#include <iostream>
#include <sstream>

using namespace lefschetz;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]\n";
}

std::string show(const BettiVector& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

SymplecticModel reg(const std::string& name) { return cli::registry_model(name); }

std::vector<AurouxKernel> kernels_seen;

AurouxResult auroux(const AurouxQuery& q) {
  auto r = auroux_b3hr(q);
  kernels_seen.push_back(r.first);
  kernels_seen.push_back(r.second);
  return r;
}

ClassVector lift(const CohomologyRing& x, const ClassVector& c) { return x.tensor(c, x.right_factor().unit()); }

void criterion1() {
  const auto a = cohomology(reg("kt").structure()).betti();
  const auto b = cohomology(reg("nil6").structure()).betti();
  const auto c = cohomology(reg("solv6").structure()).betti();
  const bool ok = a == BettiVector{1, 3, 4, 3, 1} && b == BettiVector{1, 3, 5, 6, 5, 3, 1} &&
                  c == BettiVector{1, 2, 3, 4, 3, 2, 1};
  report(1, ok, "Betti vectors exact", "kt " + show(a) + ", nil6 " + show(b) + ", solv6 " + show(c));
}

void criterion2() {
  const auto kt = harmonic_dims(reg("kt")).betti_hr;
  const auto nil = harmonic_dims(reg("nil6")).betti_hr;
  const auto solv = harmonic_dims(reg("solv6"));
  bool solv_rest = true;
  for (std::size_t k = 0; k < solv.betti.size(); ++k)
    if (k != 4 && solv.betti[k] != solv.betti_hr[k]) solv_rest = false;
  const auto nil6 = reg("nil6").ring();
  const auto x1 = harmonic_dims(kunneth(nil6, cp_ring(2))).betti_hr[3];
  const auto x3 = harmonic_dims(kunneth(nil6, cp_ring(4))).betti_hr[3];
  const bool ok = kt[3] == 2 && nil[3] == 4 && solv.betti_hr[4] == 2 && solv_rest && x1 == 7 && x3 == 7;
  std::ostringstream d;
  d << "b3hr(kt)=" << kt[3] << " b3hr(nil6)=" << nil[3] << " b4hr(solv6)=" << solv.betti_hr[4]
    << " solv6 other degrees equal=" << (solv_rest ? "yes" : "no") << " b3hr(nil6xCP2)=" << x1
    << " b3hr(nil6xCP4)=" << x3;
  report(2, ok, "Harmonic dimensions exact", d.str());
}

void criterion3() {
  const int a = lefschetz_level(reg("kt")), b = lefschetz_level(reg("nil6")), c = lefschetz_level(reg("solv6")),
            t = lefschetz_level(reg("torus6"));
  std::ostringstream d;
  d << "kt " << a << ", nil6 " << b << ", solv6 " << c << ", torus6 " << t;
  report(3, a == 0 && b == 0 && c == 1 && t == 2, "Lefschetz levels exact", d.str());
}

void criterion4() {
  const auto nil6 = reg("nil6");
  const auto x2 = kunneth(nil6.ring(), cp_ring(2));
  const auto x4 = kunneth(nil6.ring(), cp_ring(4));
  const auto A = nil6.ring().class_of(parse_form("26-45", 6, 2));
  const auto B = nil6.ring().class_of(parse_form("13", 6, 2));
  const auto c_a = auroux({x2, 1, {lift(x2, A)}}).b3hr;
  const auto c_b = auroux({x2, 1, {lift(x2, B)}}).b3hr;
  const auto a4 = lift(x4, A);
  const auto sum = whitney_sum(x4, {a4}, 1, {Scalar(-1) * a4, x4.cup(a4, a4)}, 2);
  const auto z3 = auroux({x4, 3, sum}).b3hr;
  const auto z1 = auroux({x4, 1, {a4}}).b3hr;
  const bool ok = c_a == 9 && c_b == 7 && z3 == 7 && z1 == 9 && z3 < z1;
  std::ostringstream d;
  d << "nil6xCP2 c1=[26-45]: " << c_a << " (expected 9), nil6xCP2 c1=[13]: " << c_b
    << " (expected 7), nil6xCP4 Z3 " << z3 << " (expected 7), Z1 " << z1 << " (expected 9), Z3 < Z1: " << (z3 < z1 ? "yes" : "no");
  report(4, ok, "Harmonic b3 of Auroux submanifolds exact", d.str());
}

void criterion5() {
  const auto m2 = blowup_betti(5, kodaira_thurston_betti()).result_betti;
  const auto m4 = blowup_betti(11, m2).result_betti;
  bool ok = m2[3] == 3 && m4[1] == 0 && m4[3] == 0 && m4[5] == 3;
  std::ostringstream d;
  d << "b3(M2)=" << m2[3] << " b1(M4)=" << m4[1] << " b3(M4)=" << m4[3] << " b5(M4)=" << m4[5] << "; m_s:";
  for (int r = 1; r <= 5; ++r) {
    const auto t = tower(2 * r);
    const auto expected = 6 * (std::int64_t{1} << r) - 1;
    d << ' ' << t.m.back();
    ok = ok && t.m.back() == expected && t.dim_w == 2 * (2 * r + 2);
    const auto w = donaldson_transfer(tower_profile(2 * r), static_cast<int>(t.l_s));
    const auto& deg = w.degrees[static_cast<std::size_t>(2 * r + 3)];
    ok = ok && deg.betti == std::optional<std::int64_t>(3) && deg.gap_parity() == std::optional<int>(1) &&
         2 * w.n == t.dim_w;
  }
  d << "; dim W_s = 2(s+2) and b_{s+3}(W_s)=3 with odd gap for s=2..10";
  report(5, ok, "Blow-up and tower arithmetic exact", d.str());
}

void criterion6() {
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"kt", "nil6", "solv6", "torus4", "torus6"}) {
    try {
      const auto r = verify_operator_identities(reg(name));
      bool all = true;
      for (const auto& [k, v] : r.checks) all = all && v;
      ok = ok && all;
      d << name << ' ' << r.basis_forms << " forms " << (all ? "ok" : "FAIL") << "; ";
    } catch (const IdentityViolated& e) {
      ok = false;
      d << name << ": " << e.what() << "; ";
    }
  }
  report(6, ok, "Operator identities on every basis form", d.str());
}

void criterion7() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& name : cli::registry_names()) {
    const auto m = reg(name);
    const auto prof = harmonic_dims(m);
    bool form = true;
    for (int k = 0; k <= m.dim(); ++k)
      if (static_cast<std::int64_t>(form_level_hr(m, k)) != prof.betti_hr[static_cast<std::size_t>(k)]) form = false;
    bool equiv = true;
    try {
      check_prop26(m);
    } catch (const EquivalenceViolated&) {
      equiv = false;
    }
    const bool parity = parity_report(m).holds();
    ok = ok && form && equiv && parity;
    if (!(form && equiv && parity)) d << name << " form=" << form << " equiv=" << equiv << " parity=" << parity << "; ";
  }
  d << cli::registry_names().size() << " registry manifolds";
  report(7, ok, "Form-level and Yamada dimensions agree; Lefschetz equivalences and parity hold", d.str());
}

void criterion8() {
  std::size_t total = 0, equal = 0, signed_equal = 0, lambda_ok = 0;
  for (int m = 1; m <= 14; ++m)
    for (int n = 1; n < m; ++n)
      for (int k = 0; k <= n + 1; ++k)
        for (int mu = 1; mu <= 3; ++mu) {
          if (!valid_determinant_parameters(m, n, k, mu)) continue;
          const auto c = pairing_determinant_check({m, n, k, mu});
          ++total;
          if (c.holds) ++equal;
          const Scalar sign((mu * (mu - 1) / 2) % 2 ? -1 : 1);
          if (c.brute == Polynomial(sign) * c.closed) ++signed_equal;
          if (c.lambda_nonzero) ++lambda_ok;
        }
  std::ostringstream d;
  d << equal << '/' << total << " parameter sets with brute-force determinant equal to the closed form";
  report(8, equal == total, "Determinant identity exact over mu <= 3, m <= 14", d.str());
  std::cout << "criterion 8 (sign-corrected, informational): " << (signed_equal == total ? "PASS" : "FAIL")
            << "  brute = (-1)^{mu(mu-1)/2} * closed form on " << signed_equal << '/' << total
            << ", leading coefficient nonzero on " << lambda_ok << '/' << total << '\n';
}

void criterion9() {
  // trivial bundles on the products used above, in addition to the examples
  const auto nil6 = reg("nil6").ring(), t6 = reg("torus6").ring();
  for (int r : {1, 2, 3}) {
    auroux({kunneth(nil6, cp_ring(r + 1)), r, {}});
    auroux({kunneth(t6, cp_ring(r + 1)), r, {}});
  }
  std::size_t ok = 0;
  for (const auto& k : kernels_seen) ok += k.consistent() ? 1 : 0;
  std::ostringstream d;
  d << ok << '/' << kernels_seen.size() << " kernels agree over Q(k) and at k=1000, k=1001";
  report(9, ok == kernels_seen.size(), "Function-field kernels agree with evaluation", d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (9 - failures) << "/9 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
