#include "lefschetz/symplectic/model.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/exact/linalg.hpp"

#include <algorithm>
#include <bit>

namespace lefschetz {

namespace {

Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto e = reduced_echelon(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) throw NotSymplectic("symplectic form is degenerate");
  Matrix<Scalar> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

Form<> apply(const Matrix<Scalar>& m, int n, int to_degree, const Form<>& a) {
  const auto v = a.to_vector();
  const auto w = m.apply(v);
  return Form<>::from_vector(n, to_degree, w);
}

Form<> interior(int i, const Form<>& a) {
  if (a.degree() == 0) return Form<>(a.n(), 0);
  Form<> out(a.n(), a.degree() - 1);
  const std::uint32_t bit = 1u << (i - 1);
  for (const auto& [idx, c] : a.terms()) {
    if (!(idx.bits() & bit)) continue;
    const int before = std::popcount(idx.bits() & (bit - 1));
    out.add_term(BasisIndex(idx.bits() & ~bit), before % 2 == 0 ? c : -c);
  }
  return out;
}

Form<> zero_below(const Form<>& a, int drop) { return Form<>(a.n(), std::max(a.degree() - drop, 0)); }

}  // namespace

SymplecticModel::SymplecticModel(LieStructure ls, Form<> omega) {
  const int dim = ls.n();
  if (dim % 2 != 0 || dim == 0) throw NotSymplectic(ls.name() + ": dimension " + std::to_string(dim) + " is not even and positive");
  if (omega.is_zero()) omega = Form<>(dim, 2);
  if (omega.n() != dim || omega.degree() != 2) throw NotSymplectic(ls.name() + ": symplectic form must be a 2-form on the same generators");
  if (const Form<> dw = ls.d(omega); !dw.is_zero())
    throw NotSymplectic(ls.name() + ": symplectic form is not closed, dω = " + dw.to_string());
  const int n = dim / 2;
  Scalar factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= Scalar(i);
  Form<> volume = power(omega, n);
  if (volume.is_zero()) throw NotSymplectic(ls.name() + ": ω^" + std::to_string(n) + " = 0, the form is degenerate");
  volume *= factorial.inverse();

  const auto sz = static_cast<std::size_t>(dim);
  Matrix<Scalar> W(sz, sz);
  for (const auto& [idx, c] : omega.terms()) {
    const auto ij = idx.indices();
    W(static_cast<std::size_t>(ij[0] - 1), static_cast<std::size_t>(ij[1] - 1)) = c;
    W(static_cast<std::size_t>(ij[1] - 1), static_cast<std::size_t>(ij[0] - 1)) = -c;
  }
  // ♮(X) = ι_X ω has matrix Wᵀ on components; G = −♮⁻¹(ω) pushes ω through (Wᵀ)⁻¹.
  const Matrix<Scalar> flat_inv = inverse(W.transpose());
  if (!(W.transpose() * flat_inv == Matrix<Scalar>::identity(sz)))
    throw InternalInconsistency("SymplecticModel: ♮ ∘ ♮⁻¹ is not the identity");
  Matrix<Scalar> G = (flat_inv * W * flat_inv.transpose()).scaled(Scalar(-1));

  auto data = std::make_shared<Data>(Data{ls, omega, cohomology(ls), std::move(G), volume, {}, {}, {}});
  data->ring = data->ring.with_distinguished(data->ring.class_of(omega));
  data_ = data;

  const Scalar vcoef = volume.top_coefficient();
  const BasisIndex top = top_index(dim);
  for (int k = 0; k <= dim; ++k) {
    const auto src = basis_of_degree(dim, k);
    Matrix<Scalar> S(choose(dim, dim - k), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& I : src) {
        const Scalar p = pairing(I, src[j]);
        if (p.is_zero()) continue;
        const BasisIndex comp(top.bits() & ~I.bits());
        const Scalar entry = p * vcoef;
        S(lex_position(dim, comp), j) = wedge_sign(I, comp) > 0 ? entry : -entry;
      }
    data->star.push_back(std::move(S));

    Matrix<Scalar> Lk(choose(dim, k + 2), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const Form<> img = wedge(Form<>::basis(dim, src[j]), omega);
      for (const auto& [idx, c] : img.terms()) Lk(lex_position(dim, idx), j) = c;
    }
    data->wedge_omega.push_back(std::move(Lk));
  }
  for (int k = 0; k <= dim; ++k) {
    if (k == 0) {
      data->delta.emplace_back(0, 1);
      continue;
    }
    const Matrix<Scalar>& S_in = data->star[static_cast<std::size_t>(k)];
    const Matrix<Scalar>& D = data->ls.differential_matrix(dim - k);
    const Matrix<Scalar>& S_out = data->star[static_cast<std::size_t>(dim - k + 1)];
    Matrix<Scalar> delta = S_out * (D * S_in);
    if (k % 2 == 0) delta = delta.scaled(Scalar(-1));
    data->delta.push_back(std::move(delta));
  }

  // Conventions are pinned by *1 = v_M, ** = Id and Lδ − δL = d; check them on generators.
  const Form<> one = Form<>::constant(dim, Scalar(1));
  if (!(star(*this, one) == volume)) throw InternalInconsistency("SymplecticModel: *1 != v_M");
  for (int i = 1; i <= dim; ++i) {
    const Form<> e = Form<>::generator(dim, i);
    const Form<> comm = wedge(koszul_delta(*this, e), omega) - koszul_delta(*this, wedge(e, omega));
    if (!(star(*this, star(*this, e)) == e) || !(comm == data->ls.d(e)))
      throw InternalInconsistency("SymplecticModel: operator conventions fail on e" + std::to_string(i));
  }
}

Scalar SymplecticModel::pairing(BasisIndex I, BasisIndex J) const {
  if (I.degree() != J.degree()) return Scalar(0);
  const auto ri = I.indices(), cj = J.indices();
  Matrix<Scalar> sub(ri.size(), cj.size());
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < cj.size(); ++b)
      sub(a, b) = data_->G(static_cast<std::size_t>(cj[b] - 1), static_cast<std::size_t>(ri[a] - 1));
  return determinant(std::move(sub));
}

const Matrix<Scalar>& SymplecticModel::star_matrix(int k) const { return data_->star.at(static_cast<std::size_t>(k)); }
const Matrix<Scalar>& SymplecticModel::delta_matrix(int k) const { return data_->delta.at(static_cast<std::size_t>(k)); }
const Matrix<Scalar>& SymplecticModel::wedge_omega_matrix(int k) const {
  return data_->wedge_omega.at(static_cast<std::size_t>(k));
}

SymplecticModel SymplecticModel::scaled(const Scalar& c) const { return SymplecticModel(structure(), c * omega()); }

Form<> star(const SymplecticModel& model, const Form<>& a) {
  if (a.n() != model.dim()) throw DimensionMismatch("star: form lives in a different exterior algebra");
  if (a.degree() > model.dim()) return Form<>(a.n(), 0);
  return apply(model.star_matrix(a.degree()), a.n(), model.dim() - a.degree(), a);
}

Form<> koszul_delta(const SymplecticModel& model, const Form<>& a) {
  if (a.n() != model.dim()) throw DimensionMismatch("koszul_delta: form lives in a different exterior algebra");
  if (a.degree() == 0 || a.degree() > model.dim()) return zero_below(a, 1);
  return apply(model.delta_matrix(a.degree()), a.n(), a.degree() - 1, a);
}

Form<> contract_bivector(const SymplecticModel& model, const Form<>& a) {
  if (a.degree() < 2) return zero_below(a, 2);
  Form<> out(a.n(), a.degree() - 2);
  const auto& G = model.G();
  for (int j = 2; j <= a.n(); ++j) {
    const Form<> first = interior(j, a);
    if (first.is_zero()) continue;
    for (int i = 1; i < j; ++i) {
      const Scalar& g = G(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (g.is_zero()) continue;
      out += g * interior(i, first);
    }
  }
  return out;
}

Form<> koszul_bracket(const SymplecticModel& model, const Form<>& a) {
  const auto& ls = model.structure();
  Form<> out = contract_bivector(model, ls.d(a));
  if (a.degree() >= 2) out -= ls.d(contract_bivector(model, a));
  return out;
}

Subspace<Scalar> harmonic_forms(const SymplecticModel& model, int k) {
  const auto closed = rank_kernel_image(model.structure().differential_matrix(k)).kernel;
  if (k == 0) return closed;
  const auto coclosed = rank_kernel_image(model.delta_matrix(k)).kernel;
  return closed.intersect(coclosed);
}

std::size_t form_level_hr(const SymplecticModel& model, int k) {
  if (k < 0 || k > model.dim()) return 0;
  const auto h = harmonic_forms(model, k);
  if (k == 0) return h.dim();
  const auto exact = rank_kernel_image(model.structure().differential_matrix(k - 1)).image;
  return h.dim() - h.intersect(exact).dim();
}

std::optional<Form<>> harmonic_representative(const SymplecticModel& model, const ClassVector& a) {
  const Form<> rep = model.ring().representative(a);
  const int k = a.degree;
  if (k == 0 || koszul_delta(model, rep).is_zero()) return rep;
  const auto& D = model.structure().differential_matrix(k - 1);
  const auto& delta = model.delta_matrix(k);
  const auto target = delta.apply(rep.to_vector());
  const auto gamma = solve(delta * D, std::span<const Scalar>(target));
  if (!gamma) return std::nullopt;
  return rep - model.structure().d(Form<>::from_vector(model.dim(), k - 1, *gamma));
}

namespace {

Matrix<Scalar> wedge_omega_power(const SymplecticModel& model, int k, int p) {
  const int dim = model.dim();
  Matrix<Scalar> m = Matrix<Scalar>::identity(choose(dim, k));
  for (int i = 0; i < p; ++i) {
    const int from = k + 2 * i;
    if (from > dim) return Matrix<Scalar>(0, choose(dim, k));
    m = model.wedge_omega_matrix(from) * m;
  }
  return m;
}

[[noreturn]] void violated(const std::string& identity, const Form<>& offender) {
  throw IdentityViolated(identity + " fails on " + offender.to_string());
}

}  // namespace

IdentityReport verify_operator_identities(const SymplecticModel& model) {
  IdentityReport report;
  const int dim = model.dim(), n = model.n();
  const auto& ls = model.structure();

  if (!(star(model, Form<>::constant(dim, Scalar(1))) == model.volume())) violated("*1 = v_M", Form<>::constant(dim, Scalar(1)));
  report.checks["star_unit"] = true;

  for (int k = 0; k <= dim; ++k)
    for (const auto& idx : basis_of_degree(dim, k)) {
      const Form<> e = Form<>::basis(dim, idx);
      ++report.basis_forms;
      if (!(star(model, star(model, e)) == e)) violated("** = Id", e);
      const Form<> de = koszul_delta(model, e);
      if (!koszul_delta(model, de).is_zero()) violated("δ² = 0", e);
      Form<> commutator(dim, k + 1);
      if (k >= 1) commutator += wedge(de, model.omega());
      if (k + 2 <= dim) commutator -= koszul_delta(model, wedge(e, model.omega()));
      if (!(commutator == ls.d(e))) violated("Lδ − δL = d", e);
      if (!(koszul_bracket(model, e) == de)) violated("δ = [ι_G, d]", e);
    }
  report.checks["star_squared"] = true;
  report.checks["delta_squared"] = true;
  report.checks["l_delta_commutator"] = true;
  report.checks["delta_bracket"] = true;

  for (const auto& v : model.ring().cocycles(1).basis()) {
    const Form<> a = Form<>::from_vector(dim, 1, v);
    if (!koszul_delta(model, a).is_zero()) violated("δ = 0 on closed 1-forms", a);
  }
  report.checks["delta_closed_1forms"] = true;

  for (int k = 0; k <= n; ++k) {
    const auto effective = rank_kernel_image(wedge_omega_power(model, k, n - k + 1)).kernel;
    const auto lift = wedge_omega_power(model, k, n - k);
    for (const auto& v : effective.basis()) {
      const Form<> a = Form<>::from_vector(dim, k, v);
      const auto target = Subspace<Scalar>::span(choose(dim, dim - k), {lift.apply(v)});
      if (!target.contains(star(model, a).to_vector())) violated("*α ∈ span{L^{n−k}α} for effective α", a);
    }
  }
  report.checks["effective_star"] = true;

  for (int k = 0; k <= n; ++k) {
    const auto low = harmonic_forms(model, k);
    const auto high = harmonic_forms(model, dim - k);
    const auto image = low.image_under(wedge_omega_power(model, k, n - k));
    if (image.dim() != low.dim() || low.dim() != high.dim() || !high.contains(image)) {
      const Form<> witness = low.dim() ? Form<>::from_vector(dim, k, low.basis().front()) : Form<>(dim, k);
      violated("L^{n−k}: harmonic k-forms → harmonic (2n−k)-forms is bijective", witness);
    }
  }
  report.checks["harmonic_duality"] = true;
  return report;
}

}  // namespace lefschetz
