#pragma once

#include "lefschetz/complex/cohomology.hpp"
#include "lefschetz/complex/lie_structure.hpp"
#include "lefschetz/exact/matrix.hpp"
#include "lefschetz/exterior/form.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

/// An invariant symplectic form on a Lie algebra together with the operator
/// calculus it induces on invariant forms.
///
/// Construction checks dω = 0 and ωⁿ ≠ 0 (NotSymplectic otherwise), inverts
/// the coefficient matrix of ω to get the Poisson bivector G, and tabulates
/// the star and Koszul matrices in every degree.
class SymplecticModel {
 public:
  SymplecticModel(LieStructure ls, Form<> omega);

  const LieStructure& structure() const { return data_->ls; }
  /// Cohomology ring with [ω] as its distinguished class.
  const CohomologyRing& ring() const { return data_->ring; }
  const Form<>& omega() const { return data_->omega; }
  const std::string& name() const { return data_->ls.name(); }
  int n() const { return data_->ls.n() / 2; }
  int dim() const { return data_->ls.n(); }

  /// G^{ij}, the components of G = −♮⁻¹(ω) = ½ Σ G^{ij} ε_i ∧ ε_j.
  const Matrix<Scalar>& G() const { return data_->G; }
  /// v_M = ωⁿ / n!.
  const Form<>& volume() const { return data_->volume; }

  /// Λᵏ(G)(e_I, e_J) = det (G(e_i, e_j))_{i∈I, j∈J} with G(ξ, η) = ι_ξ ι_η G,
  /// so G(e_i, e_j) = G^{ji}.
  Scalar pairing(BasisIndex I, BasisIndex J) const;

  /// Matrices in the lexicographic bases: * : Λᵏ → Λ^{2n−k}, δ : Λᵏ → Λ^{k−1},
  /// L : Λᵏ → Λ^{k+2}.
  const Matrix<Scalar>& star_matrix(int k) const;
  const Matrix<Scalar>& delta_matrix(int k) const;
  const Matrix<Scalar>& wedge_omega_matrix(int k) const;

  /// The same structure with ω replaced by c·ω.
  SymplecticModel scaled(const Scalar& c) const;

 private:
  struct Data {
    LieStructure ls;
    Form<> omega;
    CohomologyRing ring;
    Matrix<Scalar> G;
    Form<> volume;
    std::vector<Matrix<Scalar>> star, delta, wedge_omega;
  };
  std::shared_ptr<const Data> data_;
};

/// Symplectic star, characterized by β ∧ *α = Λᵏ(G)(β, α) v_M.
Form<> star(const SymplecticModel& model, const Form<>& a);

/// Koszul differential δ = (−1)^{k+1} * d * on k-forms.
Form<> koszul_delta(const SymplecticModel& model, const Form<>& a);

/// Contraction with the bivector, ι_G = Σ_{i<j} G^{ij} ι_{ε_i} ι_{ε_j}.
Form<> contract_bivector(const SymplecticModel& model, const Form<>& a);

/// The bracket ι_G d − d ι_G.
Form<> koszul_bracket(const SymplecticModel& model, const Form<>& a);

/// Closed and coclosed invariant k-forms, as a subspace of Λᵏ.
Subspace<Scalar> harmonic_forms(const SymplecticModel& model, int k);

/// Dimension of harmonic k-forms modulo the exact ones among them.
std::size_t form_level_hr(const SymplecticModel& model, int k);

/// A closed, coclosed representative of the class, or nullopt when no
/// invariant one exists.
std::optional<Form<>> harmonic_representative(const SymplecticModel& model, const ClassVector& a);

struct IdentityReport {
  std::map<std::string, bool> checks;
  std::size_t basis_forms = 0;
};

/// Checks *1 = v_M, *² = Id, δ² = 0, Lδ − δL = d, δ = [ι_G, d], δ on closed
/// 1-forms, *α ∈ span{L^{n−k}α} for effective α, and that L^{n−k} maps
/// harmonic k-forms bijectively onto harmonic (2n−k)-forms. Throws
/// IdentityViolated naming the first offending basis form.
IdentityReport verify_operator_identities(const SymplecticModel& model);

}  // namespace lefschetz
