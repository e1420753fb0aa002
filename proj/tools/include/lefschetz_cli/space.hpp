#pragma once

#include "lefschetz/complex/cohomology.hpp"
#include "lefschetz/symplectic/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// A product of registry manifolds and projective spaces, written
/// "nil6xcp2", "kt x torus2", "cp1xcp1".
struct Space {
  std::string name;
  std::vector<CohomologyRing> factors;
  std::optional<SymplecticModel> base;  // the first factor, when it is a registry manifold
  CohomologyRing ring;

  /// Lifts a class of the first factor to the product.
  ClassVector lift(const ClassVector& c) const;
  /// A closed 2i-form on the first factor in term syntax ("26-45", "0"), as a class of the product.
  ClassVector base_class(const std::string& text, int degree) const;
};

/// Throws BadParameter on unknown factors.
Space parse_space(const std::string& expr);

}  // namespace lefschetz::cli
