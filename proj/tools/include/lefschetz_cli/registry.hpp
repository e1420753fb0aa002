#pragma once

#include "lefschetz/complex/lie_structure.hpp"
#include "lefschetz/symplectic/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// Listed names: kt, nil6, solv6 and torus2 … torus8. registry_text() also
/// accepts torus10 and torus12.
std::vector<std::string> registry_names();

/// `.lie` text of a registry entry, or nullopt for an unknown name.
std::optional<std::string> registry_text(const std::string& name);

/// Parsed and validated registry model; throws BadParameter for unknown names.
SymplecticModel registry_model(const std::string& name);

struct LoadedLie {
  LieStructure structure;
  std::optional<SymplecticModel> model;
};

/// Reads a `.lie` file. Throws ParseError, NotLieAlgebra or NotSymplectic.
LoadedLie load_lie(const std::string& path);
LoadedLie load_lie_text(const std::string& text);

}  // namespace lefschetz::cli
