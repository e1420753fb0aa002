#include "lefschetz_cli/registry.hpp"

#include "lefschetz/errors.hpp"

#include <fstream>
#include <sstream>

namespace lefschetz::cli {

namespace {

// kt: e1..e4 = α, β, γ, η with dγ = −α∧β.
// solv6: e1..e6 = α, β, γ1, γ2, δ1, δ2.
constexpr const char* kKt =
    "name: kt\n"
    "dim: 4\n"
    "d: 0,0,-12,0\n"
    "symplectic: 13+24\n";

constexpr const char* kNil6 =
    "name: nil6\n"
    "dim: 6\n"
    "d: 0,0,0,12,14,15+23+24\n"
    "symplectic: 16+25-34\n";

constexpr const char* kSolv6 =
    "name: solv6\n"
    "dim: 6\n"
    "d: 0,0,-13-25,14-26,-15,16\n"
    "symplectic: 12+36+45\n";

std::optional<int> torus_dim(const std::string& name) {
  if (name.rfind("torus", 0) != 0 || name.size() == 5) return std::nullopt;
  int dim = 0;
  for (std::size_t i = 5; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    dim = dim * 10 + (name[i] - '0');
    if (dim > 99) return std::nullopt;
  }
  if (dim < 2 || dim > 12 || dim % 2 != 0) return std::nullopt;
  return dim;
}

std::string torus_text(int dim) {
  std::ostringstream s;
  s << "name: torus" << dim << "\ndim: " << dim << "\nd: ";
  for (int i = 0; i < dim; ++i) s << (i ? "," : "") << 0;
  s << "\nsymplectic: ";
  for (int i = 1; i < dim; i += 2) {
    if (i > 1) s << '+';
    if (dim >= 10) s << i << '.' << i + 1;
    else s << i << i + 1;
  }
  s << '\n';
  return s.str();
}

}  // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> out{"kt", "nil6", "solv6"};
  for (int d = 2; d <= 8; d += 2) out.push_back("torus" + std::to_string(d));
  return out;
}

std::optional<std::string> registry_text(const std::string& name) {
  if (name == "kt") return kKt;
  if (name == "nil6") return kNil6;
  if (name == "solv6") return kSolv6;
  if (auto d = torus_dim(name)) return torus_text(*d);
  return std::nullopt;
}

LoadedLie load_lie_text(const std::string& text) {
  auto doc = parse_lie_document(text);
  LoadedLie out{doc.structure, std::nullopt};
  if (doc.symplectic) out.model.emplace(doc.structure, *doc.symplectic);
  return out;
}

SymplecticModel registry_model(const std::string& name) {
  const auto text = registry_text(name);
  if (!text) throw BadParameter("unknown manifold '" + name + "'");
  return *load_lie_text(*text).model;
}

LoadedLie load_lie(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return load_lie_text(s.str());
}

}  // namespace lefschetz::cli
