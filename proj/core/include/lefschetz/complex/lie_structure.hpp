#pragma once

#include "lefschetz/exact/matrix.hpp"
#include "lefschetz/exact/scalar.hpp"
#include "lefschetz/exterior/form.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// What the Chevalley-Eilenberg cohomology of the structure computes.
enum class LieClass {
  Nilpotent,           // equals de Rham cohomology of any compact quotient (Nomizu)
  CompletelySolvable,  // likewise (Hattori)
  Solvable,            // CE cohomology only
  NotSolvable,         // CE cohomology only
};

std::string_view to_string(LieClass c);
inline bool identifies_de_rham(LieClass c) { return c == LieClass::Nilpotent || c == LieClass::CompletelySolvable; }

/// Structure equations of a Lie algebra: d of each degree-1 generator.
/// Construction verifies that d, extended as an antiderivation, squares to
/// zero on every generator; otherwise NotLieAlgebra is thrown.
class LieStructure {
 public:
  LieStructure(std::string name, std::vector<Form<>> d_of_generator);

  int n() const { return static_cast<int>(d_gen_.size()); }
  const std::string& name() const { return name_; }
  /// d e_i, 1-based.
  const Form<>& d_of(int i) const { return d_gen_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Form<>>& differentials() const { return d_gen_; }

  /// Exterior derivative of an invariant form.
  Form<> d(const Form<>& a) const;

  /// Matrix of d: Λ^k -> Λ^{k+1} in the lexicographic bases (cached); an
  /// empty matrix outside 0 <= k <= n.
  const Matrix<Scalar>& differential_matrix(int k) const;

  bool is_abelian() const;
  LieClass classify() const;

  LieStructure renamed(std::string name) const;

  friend bool operator==(const LieStructure& a, const LieStructure& b) {
    return a.name_ == b.name_ && a.d_gen_ == b.d_gen_;
  }

 private:
  std::string name_;
  std::vector<Form<>> d_gen_;
  std::shared_ptr<const std::vector<Matrix<Scalar>>> diffs_;
};

/// Matrix of d: Λ^k -> Λ^{k+1}.
inline const Matrix<Scalar>& differential_matrix(const LieStructure& ls, int k) { return ls.differential_matrix(k); }

/// Contents of a `.lie` document.
struct LieDocument {
  std::string name;
  LieStructure structure;
  std::optional<Form<>> symplectic;
};

/// Parses a `.lie` document (name/dim/d/symplectic lines). Throws ParseError
/// with line and column, or NotLieAlgebra.
LieDocument parse_lie_document(std::string_view text);

/// Parses structure equations. Accepts a bare Salamon list such as
/// "0,0,0,12,14,15+23+24" or a full `.lie` document.
LieStructure parse_structure(std::string_view text);

/// Parses a signed sum of terms ("16+25-34", "1/2*1.10") in n generators.
/// Every term must have the given degree (-1 accepts any single degree).
Form<> parse_form(std::string_view text, int n, int degree = -1);

/// Renders a form in the `.lie` term syntax ("16+25-34", "0" for zero); index
/// words are dotted ("1.10") when n >= 10.
std::string to_term_syntax(const Form<>& f);

/// Serializes to the `.lie` format; parse_lie_document inverts it.
std::string to_lie_text(const LieStructure& ls, const std::optional<Form<>>& symplectic = std::nullopt);

}  // namespace lefschetz
