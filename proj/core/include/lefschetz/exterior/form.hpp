#pragma once

#include "lefschetz/exact/scalar.hpp"
#include "lefschetz/exterior/basis.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefschetz {

/// A homogeneous element of the exterior algebra on n generators. Zero
/// coefficients are never stored.
template <class F = Scalar>
class Form {
 public:
  using Terms = std::map<BasisIndex, F>;

  Form() = default;
  Form(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || n > kMaxGenerators) throw std::invalid_argument("Form: unsupported generator count");
  }

  static Form constant(int n, const F& c) {
    Form f(n, 0);
    f.add_term(BasisIndex{}, c);
    return f;
  }
  static Form basis(int n, BasisIndex idx, const F& c = F(1)) {
    Form f(n, idx.degree());
    f.add_term(idx, c);
    return f;
  }
  /// The degree-1 generator e_i (1-based).
  static Form generator(int n, int i) { return basis(n, BasisIndex(1u << (i - 1))); }

  /// Inverse of to_vector.
  static Form from_vector(int n, int degree, std::span<const F> coeffs) {
    Form f(n, degree);
    const auto idx = basis_of_degree(n, degree);
    if (coeffs.size() != idx.size()) throw std::invalid_argument("Form::from_vector: wrong length");
    for (std::size_t i = 0; i < idx.size(); ++i) f.add_term(idx[i], coeffs[i]);
    return f;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  F coefficient(BasisIndex idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Coefficient of e_1 ∧ ... ∧ e_n (zero unless degree == n).
  F top_coefficient() const { return coefficient(top_index(n_)); }

  void add_term(BasisIndex idx, const F& c) {
    if (idx.degree() != degree_) throw std::invalid_argument("Form::add_term: degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficients in the lexicographic basis of this degree.
  std::vector<F> to_vector() const {
    std::vector<F> v(choose(n_, degree_), F(0));
    for (const auto& [idx, c] : terms_) v[lex_position(n_, idx)] = c;
    return v;
  }

  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  Form& operator*=(const F& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const F& s) { return a *= s; }
  friend Form operator*(const F& s, Form a) { return a *= s; }
  Form operator-() const { return *this * F(-1); }

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
      std::string cs = c.to_string();
      const bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (cs != "1" || idx.degree() == 0) out += cs + (idx.degree() ? "*" : "");
      if (idx.degree()) out += idx.to_string();
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.to_string(); }

 private:
  void check_compatible(const Form& o) const {
    if (o.n_ != n_ || (o.degree_ != degree_ && !o.is_zero() && !is_zero()))
      throw std::invalid_argument("Form: incompatible operands");
  }

  int n_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Bilinear wedge product; degrees past n give the zero form.
template <class F>
Form<F> wedge(const Form<F>& a, const Form<F>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: ambient dimension mismatch");
  Form<F> out(a.n(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.n()) return out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      F c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(BasisIndex(ia.bits() | ib.bits()), c);
    }
  return out;
}

/// a^p (p >= 0); a^0 is the constant 1.
template <class F>
Form<F> power(const Form<F>& a, int p) {
  Form<F> out = Form<F>::constant(a.n(), F(1));
  for (int i = 0; i < p; ++i) out = wedge(out, a);
  return out;
}

}  // namespace lefschetz
