#include "lefschetz/complex/lie_structure.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/exact/linalg.hpp"
#include "lefschetz/exact/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lefschetz {

std::string_view to_string(LieClass c) {
  switch (c) {
    case LieClass::Nilpotent: return "nilpotent";
    case LieClass::CompletelySolvable: return "completely solvable";
    case LieClass::Solvable: return "solvable";
    case LieClass::NotSolvable: return "not solvable";
  }
  return "unknown";
}

namespace {

Form<> d_with(const std::vector<Form<>>& d_gen, const Form<>& a) {
  const int n = a.n();
  Form<> out(n, a.degree() + 1);
  for (const auto& [idx, c] : a.terms()) {
    const auto gens = idx.indices();
    std::uint32_t prefix = 0;
    for (std::size_t p = 0; p < gens.size(); ++p) {
      const int g = gens[p];
      const std::uint32_t bit = 1u << (g - 1);
      const std::uint32_t suffix = idx.bits() & ~prefix & ~bit;
      // d(e_prefix ∧ e_g ∧ e_suffix) gets (-1)^p e_prefix ∧ de_g ∧ e_suffix
      Form<> term = wedge(wedge(Form<>::basis(n, BasisIndex(prefix)), d_gen[static_cast<std::size_t>(g - 1)]),
                          Form<>::basis(n, BasisIndex(suffix)));
      term *= (p % 2 == 0) ? c : -c;
      out += term;
      prefix |= bit;
    }
  }
  return out;
}

}  // namespace

LieStructure::LieStructure(std::string name, std::vector<Form<>> d_of_generator)
    : name_(std::move(name)), d_gen_(std::move(d_of_generator)) {
  const int n = static_cast<int>(d_gen_.size());
  if (n > kMaxGenerators) throw BadParameter("LieStructure: too many generators");
  for (int i = 1; i <= n; ++i) {
    auto& f = d_gen_[static_cast<std::size_t>(i - 1)];
    if (f.is_zero()) f = Form<>(n, 2);
    if (f.n() != n || f.degree() != 2)
      throw BadParameter("LieStructure: d e" + std::to_string(i) + " must be a 2-form in " + std::to_string(n) + " generators");
  }
  for (int i = 1; i <= n; ++i) {
    const Form<> dd = d_with(d_gen_, d_gen_[static_cast<std::size_t>(i - 1)]);
    if (!dd.is_zero())
      throw NotLieAlgebra("d(d e" + std::to_string(i) + ") = " + dd.to_string() + " != 0", i);
  }
  auto mats = std::make_shared<std::vector<Matrix<Scalar>>>();
  for (int k = 0; k <= n; ++k) {
    const auto src = basis_of_degree(n, k);
    Matrix<Scalar> m(choose(n, k + 1), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const Form<> img = d_with(d_gen_, Form<>::basis(n, src[j]));
      for (const auto& [idx, c] : img.terms()) m(lex_position(n, idx), j) = c;
    }
    mats->push_back(std::move(m));
  }
  diffs_ = std::move(mats);
}

Form<> LieStructure::d(const Form<>& a) const {
  if (a.n() != n()) throw DimensionMismatch("LieStructure::d: form lives in a different exterior algebra");
  return d_with(d_gen_, a);
}

const Matrix<Scalar>& LieStructure::differential_matrix(int k) const {
  static const Matrix<Scalar> empty;
  if (k < 0 || k > n()) return empty;
  return (*diffs_)[static_cast<std::size_t>(k)];
}

bool LieStructure::is_abelian() const {
  return std::all_of(d_gen_.begin(), d_gen_.end(), [](const Form<>& f) { return f.is_zero(); });
}

LieStructure LieStructure::renamed(std::string name) const {
  LieStructure copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

namespace {

// [X_i, X_j] = -sum_k a^k_ij X_k where d e_k = sum_{i<j} a^k_ij e_ij.
std::vector<Scalar> bracket(const std::vector<Form<>>& d_gen, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  const int n = static_cast<int>(d_gen.size());
  std::vector<Scalar> out(static_cast<std::size_t>(n), Scalar(0));
  for (int kk = 0; kk < n; ++kk)
    for (const auto& [idx, c] : d_gen[static_cast<std::size_t>(kk)].terms()) {
      const auto ij = idx.indices();
      const auto i = static_cast<std::size_t>(ij[0] - 1), j = static_cast<std::size_t>(ij[1] - 1);
      const Scalar w = x[i] * y[j] - x[j] * y[i];
      if (!w.is_zero()) out[static_cast<std::size_t>(kk)] -= c * w;
    }
  return out;
}

Subspace<Scalar> bracket_span(const std::vector<Form<>>& d_gen, const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  std::vector<Vector<Scalar>> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(bracket(d_gen, x, y));
  return Subspace<Scalar>::span(d_gen.size(), vs);
}

Polynomial derivative(const Polynomial& p) {
  std::vector<Scalar> c;
  for (int e = 1; e <= p.degree(); ++e) c.push_back(p.coefficient(static_cast<unsigned>(e)) * Scalar(e));
  return Polynomial(std::move(c));
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Whether every complex root of p is real (Sturm count on the squarefree part).
bool all_roots_real(const Polynomial& p) {
  if (p.degree() <= 1) return true;
  const Polynomial g = Polynomial::gcd(p, derivative(p));
  const Polynomial s = Polynomial::divide_exact(p, g);
  std::vector<Polynomial> seq{s, derivative(s)};
  while (!seq.back().is_zero()) {
    auto r = Polynomial::divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  std::vector<int> at_pos, at_neg;
  for (const auto& q : seq) {
    const int lead = q.leading().sign();
    at_pos.push_back(lead);
    at_neg.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos) == s.degree();
}

}  // namespace

LieClass LieStructure::classify() const {
  const auto n = static_cast<std::size_t>(this->n());
  const auto g = Subspace<Scalar>::full(n);
  Subspace<Scalar> lower = g;
  for (std::size_t step = 0; step <= n && lower.dim() > 0; ++step) lower = bracket_span(d_gen_, g, lower);
  if (lower.dim() == 0) return LieClass::Nilpotent;

  Subspace<Scalar> derived = g;
  for (std::size_t step = 0; step <= n && derived.dim() > 0; ++step) derived = bracket_span(d_gen_, derived, derived);
  if (derived.dim() > 0) return LieClass::NotSolvable;

  // Solvable: the roots of ad are linear functionals, so realness on a basis suffices.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> x(n, Scalar(0));
    x[i] = Scalar(1);
    Matrix<Polynomial> charm(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> y(n, Scalar(0));
      y[j] = Scalar(1);
      const auto col = bracket(d_gen_, x, y);
      for (std::size_t r = 0; r < n; ++r) charm(r, j) = Polynomial(-col[r]);
      charm(j, j) += Polynomial::variable();
    }
    if (!all_roots_real(fraction_free_determinant(std::move(charm)))) return LieClass::Solvable;
  }
  return LieClass::CompletelySolvable;
}

// ---------------------------------------------------------------------------
// `.lie` parsing

namespace {

struct Fragment {
  std::string_view text;
  int line;
  int column;  // 1-based column of text[0]
};

[[noreturn]] void fail(const Fragment& f, std::size_t offset, const std::string& what) {
  throw ParseError(what, f.line, f.column + static_cast<int>(offset));
}

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

Fragment trimmed(const Fragment& f) {
  std::size_t b = skip_ws(f.text, 0), e = f.text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(f.text[e - 1]))) --e;
  return {f.text.substr(b, e - b), f.line, f.column + static_cast<int>(b)};
}

// Indices of an index word, in written order.
std::vector<int> parse_word(const Fragment& f, std::size_t begin, std::size_t end, int n) {
  std::string_view w = f.text.substr(begin, end - begin);
  std::vector<int> out;
  if (w.empty()) fail(f, begin, "expected an index word");
  const bool dotted = w.find('.') != std::string_view::npos;
  if (dotted || n >= 10) {
    std::size_t start = 0;
    while (start <= w.size()) {
      std::size_t dot = w.find('.', start);
      if (dot == std::string_view::npos) dot = w.size();
      std::string_view part = w.substr(start, dot - start);
      if (part.empty()) fail(f, begin + start, "empty index in dotted word");
      int v = 0;
      for (char ch : part) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail(f, begin + start, "bad character in index word");
        v = v * 10 + (ch - '0');
        if (v > kMaxGenerators) break;
      }
      if (v < 1 || v > n) fail(f, begin + start, "index " + std::string(part) + " out of range 1.." + std::to_string(n));
      out.push_back(v);
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const char ch = w[i];
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail(f, begin + i, "bad character in index word");
      const int v = ch - '0';
      if (v < 1 || v > n) fail(f, begin + i, std::string("index ") + ch + " out of range 1.." + std::to_string(n));
      out.push_back(v);
    }
  }
  return out;
}

int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

Form<> parse_sum(const Fragment& raw, int n, int degree) {
  const Fragment f = trimmed(raw);
  const std::string_view s = f.text;
  if (s.empty()) fail(f, 0, "expected a form");
  if (s == "0") return Form<>(n, degree < 0 ? 0 : degree);
  std::optional<Form<>> out;
  if (degree >= 0) out.emplace(n, degree);
  std::size_t i = 0;
  bool first = true;
  while (true) {
    i = skip_ws(s, i);
    if (i == s.size()) {
      if (first) fail(f, i, "expected a term");
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      i = skip_ws(s, i + 1);
    } else if (!first) {
      fail(f, i, "expected '+' or '-'");
    }
    first = false;
    std::size_t run_end = i;
    while (run_end < s.size() && (std::isdigit(static_cast<unsigned char>(s[run_end])) || s[run_end] == '.' || s[run_end] == '/'))
      ++run_end;
    if (run_end == i) fail(f, i, "expected a coefficient or index word");
    Scalar coef(1);
    std::size_t word_begin = i, word_end = run_end;
    const std::size_t after = skip_ws(s, run_end);
    if (after < s.size() && s[after] == '*') {
      try {
        coef = Scalar::parse(s.substr(i, run_end - i));
      } catch (const std::exception&) {
        fail(f, i, "bad coefficient '" + std::string(s.substr(i, run_end - i)) + "'");
      }
      word_begin = skip_ws(s, after + 1);
      word_end = word_begin;
      while (word_end < s.size() && (std::isdigit(static_cast<unsigned char>(s[word_end])) || s[word_end] == '.')) ++word_end;
    } else if (s.substr(i, run_end - i).find('/') != std::string_view::npos) {
      fail(f, i, "a rational coefficient must be followed by '*'");
    }
    const auto idx = parse_word(f, word_begin, word_end, n);
    const int term_degree = static_cast<int>(idx.size());
    if (!out) out.emplace(n, term_degree);
    if (term_degree != out->degree())
      fail(f, word_begin, "expected a degree-" + std::to_string(out->degree()) + " term, got degree " + std::to_string(term_degree));
    const int psign = permutation_sign(idx);
    if (psign != 0) {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      out->add_term(BasisIndex::from_indices(sorted), coef * Scalar(sign * psign));
    }
    i = word_end;
  }
  return *out;
}

std::vector<Fragment> split_commas(const Fragment& f) {
  std::vector<Fragment> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= f.text.size(); ++i) {
    if (i == f.text.size() || f.text[i] == ',') {
      parts.push_back({f.text.substr(start, i - start), f.line, f.column + static_cast<int>(start)});
      start = i + 1;
    }
  }
  return parts;
}

LieStructure structure_from_list(const Fragment& list, const std::string& name, std::optional<int> dim) {
  const auto entries = split_commas(list);
  const int n = static_cast<int>(entries.size());
  if (n > kMaxGenerators) fail(list, 0, "too many generators");
  if (dim && *dim != n)
    fail(list, 0, "dim is " + std::to_string(*dim) + " but the d: list has " + std::to_string(n) + " entries");
  std::vector<Form<>> d;
  for (const auto& e : entries) d.push_back(parse_sum(e, n, 2));
  return LieStructure(name, std::move(d));
}

}  // namespace

Form<> parse_form(std::string_view text, int n, int degree) {
  return parse_sum({text, 1, 1}, n, degree);
}

LieDocument parse_lie_document(std::string_view text) {
  std::optional<Fragment> name_f, dim_f, d_f, symp_f;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const Fragment whole = trimmed({line, line_no, 1});
    if (whole.text.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(whole, 0, "expected 'key: value'");
    const Fragment key = trimmed({line.substr(0, colon), line_no, 1});
    const Fragment value{line.substr(colon + 1), line_no, static_cast<int>(colon) + 2};
    std::optional<Fragment>* slot = nullptr;
    if (key.text == "name") slot = &name_f;
    else if (key.text == "dim") slot = &dim_f;
    else if (key.text == "d") slot = &d_f;
    else if (key.text == "symplectic") slot = &symp_f;
    else fail(key, 0, "unknown key '" + std::string(key.text) + "'");
    if (*slot) fail(key, 0, "duplicate key '" + std::string(key.text) + "'");
    *slot = value;
    if (eol == text.size()) break;
  }
  if (!d_f) throw ParseError("missing 'd:' line", line_no, 1);

  std::string name = "unnamed";
  if (name_f) {
    const Fragment t = trimmed(*name_f);
    if (t.text.empty()) fail(t, 0, "empty name");
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      const char ch = t.text[i];
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.')) fail(t, i, "bad character in name");
    }
    name = std::string(t.text);
  }
  std::optional<int> dim;
  if (dim_f) {
    const Fragment t = trimmed(*dim_f);
    if (t.text.empty()) fail(t, 0, "expected a natural number");
    int v = 0;
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) fail(t, i, "expected a natural number");
      v = v * 10 + (t.text[i] - '0');
      if (v > kMaxGenerators) fail(t, 0, "dimension exceeds " + std::to_string(kMaxGenerators));
    }
    dim = v;
  }
  LieStructure ls = structure_from_list(*d_f, name, dim);
  std::optional<Form<>> symp;
  if (symp_f) symp = parse_sum(*symp_f, ls.n(), 2);
  return LieDocument{name, std::move(ls), std::move(symp)};
}

LieStructure parse_structure(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return parse_lie_document(text).structure;
  return structure_from_list({text, 1, 1}, "unnamed", std::nullopt);
}

std::string to_term_syntax(const Form<>& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<std::size_t, std::pair<BasisIndex, Scalar>>> terms;
  for (const auto& [idx, c] : f.terms()) terms.push_back({lex_position(f.n(), idx), {idx, c}});
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto& [pos, t] : terms) {
    const auto& [idx, c] = t;
    const bool neg = c.sign() < 0;
    const Scalar mag = neg ? -c : c;
    if (neg) out += '-';
    else if (!first) out += '+';
    first = false;
    if (!mag.is_one() || idx.degree() == 0) out += mag.to_string() + (idx.degree() ? "*" : "");
    if (f.n() >= 10) {
      const auto ii = idx.indices();
      for (std::size_t j = 0; j < ii.size(); ++j) out += (j ? "." : "") + std::to_string(ii[j]);
    } else {
      out += idx.to_word();
    }
  }
  return out;
}

std::string to_lie_text(const LieStructure& ls, const std::optional<Form<>>& symplectic) {
  std::ostringstream os;
  os << "name: " << ls.name() << "\n";
  os << "dim: " << ls.n() << "\n";
  os << "d: ";
  for (int i = 1; i <= ls.n(); ++i) os << (i > 1 ? "," : "") << to_term_syntax(ls.d_of(i));
  os << "\n";
  if (symplectic) os << "symplectic: " << to_term_syntax(*symplectic) << "\n";
  return os.str();
}

}  // namespace lefschetz
