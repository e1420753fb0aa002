#include "lefschetz/complex/cohomology.hpp"

#include "lefschetz/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lefschetz {

ClassVector operator+(const ClassVector& a, const ClassVector& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
    throw DimensionMismatch("ClassVector sum: degree mismatch");
  ClassVector out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

ClassVector operator-(const ClassVector& a, const ClassVector& b) { return a + Scalar(-1) * b; }

ClassVector operator*(const Scalar& s, const ClassVector& a) {
  ClassVector out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

enum class RingKind { Invariant, ProjectiveSpace, Product };

struct CupCache {
  std::mutex mutex;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<Scalar>> table;
};

struct CohomologyRing::Data {
  RingKind kind = RingKind::Invariant;
  std::string name;
  int top = 0;
  std::vector<std::vector<std::string>> labels;
  std::optional<ClassVector> distinguished;
  std::shared_ptr<CupCache> cache = std::make_shared<CupCache>();

  // Invariant rings.
  std::optional<LieStructure> structure;
  std::vector<std::vector<Form<>>> reps;
  std::vector<Subspace<Scalar>> cocycles, coboundaries;
  std::vector<std::shared_ptr<const SpanCoordinates<Scalar>>> coords;  // over [reps | coboundary basis]

  // Product rings: block p of degree k starts at offset[k][p].
  CohomologyRing left, right;
  std::vector<std::map<int, std::size_t>> offset;
};

namespace {

const CohomologyRing::Data& checked(const std::shared_ptr<const CohomologyRing::Data>& d) {
  if (!d) throw std::logic_error("CohomologyRing: empty ring");
  return *d;
}

}  // namespace

const std::string& CohomologyRing::name() const { return checked(data_).name; }
int CohomologyRing::top_degree() const { return checked(data_).top; }

std::size_t CohomologyRing::betti(int k) const {
  const auto& d = checked(data_);
  if (k < 0 || k > d.top) return 0;
  return d.labels[static_cast<std::size_t>(k)].size();
}

BettiVector CohomologyRing::betti() const {
  BettiVector out;
  for (int k = 0; k <= top_degree(); ++k) out.push_back(static_cast<std::int64_t>(betti(k)));
  return out;
}

const std::vector<std::string>& CohomologyRing::labels(int k) const {
  static const std::vector<std::string> none;
  const auto& d = checked(data_);
  if (k < 0 || k > d.top) return none;
  return d.labels[static_cast<std::size_t>(k)];
}

ClassVector CohomologyRing::zero(int k) const { return ClassVector{k, std::vector<Scalar>(betti(k), Scalar(0))}; }

ClassVector CohomologyRing::unit() const { return basis_class(0, 0); }

ClassVector CohomologyRing::basis_class(int k, std::size_t i) const {
  ClassVector c = zero(k);
  if (i >= c.coeffs.size()) throw std::out_of_range("CohomologyRing::basis_class: index out of range");
  c.coeffs[i] = Scalar(1);
  return c;
}

namespace {

std::vector<Scalar> basis_cup(const CohomologyRing& ring, int p, std::size_t i, int q, std::size_t j);

std::vector<Scalar> compute_basis_cup(const CohomologyRing& ring, int p, std::size_t i, int q, std::size_t j) {
  const auto& d = ring.data();
  const int k = p + q;
  std::vector<Scalar> out(ring.betti(k), Scalar(0));
  if (k > d.top) return out;
  switch (d.kind) {
    case RingKind::ProjectiveSpace:
      out[0] = Scalar(1);
      return out;
    case RingKind::Invariant: {
      const Form<> w = wedge(d.reps[static_cast<std::size_t>(p)][i], d.reps[static_cast<std::size_t>(q)][j]);
      return ring.class_of(w).coeffs;
    }
    case RingKind::Product: {
      const auto& A = d.left;
      const auto& B = d.right;
      // basis (p, ..) = a ⊗ b with |a| = pa; locate the blocks
      auto locate = [&](int deg, std::size_t idx) {
        const auto& offs = d.offset[static_cast<std::size_t>(deg)];
        int block = -1;
        std::size_t start = 0;
        for (const auto& [blk, off] : offs)
          if (off <= idx && A.betti(blk) * B.betti(deg - blk) > 0) {
            block = blk;
            start = off;
          }
        const std::size_t width = B.betti(deg - block);
        return std::tuple<int, std::size_t, std::size_t>{block, (idx - start) / width, (idx - start) % width};
      };
      const auto [pa, ia, ib] = locate(p, i);
      const auto [qa, ja, jb] = locate(q, j);
      const int pb = p - pa, qb = q - qa;
      const auto ac = basis_cup(A, pa, ia, qa, ja);
      const auto bd = basis_cup(B, pb, ib, qb, jb);
      const bool negate = (pb * qa) % 2 != 0;
      const int ka = pa + qa, kb = pb + qb;
      if (ka > A.top_degree() || kb > B.top_degree()) return out;
      const std::size_t start = d.offset[static_cast<std::size_t>(k)].at(ka);
      const std::size_t width = B.betti(kb);
      for (std::size_t x = 0; x < ac.size(); ++x) {
        if (ac[x].is_zero()) continue;
        for (std::size_t y = 0; y < bd.size(); ++y) {
          if (bd[y].is_zero()) continue;
          const Scalar v = ac[x] * bd[y];
          out[start + x * width + y] += negate ? -v : v;
        }
      }
      return out;
    }
  }
  return out;
}

std::vector<Scalar> basis_cup(const CohomologyRing& ring, int p, std::size_t i, int q, std::size_t j) {
  auto& cache = *ring.data().cache;
  const auto key = std::make_tuple(p, i, q, j);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  auto value = compute_basis_cup(ring, p, i, q, j);
  std::lock_guard<std::mutex> lock(cache.mutex);
  cache.table.emplace(key, value);
  return value;
}

void check_class(const CohomologyRing& ring, const ClassVector& c) {
  if (c.coeffs.size() != ring.betti(c.degree))
    throw DimensionMismatch("CohomologyRing: class has " + std::to_string(c.coeffs.size()) + " coordinates, H^" +
                            std::to_string(c.degree) + " has dimension " + std::to_string(ring.betti(c.degree)));
}

}  // namespace

ClassVector CohomologyRing::cup(const ClassVector& a, const ClassVector& b) const {
  check_class(*this, a);
  check_class(*this, b);
  ClassVector out = zero(a.degree + b.degree);
  if (out.coeffs.empty()) return out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      const auto prod = basis_cup(*this, a.degree, i, b.degree, j);
      const Scalar w = a.coeffs[i] * b.coeffs[j];
      for (std::size_t r = 0; r < prod.size(); ++r)
        if (!prod[r].is_zero()) out.coeffs[r] += w * prod[r];
    }
  }
  return out;
}

ClassVector CohomologyRing::cup_power(const ClassVector& a, int p) const {
  if (p < 0) throw BadParameter("cup_power: negative exponent");
  ClassVector out = unit();
  for (int i = 0; i < p; ++i) out = cup(out, a);
  return out;
}

Matrix<Scalar> CohomologyRing::cup_matrix(const ClassVector& c, int from) const {
  check_class(*this, c);
  const std::size_t cols = betti(from), rows = betti(from + c.degree);
  Matrix<Scalar> m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto img = cup(basis_class(from, j), c);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = img.coeffs[i];
  }
  return m;
}

namespace {

Scalar basis_integral(const CohomologyRing& ring, int deg, std::size_t i) {
  const auto& d = ring.data();
  if (deg != d.top) return Scalar(0);
  switch (d.kind) {
    case RingKind::ProjectiveSpace: return Scalar(1);
    case RingKind::Invariant: return d.reps[static_cast<std::size_t>(deg)][i].top_coefficient();
    case RingKind::Product: {
      const int ta = d.left.top_degree();
      const std::size_t start = d.offset[static_cast<std::size_t>(deg)].at(ta);
      const std::size_t width = d.right.betti(deg - ta);
      return basis_integral(d.left, ta, (i - start) / width) * basis_integral(d.right, deg - ta, (i - start) % width);
    }
  }
  return Scalar(0);
}

}  // namespace

Scalar CohomologyRing::integrate(const ClassVector& top) const {
  check_class(*this, top);
  if (top.degree != top_degree()) return Scalar(0);
  Scalar s(0);
  for (std::size_t i = 0; i < top.coeffs.size(); ++i)
    if (!top.coeffs[i].is_zero()) s += top.coeffs[i] * basis_integral(*this, top.degree, i);
  return s;
}

const std::optional<ClassVector>& CohomologyRing::distinguished() const { return checked(data_).distinguished; }

CohomologyRing CohomologyRing::with_distinguished(const ClassVector& c) const {
  check_class(*this, c);
  auto copy = std::make_shared<Data>(checked(data_));
  copy->distinguished = c;
  return CohomologyRing(std::move(copy));
}

CohomologyRing CohomologyRing::renamed(const std::string& name) const {
  auto copy = std::make_shared<Data>(checked(data_));
  copy->name = name;
  return CohomologyRing(std::move(copy));
}

bool CohomologyRing::has_forms() const { return checked(data_).kind == RingKind::Invariant; }

const LieStructure& CohomologyRing::structure() const {
  if (!has_forms()) throw std::logic_error("CohomologyRing: not computed from an invariant complex");
  return *data_->structure;
}

Form<> CohomologyRing::representative(const ClassVector& c) const {
  check_class(*this, c);
  const auto& ls = structure();
  Form<> out(ls.n(), c.degree);
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (!c.coeffs[i].is_zero()) out += c.coeffs[i] * data_->reps[static_cast<std::size_t>(c.degree)][i];
  return out;
}

ClassVector CohomologyRing::class_of(const Form<>& closed) const {
  const auto& ls = structure();
  if (closed.n() != ls.n()) throw DimensionMismatch("class_of: form lives in a different exterior algebra");
  const int k = closed.degree();
  if (k > ls.n()) return zero(k);
  if (!ls.d(closed).is_zero()) throw std::invalid_argument("class_of: form is not closed");
  const auto v = closed.to_vector();
  const auto c = data_->coords[static_cast<std::size_t>(k)]->coordinates(v);
  if (!c) throw InternalInconsistency("class_of: closed form outside cocycle span");
  ClassVector out = zero(k);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = (*c)[i];
  return out;
}

const Subspace<Scalar>& CohomologyRing::cocycles(int k) const {
  structure();
  return data_->cocycles.at(static_cast<std::size_t>(k));
}

const Subspace<Scalar>& CohomologyRing::coboundaries(int k) const {
  structure();
  return data_->coboundaries.at(static_cast<std::size_t>(k));
}

bool CohomologyRing::is_product() const { return checked(data_).kind == RingKind::Product; }

const CohomologyRing& CohomologyRing::left_factor() const {
  if (!is_product()) throw std::logic_error("CohomologyRing: not a product ring");
  return data_->left;
}

const CohomologyRing& CohomologyRing::right_factor() const {
  if (!is_product()) throw std::logic_error("CohomologyRing: not a product ring");
  return data_->right;
}

ClassVector CohomologyRing::tensor(const ClassVector& a, const ClassVector& b) const {
  const auto& A = left_factor();
  const auto& B = right_factor();
  check_class(A, a);
  check_class(B, b);
  ClassVector out = zero(a.degree + b.degree);
  if (out.coeffs.empty()) return out;
  const std::size_t start = data_->offset[static_cast<std::size_t>(out.degree)].at(a.degree);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[start + i * b.coeffs.size() + j] = a.coeffs[i] * b.coeffs[j];
  return out;
}

CohomologyRing cohomology(const LieStructure& ls) {
  auto d = std::make_shared<CohomologyRing::Data>();
  const int n = ls.n();
  d->kind = RingKind::Invariant;
  d->name = ls.name();
  d->top = n;
  d->structure = ls;
  for (int k = 0; k <= n; ++k) {
    const std::size_t dim = choose(n, k);
    auto rki = rank_kernel_image(ls.differential_matrix(k));
    Subspace<Scalar> closed = rki.kernel;
    Subspace<Scalar> exact(dim);
    if (k > 0) exact = rank_kernel_image(ls.differential_matrix(k - 1)).image;

    std::vector<Vector<Scalar>> reduced;
    for (const auto& z : closed.basis()) reduced.push_back(exact.reduce(z));
    const auto complement = Subspace<Scalar>::span(dim, reduced);

    std::vector<Form<>> reps;
    std::vector<std::string> labels;
    std::vector<Vector<Scalar>> gens;
    for (const auto& v : complement.basis()) {
      reps.push_back(Form<>::from_vector(n, k, v));
      labels.push_back("[" + to_term_syntax(reps.back()) + "]");
      gens.push_back(v);
    }
    for (const auto& b : exact.basis()) gens.push_back(b);
    d->coords.push_back(std::make_shared<const SpanCoordinates<Scalar>>(dim, gens));
    d->reps.push_back(std::move(reps));
    d->labels.push_back(std::move(labels));
    d->cocycles.push_back(std::move(closed));
    d->coboundaries.push_back(std::move(exact));
  }
  return CohomologyRing(std::move(d));
}

CohomologyRing cp_ring(int m) {
  if (m < 0) throw BadParameter("cp_ring: negative dimension");
  auto d = std::make_shared<CohomologyRing::Data>();
  d->kind = RingKind::ProjectiveSpace;
  d->name = "CP" + std::to_string(m);
  d->top = 2 * m;
  for (int k = 0; k <= 2 * m; ++k) {
    if (k % 2 == 0) d->labels.push_back({k == 0 ? "1" : (k == 2 ? "h" : "h^" + std::to_string(k / 2))});
    else d->labels.emplace_back();
  }
  if (m > 0) d->distinguished = ClassVector{2, {Scalar(1)}};
  return CohomologyRing(std::move(d));
}

CohomologyRing kunneth(const CohomologyRing& a, const CohomologyRing& b) {
  auto d = std::make_shared<CohomologyRing::Data>();
  d->kind = RingKind::Product;
  d->name = a.name() + "x" + b.name();
  d->top = a.top_degree() + b.top_degree();
  d->left = a;
  d->right = b;
  for (int k = 0; k <= d->top; ++k) {
    std::map<int, std::size_t> offs;
    std::vector<std::string> labels;
    for (int p = 0; p <= a.top_degree(); ++p) {
      const int q = k - p;
      if (q < 0 || q > b.top_degree()) continue;
      offs[p] = labels.size();
      for (const auto& la : a.labels(p))
        for (const auto& lb : b.labels(q)) labels.push_back(la + "⊗" + lb);
    }
    d->offset.push_back(std::move(offs));
    d->labels.push_back(std::move(labels));
  }
  CohomologyRing ring(std::move(d));
  if (a.distinguished() && b.distinguished()) {
    const auto sum = ring.tensor(*a.distinguished(), b.unit()) + ring.tensor(a.unit(), *b.distinguished());
    return ring.with_distinguished(sum);
  }
  return ring;
}

BettiVector convolve(const BettiVector& a, const BettiVector& b) {
  if (a.empty() || b.empty()) return {};
  BettiVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace lefschetz
