#include "hodgering/filt.hpp"

namespace hodgering {

namespace {

// Span of a set of coordinate axes; already in canonical form.
Subspace coordinate_span(Index n, const std::vector<Index>& indices) {
  Mat basis(static_cast<Index>(indices.size()), n);
  basis.setZero();
  for (Index r = 0; r < basis.rows(); ++r) basis(r, indices[r]) = 1;
  return Subspace{n, std::move(basis)};
}

// coeffs * basis with zero skipping; coeffs rows are sparse rref rows.
Mat combine(const Mat& coeffs, const Mat& basis) {
  Mat out(coeffs.rows(), basis.cols());
  out.setZero();
  for (Index i = 0; i < coeffs.rows(); ++i)
    for (Index j = 0; j < coeffs.cols(); ++j) {
      const Rational& c = coeffs(i, j);
      if (c.is_zero()) continue;
      for (Index k = 0; k < basis.cols(); ++k) {
        const Rational& b = basis(j, k);
        if (!b.is_zero()) out(i, k) += c * b;
      }
    }
  return out;
}

}  // namespace

Subspace Filtration::at(int i) const {
  auto it = steps.find(i);
  if (it != steps.end()) return it->second;
  if (steps.empty()) throw Error("empty filtration");
  const int lo = steps.begin()->first;
  const int hi = steps.rbegin()->first;
  if (direction == Direction::descending)
    return i < lo ? Subspace::full(ambient) : Subspace::zero(ambient);
  return i < lo ? Subspace::zero(ambient) : Subspace::full(ambient);
  (void)hi;
}

void Filtration::check_nested() const {
  const Subspace* prev = nullptr;
  for (const auto& [idx, sub] : steps) {
    if (sub.ambient != ambient) throw FiltrationNotNested("step has wrong ambient dimension");
    if (prev) {
      const bool ok = direction == Direction::descending ? contains(*prev, sub)
                                                         : contains(sub, *prev);
      if (!ok) throw FiltrationNotNested("filtration steps are not nested");
    }
    prev = &sub;
  }
}

Filtration hodge_filtration(const HodgeRing& r) {
  Filtration f{Direction::descending, r.dim(), {}};
  for (int m = 0; m <= r.dim_c() + 1; ++m) {
    std::vector<Index> idx;
    for (Index i = 0; i < r.dim(); ++i)
      if (r.splitting.key_of[i].p >= m) idx.push_back(i);
    f.steps.emplace(m, coordinate_span(r.dim(), idx));
  }
  f.check_nested();
  return f;
}

Filtration weight_filtration(const HodgeRing& r) {
  Filtration f{Direction::ascending, r.dim(), {}};
  for (int k = -1; k <= 2 * r.dim_c(); ++k) {
    std::vector<Index> idx;
    for (Index i = 0; i < r.dim(); ++i) {
      const PieceKey& key = r.splitting.key_of[i];
      if (key.p + key.q <= k) idx.push_back(i);
    }
    f.steps.emplace(k, coordinate_span(r.dim(), idx));
  }
  f.check_nested();
  return f;
}

Filtration g_sigma(const HodgeRing& r, const Element& sigma) {
  for (const PieceKey& k : support(r, sigma))
    if (k.l != 2) throw NotDegreeTwo("sigma has support outside degree 2");
  const int d = r.half_dim();
  const Index n = r.dim();

  std::vector<SpMat> mul(d + 1);  // mul[k] = multiplication by sigma^k
  Element pow = r.unit;
  for (int k = 1; k <= d; ++k) {
    pow = multiply(r, pow, sigma);
    mul[k] = mult_matrix(r, pow);
  }

  std::map<int, Subspace> g;
  g.emplace(1, kernel(mul[d]));
  g.emplace(2 * d, image(mul[d]));
  for (int m = 1; m <= d - 1; ++m) {
    const Subspace& w = g.at(2 * d - m + 1);
    const Mat basis_t = g.at(m).basis.transpose();
    Mat img = apply(mul[d - m], basis_t);  // n x k, columns = images

    g.emplace(2 * d - m, sum(Subspace::span(n, img.transpose()), w));

    // kernel of sigma^{d-m} : G^m -> H / G^{2d-m+1}, via the coordinates of
    // the quotient given by the non-pivot columns of w
    for (Index j = 0; j < img.cols(); ++j) img.col(j) = reduce_mod(w, img.col(j));
    const Subspace coeffs = kernel(img);
    g.emplace(m + 1, Subspace::span(n, combine(coeffs.basis, g.at(m).basis)));
  }
  g.emplace(0, Subspace::full(n));
  g.emplace(2 * d + 1, Subspace::zero(n));

  Filtration f{Direction::descending, n, std::move(g)};
  f.check_nested();
  return f;
}

bool filtrations_equal(const Filtration& f1, const Filtration& f2) {
  if (f1.direction != f2.direction || f1.ambient != f2.ambient)
    throw ShapeMismatch("filtrations have different shape");
  std::set<int> indices;
  for (const auto& [i, s] : f1.steps) indices.insert(i);
  for (const auto& [i, s] : f2.steps) indices.insert(i);
  for (int i : indices)
    if (!(f1.at(i) == f2.at(i))) return false;
  return true;
}

bool reconstruct_check(const HodgeRing& r, const Element& sigma) {
  try {
    return filtrations_equal(g_sigma(r, sigma), hodge_filtration(r));
  } catch (const FiltrationNotNested&) {
    return false;  // a nested chain equal to F cannot exist
  }
}

}  // namespace hodgering
