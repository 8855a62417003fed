#include "hodgering/exactla.hpp"

#include <algorithm>

namespace hodgering {

namespace {

// Row elimination with explicit nonzero bookkeeping; the matrices we
// reduce are large but sparse, so skipping zero entries matters.
void eliminate(Mat& m, Index pivot_row, Index pivot_col) {
  std::vector<Index> nz;
  for (Index k = pivot_col; k < m.cols(); ++k)
    if (!m(pivot_row, k).is_zero()) nz.push_back(k);
  for (Index i = 0; i < m.rows(); ++i) {
    if (i == pivot_row) continue;
    const Rational f = m(i, pivot_col);
    if (f.is_zero()) continue;
    for (Index k : nz) m(i, k) -= f * m(pivot_row, k);
  }
}

}  // namespace

Mat rref(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(r).swap(m.row(piv));
    const Rational lead = m(r, c);
    if (lead != 1)
      for (Index k = c; k < cols; ++k)
        if (!m(r, k).is_zero()) m(r, k) /= lead;
    eliminate(m, r, c);
    ++r;
  }
  return m.topRows(r);
}

Index rank_of(const Mat& m) { return rref(m).rows(); }

Subspace Subspace::zero(Index n) { return Subspace{n, Mat(0, n)}; }

Subspace Subspace::full(Index n) {
  return Subspace{n, Mat::Identity(n, n)};
}

Subspace Subspace::span(Index n, const Mat& rows) {
  if (rows.cols() != n) throw AmbientMismatch("span: row length != ambient dimension");
  return Subspace{n, rref(rows)};
}

std::vector<Index> Subspace::pivot_columns() const {
  std::vector<Index> p;
  p.reserve(basis.rows());
  for (Index i = 0; i < basis.rows(); ++i)
    for (Index c = 0; c < basis.cols(); ++c)
      if (!basis(i, c).is_zero()) { p.push_back(c); break; }
  return p;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient == other.ambient && mat_equal(basis, other.basis);
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero_vec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  const Index cols = m.cols();
  const Mat r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  std::vector<Index> pivots;
  for (Index i = 0; i < r.rows(); ++i)
    for (Index c = 0; c < cols; ++c)
      if (!r(i, c).is_zero()) {
        is_pivot[c] = true;
        pivots.push_back(c);
        break;
      }
  Mat basis(cols - r.rows(), cols);
  basis.setZero();
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = 1;
    for (Index i = 0; i < r.rows(); ++i) basis(row, pivots[i]) = -r(i, f);
    ++row;
  }
  return Subspace::span(cols, basis);
}

Subspace kernel(const SpMat& m) { return kernel(Mat(m)); }

Subspace image(const Mat& m) {
  return Subspace::span(m.rows(), m.transpose());
}

Subspace image(const SpMat& m) { return image(Mat(m)); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("sum: different ambient dimensions");
  Mat stacked(a.dim() + b.dim(), a.ambient);
  stacked.topRows(a.dim()) = a.basis;
  stacked.bottomRows(b.dim()) = b.basis;
  return Subspace::span(a.ambient, stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("intersect: different ambient dimensions");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
  // x in a∩b iff x = aᵀu = bᵀv; read u off the kernel of [aᵀ | -bᵀ].
  Mat m(a.ambient, a.dim() + b.dim());
  m.leftCols(a.dim()) = a.basis.transpose();
  m.rightCols(b.dim()) = -b.basis.transpose();
  const Subspace k = kernel(m);
  Mat rows(k.dim(), a.ambient);
  for (Index i = 0; i < k.dim(); ++i)
    rows.row(i) = k.basis.row(i).head(a.dim()) * a.basis;
  return Subspace::span(a.ambient, rows);
}

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("contains: different ambient dimensions");
  return sum(a, b).dim() == a.dim();
}

Index quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(a, b)) throw NotContained("quotient_dim: b is not contained in a");
  return a.dim() - b.dim();
}

Vec reduce_mod(const Subspace& w, Vec v) {
  if (v.size() != w.ambient) throw AmbientMismatch("reduce_mod: vector length != ambient dimension");
  const auto pivots = w.pivot_columns();
  for (Index i = 0; i < w.dim(); ++i) {
    const Rational f = v(pivots[i]);
    if (f.is_zero()) continue;
    for (Index k = pivots[i]; k < w.ambient; ++k)
      if (!w.basis(i, k).is_zero()) v(k) -= f * w.basis(i, k);
  }
  return v;
}

Mat quotient_map(const Subspace& w) {
  const auto pivots = w.pivot_columns();
  std::vector<bool> is_pivot(w.ambient, false);
  for (Index p : pivots) is_pivot[p] = true;
  Mat q(w.ambient - w.dim(), w.ambient);
  q.setZero();
  Index row = 0;
  for (Index c = 0; c < w.ambient; ++c) {
    if (is_pivot[c]) continue;
    q(row, c) = 1;
    for (Index i = 0; i < w.dim(); ++i) q(row, pivots[i]) = -w.basis(i, c);
    ++row;
  }
  return q;
}

Mat apply(const SpMat& m, const Mat& dense) {
  Mat out(m.rows(), dense.cols());
  out.setZero();
  for (Index c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it) {
      for (Index j = 0; j < dense.cols(); ++j) {
        const Rational& d = dense(c, j);
        if (!d.is_zero()) out(it.row(), j) += it.value() * d;
      }
    }
  return out;
}

Vec apply(const SpMat& m, const Vec& v) {
  Vec out(m.rows());
  out.setZero();
  for (Index c = 0; c < m.outerSize(); ++c) {
    const Rational& x = v(c);
    if (x.is_zero()) continue;
    for (SpMat::InnerIterator it(m, c); it; ++it) out(it.row()) += it.value() * x;
  }
  return out;
}

}  // namespace hodgering
