#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <vector>

#include "hodgering/errors.hpp"
#include "hodgering/rational.hpp"

namespace hodgering {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Rational>;

/// Reduced row echelon form. Zero rows are dropped, so the result has
/// exactly rank(m) rows and the same row space as m.
Mat rref(Mat m);

Index rank_of(const Mat& m);

/// A linear subspace of Q^n in canonical form: the basis matrix is in
/// reduced row echelon form with one basis vector per row. Two Subspaces
/// are equal iff their representations are identical.
struct Subspace {
  Index ambient = 0;
  Mat basis;  // rref, dim() x ambient

  Index dim() const { return basis.rows(); }

  static Subspace zero(Index n);
  static Subspace full(Index n);
  /// Canonicalizes the row space of `rows` inside Q^n.
  static Subspace span(Index n, const Mat& rows);

  /// Pivot column of each basis row (strictly increasing).
  std::vector<Index> pivot_columns() const;

  bool operator==(const Subspace& other) const;
};

Subspace kernel(const Mat& m);
Subspace kernel(const SpMat& m);
Subspace image(const Mat& m);
Subspace image(const SpMat& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b);  // b subset of a
Index quotient_dim(const Subspace& a, const Subspace& b);

/// Canonical representative of v + W: eliminates the pivot coordinates of W.
Vec reduce_mod(const Subspace& w, Vec v);

/// Matrix of the quotient map Q^n -> Q^n / W in the coordinates given by
/// the non-pivot columns of W's canonical basis.
Mat quotient_map(const Subspace& w);

/// Sparse-times-dense product that skips structural zeros on both sides.
Mat apply(const SpMat& m, const Mat& dense);
Vec apply(const SpMat& m, const Vec& v);

bool mat_equal(const Mat& a, const Mat& b);
bool vec_equal(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

}  // namespace hodgering
