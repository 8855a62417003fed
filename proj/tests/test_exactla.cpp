#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hodgering/exactla.hpp"
#include "oracles.hpp"

using namespace hodgering;

namespace {

Mat random_mat(Index rows, Index cols, std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref is canonical and idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = random_mat(4, 6, rng);
    const Mat r = rref(m);
    CHECK(mat_equal(rref(r), r));
    // row-scaling the input leaves the canonical form unchanged
    Mat scaled = m;
    for (Index i = 0; i < m.rows(); ++i) scaled.row(i) *= Rational(trial + 2);
    CHECK(mat_equal(rref(scaled), r));
    // pivots are 1 with zero columns above and below
    Index last_pivot = -1;
    for (Index i = 0; i < r.rows(); ++i) {
      Index p = 0;
      while (p < r.cols() && r(i, p).is_zero()) ++p;
      REQUIRE(p < r.cols());
      CHECK(r(i, p) == 1);
      CHECK(p > last_pivot);
      last_pivot = p;
      for (Index k = 0; k < r.rows(); ++k)
        if (k != i) CHECK(r(k, p).is_zero());
    }
  }
}

TEST_CASE("rank agrees with the Bareiss oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m = random_mat(5, 5, rng);
    if (trial % 3 == 0) m.row(4) = m.row(0) + m.row(1);  // force deficiency
    CHECK(rank_of(m) == oracles::bareiss_rank(m));
  }
}

TEST_CASE("rank-nullity and kernel/image membership") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = random_mat(4, 7, rng);
    const Subspace ker = kernel(m);
    const Subspace img = image(m);
    CHECK(ker.dim() + img.dim() == 7);
    for (Index i = 0; i < ker.dim(); ++i)
      CHECK(is_zero_vec(Vec(m * ker.basis.row(i).transpose())));
    for (Index j = 0; j < m.cols(); ++j)
      CHECK(contains(img, Subspace::span(4, m.col(j).transpose())));
  }
}

TEST_CASE("sparse kernel and image match the dense overloads") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(5, 5, rng, 3);
    for (Index i = 0; i < 5; ++i)
      for (Index j = 0; j < 5; ++j)
        if ((i + j + trial) % 2 == 0) m(i, j) = 0;
    const SpMat s = m.sparseView();
    CHECK(kernel(s) == kernel(m));
    CHECK(image(s) == image(m));
  }
}

TEST_CASE("Grassmann dimension identity") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Subspace a = Subspace::span(8, random_mat(3, 8, rng));
    const Subspace b = Subspace::span(8, random_mat(3, 8, rng));
    const Subspace s = sum(a, b);
    const Subspace i = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(contains(s, a));
    CHECK(contains(s, b));
    CHECK(contains(a, i));
    CHECK(contains(b, i));
    CHECK(sum(a, b) == sum(b, a));
    CHECK(intersect(a, b) == intersect(b, a));
  }
}

TEST_CASE("subspace canonical form decides equality") {
  Mat rows1(2, 3), rows2(2, 3);
  rows1 << 1, 0, 1, 0, 1, 1;
  rows2 << 1, 1, 2, 2, 1, 3;  // same span, different basis
  CHECK(Subspace::span(3, rows1) == Subspace::span(3, rows2));
  CHECK(Subspace::full(4).dim() == 4);
  CHECK(Subspace::zero(4).dim() == 0);
  CHECK(contains(Subspace::full(4), Subspace::zero(4)));
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS_AS(sum(Subspace::full(3), Subspace::full(4)), AmbientMismatch);
  CHECK_THROWS_AS(intersect(Subspace::full(3), Subspace::zero(4)), AmbientMismatch);
}

TEST_CASE("reduce_mod gives a coset representative, zero iff member") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace w = Subspace::span(6, random_mat(3, 6, rng));
    const Vec v = random_mat(1, 6, rng).transpose();
    const Vec red = reduce_mod(w, v);
    // v - red lies in W
    CHECK(contains(w, Subspace::span(6, (v - red).transpose())));
    // members reduce to zero
    if (w.dim() > 0)
      CHECK(is_zero_vec(reduce_mod(w, Vec(w.basis.colwise().sum().transpose()))));
    // idempotent
    CHECK(vec_equal(reduce_mod(w, red), red));
  }
}

TEST_CASE("quotient_map has kernel exactly W") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace w = Subspace::span(6, random_mat(3, 6, rng));
    const Mat q = quotient_map(w);
    CHECK(q.rows() == 6 - w.dim());
    CHECK(kernel(q) == w);
    CHECK(rank_of(q) == q.rows());
  }
}

TEST_CASE("quotient_dim requires containment") {
  const Subspace a = Subspace::full(4);
  Mat row(1, 4);
  row << 1, 2, 3, 4;
  const Subspace b = Subspace::span(4, row);
  CHECK(quotient_dim(a, b) == 3);
  CHECK_THROWS_AS(quotient_dim(b, a), NotContained);
}

TEST_CASE("sparse apply equals dense product") {
  std::mt19937_64 rng(31);
  Mat m = random_mat(5, 5, rng, 3);
  m(0, 1) = 0;
  m(3, 3) = 0;
  const SpMat s = m.sparseView();
  const Mat dense = random_mat(5, 4, rng);
  CHECK(mat_equal(apply(s, dense), Mat(m * dense)));
  const Vec v = random_mat(1, 5, rng).transpose();
  CHECK(vec_equal(apply(s, v), Vec(m * v)));
}
