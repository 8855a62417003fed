#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hodgering/constructors.hpp"
#include "hodgering/ring.hpp"
#include "oracles.hpp"

using namespace hodgering;

namespace {

std::pair<HodgeRing, Element> torus(int d, std::uint64_t seed = 42) {
  std::mt19937_64 rng(seed);
  return torus_ring(oracles::random_alternating(2 * d, rng));
}

Element random_element(const HodgeRing& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  Element x = r.zero_element();
  for (Index i = 0; i < r.dim(); ++i) x(i) = num(rng);
  return x;
}

}  // namespace

TEST_CASE("torus rings validate") {
  for (int d = 1; d <= 3; ++d) {
    auto [r, sigma] = torus(d);
    const auto report = validate(r);
    CHECK(report.passed);
    CHECK(r.dim() == Index(1) << (2 * d));
    CHECK(r.half_dim() == d);
  }
}

TEST_CASE("validate flags bidegree violations") {
  auto [r, sigma] = torus(1);
  // route e_1 e_2 into the unit piece
  r.mult.clear();
  r.set_product(0, 0, {{0, 1}});
  for (Index j = 1; j < r.dim(); ++j) r.set_product(0, j, {{j, 1}});
  r.set_product(1, 2, {{0, 1}});
  const auto report = validate(r);
  CHECK_FALSE(report.passed);
  bool found = false;
  for (const auto& v : report.violations) found |= v.check == "bidegree";
  CHECK(found);
}

TEST_CASE("validate flags unit law violations") {
  auto [r, sigma] = torus(1);
  auto& row = r.mult.at((std::uint64_t(0) << 32) | 1);
  row[0].second = 2;  // 1 * e_1 = 2 e_1
  const auto report = validate(r);
  CHECK_FALSE(report.passed);
}

TEST_CASE("validate flags broken associativity") {
  auto [r, sigma] = torus(2);
  // flip the sign of e_1 e_2 only; (e_1 e_2) e_3 != e_1 (e_2 e_3)
  auto& row = r.mult.at((std::uint64_t(1) << 32) | 2);
  row[0].second = -row[0].second;
  const auto report = validate(r);
  CHECK_FALSE(report.passed);
  bool found = false;
  for (const auto& v : report.violations) found |= v.check == "associativity";
  CHECK(found);
}

TEST_CASE("validate flags odd squares and conjugation defects") {
  auto [r, sigma] = torus(1);
  r.set_product(1, 1, {{3, 1}});  // e_1^2 != 0 in odd degree
  CHECK_FALSE(validate(r).passed);

  auto [r2, sigma2] = torus(1);
  Mat c = Mat::Identity(4, 4);
  c(1, 1) = 2;  // not an involution
  r2.conjugation = c;
  CHECK_FALSE(validate(r2).passed);
}

TEST_CASE("multiplication is graded commutative and bilinear") {
  auto [r, sigma] = torus(2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Index i = rng() % r.dim(), j = rng() % r.dim();
    const Element x = r.basis_element(i), y = r.basis_element(j);
    const int sign = (r.degree_of(i) % 2 != 0 && r.degree_of(j) % 2 != 0) ? -1 : 1;
    CHECK(vec_equal(multiply(r, x, y), Element(Rational(sign) * multiply(r, y, x))));
  }
  const Element a = random_element(r, rng), b = random_element(r, rng),
                c = random_element(r, rng);
  CHECK(vec_equal(multiply(r, a + b, c),
                  Element(multiply(r, a, c) + multiply(r, b, c))));
  CHECK(vec_equal(multiply(r, a, multiply(r, b, c)),
                  multiply(r, multiply(r, a, b), c)));
}

TEST_CASE("mult_matrix columns are products with basis vectors") {
  auto [r, sigma] = torus(2);
  std::mt19937_64 rng(9);
  const Element x = random_element(r, rng);
  const SpMat m = mult_matrix(r, x);
  for (Index j = 0; j < r.dim(); j += 3)
    CHECK(vec_equal(apply(m, r.basis_element(j)),
                    multiply(r, x, r.basis_element(j))));
}

TEST_CASE("power matches repeated multiplication") {
  auto [r, sigma] = torus(2);
  CHECK(vec_equal(power(r, sigma, 0), r.unit));
  CHECK(vec_equal(power(r, sigma, 3),
                  multiply(r, sigma, multiply(r, sigma, sigma))));
}

TEST_CASE("dimension tables and Hodge symmetry") {
  auto [r, sigma] = torus(2);
  const auto h = hodge_numbers(r);
  CHECK(h.at({0, 0}) == 1);
  CHECK(h.at({1, 1}) == 4);
  CHECK(h.at({2, 2}) == 6);
  CHECK(h.at({4, 4}) == 1);
  // torus pieces are (l,l;l): weights double the degree
  const auto w = weight_numbers(r);
  CHECK(w.at({2, 1}) == 4);
  CHECK(w.at({8, 4}) == 1);
  // h^{p,q} = h^{q,p} within each weight-graded piece
  for (const auto& [key, n] : r.splitting.pieces)
    CHECK(r.splitting.dim({key.q, key.p, key.l}) == n);
}

TEST_CASE("support and conjugation") {
  const HodgeRing e = elliptic_block();
  CHECK(validate(e).passed);
  const Element a = e.basis_element(2);
  CHECK(support(e, a) == std::set<PieceKey>{{1, 0, 1}});
  // conjugation swaps a and b and respects products
  const Element b = e.basis_element(1);
  CHECK(vec_equal(conjugate(e, a), b));
  CHECK(vec_equal(conjugate(e, multiply(e, a, b)),
                  multiply(e, conjugate(e, a), conjugate(e, b))));

  HodgeRing no_conj = e;
  no_conj.conjugation.reset();
  CHECK_THROWS_AS(conjugate(no_conj, a), NoConjugation);
}

TEST_CASE("half_dim rejects odd complex dimension") {
  const HodgeRing e = elliptic_block();
  CHECK(e.dim_c() == 1);
  CHECK_THROWS_AS(e.half_dim(), Error);
}

TEST_CASE("element length mismatches are rejected") {
  auto [r, sigma] = torus(1);
  CHECK_THROWS_AS(multiply(r, sigma, Element::Zero(3)), DimensionMismatch);
}
