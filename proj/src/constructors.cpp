#include "hodgering/constructors.hpp"

#include <bit>
#include <numeric>

namespace hodgering {

namespace {

// Subsets of {0..n-1} grouped by size, lexicographic within each size.
std::vector<std::uint32_t> subsets_by_size(int n) {
  std::vector<std::uint32_t> all;
  all.reserve(1u << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) all.push_back(mask);
  std::stable_sort(all.begin(), all.end(), [](std::uint32_t x, std::uint32_t y) {
    const int cx = std::popcount(x), cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    // lex order on sorted index tuples = colex on reversed... compare by
    // lowest differing generator
    return x < y;
  });
  return all;
}

// Sign of merging the sorted index sets S and T: parity of pairs
// (s in S, t in T) with s > t.
int shuffle_sign(std::uint32_t s, std::uint32_t t) {
  int inversions = 0;
  for (int b = 0; b < 32; ++b)
    if (s & (1u << b)) inversions += std::popcount(t & ((1u << b) - 1));
  return inversions % 2 == 0 ? 1 : -1;
}

void require_valid_factor(const HodgeRing& r, const char* which) {
  if (r.dim() == 0 || r.splitting.key_of.empty())
    throw InvalidFactor(std::string(which) + ": factor ring is empty or not finalized");
  if (r.splitting.dim({0, 0, 0}) != 1)
    throw InvalidFactor(std::string(which) + ": factor ring has no unit piece");
}

}  // namespace

std::pair<HodgeRing, Element> torus_ring(const Mat& a) {
  const Index n = a.rows();
  if (a.cols() != n || n == 0 || n % 2 != 0) throw OddSize("torus_ring: matrix must be square of even size");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (a(i, j) != -a(j, i)) throw NotAlternating("torus_ring: matrix must be alternating");

  HodgeRing r;
  r.splitting.dim_c = static_cast<int>(n);
  const auto masks = subsets_by_size(static_cast<int>(n));
  std::vector<Index> index_of(1u << n);
  for (Index i = 0; i < static_cast<Index>(masks.size()); ++i) index_of[masks[i]] = i;
  for (const std::uint32_t m : masks) {
    const int l = std::popcount(m);
    ++r.splitting.pieces[{l, l, l}];
  }
  r.splitting.finalize();

  for (Index i = 0; i < static_cast<Index>(masks.size()); ++i)
    for (Index j = i; j < static_cast<Index>(masks.size()); ++j) {
      const std::uint32_t s = masks[i], t = masks[j];
      if (s & t) continue;
      r.set_product(i, j, {{index_of[s | t], Rational(shuffle_sign(s, t))}});
    }

  r.unit = r.basis_element(index_of[0]);
  r.conjugation = Mat::Identity(r.dim(), r.dim());
  r.geometric = true;

  Element sigma = r.zero_element();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!a(i, j).is_zero())
        sigma(index_of[(1u << i) | (1u << j)]) += a(i, j);
  return {std::move(r), std::move(sigma)};
}

HodgeRing elliptic_block() {
  HodgeRing r;
  r.splitting.dim_c = 1;
  r.splitting.pieces = {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 2}, 1}};
  r.splitting.finalize();
  // basis order: 1, b, a, p
  const Index one = 0, b = 1, a = 2, p = 3;
  r.set_product(one, one, {{one, 1}});
  r.set_product(one, b, {{b, 1}});
  r.set_product(one, a, {{a, 1}});
  r.set_product(one, p, {{p, 1}});
  r.set_product(b, a, {{p, -1}});  // a·b = p
  r.unit = r.basis_element(one);
  // complex conjugation swaps a and b; on the top class it is then forced
  // to act by -1 (c(a·b) = b·a = -a·b)
  Mat c = Mat::Zero(4, 4);
  c(one, one) = 1;
  c(a, b) = 1;
  c(b, a) = 1;
  c(p, p) = -1;
  r.conjugation = c;
  r.geometric = true;
  return r;
}

HodgeRing punctured_line_block() {
  HodgeRing r;
  r.splitting.dim_c = 1;
  r.splitting.pieces = {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}};
  r.splitting.finalize();
  const Index one = 0, t = 1;
  r.set_product(one, one, {{one, 1}});
  r.set_product(one, t, {{t, 1}});
  r.unit = r.basis_element(one);
  r.conjugation = Mat::Identity(2, 2);
  r.geometric = true;
  return r;
}

KunnethResult kunneth_full(const HodgeRing& r1, const HodgeRing& r2) {
  require_valid_factor(r1, "kunneth");
  require_valid_factor(r2, "kunneth");
  const Index n1 = r1.dim(), n2 = r2.dim();

  KunnethResult out;
  HodgeRing& r = out.ring;
  r.splitting.dim_c = r1.dim_c() + r2.dim_c();

  // count pieces, then assign pair indices in (i, j) order within each piece
  for (Index i = 0; i < n1; ++i)
    for (Index j = 0; j < n2; ++j) {
      const PieceKey k1 = r1.splitting.key_of[i], k2 = r2.splitting.key_of[j];
      ++r.splitting.pieces[{k1.p + k2.p, k1.q + k2.q, k1.l + k2.l}];
    }
  r.splitting.finalize();

  out.pair_index.assign(n1, std::vector<Index>(n2));
  std::map<PieceKey, Index> next = r.splitting.offsets;
  for (Index i = 0; i < n1; ++i)
    for (Index j = 0; j < n2; ++j) {
      const PieceKey k1 = r1.splitting.key_of[i], k2 = r2.splitting.key_of[j];
      out.pair_index[i][j] = next[{k1.p + k2.p, k1.q + k2.q, k1.l + k2.l}]++;
    }

  // (x1 (x) y1)·(x2 (x) y2) = (-1)^{l(y1) l(x2)} (x1 x2) (x) (y1 y2)
  std::map<Index, SparseVec> rows;  // keyed by flat (ga, gb) below
  for (Index x1 = 0; x1 < n1; ++x1)
    for (Index x2 = 0; x2 < n1; ++x2) {
      auto [cx, fx] = r1.basis_product(x1, x2);
      if (!cx) continue;
      for (Index y1 = 0; y1 < n2; ++y1)
        for (Index y2 = 0; y2 < n2; ++y2) {
          const Index ga = out.pair_index[x1][y1], gb = out.pair_index[x2][y2];
          if (ga > gb) continue;
          auto [cy, fy] = r2.basis_product(y1, y2);
          if (!cy) continue;
          int sign = (r2.degree_of(y1) % 2 != 0 && r1.degree_of(x2) % 2 != 0) ? -1 : 1;
          if (fx) sign = -sign;
          if (fy) sign = -sign;
          SparseVec row;
          for (const auto& [m1, v1] : *cx)
            for (const auto& [m2, v2] : *cy)
              row.emplace_back(out.pair_index[m1][m2], Rational(sign) * v1 * v2);
          r.set_product(ga, gb, std::move(row));
        }
    }

  Index u1 = 0, u2 = 0;
  for (Index i = 0; i < n1; ++i)
    if (!r1.unit(i).is_zero()) { u1 = i; break; }
  for (Index j = 0; j < n2; ++j)
    if (!r2.unit(j).is_zero()) { u2 = j; break; }
  r.unit = r.basis_element(out.pair_index[u1][u2]);

  if (r1.conjugation && r2.conjugation) {
    Mat c = Mat::Zero(r.dim(), r.dim());
    const Mat& c1 = *r1.conjugation;
    const Mat& c2 = *r2.conjugation;
    for (Index i = 0; i < n1; ++i)
      for (Index j = 0; j < n2; ++j)
        for (Index k1 = 0; k1 < n1; ++k1) {
          if (c1(k1, i).is_zero()) continue;
          for (Index k2 = 0; k2 < n2; ++k2)
            if (!c2(k2, j).is_zero())
              c(out.pair_index[k1][k2], out.pair_index[i][j]) = c1(k1, i) * c2(k2, j);
        }
    r.conjugation = std::move(c);
  }
  r.geometric = r1.geometric && r2.geometric;
  return out;
}

Element tensor_element(const KunnethResult& k, const Element& x, const Element& y) {
  Element out = k.ring.zero_element();
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < y.size(); ++j)
      if (!y(j).is_zero()) out(k.pair_index[i][j]) += x(i) * y(j);
  }
  return out;
}

std::pair<HodgeRing, Element> elliptic_weight1_ring(int n) {
  if (n < 1) throw Error("elliptic_weight1_ring: n must be >= 1");
  const HodgeRing e = elliptic_block();
  const HodgeRing c = punctured_line_block();
  KunnethResult base = kunneth_full(e, c);
  const Element sigma_base = tensor_element(base, e.basis_element(2), c.basis_element(1));  // a (x) t

  HodgeRing ring = base.ring;
  Element sigma = sigma_base;
  for (int k = 2; k <= n; ++k) {
    KunnethResult next = kunneth_full(ring, base.ring);
    sigma = tensor_element(next, sigma, base.ring.unit) +
            tensor_element(next, ring.unit, sigma_base);
    ring = std::move(next.ring);
  }
  return {std::move(ring), std::move(sigma)};
}

}  // namespace hodgering
