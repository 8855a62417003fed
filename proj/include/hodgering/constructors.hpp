#pragma once

#include "hodgering/ring.hpp"

namespace hodgering {

/// Exterior algebra on 2d degree-1 generators spanning I^{1,1;1}, with the
/// log 2-form of the alternating matrix A as distinguished element:
/// sigma = sum_{i<j} a_ij e_i e_j in I^{2,2;2}.
std::pair<HodgeRing, Element> torus_ring(const Mat& a);

/// H^*(E) for an elliptic curve E as a split rational model: basis
/// 1, b, a, p with a·b = p and conjugation swapping a and b.
HodgeRing elliptic_block();

/// H^*(C^*): basis 1, t with t^2 = 0 and t spanning I^{1,1;1}.
HodgeRing punctured_line_block();

/// Tensor product ring plus the pair-to-global-basis index map needed to
/// form decomposable elements.
struct KunnethResult {
  HodgeRing ring;
  // pair_index[i][j] = global index of e_i (x) e_j
  std::vector<std::vector<Index>> pair_index;
};

KunnethResult kunneth_full(const HodgeRing& r1, const HodgeRing& r2);

inline HodgeRing kunneth(const HodgeRing& r1, const HodgeRing& r2) {
  return kunneth_full(r1, r2).ring;
}

/// Coefficients of x (x) y in the product ring.
Element tensor_element(const KunnethResult& k, const Element& x, const Element& y);

/// n-fold Kunneth power of elliptic_block (x) punctured_line_block with the
/// diagonal symplectic element of pure weight 1; d = n.
std::pair<HodgeRing, Element> elliptic_weight1_ring(int n);

}  // namespace hodgering
