#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodgering/exactla.hpp"

namespace hodgering {

/// Index of a Deligne-splitting piece I^{p,q;l}.
struct PieceKey {
  int p = 0;
  int q = 0;
  int l = 0;

  friend bool operator==(const PieceKey&, const PieceKey&) = default;
  // Global basis order is lexicographic by (l, p, q).
  friend bool operator<(const PieceKey& a, const PieceKey& b) {
    if (a.l != b.l) return a.l < b.l;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

/// Bigraded dimension table of a split mixed Hodge structure. Pieces that
/// are absent from the map have dimension zero. Basis vectors are laid out
/// lexicographically by (l, p, q, intra-piece index).
struct DeligneSplitting {
  // Complex dimension of the underlying pair, i.e. 2d. Stored doubled so
  // that odd-dimensional Kunneth factors (curve blocks) are representable
  // and the parameter is additive under tensor products.
  int dim_c = 2;
  std::map<PieceKey, Index> pieces;

  // Derived layout, filled in by finalize().
  std::map<PieceKey, Index> offsets;
  std::vector<PieceKey> key_of;  // piece of each global basis vector
  Index total = 0;

  void finalize();

  Index dim(const PieceKey& k) const {
    auto it = pieces.find(k);
    return it == pieces.end() ? 0 : it->second;
  }
  Index offset(const PieceKey& k) const { return offsets.at(k); }
};

/// Elements are dense rational coefficient vectors over the global basis.
using Element = Vec;

using SparseVec = std::vector<std::pair<Index, Rational>>;

struct Violation {
  std::string check;
  std::vector<Index> witness;
  std::string message;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(std::string check, std::vector<Index> witness, std::string message) {
    passed = false;
    violations.push_back({std::move(check), std::move(witness), std::move(message)});
  }
};

/// A finite-dimensional bigraded Q-algebra with sparse structure constants.
/// Products are stored only for basis pairs i <= j and completed by the
/// graded sign rule x·y = (-1)^{l_x l_y} y·x.
struct HodgeRing {
  DeligneSplitting splitting;
  std::unordered_map<std::uint64_t, SparseVec> mult;
  Element unit;
  std::optional<Mat> conjugation;
  bool geometric = false;

  Index dim() const { return splitting.total; }
  int dim_c() const { return splitting.dim_c; }
  /// Half-dimension d; throws for rings of odd complex dimension, which
  /// cannot carry a symplectic element.
  int half_dim() const;

  int degree_of(Index i) const { return splitting.key_of[i].l; }

  /// Structure constants for e_i · e_j, any order of i, j. Returns the
  /// stored row and whether the graded sign rule flips it.
  std::pair<const SparseVec*, bool> basis_product(Index i, Index j) const;

  void set_product(Index i, Index j, SparseVec coeffs);  // requires i <= j

  Element zero_element() const { return Element::Zero(dim()); }
  Element basis_element(Index i) const;
};

ValidationReport validate(const HodgeRing& r);

Element multiply(const HodgeRing& r, const Element& x, const Element& y);
Element power(const HodgeRing& r, const Element& x, Index k);

/// N x N matrix of multiplication by x over the global basis.
SpMat mult_matrix(const HodgeRing& r, const Element& x);

/// (p, l) -> dim Gr_F^p H^l, zero entries omitted.
std::map<std::pair<int, int>, Index> hodge_numbers(const HodgeRing& r);
/// (k, l) -> dim Gr^W_k H^l, zero entries omitted.
std::map<std::pair<int, int>, Index> weight_numbers(const HodgeRing& r);

/// Pieces carrying a nonzero coefficient of x.
std::set<PieceKey> support(const HodgeRing& r, const Element& x);

/// Applies the conjugation involution; throws NoConjugation if absent.
Element conjugate(const HodgeRing& r, const Element& x);

}  // namespace hodgering
