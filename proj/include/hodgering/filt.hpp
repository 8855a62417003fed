#pragma once

#include <map>

#include "hodgering/ring.hpp"

namespace hodgering {

/// Raised by g_sigma when the inductive construction fails to produce a
/// nested chain (possible for degenerate, non-symplectic elements).
struct FiltrationNotNested : Error { using Error::Error; };

enum class Direction { descending, ascending };

/// An (ascending or descending) chain of canonical subspaces of the total
/// space, keyed by filtration index. Steps outside the stored index range
/// extend to the full space / zero subspace according to the direction.
struct Filtration {
  Direction direction = Direction::descending;
  Index ambient = 0;
  std::map<int, Subspace> steps;

  Subspace at(int i) const;

  /// Verifies nesting; throws FiltrationNotNested on violation.
  void check_nested() const;
};

/// Total Hodge filtration: F^m spans all basis vectors with Hodge index
/// >= m, across all degrees. Descending, indices 0..2d+1.
Filtration hodge_filtration(const HodgeRing& r);

/// Total weight filtration: W_k spans basis vectors with p+q <= k.
/// Ascending, indices -1..4d.
Filtration weight_filtration(const HodgeRing& r);

/// Reconstructed filtration from kernels and images of multiplication by
/// powers of sigma. Descending, indices 0..2d+1.
Filtration g_sigma(const HodgeRing& r, const Element& sigma);

bool filtrations_equal(const Filtration& f1, const Filtration& f2);

/// G_sigma == F, decided structurally. By the reconstruction theorem this
/// coincides with is_symplectic; callers cross-check the biconditional.
bool reconstruct_check(const HodgeRing& r, const Element& sigma);

}  // namespace hodgering
