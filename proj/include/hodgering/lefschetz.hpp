#pragma once

#include <array>
#include <optional>

#include "hodgering/ring.hpp"

namespace hodgering {

struct SymplecticVerdict {
  bool symplectic = false;
  // (m, l) of the first graded multiplication map that fails to be an
  // isomorphism; absent when symplectic or when sigma is zero.
  std::optional<std::pair<int, int>> first_failure;
};

/// sigma^{d-m} : Gr_F^m H^l -> Gr_F^{2d-m} H^{2d-2m+l} bijective for all
/// 0 <= m <= d and all l, and sigma != 0.
SymplecticVerdict is_symplectic(const HodgeRing& r, const Element& sigma);

/// w in {0,1,2} iff sigma's support is the single piece (2,w;2).
std::optional<int> pure_weight(const HodgeRing& r, const Element& sigma);

/// Two symplectic elements of pure weight must agree in weight; a
/// disagreement on a valid ring is a PaperContradiction.
bool weight_invariance_check(const HodgeRing& r, const Element& sigma1,
                             const Element& sigma2);

/// sigma^{d-m} : I^{m,s;l} -> I^{2d-m, s+w(d-m); l+2(d-m)} bijective.
bool mixedis_check(const HodgeRing& r, const Element& sigma, int m, int s, int l);

bool is_hodge_tate(const HodgeRing& r);

struct ChlWitness {
  Element alpha;
  Index trials_used = 0;
  std::uint64_t seed = 0;
};

/// Randomized search for a curious-hard-Lefschetz witness in piece
/// (2,2;2). Returns nullopt immediately for non-Hodge-Tate rings. The
/// optional hint (typically sigma) is tried before any random draw.
std::optional<ChlWitness> curious_hl(const HodgeRing& r, Index trials = 32,
                                     std::uint64_t seed = 0, int coeff_bound = 10,
                                     const std::optional<Element>& hint = {});

/// Both routes to the weight-2 characterization must agree; disagreement
/// throws PaperContradiction.
bool chl_iff_pure_weight2_check(const HodgeRing& r, const Element& sigma);

struct WeightVanishingReport {
  bool strict_ok = true;  // Gr^W_j H^l = 0 for j > d+l, d <= l <= 2d
  std::vector<std::pair<int, int>> strict_failures;         // (l, j)
  std::vector<std::pair<int, int>> boundary_occupied;       // (l, d+l) nonzero
  bool part2_applicable = false;
  bool part2_ok = true;   // Gr^W_j H^l = 0 for d <= l < 2d, j >= d+l-1
  std::vector<std::pair<int, int>> part2_failures;
};

WeightVanishingReport weight_vanishing_check_w1(const HodgeRing& r, const Element& sigma);

struct LowerBoundsReport {
  bool ok = true;
  std::vector<std::array<int, 3>> failures;  // (j, k, 2i) with monomial zero
  bool symmetric_power_checked = false;      // dim Gr^W_3 H^2 == 2 route
  bool symmetric_power_ok = true;
  std::vector<int> symmetric_power_failures;  // i with rank < i+1
};

LowerBoundsReport lower_bounds_check(const HodgeRing& r, const Element& sigma);

struct NilpotencyTable {
  std::map<int, int> nu;  // degree l -> nu_l; degrees with H^l = 0 omitted
};

NilpotencyTable nilpotency_indices(const HodgeRing& r);

struct NagaiReport {
  int weight = 0;
  // For weight 1 the equalities nu_{2(d-1)} = d-1 and nu_4 = 2 rest on the
  // sharpened vanishing range, which needs the IHS degree profile; without
  // it only nu_{2d} = d is asserted.
  bool ihs_profile = true;
  bool equalities_ok = true;
  std::vector<std::string> failures;
  bool bound_ok = true;               // nu_{2k} <= min{d-1, k-1}, reported only
  std::vector<int> bound_failures;    // k
  NilpotencyTable table;
};

NagaiReport nagai_pattern_check(const HodgeRing& r, const Element& sigma);

struct GeometricVanishingReport {
  int weight = 0;
  bool ok = true;
  std::vector<std::pair<int, int>> failures;  // (p or m, l)
};

GeometricVanishingReport geometric_vanishing_check(const HodgeRing& r,
                                                   const Element& sigma);

}  // namespace hodgering
