#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fcrystal/analysis.hpp"
#include "fcrystal/classify.hpp"
#include "fcrystal/gf.hpp"

namespace fcrystal {

// A mod-p truncated display for the split GL_r shadow with Hodge number d:
// the semilinear maps F(x) = gbar * D * sigma(x) and V(x) = sigma^{-1}(D' *
// gbar^{-1} * x), where D = diag(0^d, 1^{r-d}), D' = diag(1^d, 0^{r-d}) and
// sigma is the entrywise arithmetic Frobenius.
struct TruncatedDisplay {
  GF field;
  int r = 0, d = 0;
  GFMat gbar;
};

TruncatedDisplay make_display(const GF& field, int r, int d, GFMat gbar);

// The canonical-filtration invariant: the coarsest flag containing 0 and the
// full space that is stable under U -> F(U) and U -> V^{-1}(U), recorded as
// the list of pairs (dim U_j, dim F(U_j)) along the flag.
using FinalType = std::vector<std::pair<int, int>>;

FinalType final_type(const TruncatedDisplay& t);

// |GL_r(F_q)| and |H(F_q)| = q^{2d(r-d)} |GL_d| |GL_{r-d}| for the twisted
// action group H = U x L x N attached to the standard parabolic.
struct PointCounts {
  unsigned long long g_order = 0;
  unsigned long long h_order = 0;
};
PointCounts gl_point_counts(int q, int r, int d);

unsigned long long binomial(int n, int k);

// Full census of final types over all of GL_r(F_q).  Requires |GL| within
// max_points; the number of distinct types must equal binomial(r, d).
struct CensusEntry {
  FinalType type;
  unsigned long long count = 0;
};
std::vector<CensusEntry> type_census(const GF& field, int r, int d, int threads,
                                     unsigned long long max_points);

// Checks the mass identity |G(F_q)| = |H(F_q)| * sum_i p^{-m * S_i} for the
// classification of the GL shadow described by the analysis, with q = p^m.
// Exact integer arithmetic (both sides scaled by p^{m * max S}).
bool mass_identity_holds(const Analysis& A, const std::vector<ClassRecord>& classes,
                         int m);

// One twisted-conjugation move g |-> h1 h2 g sigma(h2^{-1}) sigma(h3^{-1}),
// where h1 is upper-right unipotent, h2 block-diagonal, h3 lower-left
// unipotent for the (d, r-d) block structure.
GFMat twisted_move(const TruncatedDisplay& t, const GFMat& h1, const GFMat& h2,
                   const GFMat& h3);

// Full orbit partition of GL_r(F_q) under all twisted moves (small cases).
// Returns orbits as sorted lists of indices into the census enumeration
// order of GL_r(F_q).
std::vector<std::vector<int>> twisted_orbits(const GF& field, int r, int d,
                                             unsigned long long max_points);

// True if every twisted orbit is contained in a single final-type bucket.
bool orbits_refine_types(const GF& field, int r, int d, unsigned long long max_points);

// Applies `iterations` random twisted moves to random elements and checks
// that the final type never changes.  Deterministic for a fixed seed.
bool random_moves_preserve_type(const GF& field, int r, int d, int iterations,
                                unsigned long long seed);

// (r, d) of the GL shadow described by the analysis; ConfigError if the
// configuration is not a single untwisted split GL factor with 0/1 mu.
std::pair<int, int> shadow_parameters(const Analysis& A);

}  // namespace fcrystal
