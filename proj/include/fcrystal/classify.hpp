#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "fcrystal/analysis.hpp"

namespace fcrystal {

using Rat = boost::rational<long long>;

// One cycle of the permutation pi_w = w o sigma on the roots, with its
// epsilon string (canonically rotated to the lexicographically minimal
// rotation) and the Newton slope (m_plus - m_minus) / |orbit|.
struct PiOrbit {
  std::vector<int> roots;
  std::vector<int8_t> eps_string;
  int m_plus = 0;
  int m_minus = 0;
  Rat slope{0};
};

struct OrbitDecomposition {
  std::vector<PiOrbit> orbits;
};

OrbitDecomposition pi_orbits(const Analysis& A, int w);

// First-exit step of alpha in Phi_N under pi_w: the smallest l >= 1 with
// pi_w^l(alpha) outside Phi_L.  Throws unless alpha is in Phi_N.
int w_alpha(const Analysis& A, int w, int root_idx);

// Phi_N^{+w}: the roots of Phi_N whose first exit lands in Phi_U.
std::vector<int> s_set(const Analysis& A, int w);

// S(w) = |Phi_N^{+w}|, the reduced automorphism-group dimension.
int s_value(const Analysis& A, int w);

// The subgroup of W_P fixing the whole tau-orbit of mu, tau = w sigma.
// Computed two independent ways (pointwise stabilizer of the orbit vectors,
// and the intersection of the tau-conjugates of W_P) which must agree.
std::vector<int> fixer_subgroup(const Analysis& A, int w);

// The equivalence class of w: {w3 w4 w sigma(w3^{-1})} over w3 in W_P and
// w4 in fixer_subgroup(w).  Always has exactly |W_P| elements.
std::vector<int> weyl_class(const Analysis& A, int w);

// Slope multiset of the adjoint representation: every orbit contributes its
// slope with multiplicity |orbit|, and the Cartan contributes slope 0 with
// multiplicity equal to the semisimple rank.
struct SlopeEntry {
  Rat slope{0};
  int mult = 0;
  bool operator==(const SlopeEntry&) const = default;
};
std::vector<SlopeEntry> adjoint_slopes(const Analysis& A, int w);

// Dimensions of the distinguished subspaces attached to w (fixed points,
// obstruction space and its depth-one part, and the span of the recurrent
// and first-exit root lines together with the Cartan).
struct ZeroSpaceDims {
  int dim_x_fp = 0;
  int dim_y = 0;
  int dim_y0 = 0;
  int dim_w_span = 0;
  bool operator==(const ZeroSpaceDims&) const = default;
};
ZeroSpaceDims zero_space_dims(const Analysis& A, int w);

struct ClassRecord {
  int rep = 0;                     // minimal (length, matrix) member
  std::vector<int> members;        // sorted element indices
  int s_val = 0;
  int dim_orbit = 0;               // dim G_k - S
  int dim_stratum = 0;             // dim N_k - S (universal display dimension)
  std::vector<SlopeEntry> ad_slopes;
  bool pivotal = false;            // S = |Phi_N|
  bool open_stratum = false;       // S = 0
  ZeroSpaceDims z;
};

// All classes, sorted by S ascending (ties by representative length, then
// matrix).  Verifies the partition structure, the per-class constancy of S
// and of the slope multiset, and the per-element slope sum identity.
std::vector<ClassRecord> enumerate_classes(const Analysis& A);

}  // namespace fcrystal
