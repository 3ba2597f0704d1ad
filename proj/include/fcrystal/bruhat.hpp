#pragma once

#include <vector>

#include "fcrystal/analysis.hpp"
#include "fcrystal/classify.hpp"

namespace fcrystal {

// Classical comparison invariant: #{alpha in Phi^+ : w(alpha) in Phi_P},
// where Phi^+ is the adapted positive system and Phi_P = Phi_L u Phi_U.
// Constant on right cosets W_P w.
int s_classical(const Analysis& A, int w);

// d_u = |Phi^+| - |Phi_N|, the common lower bound of s_classical.
int d_u_value(const Analysis& A);

struct BruhatRecord {
  int coset = 0;
  int min_rep = 0;
  int min_rep_length = 0;
  int s_cl = 0;
};

// One record per coset of W_P\W, in coset-table order.  Verifies that
// s_classical is constant on each coset and that the minimal representative
// satisfies s_cl = |Phi^+| - length.
std::vector<BruhatRecord> coset_invariants(const Analysis& A);

// Multiset identity between the classification and the coset geometry:
// {S(class)} = {s_cl(coset) - d_u} as multisets.
bool multisets_match(const Analysis& A, const std::vector<ClassRecord>& classes,
                     const std::vector<BruhatRecord>& cosets);

}  // namespace fcrystal
