#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcrystal/rootdata.hpp"

namespace fcrystal {

// A Weyl group element as a lattice automorphism: `m` acts on characters,
// `co` on cocharacters (co = (m^{-1})^T, so pairings are preserved), and
// `perm` is the induced permutation of the root indices.
struct WeylElement {
  IntMatrix m;
  IntMatrix co;
  std::vector<int> perm;
};

struct WeylGroup {
  std::vector<WeylElement> elems;  // elems[0] is the identity
  std::map<std::vector<int>, int> by_matrix;  // key: m.a
  std::vector<int> inverse;

  int size() const { return static_cast<int>(elems.size()); }
  const WeylElement& operator[](int i) const { return elems[i]; }
  int index_of(const IntMatrix& m) const {
    auto it = by_matrix.find(m.a);
    return it == by_matrix.end() ? -1 : it->second;
  }
  // Index of elems[a] * elems[b] (first apply b, then a).
  int compose(int a, int b) const;
};

// Reflection in the given root, as a lattice automorphism.
WeylElement reflection(const RootDatum& rd, int root_idx);

// Product of the per-copy Weyl group orders (the expected size of W).
unsigned long long theoretical_weyl_order(const std::vector<FactorSpec>& factors);

// Enumerates W by closing the simple reflections under multiplication.
// Throws LimitError if the theoretical order exceeds max_order, and
// InvariantError if the enumeration does not reach exactly that order.
WeylGroup enumerate_weyl(const RootDatum& rd, unsigned long long max_order);

// A choice of positive roots, as indicator flags plus the index list.
struct PositiveSystem {
  std::vector<uint8_t> positive;
  std::vector<int> positives;
};

// Standard (Bourbaki) positive system: roots of positive height.
PositiveSystem standard_positive_system(const RootDatum& rd);

// Positive system adapted to the epsilon partition: Phi_U together with the
// lexicographically positive half of Phi_L.  The Borel it defines sits inside
// the parabolic P (whose roots are Phi_L u Phi_U).
PositiveSystem canonical_positive_system(const RootDatum& rd, const EpsilonPartition& ep);

// #{alpha in Phi^+ : w(alpha) in Phi^-}.
int length(const WeylGroup& W, int w, const PositiveSystem& pos);

// {w in W : w fixes mu in X_*}.
std::vector<int> cocharacter_stabilizer(const WeylGroup& W, const Vec& mu);

// Subgroup generated by the reflections in the roots of Phi_L.
std::vector<int> levi_generated_subgroup(const RootDatum& rd, const WeylGroup& W,
                                         const EpsilonPartition& ep);

// Right cosets H\W (cosets H*w) of a subgroup H, with the unique
// minimal-length representative of each coset under `pos`.
struct CosetTable {
  std::vector<int> coset_of;               // element index -> coset id
  std::vector<std::vector<int>> members;   // sorted element indices per coset
  std::vector<int> min_rep;                // element index per coset
};
CosetTable right_cosets(const WeylGroup& W, const std::vector<int>& subgroup,
                        const PositiveSystem& pos);

// Reduced word for w in the standard simple reflections, one segment per
// lattice copy joined by '|'; "e" for an identity segment.  Letters are
// "s1".."sn" in Bourbaki numbering local to the copy.
std::string reduced_word(const RootDatum& rd, const WeylGroup& W, int w);

}  // namespace fcrystal
