#pragma once

#include <string>
#include <vector>

#include "fcrystal/rootdata.hpp"
#include "fcrystal/weyl.hpp"

namespace fcrystal {

// The finite-order lattice automorphism induced by Frobenius: it cycles the
// copies of each Weil-restricted factor and applies the factor's diagram
// twist once per cycle (on the wrap-around copy).
struct Frobenius {
  IntMatrix m;   // action on characters
  IntMatrix co;  // action on cocharacters
  std::vector<int> perm;  // induced permutation of root indices
  int order = 1;
};

Frobenius build_sigma(const RootDatum& rd);

// Index of sigma * w * sigma^{-1} in W (sigma normalizes W).
int sigma_conjugate(const WeylGroup& W, const Frobenius& sigma, int w);

// Permutation of root indices for pi_w = w o sigma (first sigma, then w).
std::vector<int> pi_perm(const WeylGroup& W, const Frobenius& sigma, int w);

// Isogeny classification of the simple adjoint factors of the pair
// (group, mu): each factor is either inert ("trivial", mu has no adjoint
// component there) or of its Lie type; type D splits into a real and a
// quaternionic form depending on whether every component of every
// sigma-translate of mu is Weyl-conjugate to the first fundamental coweight.
enum class FactorClass { trivial, A, B, C, D_real, D_quaternionic };

struct FactorType {
  FactorClass cls = FactorClass::trivial;
  int rank = 0;
};

std::string factor_type_name(const FactorType& t);

std::vector<FactorType> simple_factor_types(const RootDatum& rd, const Vec& mu,
                                            const Frobenius& sigma);

}  // namespace fcrystal
