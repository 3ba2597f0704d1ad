#pragma once

#include <cstdint>
#include <vector>

#include "fcrystal/frobenius.hpp"
#include "fcrystal/rootdata.hpp"
#include "fcrystal/weyl.hpp"

namespace fcrystal {

// The combinatorial input: character/cocharacter lattices with their roots,
// a minuscule cocharacter, the Frobenius lattice automorphism, and the
// residue characteristic.
struct Quintuple {
  RootDatum rd;
  Vec mu;
  Frobenius sigma;
  long long p = 2;
};

struct Limits {
  unsigned long long max_weyl_order = 1'000'000;
  unsigned long long max_oracle_points = 200'000;
  int threads = 1;
};

// Everything derived from a quintuple that classification needs: the epsilon
// partition, the enumerated Weyl group, the adapted positive system, the
// parabolic subgroup W_P = Stab_W(mu), and its right cosets.
struct Analysis {
  Quintuple q;
  EpsilonPartition ep;
  WeylGroup W;
  PositiveSystem canon;
  std::vector<int> W_P;
  std::vector<uint8_t> in_W_P;
  CosetTable cosets;

  int parabolic_index() const { return static_cast<int>(cosets.members.size()); }
};

Analysis prepare(Quintuple q, const Limits& lim);

}  // namespace fcrystal
