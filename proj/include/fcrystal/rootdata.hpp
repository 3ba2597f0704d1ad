#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcrystal/lattice.hpp"

namespace fcrystal {

// Supported simple factor families.  B/C/D are realized with a similitude
// coordinate where needed so that every minuscule coweight is integral:
//   A_n : projected sum-zero model on Z^n (images of e_i - e_{n+1});
//   B_n : orthonormal Z^n (odd orthogonal);
//   C_n : symplectic similitude model on Z^{n+1}, coords (x_1..x_n; z);
//   D_n : even orthogonal similitude model on Z^{n+1};
//   GL  : full Z^r with roots e_i - e_j (split general linear).
enum class LieType { A, B, C, D, GL };

enum class Twist { none, diagram };

struct FactorSpec {
  LieType type = LieType::A;
  int rank = 1;
  int copies = 1;       // Weil restriction copies, permuted cyclically by sigma
  Twist twist = Twist::none;

  bool operator==(const FactorSpec&) const = default;
};

std::string lie_type_name(LieType t);

// One copy of one factor, embedded as a coordinate block of the full lattice.
struct CopyBlock {
  int factor = 0;
  int copy = 0;
  int offset = 0;       // first coordinate of this block
  int width = 0;        // number of lattice coordinates
  int central_dim = 0;  // dimension of the central sublattice (0 or 1)
  std::vector<int> simples;  // global root indices of this copy's simple roots
};

struct RootDatum {
  int rank = 0;  // total lattice rank
  std::vector<FactorSpec> factors;
  std::vector<CopyBlock> blocks;
  std::vector<Vec> roots;    // characters
  std::vector<Vec> coroots;  // cocharacters, same index
  std::vector<int> negation;      // negation[i] = index of -roots[i]
  std::vector<int> height;        // height w.r.t. the standard simple roots
  std::vector<uint8_t> std_positive;  // height > 0
  std::vector<int> block_of_root;
  std::vector<int> simple_roots;  // all simples, block-major order
  std::map<Vec, int> root_index;
  int semisimple_rank = 0;

  int num_roots() const { return static_cast<int>(roots.size()); }
  bool is_root(const Vec& v) const { return root_index.count(v) != 0; }
  int index_of(const Vec& v) const {
    auto it = root_index.find(v);
    return it == root_index.end() ? -1 : it->second;
  }
  // <roots[i], lambda> for a cocharacter lambda in full coordinates.
  int pairing(int i, const Vec& lambda) const { return dot(roots[i], lambda); }
};

// Number of roots of a single copy of the given factor.
int roots_per_copy(LieType t, int rank);
// Lattice width of a single copy.
int copy_width(LieType t, int rank);
// Fundamental coweight of the given node (1-based; GL also accepts 0..rank,
// meaning the cocharacter (1^node, 0^(rank-node))), in copy-local coordinates.
Vec fundamental_coweight(LieType t, int rank, int node);

// Builds the root datum of a product of (possibly Weil-restricted) factors
// and verifies the root-datum axioms on the result.
RootDatum build_root_datum(const std::vector<FactorSpec>& factors);

// Partition of the roots by the sign character eps(alpha) = -<alpha, mu>:
// eps = +1 on Phi_U, 0 on Phi_L (Levi), -1 on Phi_N.
struct EpsilonPartition {
  Vec mu;
  std::vector<int8_t> eps;
  std::vector<int> phi_U, phi_L, phi_N;
  int dim_G = 0;  // rank + |Phi|
  int dim_P = 0;  // rank + |Phi_L| + |Phi_U|
  int dim_N = 0;  // |Phi_N|
};

// Validates that mu is minuscule (all pairings in {-1,0,1}); ConfigError if not.
EpsilonPartition epsilon_partition(const RootDatum& rd, const Vec& mu);

// True if the root subset (indicator over root indices) is closed under
// addition inside Phi.
bool is_closed_subset(const RootDatum& rd, const std::vector<uint8_t>& subset);

}  // namespace fcrystal
