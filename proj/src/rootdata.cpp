#include "fcrystal/rootdata.hpp"

#include <algorithm>
#include <tuple>

#include "fcrystal/errors.hpp"

namespace fcrystal {

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::GL: return "GL";
  }
  return "?";
}

int roots_per_copy(LieType t, int rank) {
  switch (t) {
    case LieType::A: return rank * (rank + 1);
    case LieType::B: return 2 * rank * rank;
    case LieType::C: return 2 * rank * rank;
    case LieType::D: return 2 * rank * (rank - 1);
    case LieType::GL: return rank * (rank - 1);
  }
  return 0;
}

int copy_width(LieType t, int rank) {
  switch (t) {
    case LieType::A: return rank;
    case LieType::B: return rank;
    case LieType::C: return rank + 1;
    case LieType::D: return rank + 1;
    case LieType::GL: return rank;
  }
  return 0;
}

static int central_dim_of(LieType t) {
  switch (t) {
    case LieType::A: return 0;
    case LieType::B: return 0;
    case LieType::C: return 1;
    case LieType::D: return 1;
    case LieType::GL: return 1;
  }
  return 0;
}

namespace {

Vec unit(int width, int i) {
  Vec v(width, 0);
  v[i] = 1;
  return v;
}

struct LocalRoot {
  Vec root;
  Vec coroot;
};

// Roots and coroots of one copy in copy-local coordinates.
std::vector<LocalRoot> local_roots(LieType t, int n) {
  std::vector<LocalRoot> out;
  const int w = copy_width(t, n);
  auto push = [&](Vec r, Vec c) { out.push_back({std::move(r), std::move(c)}); };
  switch (t) {
    case LieType::A: {
      // Projection of the sum-zero A_n system in Z^{n+1} to Z^n.
      Vec ones(w, 1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) push(sub(unit(w, i), unit(w, j)), sub(unit(w, i), unit(w, j)));
      for (int i = 0; i < n; ++i) {
        push(unit(w, i), add(unit(w, i), ones));
        push(neg(unit(w, i)), neg(add(unit(w, i), ones)));
      }
      break;
    }
    case LieType::B: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Vec r = add(scaled(unit(w, i), si), scaled(unit(w, j), sj));
              push(r, r);  // long roots: coroot = root
            }
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1})
          push(scaled(unit(w, i), s), scaled(unit(w, i), 2 * s));
      break;
    }
    case LieType::C: {
      // Symplectic similitude model: coords (x_1..x_n; z); the root
      // eps_i + eps_j - c is (e_i + e_j; -1), the similitude character c
      // pairs to the last coordinate.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) push(sub(unit(w, i), unit(w, j)), sub(unit(w, i), unit(w, j)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int s : {1, -1}) {
            Vec r = scaled(add(unit(w, i), unit(w, j)), s);
            r[n] = -s;
            push(r, scaled(add(unit(w, i), unit(w, j)), s));
          }
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
          Vec r = scaled(unit(w, i), 2 * s);
          r[n] = -s;
          push(r, scaled(unit(w, i), s));
        }
      break;
    }
    case LieType::D: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) push(sub(unit(w, i), unit(w, j)), sub(unit(w, i), unit(w, j)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int s : {1, -1}) {
            Vec r = scaled(add(unit(w, i), unit(w, j)), s);
            r[n] = -s;
            push(r, scaled(add(unit(w, i), unit(w, j)), s));
          }
      break;
    }
    case LieType::GL: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) push(sub(unit(w, i), unit(w, j)), sub(unit(w, i), unit(w, j)));
      break;
    }
  }
  return out;
}

// Simple roots of one copy, copy-local coordinates, Bourbaki numbering.
std::vector<Vec> local_simples(LieType t, int n) {
  const int w = copy_width(t, n);
  std::vector<Vec> out;
  switch (t) {
    case LieType::A:
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(unit(w, i), unit(w, i + 1)));
      out.push_back(unit(w, n - 1));
      break;
    case LieType::B:
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(unit(w, i), unit(w, i + 1)));
      out.push_back(unit(w, n - 1));
      break;
    case LieType::C: {
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(unit(w, i), unit(w, i + 1)));
      Vec last = scaled(unit(w, n - 1), 2);
      last[n] = -1;
      out.push_back(last);
      break;
    }
    case LieType::D: {
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(unit(w, i), unit(w, i + 1)));
      Vec last = add(unit(w, n - 2), unit(w, n - 1));
      last[n] = -1;
      out.push_back(last);
      break;
    }
    case LieType::GL:
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(unit(w, i), unit(w, i + 1)));
      break;
  }
  return out;
}

// Sum of the fundamental coweights: pairs to 1 with every simple root, so
// dot(root, rho_co) is the height of the root in the simple-root basis.
Vec local_rho_co(LieType t, int n) {
  Vec rho(copy_width(t, n), 0);
  const int top = (t == LieType::GL) ? n - 1 : n;
  for (int k = 1; k <= top; ++k) rho = add(rho, fundamental_coweight(t, n, k));
  return rho;
}

}  // namespace

Vec fundamental_coweight(LieType t, int rank, int node) {
  const int w = copy_width(t, rank);
  Vec v(w, 0);
  auto fill_ones = [&](int k) {
    for (int i = 0; i < k; ++i) v[i] = 1;
  };
  switch (t) {
    case LieType::A:
      require(node >= 1 && node <= rank, "fundamental_coweight: bad node");
      fill_ones(node);
      break;
    case LieType::B:
      require(node >= 1 && node <= rank, "fundamental_coweight: bad node");
      fill_ones(node);
      break;
    case LieType::C:
      require(node >= 1 && node <= rank, "fundamental_coweight: bad node");
      fill_ones(node);
      if (node == rank) v[rank] = 1;
      break;
    case LieType::D:
      require(node >= 1 && node <= rank, "fundamental_coweight: bad node");
      if (node <= rank - 2) {
        fill_ones(node);
      } else if (node == rank - 1) {
        fill_ones(rank - 1);
        v[rank] = 1;
      } else {
        fill_ones(rank);
        v[rank] = 1;
      }
      break;
    case LieType::GL:
      require(node >= 0 && node <= rank, "fundamental_coweight: bad node");
      fill_ones(node);
      break;
  }
  return v;
}

namespace {

void validate_root_datum(const RootDatum& rd) {
  const int m = rd.num_roots();
  invariant(static_cast<int>(rd.root_index.size()) == m, "root datum: duplicate roots");
  for (int i = 0; i < m; ++i) {
    invariant(dot(rd.roots[i], rd.coroots[i]) == 2, "root datum: <alpha, alpha^vee> != 2");
    invariant(rd.negation[i] >= 0 && rd.roots[rd.negation[i]] == neg(rd.roots[i]),
              "root datum: missing negation");
    invariant(rd.coroots[rd.negation[i]] == neg(rd.coroots[i]),
              "root datum: coroot of -alpha is not -coroot(alpha)");
  }
  // Reflection closure of roots and coroots (root-datum axioms).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec r = sub(rd.roots[j], scaled(rd.roots[i], dot(rd.roots[j], rd.coroots[i])));
      int k = rd.index_of(r);
      invariant(k >= 0, "root datum: reflection does not preserve roots");
      Vec c = sub(rd.coroots[j], scaled(rd.coroots[i], dot(rd.roots[i], rd.coroots[j])));
      invariant(rd.coroots[k] == c, "root datum: reflection does not preserve coroots");
    }
  for (int s : rd.simple_roots)
    invariant(rd.height[s] == 1, "root datum: simple root height != 1");
}

}  // namespace

RootDatum build_root_datum(const std::vector<FactorSpec>& factors) {
  require(!factors.empty(), "config: at least one factor required");
  RootDatum rd;
  rd.factors = factors;

  int offset = 0;
  for (int f = 0; f < static_cast<int>(factors.size()); ++f) {
    const FactorSpec& fs = factors[f];
    require(fs.rank >= 1, "config: factor rank must be >= 1");
    require(fs.copies >= 1, "config: copies must be >= 1");
    if (fs.type == LieType::D) require(fs.rank >= 4, "config: D factors need rank >= 4");
    if (fs.twist == Twist::diagram)
      require(fs.type == LieType::A || fs.type == LieType::D || fs.type == LieType::GL,
              "config: diagram twist is only defined for A, D and GL factors");
    for (int c = 0; c < fs.copies; ++c) {
      CopyBlock blk;
      blk.factor = f;
      blk.copy = c;
      blk.offset = offset;
      blk.width = copy_width(fs.type, fs.rank);
      blk.central_dim = central_dim_of(fs.type);
      rd.blocks.push_back(blk);
      offset += blk.width;
    }
  }
  rd.rank = offset;

  auto embed = [&](const CopyBlock& blk, const Vec& local) {
    Vec v(rd.rank, 0);
    for (int i = 0; i < blk.width; ++i) v[blk.offset + i] = local[i];
    return v;
  };

  for (CopyBlock& blk : rd.blocks) {
    const FactorSpec& fs = rd.factors[blk.factor];
    auto locals = local_roots(fs.type, fs.rank);
    invariant(static_cast<int>(locals.size()) == roots_per_copy(fs.type, fs.rank),
              "root datum: wrong root count for factor");
    const Vec rho = local_rho_co(fs.type, fs.rank);
    // Deterministic order within a copy: by height, then lexicographically.
    std::sort(locals.begin(), locals.end(), [&](const LocalRoot& x, const LocalRoot& y) {
      return std::tuple(dot(x.root, rho), x.root) < std::tuple(dot(y.root, rho), y.root);
    });
    for (const LocalRoot& lr : locals) {
      const int idx = rd.num_roots();
      rd.roots.push_back(embed(blk, lr.root));
      rd.coroots.push_back(embed(blk, lr.coroot));
      rd.height.push_back(dot(lr.root, rho));
      rd.block_of_root.push_back(static_cast<int>(&blk - rd.blocks.data()));
      rd.root_index[rd.roots.back()] = idx;
    }
    for (const Vec& s : local_simples(fs.type, fs.rank)) {
      const int idx = rd.index_of(embed(blk, s));
      invariant(idx >= 0, "root datum: simple root not found among roots");
      blk.simples.push_back(idx);
      rd.simple_roots.push_back(idx);
    }
  }

  rd.negation.resize(rd.num_roots());
  rd.std_positive.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) {
    rd.negation[i] = rd.index_of(neg(rd.roots[i]));
    rd.std_positive[i] = rd.height[i] > 0 ? 1 : 0;
  }

  rd.semisimple_rank = 0;
  for (const CopyBlock& blk : rd.blocks) rd.semisimple_rank += blk.width - blk.central_dim;

  validate_root_datum(rd);
  return rd;
}

EpsilonPartition epsilon_partition(const RootDatum& rd, const Vec& mu) {
  require(static_cast<int>(mu.size()) == rd.rank,
          "config: mu has wrong dimension for the lattice");
  EpsilonPartition ep;
  ep.mu = mu;
  ep.eps.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) {
    const int v = rd.pairing(i, mu);
    require(v >= -1 && v <= 1,
            "config: mu is not minuscule (|<alpha, mu>| > 1 for some root)");
    ep.eps[i] = static_cast<int8_t>(-v);
    if (v == -1)
      ep.phi_U.push_back(i);
    else if (v == 0)
      ep.phi_L.push_back(i);
    else
      ep.phi_N.push_back(i);
  }
  invariant(ep.phi_U.size() == ep.phi_N.size(),
            "epsilon partition: |Phi_U| != |Phi_N|");
  ep.dim_G = rd.rank + rd.num_roots();
  ep.dim_P = rd.rank + static_cast<int>(ep.phi_L.size() + ep.phi_U.size());
  ep.dim_N = static_cast<int>(ep.phi_N.size());
  return ep;
}

bool is_closed_subset(const RootDatum& rd, const std::vector<uint8_t>& subset) {
  invariant(subset.size() == rd.roots.size(), "is_closed_subset: size mismatch");
  for (int i = 0; i < rd.num_roots(); ++i) {
    if (!subset[i]) continue;
    for (int j = 0; j < rd.num_roots(); ++j) {
      if (!subset[j]) continue;
      const int k = rd.index_of(add(rd.roots[i], rd.roots[j]));
      if (k >= 0 && !subset[k]) return false;
    }
  }
  return true;
}

}  // namespace fcrystal
