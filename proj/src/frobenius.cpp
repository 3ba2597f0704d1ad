#include "fcrystal/frobenius.hpp"

#include <sstream>

#include "fcrystal/errors.hpp"

namespace fcrystal {

namespace {

// Diagram involution of one copy, in copy-local coordinates, as a pair of
// matrices (character action, cocharacter action).
void diagram_twist_matrices(LieType t, int n, IntMatrix& m, IntMatrix& co) {
  const int w = copy_width(t, n);
  m = IntMatrix::identity(w);
  switch (t) {
    case LieType::A:
      // Reversal: chi maps to the projection of -reverse(lift(chi)).
      for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) m.at(r, c) = 0;
      for (int c = 0; c < n; ++c) m.at(0, c) = 1;
      for (int r = 1; r < n; ++r) m.at(r, n - r) = -1;
      break;
    case LieType::GL:
      // chi |-> -reverse(chi) (transpose-inverse form).
      for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) m.at(r, c) = 0;
      for (int r = 0; r < n; ++r) m.at(r, n - 1 - r) = -1;
      break;
    case LieType::D:
      // Fork swap: eps_n |-> c - eps_n, everything else fixed.
      m.at(n - 1, n - 1) = -1;
      m.at(n, n - 1) = 1;
      break;
    case LieType::B:
    case LieType::C:
      break;  // no diagram automorphism
  }
  invariant((m * m).is_identity(), "diagram twist: not an involution");
  co = m.transposed();  // (m^{-1})^T = m^T for an involution
}

}  // namespace

Frobenius build_sigma(const RootDatum& rd) {
  Frobenius sg;
  sg.m = IntMatrix(rd.rank);
  sg.co = IntMatrix(rd.rank);

  // Blocks of each factor are contiguous; copy c maps onto copy c+1 mod copies,
  // with the diagram twist applied on the wrap-around copy.
  for (size_t b = 0; b < rd.blocks.size(); ++b) {
    const CopyBlock& blk = rd.blocks[b];
    const FactorSpec& fs = rd.factors[blk.factor];
    const bool wrap = (blk.copy == fs.copies - 1);
    const CopyBlock& target = wrap ? rd.blocks[b - (fs.copies - 1)] : rd.blocks[b + 1];
    invariant(target.factor == blk.factor, "build_sigma: block layout broken");

    IntMatrix tm = IntMatrix::identity(blk.width), tco = IntMatrix::identity(blk.width);
    if (wrap && fs.twist == Twist::diagram) diagram_twist_matrices(fs.type, fs.rank, tm, tco);
    for (int r = 0; r < blk.width; ++r)
      for (int c = 0; c < blk.width; ++c) {
        sg.m.at(target.offset + r, blk.offset + c) = tm.at(r, c);
        sg.co.at(target.offset + r, blk.offset + c) = tco.at(r, c);
      }
  }

  invariant((sg.m.transposed() * sg.co).is_identity(),
            "build_sigma: character/cocharacter actions not dual");

  sg.perm.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) {
    const int j = rd.index_of(sg.m.apply(rd.roots[i]));
    invariant(j >= 0, "build_sigma: sigma does not preserve the roots");
    sg.perm[i] = j;
  }

  IntMatrix pow = sg.m;
  sg.order = 1;
  while (!pow.is_identity()) {
    pow = pow * sg.m;
    ++sg.order;
    invariant(sg.order <= 1 << 20, "build_sigma: order unreasonably large");
  }
  return sg;
}

int sigma_conjugate(const WeylGroup& W, const Frobenius& sigma, int w) {
  const IntMatrix conj = sigma.m * W.elems[w].m * sigma.co.transposed();
  const int idx = W.index_of(conj);
  invariant(idx >= 0, "sigma_conjugate: sigma does not normalize W");
  return idx;
}

std::vector<int> pi_perm(const WeylGroup& W, const Frobenius& sigma, int w) {
  std::vector<int> p(sigma.perm.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = W.elems[w].perm[sigma.perm[i]];
  return p;
}

std::string factor_type_name(const FactorType& t) {
  std::ostringstream os;
  switch (t.cls) {
    case FactorClass::trivial: return "trivial";
    case FactorClass::A: os << 'A' << t.rank; break;
    case FactorClass::B: os << 'B' << t.rank; break;
    case FactorClass::C: os << 'C' << t.rank; break;
    case FactorClass::D_real: os << 'D' << t.rank << 'R'; break;
    case FactorClass::D_quaternionic: os << 'D' << t.rank << 'H'; break;
  }
  return os.str();
}

std::vector<FactorType> simple_factor_types(const RootDatum& rd, const Vec& mu,
                                            const Frobenius& sigma) {
  // All sigma-translates of mu.
  std::vector<Vec> translates;
  Vec cur = mu;
  for (int i = 0; i < sigma.order; ++i) {
    translates.push_back(cur);
    cur = sigma.co.apply(cur);
  }
  invariant(cur == mu, "simple_factor_types: sigma orbit of mu did not close");

  std::vector<FactorType> out;
  for (int f = 0; f < static_cast<int>(rd.factors.size()); ++f) {
    const FactorSpec& fs = rd.factors[f];
    // Collect the copy-local components of every translate on every copy of
    // this factor, keeping those that act nontrivially on the adjoint part
    // (nonzero pairing with some root of the copy).
    std::vector<Vec> components;
    for (const CopyBlock& blk : rd.blocks) {
      if (blk.factor != f) continue;
      for (const Vec& t : translates) {
        Vec local(t.begin() + blk.offset, t.begin() + blk.offset + blk.width);
        bool acts = false;
        for (int ri = 0; ri < rd.num_roots(); ++ri) {
          if (rd.block_of_root[ri] != static_cast<int>(&blk - rd.blocks.data())) continue;
          Vec local_root(rd.roots[ri].begin() + blk.offset,
                         rd.roots[ri].begin() + blk.offset + blk.width);
          if (dot(local_root, local) != 0) {
            acts = true;
            break;
          }
        }
        if (acts) components.push_back(std::move(local));
      }
    }

    FactorType ft;
    ft.rank = fs.rank;
    if (components.empty()) {
      ft.cls = FactorClass::trivial;
      out.push_back(ft);
      continue;
    }
    switch (fs.type) {
      case LieType::A: ft.cls = FactorClass::A; break;
      case LieType::GL:
        ft.cls = FactorClass::A;
        ft.rank = fs.rank - 1;  // adjoint part of GL_r is of type A_{r-1}
        break;
      case LieType::B: ft.cls = FactorClass::B; break;
      case LieType::C: ft.cls = FactorClass::C; break;
      case LieType::D: {
        // Real form iff every component is Weyl-conjugate to the first
        // fundamental coweight (compared through pairing profiles, which
        // quotients out the central sublattice).
        RootDatum one = build_root_datum({FactorSpec{fs.type, fs.rank, 1, Twist::none}});
        WeylGroup Wone = enumerate_weyl(one, 1ull << 40);
        const Vec ref = fundamental_coweight(LieType::D, fs.rank, 1);
        auto profile = [&](const Vec& v) {
          Vec p(one.num_roots());
          for (int i = 0; i < one.num_roots(); ++i) p[i] = dot(one.roots[i], v);
          return p;
        };
        const Vec ref_profile = profile(ref);
        bool all_real = true;
        for (const Vec& comp : components) {
          bool conj = false;
          for (int u = 0; u < Wone.size() && !conj; ++u)
            conj = (profile(Wone.elems[u].co.apply(comp)) == ref_profile);
          if (!conj) {
            all_real = false;
            break;
          }
        }
        ft.cls = all_real ? FactorClass::D_real : FactorClass::D_quaternionic;
        break;
      }
    }
    out.push_back(ft);
  }
  return out;
}

}  // namespace fcrystal
