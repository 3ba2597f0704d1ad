#include "fcrystal/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include "fcrystal/errors.hpp"

namespace fcrystal {

int WeylGroup::compose(int a, int b) const {
  const IntMatrix prod = elems[a].m * elems[b].m;
  const int idx = index_of(prod);
  invariant(idx >= 0, "WeylGroup::compose: product not in group");
  return idx;
}

WeylElement reflection(const RootDatum& rd, int root_idx) {
  const Vec& alpha = rd.roots[root_idx];
  const Vec& alpha_co = rd.coroots[root_idx];
  const int n = rd.rank;
  WeylElement s;
  s.m = IntMatrix::identity(n);
  s.co = IntMatrix::identity(n);
  // chi |-> chi - <chi, alpha^vee> alpha ; lambda |-> lambda - <alpha, lambda> alpha^vee.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      s.m.at(r, c) -= alpha[r] * alpha_co[c];
      s.co.at(r, c) -= alpha_co[r] * alpha[c];
    }
  invariant((s.m.transposed() * s.co).is_identity(),
            "reflection: character/cocharacter actions not dual");
  s.perm.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) {
    const int j = rd.index_of(s.m.apply(rd.roots[i]));
    invariant(j >= 0, "reflection: image of a root is not a root");
    s.perm[i] = j;
  }
  return s;
}

unsigned long long theoretical_weyl_order(const std::vector<FactorSpec>& factors) {
  auto factorial = [](int n) {
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
    return r;
  };
  unsigned long long total = 1;
  for (const FactorSpec& fs : factors) {
    unsigned long long one = 1;
    switch (fs.type) {
      case LieType::A: one = factorial(fs.rank + 1); break;
      case LieType::B:
      case LieType::C: one = factorial(fs.rank) << fs.rank; break;
      case LieType::D: one = factorial(fs.rank) << (fs.rank - 1); break;
      case LieType::GL: one = factorial(fs.rank); break;
    }
    for (int c = 0; c < fs.copies; ++c) {
      invariant(total <= ~0ull / one, "theoretical_weyl_order: overflow");
      total *= one;
    }
  }
  return total;
}

WeylGroup enumerate_weyl(const RootDatum& rd, unsigned long long max_order) {
  const unsigned long long expected = theoretical_weyl_order(rd.factors);
  if (expected > max_order) {
    std::ostringstream os;
    os << "Weyl group order " << expected << " exceeds the limit " << max_order;
    throw LimitError(os.str());
  }

  WeylGroup W;
  WeylElement id;
  id.m = IntMatrix::identity(rd.rank);
  id.co = IntMatrix::identity(rd.rank);
  id.perm.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) id.perm[i] = i;
  W.elems.push_back(id);
  W.by_matrix[id.m.a] = 0;

  std::vector<WeylElement> gens;
  for (int s : rd.simple_roots) gens.push_back(reflection(rd, s));

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const WeylElement& g : gens) {
      WeylElement next;
      next.m = W.elems[cur].m * g.m;
      if (W.by_matrix.count(next.m.a)) continue;
      next.co = W.elems[cur].co * g.co;
      next.perm.resize(rd.num_roots());
      for (int i = 0; i < rd.num_roots(); ++i)
        next.perm[i] = W.elems[cur].perm[g.perm[i]];
      const int idx = W.size();
      W.by_matrix[next.m.a] = idx;
      W.elems.push_back(std::move(next));
      queue.push_back(idx);
      invariant(static_cast<unsigned long long>(W.size()) <= expected,
                "enumerate_weyl: more elements than the theoretical order");
    }
  }
  invariant(static_cast<unsigned long long>(W.size()) == expected,
            "enumerate_weyl: enumeration did not reach the theoretical order");

  W.inverse.resize(W.size());
  for (int i = 0; i < W.size(); ++i) {
    // m^{-1} = co^T, so the inverse element is found without matrix inversion.
    const int j = W.index_of(W.elems[i].co.transposed());
    invariant(j >= 0, "enumerate_weyl: inverse not found");
    W.inverse[i] = j;
  }
  for (int i = 0; i < W.size(); ++i)
    invariant((W.elems[i].m.transposed() * W.elems[i].co).is_identity(),
              "enumerate_weyl: character/cocharacter actions not dual");
  return W;
}

PositiveSystem standard_positive_system(const RootDatum& rd) {
  PositiveSystem ps;
  ps.positive.assign(rd.num_roots(), 0);
  for (int i = 0; i < rd.num_roots(); ++i)
    if (rd.std_positive[i]) {
      ps.positive[i] = 1;
      ps.positives.push_back(i);
    }
  return ps;
}

PositiveSystem canonical_positive_system(const RootDatum& rd, const EpsilonPartition& ep) {
  PositiveSystem ps;
  ps.positive.assign(rd.num_roots(), 0);
  for (int i : ep.phi_U) ps.positive[i] = 1;
  for (int i : ep.phi_L) {
    const Vec& r = rd.roots[i];
    for (int x : r) {
      if (x > 0) {
        ps.positive[i] = 1;
        break;
      }
      if (x < 0) break;
    }
  }
  for (int i = 0; i < rd.num_roots(); ++i) {
    invariant(ps.positive[i] + ps.positive[rd.negation[i]] == 1,
              "canonical positive system: not a half-system");
    if (ps.positive[i]) ps.positives.push_back(i);
  }
  invariant(is_closed_subset(rd, ps.positive),
            "canonical positive system: not closed under addition");
  return ps;
}

int length(const WeylGroup& W, int w, const PositiveSystem& pos) {
  int l = 0;
  for (int i : pos.positives)
    if (!pos.positive[W.elems[w].perm[i]]) ++l;
  return l;
}

std::vector<int> cocharacter_stabilizer(const WeylGroup& W, const Vec& mu) {
  std::vector<int> out;
  for (int i = 0; i < W.size(); ++i)
    if (W.elems[i].co.apply(mu) == mu) out.push_back(i);
  return out;
}

std::vector<int> levi_generated_subgroup(const RootDatum& rd, const WeylGroup& W,
                                         const EpsilonPartition& ep) {
  std::vector<int> gens;
  for (int i : ep.phi_L) {
    const int idx = W.index_of(reflection(rd, i).m);
    invariant(idx >= 0, "levi subgroup: reflection not found in W");
    gens.push_back(idx);
  }
  std::vector<uint8_t> in(W.size(), 0);
  std::deque<int> queue{0};
  in[0] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int g : gens) {
      const int nxt = W.compose(cur, g);
      if (!in[nxt]) {
        in[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < W.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

CosetTable right_cosets(const WeylGroup& W, const std::vector<int>& subgroup,
                        const PositiveSystem& pos) {
  CosetTable ct;
  ct.coset_of.assign(W.size(), -1);
  for (int w = 0; w < W.size(); ++w) {
    if (ct.coset_of[w] >= 0) continue;
    const int id = static_cast<int>(ct.members.size());
    std::vector<int> mem;
    for (int u : subgroup) {
      const int x = W.compose(u, w);
      invariant(ct.coset_of[x] == -1 || ct.coset_of[x] == id,
                "right_cosets: overlapping cosets");
      if (ct.coset_of[x] == -1) {
        ct.coset_of[x] = id;
        mem.push_back(x);
      }
    }
    invariant(mem.size() == subgroup.size(), "right_cosets: coset size != |H|");
    std::sort(mem.begin(), mem.end());
    ct.members.push_back(std::move(mem));
  }

  ct.min_rep.resize(ct.members.size());
  for (size_t c = 0; c < ct.members.size(); ++c) {
    int best = -1, best_len = -1;
    bool tie = false;
    for (int x : ct.members[c]) {
      const int l = length(W, x, pos);
      if (best < 0 || std::tuple(l, W.elems[x].m.a) < std::tuple(best_len, W.elems[best].m.a)) {
        tie = (best >= 0 && l == best_len);
        best = x;
        best_len = l;
      }
    }
    // The minimal length must be attained exactly once in the coset.
    int count_min = 0;
    for (int x : ct.members[c])
      if (length(W, x, pos) == best_len) ++count_min;
    invariant(count_min == 1, "right_cosets: minimal-length representative not unique");
    (void)tie;
    ct.min_rep[c] = best;
  }

  // Deterministic coset ids: sort by (length, matrix) of the minimal rep.
  std::vector<int> order(ct.members.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int la = length(W, ct.min_rep[a], pos), lb = length(W, ct.min_rep[b], pos);
    return std::tuple(la, W.elems[ct.min_rep[a]].m.a) <
           std::tuple(lb, W.elems[ct.min_rep[b]].m.a);
  });
  CosetTable sorted;
  sorted.coset_of.assign(W.size(), -1);
  for (size_t new_id = 0; new_id < order.size(); ++new_id) {
    const int old_id = order[new_id];
    sorted.members.push_back(ct.members[old_id]);
    sorted.min_rep.push_back(ct.min_rep[old_id]);
    for (int x : ct.members[old_id]) sorted.coset_of[x] = static_cast<int>(new_id);
  }
  return sorted;
}

std::string reduced_word(const RootDatum& rd, const WeylGroup& W, int w) {
  const PositiveSystem std_pos = standard_positive_system(rd);
  std::ostringstream os;
  for (size_t b = 0; b < rd.blocks.size(); ++b) {
    const CopyBlock& blk = rd.blocks[b];
    // Restriction of w to this copy (identity on the other blocks).
    IntMatrix restr = IntMatrix::identity(rd.rank);
    for (int r = 0; r < blk.width; ++r)
      for (int c = 0; c < blk.width; ++c)
        restr.at(blk.offset + r, blk.offset + c) = W.elems[w].m.at(blk.offset + r, blk.offset + c);
    int cur = W.index_of(restr);
    invariant(cur >= 0, "reduced_word: element is not block-diagonal over the copies");

    std::vector<int> letters;
    const int cur_len_limit = length(W, cur, std_pos) + 1;
    while (cur != 0) {
      bool found = false;
      for (size_t k = 0; k < blk.simples.size(); ++k) {
        const int s_root = blk.simples[k];
        if (!std_pos.positive[W.elems[cur].perm[s_root]]) {
          const int s_idx = W.index_of(reflection(rd, s_root).m);
          cur = W.compose(cur, s_idx);
          letters.push_back(static_cast<int>(k) + 1);
          found = true;
          break;
        }
      }
      invariant(found, "reduced_word: no descent found");
      invariant(static_cast<int>(letters.size()) <= cur_len_limit,
                "reduced_word: word longer than the length bound");
    }
    std::reverse(letters.begin(), letters.end());
    if (b) os << '|';
    if (letters.empty()) {
      os << 'e';
    } else {
      for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << 's' << letters[i];
      }
    }
  }
  return os.str();
}

}  // namespace fcrystal
