#include "fcrystal/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "fcrystal/errors.hpp"

namespace fcrystal {

Analysis prepare(Quintuple q, const Limits& lim) {
  Analysis A;
  A.ep = epsilon_partition(q.rd, q.mu);
  A.W = enumerate_weyl(q.rd, lim.max_weyl_order);
  A.canon = canonical_positive_system(q.rd, A.ep);
  A.W_P = cocharacter_stabilizer(A.W, q.mu);
  const std::vector<int> generated = levi_generated_subgroup(q.rd, A.W, A.ep);
  invariant(A.W_P == generated,
            "prepare: Stab_W(mu) differs from the group generated by the Levi reflections");
  A.in_W_P.assign(A.W.size(), 0);
  for (int u : A.W_P) A.in_W_P[u] = 1;
  A.cosets = right_cosets(A.W, A.W_P, A.canon);
  A.q = std::move(q);
  return A;
}

OrbitDecomposition pi_orbits(const Analysis& A, int w) {
  const std::vector<int> pi = pi_perm(A.W, A.q.sigma, w);
  const int n = A.q.rd.num_roots();
  OrbitDecomposition dec;
  std::vector<uint8_t> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    PiOrbit o;
    int cur = start;
    do {
      seen[cur] = 1;
      o.roots.push_back(cur);
      const int8_t e = A.ep.eps[cur];
      if (e > 0) ++o.m_plus;
      if (e < 0) ++o.m_minus;
      cur = pi[cur];
    } while (cur != start);

    const int len = static_cast<int>(o.roots.size());
    o.slope = Rat(o.m_plus - o.m_minus, len);

    // Canonical rotation: lexicographically minimal epsilon string; ties are
    // broken by the smallest starting root index among the minimizers.
    std::vector<int8_t> eps(len);
    for (int i = 0; i < len; ++i) eps[i] = A.ep.eps[o.roots[i]];
    int best = 0;
    std::vector<int8_t> best_str = eps;
    for (int r = 1; r < len; ++r) {
      std::vector<int8_t> rot(len);
      for (int i = 0; i < len; ++i) rot[i] = eps[(r + i) % len];
      if (rot < best_str ||
          (rot == best_str && o.roots[r] < o.roots[best])) {
        best_str = rot;
        best = r;
      }
    }
    std::vector<int> rotated(len);
    for (int i = 0; i < len; ++i) rotated[i] = o.roots[(best + i) % len];
    o.roots = std::move(rotated);
    o.eps_string = std::move(best_str);
    dec.orbits.push_back(std::move(o));
  }
  return dec;
}

namespace {

// First exit of alpha from Phi_L under pi; returns (steps, landed_in_U).
std::pair<int, bool> first_exit(const Analysis& A, const std::vector<int>& pi, int root_idx) {
  invariant(A.ep.eps[root_idx] < 0, "first_exit: root not in Phi_N");
  int cur = root_idx;
  const int cap = A.q.rd.num_roots() + 1;
  for (int l = 1; l <= cap; ++l) {
    cur = pi[cur];
    const int8_t e = A.ep.eps[cur];
    if (e != 0) return {l, e > 0};
  }
  throw InvariantError("first_exit: itinerary never left Phi_L");
}

}  // namespace

int w_alpha(const Analysis& A, int w, int root_idx) {
  const std::vector<int> pi = pi_perm(A.W, A.q.sigma, w);
  return first_exit(A, pi, root_idx).first;
}

std::vector<int> s_set(const Analysis& A, int w) {
  const std::vector<int> pi = pi_perm(A.W, A.q.sigma, w);
  std::vector<int> out;
  for (int alpha : A.ep.phi_N)
    if (first_exit(A, pi, alpha).second) out.push_back(alpha);
  return out;
}

int s_value(const Analysis& A, int w) { return static_cast<int>(s_set(A, w).size()); }

std::vector<int> fixer_subgroup(const Analysis& A, int w) {
  const IntMatrix tau_m = A.W.elems[w].m * A.q.sigma.m;
  const IntMatrix tau_co = A.W.elems[w].co * A.q.sigma.co;
  const IntMatrix tau_m_inv = tau_co.transposed();

  // Order of tau as a lattice automorphism.
  int order = 1;
  {
    IntMatrix pow = tau_m;
    while (!pow.is_identity()) {
      pow = pow * tau_m;
      ++order;
      invariant(order <= 1 << 20, "fixer_subgroup: tau order unreasonably large");
    }
  }

  std::vector<Vec> orbit_vectors;
  {
    Vec v = A.q.mu;
    for (int i = 0; i < order; ++i) {
      orbit_vectors.push_back(v);
      v = tau_co.apply(v);
    }
    invariant(v == A.q.mu, "fixer_subgroup: mu orbit did not close");
  }

  std::vector<int> pointwise;
  for (int u : A.W_P) {
    bool ok = true;
    for (const Vec& v : orbit_vectors)
      if (A.W.elems[u].co.apply(v) != v) {
        ok = false;
        break;
      }
    if (ok) pointwise.push_back(u);
  }

  // Independent characterization: intersection of the tau-conjugates of W_P.
  std::vector<int> intersected;
  for (int u = 0; u < A.W.size(); ++u) {
    bool ok = true;
    IntMatrix left = IntMatrix::identity(A.q.rd.rank);   // tau^{-i}
    IntMatrix right = IntMatrix::identity(A.q.rd.rank);  // tau^{i}
    for (int i = 0; i < order && ok; ++i) {
      const IntMatrix conj = left * A.W.elems[u].m * right;
      const int idx = A.W.index_of(conj);
      invariant(idx >= 0, "fixer_subgroup: tau does not normalize W");
      ok = A.in_W_P[idx];
      left = tau_m_inv * left;
      right = right * tau_m;
    }
    if (ok) intersected.push_back(u);
  }
  invariant(pointwise == intersected,
            "fixer_subgroup: the two characterizations disagree");
  return pointwise;
}

std::vector<int> weyl_class(const Analysis& A, int w) {
  const std::vector<int> fix = fixer_subgroup(A, w);
  std::set<int> members;
  for (int w3 : A.W_P) {
    const int w3_inv = A.W.inverse[w3];
    const int tw3_inv = sigma_conjugate(A.W, A.q.sigma, w3_inv);
    for (int w4 : fix) {
      const IntMatrix prod = A.W.elems[w3].m * A.W.elems[w4].m * A.W.elems[w].m *
                             A.W.elems[tw3_inv].m;
      const int idx = A.W.index_of(prod);
      invariant(idx >= 0, "weyl_class: product escaped W");
      members.insert(idx);
    }
  }
  invariant(members.count(w) == 1, "weyl_class: class does not contain w");
  invariant(members.size() == A.W_P.size(), "weyl_class: class size != |W_P|");
  return std::vector<int>(members.begin(), members.end());
}

std::vector<SlopeEntry> adjoint_slopes(const Analysis& A, int w) {
  std::map<Rat, int> mult;
  const OrbitDecomposition dec = pi_orbits(A, w);
  long long balance = 0;
  for (const PiOrbit& o : dec.orbits) {
    mult[o.slope] += static_cast<int>(o.roots.size());
    balance += o.m_plus - o.m_minus;
  }
  invariant(balance == 0, "adjoint_slopes: slope sum over the roots is nonzero");
  mult[Rat(0)] += A.q.rd.semisimple_rank;
  std::vector<SlopeEntry> out;
  for (const auto& [slope, m] : mult)
    if (m != 0) out.push_back({slope, m});
  return out;
}

ZeroSpaceDims zero_space_dims(const Analysis& A, int w) {
  const std::vector<int> pi = pi_perm(A.W, A.q.sigma, w);
  const OrbitDecomposition dec = pi_orbits(A, w);

  ZeroSpaceDims z;
  std::vector<uint8_t> span_set(A.q.rd.num_roots(), 0);

  int levi_recurrent = 0;
  for (const PiOrbit& o : dec.orbits) {
    bool all_levi = true;
    for (int r : o.roots)
      if (A.ep.eps[r] != 0) {
        all_levi = false;
        break;
      }
    if (all_levi) {
      levi_recurrent += static_cast<int>(o.roots.size());
      for (int r : o.roots) span_set[r] = 1;
    }
  }

  int exit_steps_total = 0;
  for (int alpha : A.ep.phi_N) {
    const auto [steps, to_U] = first_exit(A, pi, alpha);
    if (!to_U) continue;
    ++z.dim_y;
    if (steps == 1) ++z.dim_y0;
    exit_steps_total += steps;
    int cur = alpha;
    for (int l = 1; l <= steps; ++l) {
      cur = pi[cur];
      span_set[cur] = 1;
    }
  }

  z.dim_x_fp = A.q.rd.rank + levi_recurrent;
  z.dim_w_span = A.q.rd.rank + levi_recurrent + exit_steps_total;
  invariant(is_closed_subset(A.q.rd, span_set),
            "zero_space_dims: the recurrent/first-exit root set is not closed");
  return z;
}

std::vector<ClassRecord> enumerate_classes(const Analysis& A) {
  std::vector<uint8_t> assigned(A.W.size(), 0);
  std::vector<ClassRecord> records;

  for (int w = 0; w < A.W.size(); ++w) {
    if (assigned[w]) continue;
    ClassRecord rec;
    rec.members = weyl_class(A, w);
    for (int x : rec.members) {
      invariant(!assigned[x], "enumerate_classes: classes overlap");
      assigned[x] = 1;
    }

    rec.s_val = s_value(A, rec.members.front());
    rec.ad_slopes = adjoint_slopes(A, rec.members.front());
    for (int x : rec.members) {
      invariant(s_value(A, x) == rec.s_val,
                "enumerate_classes: S is not constant on a class");
      invariant(adjoint_slopes(A, x) == rec.ad_slopes,
                "enumerate_classes: slope multiset is not constant on a class");
    }

    rec.rep = rec.members.front();
    for (int x : rec.members) {
      const auto key = std::tuple(length(A.W, x, A.canon), A.W.elems[x].m.a);
      const auto best = std::tuple(length(A.W, rec.rep, A.canon), A.W.elems[rec.rep].m.a);
      if (key < best) rec.rep = x;
    }

    rec.dim_orbit = A.ep.dim_G - rec.s_val;
    rec.dim_stratum = A.ep.dim_N - rec.s_val;
    rec.pivotal = (rec.s_val == A.ep.dim_N);
    rec.open_stratum = (rec.s_val == 0);
    rec.z = zero_space_dims(A, rec.rep);
    records.push_back(std::move(rec));
  }

  invariant(static_cast<int>(records.size()) == A.parabolic_index(),
            "enumerate_classes: class count != [W : W_P]");

  std::sort(records.begin(), records.end(), [&](const ClassRecord& a, const ClassRecord& b) {
    return std::tuple(a.s_val, length(A.W, a.rep, A.canon), A.W.elems[a.rep].m.a) <
           std::tuple(b.s_val, length(A.W, b.rep, A.canon), A.W.elems[b.rep].m.a);
  });
  return records;
}

}  // namespace fcrystal
