#pragma once

// Shared construction helpers for the test suite.

#include <string>
#include <vector>

#include "fcrystal/analysis.hpp"
#include "fcrystal/classify.hpp"
#include "fcrystal/config.hpp"
#include "fcrystal/errors.hpp"

namespace fcrystal::testing {

inline Analysis analysis_from_json(const std::string& text) {
  LoadedConfig cfg = load_config_text(text);
  return prepare(cfg.q, cfg.limits);
}

inline std::string simple_config(const std::string& type, int rank,
                                 const std::string& mu_node, int copies = 1,
                                 const std::string& twist = "none",
                                 const std::string& mu_rest = "trivial") {
  std::string mu = "[\"" + mu_node + "\"";
  for (int c = 1; c < copies; ++c) mu += ",\"" + mu_rest + "\"";
  mu += "]";
  return std::string("{\"p\":2,\"factors\":[{\"lie_type\":\"") + type +
         "\",\"rank\":" + std::to_string(rank) +
         ",\"copies\":" + std::to_string(copies) + ",\"twist\":\"" + twist +
         "\"}],\"mu\":[" + mu + "]}";
}

// The eleven configurations exercised by the acceptance criteria.
inline std::vector<std::string> standard_suite() {
  return {
      simple_config("B", 2, "w1"),
      simple_config("B", 3, "w1"),
      simple_config("B", 4, "w1"),
      simple_config("C", 2, "w2"),
      simple_config("C", 3, "w3"),
      simple_config("D", 4, "w1"),
      simple_config("D", 4, "w4", 1, "diagram"),
      simple_config("A", 2, "w1", 2),
      simple_config("GL", 2, "w1"),
      simple_config("GL", 3, "w1"),
      simple_config("GL", 4, "w2"),
  };
}

// Lattice automorphism of Z^n for a signed permutation given by 1-based
// signed images: image[s] = +t means e_{s+1} -> e_t, -t means e_{s+1} -> -e_t.
inline IntMatrix signed_perm_matrix(int n, const std::vector<int>& image) {
  invariant(static_cast<int>(image.size()) == n, "signed_perm_matrix: size");
  IntMatrix m(n);
  for (int s = 0; s < n; ++s) {
    const int t = image[s];
    invariant(t != 0 && t >= -n && t <= n, "signed_perm_matrix: range");
    m.at(std::abs(t) - 1, s) = t > 0 ? 1 : -1;
  }
  return m;
}

// Index in W of the positive j-cycle e_1 -> e_2 -> ... -> e_j -> e_1 of B_n.
inline int positive_cycle(const Analysis& A, int j) {
  const int n = A.q.rd.rank;
  std::vector<int> image(n);
  for (int s = 0; s < n; ++s) image[s] = s + 1 + 1;
  image[j - 1] = 1;
  for (int s = j; s < n; ++s) image[s] = s + 1;
  const int idx = A.W.index_of(signed_perm_matrix(n, image));
  invariant(idx >= 0, "positive_cycle: not a Weyl element");
  return idx;
}

// Index in W of the negative k-cycle e_1 -> e_2 -> ... -> e_k -> -e_1 of B_n.
inline int negative_cycle(const Analysis& A, int k) {
  const int n = A.q.rd.rank;
  std::vector<int> image(n);
  for (int s = 0; s < n; ++s) image[s] = s + 1 + 1;
  image[k - 1] = -1;
  for (int s = k; s < n; ++s) image[s] = s + 1;
  const int idx = A.W.index_of(signed_perm_matrix(n, image));
  invariant(idx >= 0, "negative_cycle: not a Weyl element");
  return idx;
}

// Test-local recomputation of S(w) from nothing but the matrices: walk
// beta -> w(sigma(beta)) on root vectors until the pairing with mu is
// nonzero, and count the walks from the -1 side that surface on the +1 side.
inline int s_value_by_matrices(const Analysis& A, int w) {
  const RootDatum& rd = A.q.rd;
  int count = 0;
  for (int i = 0; i < rd.num_roots(); ++i) {
    if (rd.pairing(i, A.q.mu) != 1) continue;  // only Phi_N starts
    Vec beta = rd.roots[i];
    for (int step = 0; step <= rd.num_roots(); ++step) {
      beta = A.W[w].m.apply(A.q.sigma.m.apply(beta));
      const int pair = dot(beta, A.q.mu);
      if (pair != 0) {
        if (pair == -1) ++count;  // surfaced in Phi_U
        break;
      }
      invariant(step < rd.num_roots(), "s_value_by_matrices: no exit");
    }
  }
  return count;
}

}  // namespace fcrystal::testing
