#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fcrystal/classify.hpp"
#include "fcrystal/errors.hpp"

#include "helpers.hpp"

using namespace fcrystal;
using fcrystal::testing::analysis_from_json;
using fcrystal::testing::negative_cycle;
using fcrystal::testing::positive_cycle;
using fcrystal::testing::s_value_by_matrices;
using fcrystal::testing::simple_config;

TEST_CASE("pi orbits of the GL_2 shadow") {
  const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
  SUBCASE("identity: two fixed roots with slopes +1 and -1") {
    const OrbitDecomposition od = pi_orbits(A, 0);
    REQUIRE(od.orbits.size() == 2);
    std::multiset<Rat> slopes;
    for (const PiOrbit& o : od.orbits) {
      CHECK(o.roots.size() == 1);
      slopes.insert(o.slope);
    }
    CHECK(slopes == std::multiset<Rat>{Rat(-1), Rat(1)});
  }
  SUBCASE("transposition: one balanced 2-cycle of slope zero") {
    const OrbitDecomposition od = pi_orbits(A, 1);
    REQUIRE(od.orbits.size() == 1);
    CHECK(od.orbits[0].roots.size() == 2);
    CHECK(od.orbits[0].m_plus == 1);
    CHECK(od.orbits[0].m_minus == 1);
    CHECK(od.orbits[0].slope == Rat(0));
  }
}

TEST_CASE("orbit cycles partition the roots and epsilon strings match") {
  for (const std::string& cfg :
       {simple_config("B", 3, "w1"), simple_config("D", 4, "w4", 1, "diagram"),
        simple_config("A", 2, "w1", 2)}) {
    const Analysis A = analysis_from_json(cfg);
    for (int w = 0; w < A.W.size(); w += 3) {
      const OrbitDecomposition od = pi_orbits(A, w);
      std::vector<int> seen(A.q.rd.num_roots(), 0);
      for (const PiOrbit& o : od.orbits) {
        REQUIRE(o.eps_string.size() == o.roots.size());
        std::multiset<int> from_roots, from_string;
        for (size_t i = 0; i < o.roots.size(); ++i) {
          ++seen[o.roots[i]];
          from_roots.insert(A.ep.eps[o.roots[i]]);
          from_string.insert(o.eps_string[i]);
        }
        CHECK(from_roots == from_string);
        // Canonical rotation: no strictly smaller rotation exists.
        std::vector<int8_t> doubled(o.eps_string);
        doubled.insert(doubled.end(), o.eps_string.begin(), o.eps_string.end());
        for (size_t r = 1; r < o.eps_string.size(); ++r) {
          const std::vector<int8_t> rot(doubled.begin() + r,
                                        doubled.begin() + r + o.eps_string.size());
          CHECK(!(rot < o.eps_string));
        }
        const int balance = o.m_plus - o.m_minus;
        CHECK(o.slope == Rat(balance, static_cast<long long>(o.roots.size())));
      }
      for (int c : seen) CHECK(c == 1);
    }
  }
}

TEST_CASE("slope sum vanishes for every element in every family") {
  for (const std::string& cfg :
       {simple_config("B", 4, "w1"), simple_config("C", 3, "w3"),
        simple_config("GL", 4, "w2"), simple_config("A", 2, "w1", 2)}) {
    const Analysis A = analysis_from_json(cfg);
    for (int w = 0; w < A.W.size(); ++w) {
      long long balance = 0;
      for (const PiOrbit& o : pi_orbits(A, w).orbits) balance += o.m_plus - o.m_minus;
      CHECK(balance == 0);
    }
  }
}

TEST_CASE("degenerate cocharacter: all orbits Levi, all slopes zero, one class") {
  const Analysis A = analysis_from_json(simple_config("B", 2, "trivial"));
  for (int w = 0; w < A.W.size(); ++w) {
    for (const PiOrbit& o : pi_orbits(A, w).orbits) {
      CHECK(o.slope == Rat(0));
      for (int r : o.roots) CHECK(A.ep.eps[r] == 0);
    }
    CHECK(s_value(A, w) == 0);
    CHECK(zero_space_dims(A, w).dim_w_span == A.ep.dim_G);
  }
  const auto classes = enumerate_classes(A);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == static_cast<size_t>(A.W.size()));
  CHECK(classes[0].s_val == 0);
  CHECK(classes[0].pivotal);
  CHECK(classes[0].open_stratum);
}

TEST_CASE("first-exit steps") {
  const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
  const int neg_root = A.ep.phi_N[0];
  SUBCASE("transposition sends the negative root straight to Phi_U") {
    CHECK(w_alpha(A, 1, neg_root) == 1);
  }
  SUBCASE("identity keeps it in Phi_N, still exiting at the first step") {
    CHECK(w_alpha(A, 0, neg_root) == 1);
  }
  SUBCASE("rejects roots outside Phi_N") {
    CHECK_THROWS_AS(w_alpha(A, 0, A.ep.phi_U[0]), InvariantError);
  }
}

TEST_CASE("s_value matches an independent matrix-walk recomputation") {
  for (const std::string& cfg :
       {simple_config("B", 2, "w1"), simple_config("B", 3, "w1"),
        simple_config("C", 2, "w2"), simple_config("GL", 3, "w1"),
        simple_config("A", 2, "w1", 2), simple_config("D", 4, "w4", 1, "diagram")}) {
    const Analysis A = analysis_from_json(cfg);
    for (int w = 0; w < A.W.size(); ++w)
      CHECK(s_value(A, w) == s_value_by_matrices(A, w));
  }
}

TEST_CASE("s_value pins for the B_4 cycle family") {
  const Analysis A = analysis_from_json(simple_config("B", 4, "w1"));
  const int n = 4;
  // Positive j-cycles realize 0..n-1; negative k-cycles realize 2n-1 down to n.
  for (int j = 1; j <= n; ++j) CHECK(s_value(A, positive_cycle(A, j)) == j - 1);
  for (int k = 1; k <= n; ++k) CHECK(s_value(A, negative_cycle(A, k)) == 2 * n - k);
  CHECK(s_value(A, positive_cycle(A, 2)) == 1);
  CHECK(s_value(A, negative_cycle(A, 2)) == 6);  // = n + 3 - 1 under k = n+1-j
}

TEST_CASE("s_value pins for the B_3 cycle family") {
  const Analysis A = analysis_from_json(simple_config("B", 3, "w1"));
  const int n = 3;
  for (int j = 1; j <= n; ++j) CHECK(s_value(A, positive_cycle(A, j)) == j - 1);
  for (int k = 1; k <= n; ++k) CHECK(s_value(A, negative_cycle(A, k)) == 2 * n - k);
}

TEST_CASE("first-exit set of the positive 3-cycle in B_4 has two members") {
  const Analysis A = analysis_from_json(simple_config("B", 4, "w1"));
  const std::vector<int> s = s_set(A, positive_cycle(A, 3));
  CHECK(s.size() == 2);
  for (int r : s) {
    CHECK(A.ep.eps[r] == -1);  // members live in Phi_N
    CHECK(A.q.rd.roots[r][0] == 1);  // and involve the first coordinate
  }
}

TEST_CASE("fixer subgroup pins") {
  SUBCASE("degenerate cocharacter: the whole group") {
    const Analysis A = analysis_from_json(simple_config("A", 2, "trivial"));
    for (int w = 0; w < A.W.size(); w += 2)
      CHECK(fixer_subgroup(A, w).size() == static_cast<size_t>(A.W.size()));
  }
  SUBCASE("GL_2 shadow: trivial for every element") {
    const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
    for (int w = 0; w < A.W.size(); ++w)
      CHECK(fixer_subgroup(A, w) == std::vector<int>{0});
  }
  SUBCASE("split identity element: the full parabolic") {
    const Analysis A = analysis_from_json(simple_config("B", 3, "w1"));
    CHECK(fixer_subgroup(A, 0) == A.W_P);
  }
}

TEST_CASE("classes are genuine equivalence classes of the expected size") {
  const Analysis A = analysis_from_json(simple_config("B", 3, "w1"));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, A.W.size() - 1);
  for (int trial = 0; trial < 120; ++trial) {
    const int w = pick(rng);
    const std::vector<int> cls = weyl_class(A, w);
    CHECK(cls.size() == A.W_P.size());
    CHECK(std::binary_search(cls.begin(), cls.end(), w));
    const int u = cls[static_cast<size_t>(pick(rng)) % cls.size()];
    CHECK(weyl_class(A, u) == cls);  // symmetry and transitivity in one blow
  }
}

TEST_CASE("GL_2 shadow classes are singletons") {
  const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
  CHECK(weyl_class(A, 0) == std::vector<int>{0});
  CHECK(weyl_class(A, 1) == std::vector<int>{1});
}

TEST_CASE("B_2 classification table") {
  const Analysis A = analysis_from_json(simple_config("B", 2, "w1"));
  const auto classes = enumerate_classes(A);
  REQUIRE(classes.size() == 4);
  std::multiset<int> s_values;
  for (const ClassRecord& c : classes) {
    CHECK(c.members.size() == 2);
    s_values.insert(c.s_val);
    CHECK(c.dim_orbit == A.ep.dim_G - c.s_val);
    CHECK(c.dim_stratum == A.ep.dim_N - c.s_val);
  }
  CHECK(s_values == std::multiset<int>{0, 1, 2, 3});
}

TEST_CASE("B_4 classification table") {
  const Analysis A = analysis_from_json(simple_config("B", 4, "w1"));
  const auto classes = enumerate_classes(A);
  REQUIRE(classes.size() == 8);
  for (size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].s_val == static_cast<int>(i));  // sorted by S; all distinct
    CHECK(classes[i].members.size() == 48);
    CHECK(classes[i].dim_orbit == 36 - classes[i].s_val);
  }
}

TEST_CASE("GL_r shadow class counts and S multisets") {
  const Analysis g3 = analysis_from_json(simple_config("GL", 3, "w1"));
  const auto c3 = enumerate_classes(g3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].s_val == 0);
  CHECK(c3[1].s_val == 1);
  CHECK(c3[2].s_val == 2);
  const Analysis g4 = analysis_from_json(simple_config("GL", 4, "w2"));
  const auto c4 = enumerate_classes(g4);
  REQUIRE(c4.size() == 6);
  std::multiset<int> s;
  for (const ClassRecord& c : c4) s.insert(c.s_val);
  CHECK(s == std::multiset<int>{0, 1, 2, 2, 3, 4});
}

TEST_CASE("S range: bounded by dim N with equality on exactly one class") {
  for (const std::string& cfg : fcrystal::testing::standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    const auto classes = enumerate_classes(A);
    int at_max = 0, at_zero = 0;
    for (const ClassRecord& c : classes) {
      CHECK(c.s_val >= 0);
      CHECK(c.s_val <= A.ep.dim_N);
      if (c.s_val == A.ep.dim_N) ++at_max;
      if (c.s_val == 0) ++at_zero;
      CHECK(c.pivotal == (c.s_val == A.ep.dim_N));
      CHECK(c.open_stratum == (c.s_val == 0));
    }
    CHECK(at_max == 1);
    CHECK(at_zero == 1);
  }
}

TEST_CASE("pivotal class has orbit dimension dim P and all slopes zero") {
  for (const std::string& cfg :
       {simple_config("B", 4, "w1"), simple_config("C", 3, "w3"),
        simple_config("D", 4, "w1"), simple_config("GL", 4, "w2")}) {
    const Analysis A = analysis_from_json(cfg);
    for (const ClassRecord& c : enumerate_classes(A))
      if (c.pivotal) {
        CHECK(c.dim_orbit == A.ep.dim_P);
        for (const SlopeEntry& e : c.ad_slopes) CHECK(e.slope == Rat(0));
      }
  }
}

TEST_CASE("adjoint slope multisets: size, symmetry, and GL_2 pins") {
  const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
  const auto id_slopes = adjoint_slopes(A, 0);
  REQUIRE(id_slopes.size() == 3);
  CHECK(id_slopes[0].slope == Rat(-1));
  CHECK(id_slopes[1].slope == Rat(0));
  CHECK(id_slopes[1].mult == 1);  // semisimple rank of GL_2
  CHECK(id_slopes[2].slope == Rat(1));
  const auto tw_slopes = adjoint_slopes(A, 1);
  REQUIRE(tw_slopes.size() == 1);
  CHECK(tw_slopes[0].slope == Rat(0));
  CHECK(tw_slopes[0].mult == 3);

  for (const std::string& cfg :
       {simple_config("B", 3, "w1"), simple_config("C", 2, "w2")}) {
    const Analysis B = analysis_from_json(cfg);
    const int ad_dim = B.q.rd.num_roots() + B.q.rd.semisimple_rank;
    for (int w = 0; w < B.W.size(); ++w) {
      const auto slopes = adjoint_slopes(B, w);
      int total = 0;
      std::multiset<Rat> bag, neg_bag;
      for (const SlopeEntry& e : slopes) {
        total += e.mult;
        for (int i = 0; i < e.mult; ++i) {
          bag.insert(e.slope);
          neg_bag.insert(-e.slope);
        }
      }
      CHECK(total == ad_dim);
      CHECK(bag == neg_bag);  // Newton symmetry of the adjoint multiset
    }
  }
}

TEST_CASE("S and slopes are constant on every class") {
  for (const std::string& cfg :
       {simple_config("B", 3, "w1"), simple_config("A", 2, "w1", 2),
        simple_config("D", 4, "w4", 1, "diagram")}) {
    const Analysis A = analysis_from_json(cfg);
    for (const ClassRecord& c : enumerate_classes(A))
      for (int w : c.members) {
        CHECK(s_value(A, w) == c.s_val);
        CHECK(adjoint_slopes(A, w) == c.ad_slopes);
      }
  }
}

TEST_CASE("zero-space dimensions: GL_2 pins") {
  const Analysis A = analysis_from_json(simple_config("GL", 2, "w1"));
  const ZeroSpaceDims id = zero_space_dims(A, 0);
  CHECK(id.dim_x_fp == 2);
  CHECK(id.dim_y == 0);
  CHECK(id.dim_y0 == 0);
  CHECK(id.dim_w_span == 2);
  const ZeroSpaceDims tw = zero_space_dims(A, 1);
  CHECK(tw.dim_x_fp == 2);
  CHECK(tw.dim_y == 1);
  CHECK(tw.dim_y0 == 1);
  CHECK(tw.dim_w_span == 3);
  CHECK(tw.dim_w_span == A.ep.dim_P);
}

TEST_CASE("zero-space dimensions: formulas recomputed from the orbit data") {
  for (const std::string& cfg :
       {simple_config("B", 3, "w1"), simple_config("C", 3, "w3"),
        simple_config("A", 2, "w1", 2)}) {
    const Analysis A = analysis_from_json(cfg);
    for (int w = 0; w < A.W.size(); ++w) {
      const ZeroSpaceDims z = zero_space_dims(A, w);
      CHECK(z.dim_y == s_value(A, w));
      CHECK(z.dim_y0 <= z.dim_y);
      CHECK(z.dim_y <= A.ep.dim_N);

      int levi_recurrent = 0;
      for (const PiOrbit& o : pi_orbits(A, w).orbits) {
        bool all_levi = true;
        for (int r : o.roots) all_levi = all_levi && A.ep.eps[r] == 0;
        if (all_levi) levi_recurrent += static_cast<int>(o.roots.size());
      }
      CHECK(z.dim_x_fp == A.q.rd.rank + levi_recurrent);

      int exit_steps = 0, depth_one = 0;
      for (int r : s_set(A, w)) {
        exit_steps += w_alpha(A, w, r);
        if (w_alpha(A, w, r) == 1) ++depth_one;
      }
      CHECK(z.dim_w_span == A.q.rd.rank + levi_recurrent + exit_steps);
      CHECK(z.dim_y0 == depth_one);
    }
  }
}

TEST_CASE("class representatives are minimal and tables deterministic") {
  const Analysis A = analysis_from_json(simple_config("B", 3, "w1"));
  const PositiveSystem& pos = A.canon;
  const auto classes = enumerate_classes(A);
  const auto again = enumerate_classes(A);
  REQUIRE(classes.size() == again.size());
  for (size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].rep == again[i].rep);
    CHECK(classes[i].members == again[i].members);
    const int rep_len = length(A.W, classes[i].rep, pos);
    for (int w : classes[i].members) {
      const int l = length(A.W, w, pos);
      CHECK(l >= rep_len);
      if (l == rep_len) CHECK(!(A.W[w].m < A.W[classes[i].rep].m));
    }
  }
}
