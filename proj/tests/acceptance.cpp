// Acceptance battery for the classification library: nine independent
// criteria, one pass/fail line each.  Exit code is the number of failures.
//
// Usage: fcrystal_acceptance [--full]
//   --full  additionally runs the large GL_3(F_4) census inside criterion 7.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fcrystal/bruhat.hpp"
#include "fcrystal/classify.hpp"
#include "fcrystal/oracle.hpp"

#include "helpers.hpp"

using namespace fcrystal;
using fcrystal::testing::analysis_from_json;
using fcrystal::testing::negative_cycle;
using fcrystal::testing::positive_cycle;
using fcrystal::testing::simple_config;
using fcrystal::testing::standard_suite;

namespace {

// A criterion body returns an empty string on success, or a description of
// the first failure.
using Body = std::function<std::string()>;

struct Harness {
  int failures = 0;

  void run(int number, const std::string& label, double budget_seconds,
           const Body& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = body();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (err.empty() && budget_seconds > 0 && secs > budget_seconds) {
      std::ostringstream os;
      os << "exceeded the time budget of " << budget_seconds << " s";
      err = os.str();
    }
    std::cout << (err.empty() ? "PASS" : "FAIL") << " criterion " << number << ": "
              << label << " [" << std::fixed << std::setprecision(2) << secs << " s]";
    if (!err.empty()) {
      std::cout << " -- " << err;
      ++failures;
    }
    std::cout << '\n' << std::defaultfloat;
  }
};

std::string fail(const std::string& msg) { return msg; }

template <typename T>
std::string mismatch(const std::string& what, const T& got, const T& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---------------------------------------------------------------------------
// Criterion 1: the odd orthogonal golden tables for n = 2, 3, 4.
std::string criterion_golden_tables() {
  for (int n : {2, 3, 4}) {
    const Analysis A = analysis_from_json(simple_config("B", n, "w1"));
    const auto classes = enumerate_classes(A);
    std::ostringstream tag;
    tag << "B" << n << ": ";
    if (static_cast<int>(classes.size()) != 2 * n)
      return fail(tag.str() + mismatch("class count", static_cast<int>(classes.size()),
                                       2 * n));
    const unsigned long long size = (1ULL << (n - 1)) * factorial(n - 1);
    for (int i = 0; i < 2 * n; ++i) {
      if (classes[i].s_val != i)
        return fail(tag.str() + mismatch("S multiset entry", classes[i].s_val, i));
      if (classes[i].members.size() != size)
        return fail(tag.str() +
                    mismatch("class size",
                             static_cast<unsigned long long>(classes[i].members.size()),
                             size));
      if (classes[i].dim_orbit != 2 * n * n + n - classes[i].s_val)
        return fail(tag.str() + mismatch("orbit dimension", classes[i].dim_orbit,
                                         2 * n * n + n - classes[i].s_val));
    }
    if (d_u_value(A) != (n - 1) * (n - 1))
      return fail(tag.str() + mismatch("d_u", d_u_value(A), (n - 1) * (n - 1)));
    for (int j = 1; j <= n; ++j) {
      const int s_pos = s_value(A, positive_cycle(A, j));
      if (s_pos != j - 1)
        return fail(tag.str() + mismatch("S of the positive family member", s_pos, j - 1));
      const int s_neg = s_value(A, negative_cycle(A, n + 1 - j));
      if (s_neg != n + j - 1)
        return fail(tag.str() + mismatch("S of the negative family member", s_neg,
                                         n + j - 1));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 2: class counts of the general linear shadows.
std::string criterion_shadow_counts() {
  const std::vector<std::tuple<int, int, int>> cases{{2, 1, 2}, {3, 1, 3}, {4, 2, 6}};
  for (const auto& [r, d, want] : cases) {
    const Analysis A =
        analysis_from_json(simple_config("GL", r, "w" + std::to_string(d)));
    const auto classes = enumerate_classes(A);
    std::ostringstream tag;
    tag << "GL" << r << " d=" << d << ": ";
    if (static_cast<int>(classes.size()) != want)
      return fail(tag.str() +
                  mismatch("class count", static_cast<int>(classes.size()), want));
    if (static_cast<unsigned long long>(want) != binomial(r, d))
      return fail(tag.str() + "expected count is not binomial(r, d)");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 3: {S} = {s_cl - d_u} as multisets on the whole standard suite.
std::string criterion_multiset_identity() {
  for (const std::string& cfg : standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    if (!multisets_match(A, enumerate_classes(A), coset_invariants(A)))
      return fail("multiset mismatch for configuration " + cfg);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 4: classes have |W_P| elements each and partition W.
std::string criterion_partition() {
  for (const std::string& cfg : standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    const auto classes = enumerate_classes(A);
    std::vector<char> seen(A.W.size(), 0);
    for (const ClassRecord& c : classes) {
      if (c.members.size() != A.W_P.size())
        return fail(mismatch("class size for " + cfg,
                             static_cast<int>(c.members.size()),
                             static_cast<int>(A.W_P.size())));
      for (int w : c.members) {
        if (seen[w]) return fail("element covered twice in " + cfg);
        seen[w] = 1;
      }
    }
    for (size_t w = 0; w < seen.size(); ++w)
      if (!seen[w]) return fail("element not covered in " + cfg);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 5: a unique pivotal class, a unique open class, and vanishing
// pivotal slopes.
std::string criterion_pivotal_open() {
  for (const std::string& cfg : standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    const auto classes = enumerate_classes(A);
    int pivotal = 0, open = 0;
    for (const ClassRecord& c : classes) {
      if (c.s_val == A.ep.dim_N) {
        ++pivotal;
        if (!c.pivotal) return fail("pivotal flag missing in " + cfg);
        for (const SlopeEntry& e : c.ad_slopes)
          if (e.slope != Rat(0))
            return fail("pivotal class has a nonzero adjoint slope in " + cfg);
      }
      if (c.s_val == 0) {
        ++open;
        if (!c.open_stratum) return fail("open flag missing in " + cfg);
      }
    }
    if (pivotal != 1) return fail(mismatch("pivotal classes in " + cfg, pivotal, 1));
    if (open != 1) return fail(mismatch("open classes in " + cfg, open, 1));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 6: zero-space dimension formulas for every Weyl element.
std::string criterion_zero_spaces() {
  for (const std::string& cfg : standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    const RootDatum& rd = A.q.rd;
    for (int w = 0; w < static_cast<int>(A.W.size()); ++w) {
      const OrbitDecomposition dec = pi_orbits(A, w);
      std::vector<uint8_t> recurrent(rd.num_roots(), 0);
      int recurrent_count = 0;
      for (const PiOrbit& o : dec.orbits) {
        bool levi = true;
        for (int8_t e : o.eps_string)
          if (e != 0) levi = false;
        if (!levi) continue;
        for (int r : o.roots) recurrent[r] = 1;
        recurrent_count += static_cast<int>(o.roots.size());
      }
      if (!is_closed_subset(rd, recurrent))
        return fail("recurrent root set is not closed in " + cfg);
      int exit_span = 0;
      for (int alpha : s_set(A, w)) exit_span += w_alpha(A, w, alpha);
      const ZeroSpaceDims z = zero_space_dims(A, w);
      const int want_span = rd.rank + recurrent_count + exit_span;
      if (z.dim_w_span != want_span)
        return fail(mismatch("dim_w_span in " + cfg, z.dim_w_span, want_span));
      if (z.dim_y != s_value(A, w))
        return fail(mismatch("dim_y in " + cfg, z.dim_y, s_value(A, w)));
      if (z.dim_x_fp != rd.rank + recurrent_count)
        return fail(mismatch("dim_x_fp in " + cfg, z.dim_x_fp,
                             rd.rank + recurrent_count));
    }
  }
  // Pinned values for the rank-two general linear shadow.
  const Analysis G = analysis_from_json(simple_config("GL", 2, "w1"));
  const auto classes = enumerate_classes(G);
  if (classes.size() != 2) return fail("GL2: expected two classes");
  const ClassRecord& open = classes[0];   // S = 0
  const ClassRecord& twist = classes[1];  // S = 1
  if (open.z.dim_x_fp != 2 || open.z.dim_y != 0)
    return fail("GL2 open class: expected dim_x_fp = 2 and dim_y = 0");
  if (twist.z.dim_w_span != 3 || twist.z.dim_w_span != G.ep.dim_P)
    return fail("GL2 twist class: expected dim_w_span = dim P = 3");
  if (twist.z.dim_y0 != 1) return fail("GL2 twist class: expected dim_y0 = 1");
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 7: exhaustive finite-field census against the exact classes.
std::string criterion_census(bool full) {
  struct Case {
    int p, m, r, d;
    std::multiset<unsigned long long> counts;
  };
  std::vector<Case> cases{
      {2, 1, 2, 1, {4, 2}},
      {2, 2, 2, 1, {144, 36}},
      {2, 1, 3, 1, {96, 48, 24}},
  };
  if (full) cases.push_back({2, 2, 3, 1, {138240, 34560, 8640}});
  for (const Case& c : cases) {
    const GF F = GF::make(c.p, c.m);
    std::ostringstream tag;
    tag << "GL" << c.r << "(F" << F.q << "): ";
    const auto census = type_census(F, c.r, c.d, 4, 1'000'000);
    if (census.size() != binomial(c.r, c.d))
      return fail(tag.str() + mismatch("bucket count",
                                       static_cast<unsigned long long>(census.size()),
                                       binomial(c.r, c.d)));
    std::multiset<unsigned long long> got;
    unsigned long long total = 0;
    for (const CensusEntry& e : census) {
      got.insert(e.count);
      total += e.count;
    }
    if (got != c.counts) {
      std::ostringstream os;
      os << tag.str() << "bucket sizes {";
      for (auto v : got) os << ' ' << v;
      os << " } differ from the expected multiset";
      return fail(os.str());
    }
    if (total != gl_order(F.q, c.r))
      return fail(tag.str() + "census does not cover the whole group");
    const Analysis A =
        analysis_from_json(simple_config("GL", c.r, "w" + std::to_string(c.d)));
    if (!mass_identity_holds(A, enumerate_classes(A), c.m))
      return fail(tag.str() + "mass identity fails");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 8: twisted conjugation preserves the final type.
std::string criterion_twisted_invariance() {
  if (!orbits_refine_types(GF::make(2, 1), 2, 1, 1'000'000))
    return fail("an orbit of GL2(F2) crosses a final-type boundary");
  if (!orbits_refine_types(GF::make(2, 2), 2, 1, 1'000'000))
    return fail("an orbit of GL2(F4) crosses a final-type boundary");
  if (!random_moves_preserve_type(GF::make(2, 1), 3, 1, 1000, 2026))
    return fail("a random twisted move on GL3(F2) changed the final type");
  return {};
}

// ---------------------------------------------------------------------------
// Criterion 9: slope sums vanish and class invariants are constant.
std::string criterion_slopes() {
  for (const std::string& cfg : standard_suite()) {
    const Analysis A = analysis_from_json(cfg);
    std::map<int, std::pair<int, std::vector<SlopeEntry>>> by_class;
    const auto classes = enumerate_classes(A);
    for (size_t ci = 0; ci < classes.size(); ++ci)
      for (int w : classes[ci].members) by_class[w] = {static_cast<int>(ci), {}};
    for (int w = 0; w < static_cast<int>(A.W.size()); ++w) {
      const auto slopes = adjoint_slopes(A, w);
      Rat sum(0);
      for (const SlopeEntry& e : slopes) sum += e.slope * e.mult;
      if (sum != Rat(0)) return fail("slope sum is nonzero in " + cfg);
      by_class[w].second = slopes;
    }
    for (const ClassRecord& c : classes) {
      const int s0 = s_value(A, c.members.front());
      const auto& slopes0 = by_class[c.members.front()].second;
      for (int w : c.members) {
        if (s_value(A, w) != s0) return fail("S varies inside a class in " + cfg);
        if (by_class[w].second != slopes0)
          return fail("slope multiset varies inside a class in " + cfg);
      }
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--full") full = true;

  Harness h;
  h.run(1, "odd orthogonal golden tables (n = 2, 3, 4)", 10.0, criterion_golden_tables);
  h.run(2, "general linear shadow class counts", 5.0, criterion_shadow_counts);
  h.run(3, "multiset identity {S} = {s_cl - d_u} on the standard suite", 60.0,
        criterion_multiset_identity);
  h.run(4, "classes of size |W_P| partition W", 0.0, criterion_partition);
  h.run(5, "unique pivotal and open classes, pivotal slopes vanish", 0.0,
        criterion_pivotal_open);
  h.run(6, "zero-space dimension formulas for every element", 0.0,
        criterion_zero_spaces);
  h.run(7, "finite-field census matches the exact classification",
        full ? 600.0 : 60.0, [full] { return criterion_census(full); });
  h.run(8, "twisted conjugation preserves the final type", 0.0,
        criterion_twisted_invariance);
  h.run(9, "slope sums vanish and class invariants are constant", 0.0,
        criterion_slopes);

  if (h.failures == 0)
    std::cout << "acceptance: all 9 criteria passed\n";
  else
    std::cout << "acceptance: " << h.failures << " criterion(s) failed\n";
  return h.failures;
}
