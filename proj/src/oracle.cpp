#include "fcrystal/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "fcrystal/errors.hpp"

namespace fcrystal {

TruncatedDisplay make_display(const GF& field, int r, int d, GFMat gbar) {
  require(r >= 1 && d >= 0 && d <= r, "display: need 0 <= d <= r");
  invariant(gbar.rows == r && gbar.cols == r, "display: gbar has wrong shape");
  invariant(gf_invertible(field, gbar), "display: gbar must be invertible");
  TruncatedDisplay t;
  t.field = field;
  t.r = r;
  t.d = d;
  t.gbar = std::move(gbar);
  return t;
}

namespace {

GFMat hodge_projector(int r, int d, bool on_tail) {
  GFMat D(r, r);
  for (int i = 0; i < r; ++i)
    if (on_tail ? (i >= d) : (i < d)) D.at(i, i) = 1;
  return D;
}

struct DisplayMaps {
  GFMat fwd;   // gbar * D      (F(x) = fwd * sigma(x))
  GFMat back;  // D' * gbar^{-1} (V(x) = sigma^{-1}(back * x))
};

DisplayMaps display_maps(const TruncatedDisplay& t) {
  const GFMat D = hodge_projector(t.r, t.d, true);
  const GFMat Dp = hodge_projector(t.r, t.d, false);
  return {gf_mul(t.field, t.gbar, D), gf_mul(t.field, Dp, gf_inverse(t.field, t.gbar))};
}

// Image of the row space U under the semilinear map x -> M * sigma(x).
GFMat semilinear_image(const GF& F, const GFMat& M, const GFMat& U_rref) {
  return gf_image(F, M, gf_frob(F, U_rref));
}

// {x : sigma^{-1}(M x) in U} = {x : M x in sigma(U)}.
GFMat semilinear_preimage(const GF& F, const GFMat& M, const GFMat& U_rref) {
  return gf_preimage(F, M, gf_rref(F, gf_frob(F, U_rref)));
}

}  // namespace

FinalType final_type(const TruncatedDisplay& t) {
  const GF& F = t.field;
  const DisplayMaps maps = display_maps(t);
  const GFMat full = GFMat::identity(t.r);
  const GFMat zero(0, t.r);

  // Structural checks of the display: Ker F = Im V and Im F = Ker V.
  {
    const GFMat ker_f = gf_frob_inv(F, gf_left_kernel(F, gf_transpose(maps.fwd)));
    const GFMat im_v = gf_rref(F, gf_frob_inv(F, gf_image(F, maps.back, full)));
    invariant(gf_rref(F, ker_f) == im_v, "display: Ker F != Im V");
    const GFMat im_f = semilinear_image(F, maps.fwd, full);
    const GFMat ker_v = gf_left_kernel(F, gf_transpose(maps.back));
    invariant(im_f == gf_rref(F, ker_v), "display: Im F != Ker V");
  }

  std::vector<GFMat> flag{zero, full};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<GFMat> images;
    for (const GFMat& U : flag) {
      images.push_back(semilinear_image(F, maps.fwd, U));
      images.push_back(semilinear_preimage(F, maps.back, U));
    }
    for (GFMat& img : images) {
      if (std::find(flag.begin(), flag.end(), img) == flag.end()) {
        flag.push_back(std::move(img));
        changed = true;
      }
    }
    std::sort(flag.begin(), flag.end(),
              [](const GFMat& a, const GFMat& b) { return std::tuple(a.rows, a.a) < std::tuple(b.rows, b.a); });
  }

  // The closure must be a chain of subspaces.
  for (size_t i = 0; i + 1 < flag.size(); ++i) {
    invariant(flag[i].rows < flag[i + 1].rows,
              "final_type: closure contains distinct subspaces of equal dimension");
    invariant(rowspace_contains_all(F, flag[i + 1], flag[i]),
              "final_type: closure is not a chain");
  }

  FinalType ft;
  for (const GFMat& U : flag)
    ft.emplace_back(U.rows, semilinear_image(F, maps.fwd, U).rows);
  return ft;
}

PointCounts gl_point_counts(int q, int r, int d) {
  auto checked_mul = [](unsigned long long a, unsigned long long b) {
    unsigned long long out;
    if (__builtin_mul_overflow(a, b, &out))
      throw LimitError("gl_point_counts: overflow");
    return out;
  };
  PointCounts pc;
  pc.g_order = gl_order(q, r);
  unsigned long long h = 1;
  for (int i = 0; i < 2 * d * (r - d); ++i) h = checked_mul(h, q);
  h = checked_mul(h, gl_order(q, d));
  h = checked_mul(h, gl_order(q, r - d));
  pc.h_order = h;
  return pc;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<GFMat> all_gl(const GF& F, int r, unsigned long long max_points) {
  const unsigned long long total = gl_order(F.q, r);
  if (total > max_points) {
    std::ostringstream os;
    os << "|GL_" << r << "(F_" << F.q << ")| = " << total
       << " exceeds the point limit " << max_points;
    throw LimitError(os.str());
  }
  std::vector<GFMat> out;
  out.reserve(total);
  enumerate_gl(F, r, [&](const GFMat& g) { out.push_back(g); });
  invariant(out.size() == total, "all_gl: enumeration does not match the order formula");
  return out;
}

}  // namespace

std::vector<CensusEntry> type_census(const GF& field, int r, int d, int threads,
                                     unsigned long long max_points) {
  const std::vector<GFMat> gls = all_gl(field, r, max_points);
  const int nthreads = std::max(1, threads);

  std::vector<std::map<FinalType, unsigned long long>> partial(nthreads);
  auto work = [&](int tid) {
    for (size_t i = tid; i < gls.size(); i += nthreads) {
      const FinalType ft = final_type(make_display(field, r, d, gls[i]));
      ++partial[tid][ft];
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int tjd = 0; tjd < nthreads; ++tjd) pool.emplace_back(work, tjd);
    for (auto& th : pool) th.join();
  }

  std::map<FinalType, unsigned long long> merged;
  for (const auto& pm : partial)
    for (const auto& [ft, c] : pm) merged[ft] += c;

  unsigned long long total = 0;
  for (const auto& [ft, c] : merged) total += c;
  invariant(total == gls.size(), "type_census: counts do not add up");
  invariant(merged.size() == binomial(r, d),
            "type_census: number of distinct final types != binomial(r, d)");

  std::vector<CensusEntry> out;
  for (const auto& [ft, c] : merged) out.push_back({ft, c});
  return out;
}

std::pair<int, int> shadow_parameters(const Analysis& A) {
  require(A.q.rd.factors.size() == 1, "oracle: config must have a single factor");
  const FactorSpec& fs = A.q.rd.factors[0];
  require(fs.type == LieType::GL && fs.copies == 1 && fs.twist == Twist::none,
          "oracle: config must be a single untwisted GL factor");
  int d = 0;
  for (int x : A.q.mu) {
    require(x == 0 || x == 1, "oracle: mu must have 0/1 entries for a GL shadow");
    d += x;
  }
  return {fs.rank, d};
}

bool mass_identity_holds(const Analysis& A, const std::vector<ClassRecord>& classes,
                         int m) {
  const auto [r, d] = shadow_parameters(A);
  require(m >= 1, "oracle: m must be >= 1");
  const long long p = A.q.p;
  require(p == 2 || p == 3, "oracle: p must be 2 or 3 for finite-field checks");

  int q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<int>(p);
    require(q <= 16, "oracle: p^m must be <= 16");
  }
  const PointCounts pc = gl_point_counts(q, r, d);

  auto checked_mul = [](unsigned long long a, unsigned long long b) {
    unsigned long long out;
    if (__builtin_mul_overflow(a, b, &out))
      throw LimitError("mass identity: overflow in exact arithmetic");
    return out;
  };

  int s_max = 0;
  for (const ClassRecord& c : classes) s_max = std::max(s_max, c.s_val);

  // Scale both sides by p^{m * s_max} to stay in integers.
  unsigned long long lhs = pc.g_order;
  for (int i = 0; i < m * s_max; ++i) lhs = checked_mul(lhs, p);
  unsigned long long rhs = 0;
  for (const ClassRecord& c : classes) {
    unsigned long long term = pc.h_order;
    for (int i = 0; i < m * (s_max - c.s_val); ++i) term = checked_mul(term, p);
    rhs += term;
  }
  return lhs == rhs;
}

GFMat twisted_move(const TruncatedDisplay& t, const GFMat& h1, const GFMat& h2,
                   const GFMat& h3) {
  const GF& F = t.field;
  const GFMat h2_inv = gf_inverse(F, h2);
  const GFMat h3_inv = gf_inverse(F, h3);
  GFMat out = gf_mul(F, h1, h2);
  out = gf_mul(F, out, t.gbar);
  out = gf_mul(F, out, gf_frob(F, h2_inv));
  out = gf_mul(F, out, gf_frob(F, h3_inv));
  return out;
}

namespace {

// All moves (h1, h2, h3) for the (d, r-d) block structure: h1 upper-right
// unipotent, h2 block-diagonal invertible, h3 lower-left unipotent.
struct MoveSet {
  std::vector<GFMat> uppers, levis, lowers;
};

MoveSet enumerate_moves(const GF& F, int r, int d) {
  MoveSet ms;
  const int k = d * (r - d);
  std::vector<uint8_t> cell(std::max(k, 1), 0);
  // All fillings of the off-diagonal block.
  const unsigned long long total = [&] {
    unsigned long long t = 1;
    for (int i = 0; i < k; ++i) t *= F.q;
    return t;
  }();
  for (unsigned long long code = 0; code < total; ++code) {
    unsigned long long rem = code;
    for (int i = 0; i < k; ++i) {
      cell[i] = static_cast<uint8_t>(rem % F.q);
      rem /= F.q;
    }
    GFMat up = GFMat::identity(r), low = GFMat::identity(r);
    int idx = 0;
    for (int i = 0; i < d; ++i)
      for (int j = d; j < r; ++j) {
        up.at(i, j) = cell[idx];
        low.at(j, i) = cell[idx];
        ++idx;
      }
    ms.uppers.push_back(up);
    ms.lowers.push_back(low);
  }
  std::vector<GFMat> top, bottom;
  enumerate_gl(F, d, [&](const GFMat& g) { top.push_back(g); });
  enumerate_gl(F, r - d, [&](const GFMat& g) { bottom.push_back(g); });
  if (top.empty()) top.push_back(GFMat(0, 0));
  if (bottom.empty()) bottom.push_back(GFMat(0, 0));
  for (const GFMat& a : top)
    for (const GFMat& b : bottom) {
      GFMat l = GFMat::identity(r);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) l.at(i, j) = a.at(i, j);
      for (int i = 0; i < r - d; ++i)
        for (int j = 0; j < r - d; ++j) l.at(d + i, d + j) = b.at(i, j);
      ms.levis.push_back(l);
    }
  return ms;
}

}  // namespace

std::vector<std::vector<int>> twisted_orbits(const GF& field, int r, int d,
                                             unsigned long long max_points) {
  const std::vector<GFMat> gls = all_gl(field, r, max_points);
  std::map<GFMat, int> index;
  for (size_t i = 0; i < gls.size(); ++i) index[gls[i]] = static_cast<int>(i);

  const MoveSet ms = enumerate_moves(field, r, d);
  std::vector<int> orbit_of(gls.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t start = 0; start < gls.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> mem{static_cast<int>(start)};
    orbit_of[start] = id;
    for (size_t head = 0; head < mem.size(); ++head) {
      const TruncatedDisplay t = make_display(field, r, d, gls[mem[head]]);
      for (const GFMat& h1 : ms.uppers)
        for (const GFMat& h2 : ms.levis)
          for (const GFMat& h3 : ms.lowers) {
            const GFMat g2 = twisted_move(t, h1, h2, h3);
            const auto it = index.find(g2);
            invariant(it != index.end(), "twisted_orbits: move left GL");
            if (orbit_of[it->second] < 0) {
              orbit_of[it->second] = id;
              mem.push_back(it->second);
            }
          }
    }
    std::sort(mem.begin(), mem.end());
    orbits.push_back(std::move(mem));
  }
  return orbits;
}

bool orbits_refine_types(const GF& field, int r, int d, unsigned long long max_points) {
  const std::vector<GFMat> gls = all_gl(field, r, max_points);
  const auto orbits = twisted_orbits(field, r, d, max_points);
  for (const auto& orb : orbits) {
    const FinalType ref = final_type(make_display(field, r, d, gls[orb.front()]));
    for (int i : orb)
      if (final_type(make_display(field, r, d, gls[i])) != ref) return false;
  }
  return true;
}

bool random_moves_preserve_type(const GF& field, int r, int d, int iterations,
                                unsigned long long seed) {
  std::mt19937_64 rng(seed);
  auto rand_elt = [&]() { return static_cast<uint8_t>(rng() % field.q); };
  auto rand_gl = [&](int n) {
    if (n == 0) return GFMat(0, 0);
    GFMat g(n, n);
    do {
      for (auto& x : g.a) x = rand_elt();
    } while (!gf_invertible(field, g));
    return g;
  };

  for (int it = 0; it < iterations; ++it) {
    const GFMat g = rand_gl(r);
    const TruncatedDisplay t = make_display(field, r, d, g);
    const FinalType before = final_type(t);

    GFMat h1 = GFMat::identity(r), h3 = GFMat::identity(r);
    for (int i = 0; i < d; ++i)
      for (int j = d; j < r; ++j) {
        h1.at(i, j) = rand_elt();
        h3.at(j, i) = rand_elt();
      }
    const GFMat a = rand_gl(d), b = rand_gl(r - d);
    GFMat h2 = GFMat::identity(r);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) h2.at(i, j) = a.at(i, j);
    for (int i = 0; i < r - d; ++i)
      for (int j = 0; j < r - d; ++j) h2.at(d + i, d + j) = b.at(i, j);

    const GFMat g2 = twisted_move(t, h1, h2, h3);
    const FinalType after = final_type(make_display(field, r, d, g2));
    if (before != after) return false;
  }
  return true;
}

}  // namespace fcrystal
