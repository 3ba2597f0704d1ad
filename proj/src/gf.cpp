#include "fcrystal/gf.hpp"

#include <algorithm>

#include "fcrystal/errors.hpp"

namespace fcrystal {

namespace {

// Reduction of t^m for the fixed defining polynomials, as base-p digit lists.
std::vector<int> reduction_digits(int p, int m) {
  if (p == 2) {
    if (m == 2) return {1, 1};           // t^2 = t + 1
    if (m == 3) return {1, 1, 0};        // t^3 = t + 1
    if (m == 4) return {1, 1, 0, 0};     // t^4 = t + 1
  } else if (p == 3) {
    if (m == 2) return {2, 0};           // t^2 = -1 = 2
  }
  return {};
}

std::vector<int> decode(int v, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

GF GF::make(int p, int m) {
  require(p == 2 || p == 3, "finite field: p must be 2 or 3");
  require(m >= 1, "finite field: m must be >= 1");
  int q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    require(q <= 16, "finite field: p^m must be <= 16");
  }
  GF F;
  F.p = p;
  F.m = m;
  F.q = q;

  // Powers of t modulo the defining polynomial, up to degree 2m-2.
  std::vector<std::vector<int>> tpow(2 * m - 1, std::vector<int>(m, 0));
  tpow[0][0] = 1;
  const std::vector<int> red = reduction_digits(p, m);
  for (int k = 1; k <= 2 * m - 2; ++k) {
    std::vector<int> shifted(m + 1, 0);
    for (int i = 0; i < m; ++i) shifted[i + 1] = tpow[k - 1][i];
    std::vector<int> cur(m, 0);
    for (int i = 0; i < m; ++i) cur[i] = shifted[i];
    if (shifted[m] != 0) {
      invariant(!red.empty(), "finite field: missing reduction polynomial");
      for (int i = 0; i < m; ++i) cur[i] = (cur[i] + shifted[m] * red[i]) % p;
    }
    tpow[k] = cur;
  }

  F.add_t.resize(static_cast<size_t>(q) * q);
  F.mul_t.resize(static_cast<size_t>(q) * q);
  F.neg_t.resize(q);
  F.inv_t.assign(q, 0);
  F.frob_t.resize(q);

  for (int a = 0; a < q; ++a) {
    const auto da = decode(a, p, m);
    std::vector<int> nd(m);
    for (int i = 0; i < m; ++i) nd[i] = (p - da[i]) % p;
    F.neg_t[a] = static_cast<uint8_t>(encode(nd, p));
    for (int b = 0; b < q; ++b) {
      const auto db = decode(b, p, m);
      std::vector<int> sum(m);
      for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
      F.add_t[a * q + b] = static_cast<uint8_t>(encode(sum, p));
      std::vector<int> conv(2 * m - 1, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) conv[i + j] += da[i] * db[j];
      std::vector<int> prod(m, 0);
      for (int k = 0; k < 2 * m - 1; ++k)
        for (int i = 0; i < m; ++i) prod[i] += conv[k] * tpow[k][i];
      for (int i = 0; i < m; ++i) prod[i] %= p;
      F.mul_t[a * q + b] = static_cast<uint8_t>(encode(prod, p));
    }
  }
  for (int a = 1; a < q; ++a) {
    int found = -1;
    for (int b = 1; b < q; ++b)
      if (F.mul_t[a * q + b] == 1) {
        found = b;
        break;
      }
    invariant(found > 0, "finite field: element without inverse");
    F.inv_t[a] = static_cast<uint8_t>(found);
  }
  for (int a = 0; a < q; ++a) {
    uint8_t x = 1;
    for (int i = 0; i < p; ++i) x = F.mul_t[x * q + a];
    // x = a^p computed as repeated multiplication starting from 1.
    F.frob_t[a] = x;
  }
  return F;
}

GFMat GFMat::identity(int n) {
  GFMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

GFMat gf_mul(const GF& F, const GFMat& A, const GFMat& B) {
  invariant(A.cols == B.rows, "gf_mul: shape mismatch");
  GFMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const uint8_t v = A.at(i, k);
      if (!v) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
    }
  return C;
}

GFMat gf_transpose(const GFMat& A) {
  GFMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

GFMat gf_frob(const GF& F, const GFMat& A) {
  GFMat B = A;
  for (auto& x : B.a) x = F.frob(x);
  return B;
}

GFMat gf_frob_inv(const GF& F, const GFMat& A) {
  GFMat B = A;
  for (auto& x : B.a) x = F.frob_inv(x);
  return B;
}

GFMat gf_rref(const GF& F, const GFMat& A) {
  GFMat M = A;
  int pivot_row = 0;
  for (int col = 0; col < M.cols && pivot_row < M.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < M.rows; ++r)
      if (M.at(r, col)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(pivot_row, j));
    const uint8_t inv = F.inv(M.at(pivot_row, col));
    for (int j = 0; j < M.cols; ++j) M.at(pivot_row, j) = F.mul(inv, M.at(pivot_row, j));
    for (int r = 0; r < M.rows; ++r) {
      if (r == pivot_row) continue;
      const uint8_t f = M.at(r, col);
      if (!f) continue;
      for (int j = 0; j < M.cols; ++j)
        M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(pivot_row, j)));
    }
    ++pivot_row;
  }
  GFMat out(pivot_row, M.cols);
  for (int r = 0; r < pivot_row; ++r)
    for (int j = 0; j < M.cols; ++j) out.at(r, j) = M.at(r, j);
  return out;
}

int gf_rank(const GF& F, const GFMat& A) { return gf_rref(F, A).rows; }

bool gf_invertible(const GF& F, const GFMat& A) {
  return A.rows == A.cols && gf_rank(F, A) == A.rows;
}

GFMat gf_inverse(const GF& F, const GFMat& A) {
  invariant(A.rows == A.cols, "gf_inverse: not square");
  const int n = A.rows;
  GFMat M(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n + i) = 1;
  }
  const GFMat R = gf_rref(F, M);
  invariant(R.rows == n, "gf_inverse: matrix not invertible");
  GFMat inv(n, n);
  for (int i = 0; i < n; ++i) {
    invariant(R.at(i, i) == 1, "gf_inverse: matrix not invertible");
    for (int j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
  }
  return inv;
}

bool rowspace_contains(const GF& F, const GFMat& rref, const std::vector<uint8_t>& v) {
  invariant(static_cast<int>(v.size()) == rref.cols, "rowspace_contains: size mismatch");
  std::vector<uint8_t> w = v;
  for (int r = 0; r < rref.rows; ++r) {
    int pivot = -1;
    for (int j = 0; j < rref.cols; ++j)
      if (rref.at(r, j)) {
        pivot = j;
        break;
      }
    invariant(pivot >= 0, "rowspace_contains: zero row in rref");
    const uint8_t f = w[pivot];
    if (!f) continue;
    for (int j = 0; j < rref.cols; ++j) w[j] = F.sub(w[j], F.mul(f, rref.at(r, j)));
  }
  return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool rowspace_contains_all(const GF& F, const GFMat& outer, const GFMat& inner) {
  for (int r = 0; r < inner.rows; ++r) {
    std::vector<uint8_t> v(inner.cols);
    for (int j = 0; j < inner.cols; ++j) v[j] = inner.at(r, j);
    if (!rowspace_contains(F, outer, v)) return false;
  }
  return true;
}

namespace {

// Canonical basis of {x : M x^T = 0} (viewing x as a row vector).
GFMat nullspace_rows(const GF& F, const GFMat& M) {
  const GFMat R = gf_rref(F, M);
  std::vector<int> pivot_col;
  std::vector<uint8_t> is_pivot(M.cols, 0);
  for (int r = 0; r < R.rows; ++r)
    for (int j = 0; j < R.cols; ++j)
      if (R.at(r, j)) {
        pivot_col.push_back(j);
        is_pivot[j] = 1;
        break;
      }
  GFMat out(M.cols - R.rows, M.cols);
  int k = 0;
  for (int free = 0; free < M.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (int r = 0; r < R.rows; ++r)
      out.at(k, pivot_col[r]) = F.neg(R.at(r, free));
    ++k;
  }
  return gf_rref(F, out);
}

}  // namespace

GFMat gf_left_kernel(const GF& F, const GFMat& A) {
  return nullspace_rows(F, gf_transpose(A));
}

GFMat gf_preimage(const GF& F, const GFMat& M, const GFMat& U_rref) {
  // x in preimage iff f (M x^T) = 0 for every f annihilating U, i.e. iff
  // (ann(U) M) x^T = 0.
  const GFMat ann = nullspace_rows(F, U_rref);
  return nullspace_rows(F, gf_mul(F, ann, M));
}

GFMat gf_image(const GF& F, const GFMat& M, const GFMat& U_rref) {
  return gf_rref(F, gf_mul(F, U_rref, gf_transpose(M)));
}

unsigned long long gl_order(int q, int r) {
  auto checked_mul = [](unsigned long long a, unsigned long long b) {
    unsigned long long out;
    if (__builtin_mul_overflow(a, b, &out))
      throw LimitError("gl_order: group order overflows 64 bits");
    return out;
  };
  unsigned long long total = 1;
  for (int i = 0; i < r * (r - 1) / 2; ++i) total = checked_mul(total, q);
  unsigned long long qpow = 1;
  for (int i = 1; i <= r; ++i) {
    qpow = checked_mul(qpow, q);
    total = checked_mul(total, qpow - 1);
  }
  return total;
}

void enumerate_gl(const GF& F, int r, const std::function<void(const GFMat&)>& fn) {
  GFMat cur(r, r);
  std::vector<GFMat> partial_rref;  // rref of the first k rows
  partial_rref.push_back(GFMat(0, r));

  unsigned long long total_vectors = 1;
  for (int i = 0; i < r; ++i) total_vectors *= F.q;

  std::function<void(int)> rec = [&](int row) {
    if (row == r) {
      fn(cur);
      return;
    }
    std::vector<uint8_t> v(r);
    for (unsigned long long code = 1; code < total_vectors; ++code) {
      unsigned long long rem = code;
      for (int j = 0; j < r; ++j) {
        v[j] = static_cast<uint8_t>(rem % F.q);
        rem /= F.q;
      }
      if (rowspace_contains(F, partial_rref[row], v)) continue;
      for (int j = 0; j < r; ++j) cur.at(row, j) = v[j];
      GFMat ext(row + 1, r);
      for (int i = 0; i < partial_rref[row].rows; ++i)
        for (int j = 0; j < r; ++j) ext.at(i, j) = partial_rref[row].at(i, j);
      for (int j = 0; j < r; ++j) ext.at(partial_rref[row].rows, j) = v[j];
      partial_rref.push_back(gf_rref(F, ext));
      rec(row + 1);
      partial_rref.pop_back();
    }
  };
  rec(0);
}

}  // namespace fcrystal
