#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace fcrystal {

// Arithmetic tables for F_q, q = p^m <= 16, p in {2, 3}.  Elements are coded
// 0..q-1 by their polynomial coefficients in base p (value = sum c_i p^i for
// the residue sum c_i t^i); the defining polynomials are fixed:
//   F4: t^2+t+1, F8: t^3+t+1, F16: t^4+t+1, F9: t^2+1.
struct GF {
  int p = 2, m = 1, q = 2;
  std::vector<uint8_t> add_t, mul_t, neg_t, inv_t, frob_t;

  static GF make(int p, int m);

  uint8_t add(uint8_t a, uint8_t b) const { return add_t[a * q + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_t[a * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_t[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  uint8_t inv(uint8_t a) const { return inv_t[a]; }          // a != 0
  uint8_t frob(uint8_t a) const { return frob_t[a]; }        // a^p
  uint8_t frob_inv(uint8_t a) const {
    uint8_t x = a;
    for (int i = 1; i < m; ++i) x = frob(x);
    return x;
  }
};

// Dense matrix over F_q, row-major.
struct GFMat {
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;

  GFMat() = default;
  GFMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  static GFMat identity(int n);

  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const GFMat&) const = default;
  auto operator<=>(const GFMat&) const = default;
};

GFMat gf_mul(const GF& F, const GFMat& A, const GFMat& B);
GFMat gf_transpose(const GFMat& A);
// Entrywise arithmetic Frobenius x -> x^p, and its inverse.
GFMat gf_frob(const GF& F, const GFMat& A);
GFMat gf_frob_inv(const GF& F, const GFMat& A);

// Reduced row echelon form with zero rows dropped: the canonical basis of the
// row space.  Two matrices have equal row space iff their forms are equal.
GFMat gf_rref(const GF& F, const GFMat& A);
int gf_rank(const GF& F, const GFMat& A);
bool gf_invertible(const GF& F, const GFMat& A);
GFMat gf_inverse(const GF& F, const GFMat& A);  // requires invertible

// Row-space membership of a vector (v as a 1 x cols matrix row).
bool rowspace_contains(const GF& F, const GFMat& rref, const std::vector<uint8_t>& v);
bool rowspace_contains_all(const GF& F, const GFMat& outer, const GFMat& inner);

// Canonical basis (as rref rows) of {x : x A = 0} (left kernel).
GFMat gf_left_kernel(const GF& F, const GFMat& A);

// Canonical form of {x : M x in U} where vectors are rows (x maps to x M^T)
// and U is a row-space in rref form.
GFMat gf_preimage(const GF& F, const GFMat& M, const GFMat& U_rref);

// Image row space {x M^T : x in U}.
GFMat gf_image(const GF& F, const GFMat& M, const GFMat& U_rref);

// |GL_r(F_q)| = q^{r(r-1)/2} * prod_{i=1..r} (q^i - 1).
unsigned long long gl_order(int q, int r);

// Calls fn for every invertible r x r matrix over F_q, built row by row
// (each row outside the span of the previous ones), in a fixed order.
void enumerate_gl(const GF& F, int r, const std::function<void(const GFMat&)>& fn);

}  // namespace fcrystal
