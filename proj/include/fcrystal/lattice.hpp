#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fcrystal {

// Integer vector in a character or cocharacter lattice Z^n.
using Vec = std::vector<int>;

int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scaled(const Vec& a, int c);
bool is_zero(const Vec& a);
std::string to_string(const Vec& a);

// Square integer matrix acting on column vectors, row-major storage.
// Used for lattice automorphisms (Weyl elements, Frobenius twists).
struct IntMatrix {
  int n = 0;
  std::vector<int> a;

  IntMatrix() = default;
  explicit IntMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  static IntMatrix identity(int dim);

  int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  Vec apply(const Vec& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  bool is_identity() const;

  bool operator==(const IntMatrix&) const = default;
  // Lexicographic on (n, entries): a deterministic total order.
  auto operator<=>(const IntMatrix&) const = default;
};

}  // namespace fcrystal
