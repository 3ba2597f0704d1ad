#include "fcrystal/lattice.hpp"

#include <sstream>

#include "fcrystal/errors.hpp"

namespace fcrystal {

int dot(const Vec& a, const Vec& b) {
  invariant(a.size() == b.size(), "dot: dimension mismatch");
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  invariant(a.size() == b.size(), "add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  invariant(a.size() == b.size(), "sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scaled(const Vec& a, int c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Vec IntMatrix::apply(const Vec& v) const {
  invariant(static_cast<int>(v.size()) == n, "IntMatrix::apply: dimension mismatch");
  Vec r(n, 0);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  invariant(n == o.n, "IntMatrix::operator*: dimension mismatch");
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace fcrystal
