#include "fcrystal/bruhat.hpp"

#include <algorithm>

#include "fcrystal/errors.hpp"

namespace fcrystal {

int s_classical(const Analysis& A, int w) {
  int count = 0;
  for (int i : A.canon.positives)
    if (A.ep.eps[A.W.elems[w].perm[i]] >= 0) ++count;
  return count;
}

int d_u_value(const Analysis& A) {
  return static_cast<int>(A.canon.positives.size()) - A.ep.dim_N;
}

std::vector<BruhatRecord> coset_invariants(const Analysis& A) {
  const int num_pos = static_cast<int>(A.canon.positives.size());
  const int du = d_u_value(A);
  std::vector<BruhatRecord> out;
  int at_top = 0, at_bottom = 0;
  for (size_t c = 0; c < A.cosets.members.size(); ++c) {
    BruhatRecord rec;
    rec.coset = static_cast<int>(c);
    rec.min_rep = A.cosets.min_rep[c];
    rec.min_rep_length = length(A.W, rec.min_rep, A.canon);
    rec.s_cl = s_classical(A, rec.min_rep);
    for (int x : A.cosets.members[c])
      invariant(s_classical(A, x) == rec.s_cl,
                "coset_invariants: s_classical not constant on a coset");
    invariant(rec.s_cl == num_pos - rec.min_rep_length,
              "coset_invariants: s_cl != |Phi^+| - length(min rep)");
    invariant(rec.s_cl >= du && rec.s_cl <= num_pos,
              "coset_invariants: s_cl outside [d_u, |Phi^+|]");
    if (rec.s_cl == num_pos) ++at_top;
    if (rec.s_cl == du) ++at_bottom;
    out.push_back(rec);
  }
  invariant(at_top == 1, "coset_invariants: expected exactly one coset with s_cl = |Phi^+|");
  invariant(at_bottom == 1, "coset_invariants: expected exactly one coset with s_cl = d_u");
  return out;
}

bool multisets_match(const Analysis& A, const std::vector<ClassRecord>& classes,
                     const std::vector<BruhatRecord>& cosets) {
  const int du = d_u_value(A);
  std::vector<int> a, b;
  for (const ClassRecord& r : classes) a.push_back(r.s_val);
  for (const BruhatRecord& r : cosets) b.push_back(r.s_cl - du);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace fcrystal
