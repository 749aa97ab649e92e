#pragma once

#include <vector>

#include "ihsig/zlinalg/echelon.hpp"
#include "ihsig/zlinalg/smith.hpp"

namespace ihsig {

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility order
  bool operator==(const HomologyGroup&) const = default;
};

inline void check_composable(const IntMatrix& d_k, const IntMatrix& d_k1) {
  if (d_k.cols() != d_k1.rows())
    throw DimensionMismatch("boundary maps are not composable");
  if (!(d_k * d_k1).is_zero_matrix())
    throw CompositionNonzero("d_k * d_{k+1} is not zero");
}

// d_k : C_k -> C_{k-1}, d_k1 : C_{k+1} -> C_k.
inline HomologyGroup homology_z(const IntMatrix& d_k, const IntMatrix& d_k1) {
  check_composable(d_k, d_k1);
  HomologyGroup h;
  std::size_t rk = rank(d_k);
  std::vector<Integer> factors = invariant_factors(d_k1);
  h.betti = d_k.cols() - rk - factors.size();
  for (auto& f : factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

inline HomologyGroup homology_q(const IntMatrix& d_k, const IntMatrix& d_k1) {
  check_composable(d_k, d_k1);
  HomologyGroup h;
  h.betti = d_k.cols() - rank(d_k) - rank(d_k1);
  return h;
}

inline HomologyGroup homology(const IntMatrix& d_k, const IntMatrix& d_k1,
                              Field field) {
  return field == Field::Z ? homology_z(d_k, d_k1) : homology_q(d_k, d_k1);
}

}  // namespace ihsig
