#pragma once

#include <vector>

#include "ihsig/complex/simplicial_complex.hpp"
#include "ihsig/zlinalg/homology.hpp"

namespace ihsig {

// Ordinary simplicial homology in degrees 0..dim.
inline std::vector<HomologyGroup> simplicial_homology(const SimplicialComplex& k,
                                                      Field field = Field::Z) {
  std::vector<HomologyGroup> out;
  if (k.empty()) return out;
  std::vector<IntMatrix> d;
  for (int i = 0; i <= k.dim() + 1; ++i) d.push_back(k.boundary_or_zero(i));
  for (int i = 0; i <= k.dim(); ++i) out.push_back(homology(d[i], d[i + 1], field));
  return out;
}

// Reduced homology; the empty complex has reduced homology Z in degree -1,
// stored here at index 0 with `shift` = -1.
struct ReducedHomology {
  int shift = 0;
  std::vector<HomologyGroup> groups;
  bool operator==(const ReducedHomology&) const = default;

  bool acyclic() const {
    for (const auto& g : groups)
      if (g.betti || !g.torsion.empty()) return false;
    return true;
  }
};

inline ReducedHomology reduced_homology(const SimplicialComplex& k) {
  ReducedHomology r;
  if (k.empty()) {
    r.shift = -1;
    r.groups.push_back({1, {}});
    return r;
  }
  r.groups = simplicial_homology(k);
  r.groups[0].betti -= 1;
  return r;
}

inline bool is_homology_sphere(const SimplicialComplex& k, int d) {
  if (d < 0) return k.empty();
  if (k.dim() != d) return false;
  ReducedHomology r = reduced_homology(k);
  for (int i = 0; i <= d; ++i) {
    const auto& g = r.groups[i];
    if (!g.torsion.empty()) return false;
    if (g.betti != (i == d ? 1u : 0u)) return false;
  }
  return true;
}

// Reduced homology of `a` equals that of `b` shifted up by `shift` degrees.
inline bool reduced_homology_shifted_equal(const ReducedHomology& a,
                                           const ReducedHomology& b, int shift) {
  auto at = [](const ReducedHomology& h, int deg) -> HomologyGroup {
    int i = deg - h.shift;
    if (i < 0 || i >= static_cast<int>(h.groups.size())) return {};
    return h.groups[i];
  };
  int lo = std::min(a.shift, b.shift + shift);
  int hi = std::max(a.shift + static_cast<int>(a.groups.size()),
                    b.shift + shift + static_cast<int>(b.groups.size()));
  for (int deg = lo; deg < hi; ++deg)
    if (!(at(a, deg) == at(b, deg - shift))) return false;
  return true;
}

}  // namespace ihsig
