#pragma once

#include "ihsig/ih/ic_complex.hpp"
#include "ihsig/zlinalg/homology.hpp"

namespace ihsig {

inline std::vector<std::size_t> allowable_simplices(const SimplicialComplex& k,
                                                    const Stratification& st,
                                                    const Perversity& p, int degree) {
  if (degree < 0 || degree > k.dim())
    throw DegreeOutOfRange("degree " + std::to_string(degree) + " outside 0.." +
                           std::to_string(k.dim()));
  auto constraints = stratum_constraints(k, st, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.count(degree); ++i)
    if (is_allowable(k.simplex(degree, i), constraints)) out.push_back(i);
  return out;
}

inline ICComplex ic_complex(const SimplicialComplex& k, const Stratification& st,
                            const Perversity& p, bool relative) {
  auto constraints = stratum_constraints(k, st, p);
  if (!relative) return ICComplex(k, std::move(constraints));
  auto verdict = check_boundary_pseudomanifold(k);
  if (!verdict.ok)
    throw NotPseudomanifold("relative intersection chains need a pseudomanifold with boundary: " +
                            verdict.reason);
  return ICComplex(k, std::move(constraints), verdict.decomposition.on_boundary);
}

inline HomologyGroup ih_group(ICComplex& ic, int k, Field field) {
  return homology(ic.boundary_map(k), ic.boundary_map(k + 1), field);
}

// Cycle representatives in C_k coordinates.  Over Z the free cycles map to a
// basis of IH_k / torsion and each torsion cycle generates a cyclic summand
// of the listed order; over Q only free cycles are produced.
struct CycleBasis {
  std::vector<IntVector> free;
  std::vector<IntVector> torsion;
  std::vector<Integer> torsion_orders;
};

inline CycleBasis cycle_basis(ICComplex& ic, int k, Field field) {
  CycleBasis out;
  const IntMatrix& dk = ic.boundary_map(k);
  const IntMatrix& dk1 = ic.boundary_map(k + 1);
  std::vector<IntVector> cycles = kernel_basis(dk);
  if (field == Field::Q) {
    EchelonBasis<Rational> span;
    for (const auto& c : dk1.columns()) span.insert(c.cast<Rational>());
    for (const auto& z : cycles)
      if (!span.insert(z.cast<Rational>())) out.free.push_back(ic.chain_of(k, z));
    return out;
  }
  // Boundaries in cycle coordinates, then a Smith basis adapted to them.
  EchelonBasis<Integer> zc;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    zc.insert(cycles[i], IntVector::unit(static_cast<Index>(i)));
  IntMatrix bz(cycles.size(), 0);
  for (const auto& c : dk1.columns()) {
    auto red = zc.reduce(c);
    if (!red.remainder.empty())
      throw CompositionNonzero("a boundary is not a cycle in the intersection complex");
    bz.append_column(std::move(red.combination));
  }
  SNFResult snf = smith_normal_form(bz);
  auto lift = [&](const IntVector& u) {
    IntVector z;
    for (const auto& e : u) z.add_scaled(e.value, cycles[e.index]);
    return ic.chain_of(k, z);
  };
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    const IntVector& u = snf.U_inverse.column(j);
    if (j >= snf.rank) {
      out.free.push_back(lift(u));
    } else if (snf.diagonal[j] > 1) {
      out.torsion.push_back(lift(u));
      out.torsion_orders.push_back(snf.diagonal[j]);
    }
  }
  return out;
}

struct IHDegree {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;
  std::vector<IntVector> generators;  // free cycles, C_k coordinates, when requested

  HomologyGroup group() const { return {betti, torsion}; }
};

struct IHResult {
  Field field = Field::Z;
  bool relative = false;
  std::vector<IHDegree> degrees;

  std::vector<HomologyGroup> table() const {
    std::vector<HomologyGroup> t;
    for (const auto& d : degrees) t.push_back(d.group());
    return t;
  }
};

inline IHResult ih(ICComplex& ic, Field field, bool with_generators = false) {
  IHResult r;
  r.field = field;
  r.relative = ic.relative();
  for (int k = 0; k <= ic.dim(); ++k) {
    IHDegree d;
    d.degree = k;
    HomologyGroup g = ih_group(ic, k, field);
    d.betti = g.betti;
    d.torsion = g.torsion;
    if (with_generators && !ic.relative()) d.generators = cycle_basis(ic, k, field).free;
    r.degrees.push_back(std::move(d));
  }
  return r;
}

inline IHResult ih(const SimplicialComplex& k, const Stratification& st, const Perversity& p,
                   Field field, bool relative = false, bool with_generators = false) {
  ICComplex ic = ic_complex(k, st, p, relative);
  return ih(ic, field, with_generators);
}

}  // namespace ihsig
