#pragma once

#include "ihsig/ih/ic_complex.hpp"
#include "ihsig/pseudomanifold/orientation.hpp"
#include "ihsig/pseudomanifold/stratification.hpp"

namespace ihsig {

struct FundamentalCycle {
  Orientation orientation;
  Chain xi;
  bool relative = false;  // K has nonempty boundary and xi is a relative cycle
};

inline FundamentalCycle fundamental_cycle(
    const SimplicialComplex& k, const Orientation& o,
    const std::optional<std::vector<StratificationLevel>>& levels = std::nullopt) {
  auto verdict = check_boundary_pseudomanifold(k);
  if (!verdict.ok) throw NotPseudomanifold(verdict.reason);
  if (!is_relative_fundamental_cycle(k, o))
    throw NonOrientable("the orientation signs do not give a (relative) cycle");
  Stratification st = skeletal_stratification(k, levels);
  auto constraints = stratum_constraints(k, st, Perversity::classical(PerversityName::Zero));
  const int n = k.dim();
  for (std::size_t i = 0; i < k.count(n); ++i)
    if (!is_allowable(k.simplex(n, i), constraints))
      throw IncompatibleStratification("top simplex " + k.simplex_at(n, i).to_string() +
                                       " is not allowable for the zero perversity");
  return {o, signed_facet_chain(k, o), !verdict.decomposition.empty()};
}

inline FundamentalCycle fundamental_cycle(const SimplicialComplex& k) {
  return fundamental_cycle(k, orient(k));
}

}  // namespace ihsig
