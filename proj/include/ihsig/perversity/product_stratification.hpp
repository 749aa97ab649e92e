#pragma once

#include "ihsig/complex/product.hpp"
#include "ihsig/perversity/perversity.hpp"

namespace ihsig {

// Strata S1 x S2 of a product of stratified complexes; id = i1 * |strata2| + i2.
struct ProductStratification {
  Stratification left, right;
  std::vector<ProductStratumInfo> strata;

  std::size_t id_of(std::size_t l, std::size_t r) const { return l * right.strata.size() + r; }
  std::vector<StratumInfo> info() const { return strata_info(strata); }
};

inline ProductStratification product_stratification(const Stratification& l,
                                                    const Stratification& r) {
  ProductStratification ps;
  ps.left = l;
  ps.right = r;
  for (const auto& a : l.strata)
    for (const auto& b : r.strata) {
      ProductStratumInfo s;
      s.id = ps.id_of(a.id, b.id);
      s.factors = {{a.codimension, a.regular}, {b.codimension, b.regular}};
      ps.strata.push_back(std::move(s));
    }
  return ps;
}

}  // namespace ihsig
