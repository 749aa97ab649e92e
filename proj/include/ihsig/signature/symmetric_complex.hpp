#pragma once

#include <memory>

#include "ihsig/ih/ih.hpp"
#include "ihsig/perversity/product_stratification.hpp"
#include "ihsig/signature/fundamental_cycle.hpp"

namespace ihsig {

// C = IC^{n} on X, D = IC^{Q_{n,n}} on the staircase square X x X, beta the
// shuffle cross product and phi the diagonal image of the fundamental cycle.
// The involution on D is the factor swap; it fixes every vertex order, and
// T(beta(a x b)) = (-1)^{|a||b|} beta(b x a).
struct SymmetricComplexData {
  std::shared_ptr<const SimplicialComplex> x;
  Stratification strat;
  std::shared_ptr<ICComplex> c;
  std::shared_ptr<const ProductComplex> product;
  ProductStratification product_strat;
  std::shared_ptr<ICComplex> d;
  FundamentalCycle xi;
  Chain phi;

  int dim() const { return x->dim(); }
  const SimplicialComplex& square() const { return product->product; }

  Chain beta(const Chain& a, const Chain& b) const { return shuffle_cross(a, b, *product); }
  Chain transpose(const Chain& c) const { return swap_chain(c, *product); }

  Chain generator(int k, std::size_t j) const {
    return vector_to_chain(*x, k, c->basis(k)[j]);
  }

  // Columns are the generator pairs (a, b) of C_i x C_j, a-major, written in
  // the simplicial coordinates of C_{i+j}(X x X).
  IntMatrix beta_matrix(int i, int j) const {
    const auto& bi = c->basis(i);
    const auto& bj = c->basis(j);
    IntMatrix m(square().count(i + j), 0);
    for (std::size_t a = 0; a < bi.size(); ++a)
      for (std::size_t b = 0; b < bj.size(); ++b)
        m.append_column(chain_to_vector(square(), beta(generator(i, a), generator(j, b))));
    return m;
  }
};

inline SymmetricComplexData symmetric_complex(
    const SimplicialComplex& k, const FundamentalCycle& xi,
    const std::optional<std::vector<StratificationLevel>>& levels = std::nullopt) {
  if (xi.relative) throw NotClosed("the symmetric complex needs a closed space");
  SymmetricComplexData s;
  s.x = std::make_shared<const SimplicialComplex>(k);
  s.strat = skeletal_stratification(*s.x, levels);
  s.c = std::make_shared<ICComplex>(
      *s.x, stratum_constraints(*s.x, s.strat, Perversity::classical(PerversityName::UpperMiddle)));
  s.product = std::make_shared<const ProductComplex>(product_staircase(*s.x, *s.x));
  s.product_strat = product_stratification(s.strat, s.strat);
  Perversity q = product_perversity_Qnn(s.product_strat.strata);
  s.d = std::make_shared<ICComplex>(s.product->product,
                                    stratum_constraints(*s.product, s.product_strat, q));
  s.xi = xi;
  s.phi = diagonal_chain(xi.xi, *s.product);
  for (const auto& [simplex, coeff] : s.phi.terms())
    if (!is_allowable(simplex.span(), s.d->constraints()))
      throw DiagonalNotAllowable("diagonal simplex " + simplex.to_string() +
                                 " is not Q-allowable");
  if (!s.phi.boundary().empty()) throw NotClosed("the diagonal cycle has nonzero boundary");
  return s;
}

}  // namespace ihsig
