#pragma once

#include <memory>
#include <optional>

#include "ihsig/complex/product.hpp"
#include "ihsig/perversity/product_stratification.hpp"
#include "ihsig/pseudomanifold/checks.hpp"
#include "ihsig/zlinalg/echelon.hpp"

namespace ihsig {

// One singular stratum as seen by the allowability test.  The closure is
// assumed full, so its intersection with a simplex is spanned by the
// simplex vertices it contains.
struct StratumConstraint {
  std::size_t id = 0;
  int codimension = 0;
  int perversity = 0;
  std::vector<char> in_closure;  // per ambient vertex
};

inline std::vector<StratumConstraint> stratum_constraints(const SimplicialComplex& k,
                                                          const Stratification& st,
                                                          const Perversity& p) {
  if (!st.compatible_with(k))
    throw IncompatibleStratification("stratification does not match the complex");
  validate_perversity(p, strata_info(st));
  std::vector<StratumConstraint> out;
  for (const auto& s : st.strata) {
    if (s.regular) continue;
    StratumConstraint c;
    c.id = s.id;
    c.codimension = s.codimension;
    c.perversity = p.value({s.id, s.codimension, false});
    c.in_closure.assign(k.num_vertices(), 0);
    for (Vertex v : s.closure_vertices) c.in_closure[v] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<StratumConstraint> stratum_constraints(const ProductComplex& pc,
                                                          const ProductStratification& ps,
                                                          const Perversity& p) {
  if (!ps.left.compatible_with(*pc.left) || !ps.right.compatible_with(*pc.right))
    throw IncompatibleStratification("product stratification does not match the factors");
  validate_perversity(p, ps.info());
  std::vector<StratumConstraint> out;
  for (const auto& s : ps.strata) {
    StratumInfo info = s.info();
    if (info.regular) continue;
    const auto& a = ps.left.strata[s.id / ps.right.strata.size()];
    const auto& b = ps.right.strata[s.id % ps.right.strata.size()];
    std::vector<char> in_a(pc.left->num_vertices(), 0), in_b(pc.right->num_vertices(), 0);
    for (Vertex v : a.closure_vertices) in_a[v] = 1;
    for (Vertex v : b.closure_vertices) in_b[v] = 1;
    StratumConstraint c;
    c.id = s.id;
    c.codimension = info.codimension;
    c.perversity = p.value(info);
    c.in_closure.assign(pc.product.num_vertices(), 0);
    for (std::size_t v = 0; v < c.in_closure.size(); ++v)
      c.in_closure[v] = in_a[pc.left_of(static_cast<Vertex>(v))] &&
                        in_b[pc.right_of(static_cast<Vertex>(v))];
    out.push_back(std::move(c));
  }
  return out;
}

inline bool is_allowable(VertexSpan s, const std::vector<StratumConstraint>& constraints) {
  const int k = static_cast<int>(s.size()) - 1;
  for (const auto& c : constraints) {
    int hits = 0;
    for (Vertex v : s) hits += c.in_closure[v];
    if (hits > 0 && hits - 1 > k - c.codimension + c.perversity) return false;
  }
  return true;
}

// Simplicial intersection chains.  IC_k is the kernel of A_k -> C_{k-1}/A_{k-1}
// with A_k spanned by allowable k-simplices; bases are built per degree on
// demand.  In relative mode the chains live in C(X)/C(boundary).
class ICComplex {
 public:
  ICComplex(const SimplicialComplex& k, std::vector<StratumConstraint> constraints,
            std::optional<CellFlags> boundary = std::nullopt)
      : k_(&k), constraints_(std::move(constraints)), boundary_(std::move(boundary)),
        allowable_(k.dim() + 1), absolute_(k.dim() + 1), relative_(k.dim() + 1),
        lifts_(k.dim() + 1), maps_(k.dim() + 2) {}

  const SimplicialComplex& ambient() const { return *k_; }
  int dim() const { return k_->dim(); }
  bool relative() const { return boundary_.has_value(); }
  const std::vector<StratumConstraint>& constraints() const { return constraints_; }

  const std::vector<char>& allowable(int k) {
    auto& a = allowable_[k];
    if (!a) {
      a.emplace(k_->count(k), 1);
      if (!constraints_.empty())
        for (std::size_t i = 0; i < k_->count(k); ++i)
          (*a)[i] = is_allowable(k_->simplex(k, i), constraints_);
    }
    return *a;
  }

  bool fully_allowable(int k) {
    if (k < 0 || k > dim()) return true;
    const auto& a = allowable(k);
    return std::all_of(a.begin(), a.end(), [](char c) { return c != 0; });
  }

  // Generators of IC_k(X) in C_k coordinates.
  const std::vector<IntVector>& absolute_basis(int k) {
    static const std::vector<IntVector> none;
    if (k < 0 || k > dim()) return none;
    auto& b = absolute_[k];
    if (b) return *b;
    b.emplace();
    const auto& a = allowable(k);
    if (k == 0 || fully_allowable(k - 1)) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) b->push_back(IntVector::unit(static_cast<Index>(i)));
      return *b;
    }
    const auto& below = allowable(k - 1);
    EchelonBasis<Integer> e;
    std::vector<Vertex> face(k);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a[j]) continue;
      auto s = k_->simplex(k, j);
      std::vector<std::pair<Index, Integer>> col;
      for (int i = 0; i <= k; ++i) {
        face.clear();
        for (int t = 0; t <= k; ++t)
          if (t != i) face.push_back(s[t]);
        std::size_t f = *k_->index_of(face);
        if (!below[f]) col.emplace_back(static_cast<Index>(f), Integer(i % 2 ? -1 : 1));
      }
      IntVector tag = IntVector::unit(static_cast<Index>(j));
      if (col.empty()) {
        b->push_back(std::move(tag));
        continue;
      }
      auto rel = e.insert(IntVector::from_pairs(std::move(col)), std::move(tag));
      if (rel) b->push_back(std::move(*rel));
    }
    std::sort(b->begin(), b->end(), [](const IntVector& x, const IntVector& y) {
      return x.low() < y.low() || (x.low() == y.low() && x.nnz() < y.nnz());
    });
    return *b;
  }

  // Generators of IC_k in the chain coordinates of this complex (relative
  // coordinates drop boundary simplices).
  const std::vector<IntVector>& basis(int k) {
    if (!relative()) return absolute_basis(k);
    static const std::vector<IntVector> none;
    if (k < 0 || k > dim()) return none;
    auto& r = relative_[k];
    if (r) return *r;
    r.emplace();
    lifts_[k].emplace();
    const auto& on_bd = (*boundary_)[k];
    const auto& abs = absolute_basis(k);
    EchelonBasis<Integer> e;
    for (std::size_t i = 0; i < abs.size(); ++i) e.insert(project(abs[i], on_bd), IntVector::unit(static_cast<Index>(i)));
    for (const auto& c : e.columns()) {
      r->push_back(c.value);
      IntVector lift;
      for (const auto& t : c.tag) lift.add_scaled(t.value, abs[t.index]);
      lifts_[k]->push_back(std::move(lift));
    }
    return *r;
  }

  std::size_t rank(int k) { return basis(k).size(); }

  // Matrix of the boundary IC_k -> IC_{k-1} in the chosen bases; k = dim+1
  // gives the empty map out of IC_{dim+1} = 0.
  const IntMatrix& boundary_map(int k) {
    auto& m = maps_[k];
    if (m) return *m;
    const auto& src = basis(k);
    const auto& dst = basis(k - 1);
    m.emplace(dst.size(), src.size());
    if (k == 0 || k > dim() || src.empty()) return *m;
    IntMatrix d = k_->boundary_matrix(k);
    EchelonBasis<Integer> coords;
    for (std::size_t i = 0; i < dst.size(); ++i)
      coords.insert(dst[i], IntVector::unit(static_cast<Index>(i)));
    for (std::size_t j = 0; j < src.size(); ++j) {
      IntVector image = d.apply(relative() ? (*lifts_[k])[j] : src[j]);
      if (relative()) image = project(image, (*boundary_)[k - 1]);
      auto red = coords.reduce(image);
      if (!red.remainder.empty())
        throw IncompatibleStratification("boundary of an intersection chain left IC_" +
                                         std::to_string(k - 1));
      m->set_column(j, std::move(red.combination));
    }
    return *m;
  }

  // Expresses a chain given in C_k coordinates in the IC_k basis.
  std::optional<IntVector> coordinates(int k, const IntVector& chain) {
    const auto& b = basis(k);
    EchelonBasis<Integer> coords;
    for (std::size_t i = 0; i < b.size(); ++i) coords.insert(b[i], IntVector::unit(static_cast<Index>(i)));
    auto red = coords.reduce(relative() ? project(chain, (*boundary_)[k]) : chain);
    if (!red.remainder.empty()) return std::nullopt;
    return red.combination;
  }

  // Chain in C_k(X) coordinates for IC coordinates x; in relative mode this
  // is the chosen lift.
  IntVector chain_of(int k, const IntVector& x) {
    basis(k);
    const auto& b = relative() ? *lifts_[k] : absolute_basis(k);
    IntVector out;
    for (const auto& e : x) out.add_scaled(e.value, b[e.index]);
    return out;
  }

 private:
  static IntVector project(const IntVector& v, const std::vector<char>& drop) {
    IntVector out;
    for (const auto& e : v)
      if (!drop[e.index]) out.push_back(e.index, e.value);
    return out;
  }

  const SimplicialComplex* k_;
  std::vector<StratumConstraint> constraints_;
  std::optional<CellFlags> boundary_;
  std::vector<std::optional<std::vector<char>>> allowable_;
  std::vector<std::optional<std::vector<IntVector>>> absolute_;
  std::vector<std::optional<std::vector<IntVector>>> relative_;
  std::vector<std::optional<std::vector<IntVector>>> lifts_;
  std::vector<std::optional<IntMatrix>> maps_;
};

}  // namespace ihsig
