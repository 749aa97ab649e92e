#pragma once

#include <deque>
#include <map>

#include "ihsig/complex/chain.hpp"
#include "ihsig/pseudomanifold/checks.hpp"

namespace ihsig {

struct Orientation {
  std::vector<int> signs;  // one per top simplex, canonical order

  Orientation reversed() const {
    Orientation o = *this;
    for (int& s : o.signs) s = -s;
    return o;
  }
  bool operator==(const Orientation&) const = default;
};

struct OrientationAttempt {
  std::optional<Orientation> orientation;
  std::vector<Simplex> odd_cycle;  // closed facet walk with inconsistent signs
};

namespace detail {

struct FacetIncidence {
  std::size_t facet;
  int sign;
};

// For every codimension-one simplex, the top simplices containing it with
// the incidence sign.
inline std::vector<std::vector<FacetIncidence>> top_incidences(const SimplicialComplex& k) {
  const int n = k.dim();
  std::vector<std::vector<FacetIncidence>> inc(k.count(n - 1));
  std::vector<Vertex> face;
  for (std::size_t j = 0; j < k.count(n); ++j) {
    auto s = k.simplex(n, j);
    for (int i = 0; i <= n; ++i) {
      face.clear();
      for (int t = 0; t <= n; ++t)
        if (t != i) face.push_back(s[t]);
      inc[*k.index_of(face)].push_back({j, i % 2 ? -1 : 1});
    }
  }
  return inc;
}

}  // namespace detail

inline OrientationAttempt try_orient(const SimplicialComplex& k) {
  OrientationAttempt out;
  const int n = k.dim();
  const std::size_t top = k.count(n);
  Orientation o;
  o.signs.assign(top, 0);
  if (n == 0) {
    o.signs.assign(top, 1);
    out.orientation = o;
    return out;
  }
  auto inc = detail::top_incidences(k);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(top);
  for (const auto& list : inc)
    if (list.size() == 2) {
      int rel = -list[0].sign * list[1].sign;
      adj[list[0].facet].emplace_back(list[1].facet, rel);
      adj[list[1].facet].emplace_back(list[0].facet, rel);
    }
  std::vector<std::size_t> parent(top, SIZE_MAX), depth(top, 0);
  for (std::size_t root = 0; root < top; ++root) {
    if (o.signs[root]) continue;
    o.signs[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (auto [b, rel] : adj[a]) {
        int want = o.signs[a] * rel;
        if (!o.signs[b]) {
          o.signs[b] = want;
          parent[b] = a;
          depth[b] = depth[a] + 1;
          queue.push_back(b);
        } else if (o.signs[b] != want) {
          std::vector<std::size_t> up_a{a}, up_b{b};
          while (up_a.back() != up_b.back()) {
            if (depth[up_a.back()] >= depth[up_b.back()])
              up_a.push_back(parent[up_a.back()]);
            else
              up_b.push_back(parent[up_b.back()]);
          }
          up_b.pop_back();
          for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) up_a.push_back(*it);
          for (std::size_t f : up_a) out.odd_cycle.push_back(k.simplex_at(n, f));
          return out;
        }
      }
    }
  }
  out.orientation = o;
  return out;
}

inline Orientation orient(const SimplicialComplex& k) {
  if (!check_boundary_pseudomanifold(k).ok)
    throw NotPseudomanifold("orientation needs a pseudomanifold or a pseudomanifold with boundary");
  auto attempt = try_orient(k);
  if (!attempt.orientation) {
    std::string walk;
    for (const auto& s : attempt.odd_cycle) walk += (walk.empty() ? "" : " ") + s.to_string();
    throw NonOrientable("inconsistent sign propagation around the facet cycle " + walk);
  }
  return *attempt.orientation;
}

inline IntVector signed_facet_vector(const SimplicialComplex& k, const Orientation& o) {
  if (o.signs.size() != k.count(k.dim()))
    throw DimensionMismatch("orientation has " + std::to_string(o.signs.size()) +
                            " signs for " + std::to_string(k.count(k.dim())) + " top simplices");
  IntVector v;
  for (std::size_t i = 0; i < o.signs.size(); ++i)
    v.push_back(static_cast<Index>(i), Integer(o.signs[i]));
  return v;
}

inline Chain signed_facet_chain(const SimplicialComplex& k, const Orientation& o) {
  return vector_to_chain(k, k.dim(), signed_facet_vector(k, o));
}

// True when the boundary of the signed facet sum vanishes off the boundary
// of K.
inline bool is_relative_fundamental_cycle(const SimplicialComplex& k, const Orientation& o) {
  const int n = k.dim();
  if (o.signs.size() != k.count(n)) return false;
  for (int s : o.signs)
    if (s != 1 && s != -1) return false;
  if (n == 0) return true;
  IntVector bd = k.boundary_matrix(n).apply(signed_facet_vector(k, o));
  auto cof = k.coface_counts(n - 1);
  for (const auto& e : bd)
    if (cof[e.index] != 1) return false;
  return true;
}

// Converts a facet-index keyed orientation from a complex document.
inline Orientation orientation_from_document(const SimplicialComplex& k,
                                             const std::map<std::size_t, int>& by_facet) {
  const int n = k.dim();
  Orientation o;
  o.signs.assign(k.count(n), 0);
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    auto it = by_facet.find(i);
    if (it == by_facet.end())
      throw ParseError("orientation is missing facet " + std::to_string(i));
    if (k.facets()[i].dim() != n) throw ParseError("orientation given for a non-top facet");
    o.signs[*k.index_of(k.facets()[i])] = it->second;
  }
  if (!is_relative_fundamental_cycle(k, o))
    throw NonOrientable("the supplied orientation does not give a (relative) cycle");
  return o;
}

inline std::map<std::size_t, int> orientation_to_document(const SimplicialComplex& k,
                                                          const Orientation& o) {
  std::map<std::size_t, int> out;
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    out[i] = o.signs[*k.index_of(k.facets()[i])];
  return out;
}

}  // namespace ihsig
