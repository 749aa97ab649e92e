#pragma once

#include <map>

#include "ihsig/complex/simplicial_complex.hpp"

namespace ihsig {

// Subcomplex generated by the given simplices, relabelled densely in vertex
// order.  `parent_vertex` receives the original id of each new vertex.
inline SimplicialComplex induced_complex(const std::vector<Simplex>& generators,
                                         std::vector<Vertex>* parent_vertex,
                                         const SimplicialComplex* labels_from,
                                         std::string name = {}) {
  std::vector<Vertex> used;
  for (const auto& s : generators) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Simplex> facets;
  std::vector<Simplex> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : sorted) {
    std::vector<Vertex> nv;
    for (Vertex v : s)
      nv.push_back(static_cast<Vertex>(
          std::lower_bound(used.begin(), used.end(), v) - used.begin()));
    facets.emplace_back(std::move(nv));
  }
  // Drop generators that are faces of other generators.
  std::vector<Simplex> maximal;
  for (const auto& f : facets) {
    bool is_max = true;
    for (const auto& g : facets)
      if (g.size() > f.size() && f.is_face_of(g)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(f);
  }
  SimplicialComplex out = SimplicialComplex::from_facets(std::move(maximal), std::move(name));
  if (labels_from) {
    std::vector<std::string> labels;
    for (Vertex v : used) labels.push_back(labels_from->label(v));
    out.set_labels(std::move(labels));
  }
  if (parent_vertex) *parent_vertex = std::move(used);
  return out;
}

// Lk(s) = { t : t and s disjoint, t u s in K }.
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& s,
                              std::vector<Vertex>* parent_vertex = nullptr) {
  if (!k.contains(s))
    throw SimplexNotInComplex("link requested for " + s.to_string() +
                              ", which is not in the complex");
  std::vector<Simplex> gens;
  const int top = k.dim();
  for (int d = s.dim() + 1; d <= top; ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto t = k.simplex(d, i);
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      std::vector<Vertex> rest;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(),
                          std::back_inserter(rest));
      gens.emplace_back(std::move(rest));
    }
  }
  if (gens.empty()) {
    if (parent_vertex) parent_vertex->clear();
    return SimplicialComplex();
  }
  return induced_complex(gens, parent_vertex, &k);
}

inline SimplicialComplex build_cone(const SimplicialComplex& k) {
  if (k.empty()) throw EmptyComplex("cannot cone the empty complex");
  const Vertex apex = static_cast<Vertex>(k.num_vertices());
  std::vector<Simplex> facets;
  for (const auto& f : k.maximal_simplices()) {
    std::vector<Vertex> v = f.vertices();
    v.push_back(apex);
    facets.emplace_back(std::move(v));
  }
  SimplicialComplex out =
      SimplicialComplex::from_facets(std::move(facets), "cone(" + k.name() + ")");
  if (!k.labels().empty()) {
    auto labels = k.labels();
    labels.push_back("apex");
    out.set_labels(std::move(labels));
  }
  return out;
}

inline SimplicialComplex build_suspension(const SimplicialComplex& k) {
  if (k.empty()) throw EmptyComplex("cannot suspend the empty complex");
  const Vertex north = static_cast<Vertex>(k.num_vertices());
  const Vertex south = north + 1;
  std::vector<Simplex> facets;
  for (Vertex apex : {north, south})
    for (const auto& f : k.maximal_simplices()) {
      std::vector<Vertex> v = f.vertices();
      v.push_back(apex);
      facets.emplace_back(std::move(v));
    }
  SimplicialComplex out = SimplicialComplex::from_facets(
      std::move(facets), "suspension(" + k.name() + ")");
  if (!k.labels().empty()) {
    auto labels = k.labels();
    labels.push_back("north");
    labels.push_back("south");
    out.set_labels(std::move(labels));
  }
  return out;
}

}  // namespace ihsig
