#pragma once

#include <optional>
#include <string>

#include "ihsig/complex/constructions.hpp"

namespace ihsig {

// Per-dimension, per-simplex flags over a complex.
using CellFlags = std::vector<std::vector<char>>;

inline CellFlags empty_flags(const SimplicialComplex& k) {
  CellFlags f(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) f[d].assign(k.count(d), 0);
  return f;
}

// Marks every face of the flagged simplices.
inline void close_downward(const SimplicialComplex& k, CellFlags& f) {
  std::vector<Vertex> face;
  for (int d = k.dim(); d >= 1; --d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!f[d][i]) continue;
      auto s = k.simplex(d, i);
      for (int skip = 0; skip <= d; ++skip) {
        face.clear();
        for (int t = 0; t <= d; ++t)
          if (t != skip) face.push_back(s[t]);
        f[d - 1][*k.index_of(face)] = 1;
      }
    }
}

inline std::vector<Simplex> flagged_simplices(const SimplicialComplex& k, const CellFlags& f) {
  std::vector<Simplex> out;
  for (int d = 0; d < static_cast<int>(f.size()); ++d)
    for (std::size_t i = 0; i < f[d].size(); ++i)
      if (f[d][i]) out.push_back(k.simplex_at(d, i));
  return out;
}

// Link of s inside the subcomplex of flagged simplices.
inline SimplicialComplex link_within(const SimplicialComplex& k, const CellFlags& member,
                                     const Simplex& s) {
  std::vector<Simplex> gens;
  for (int d = s.dim() + 1; d < static_cast<int>(member.size()); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!member[d][i]) continue;
      auto t = k.simplex(d, i);
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      std::vector<Vertex> rest;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
      gens.emplace_back(std::move(rest));
    }
  if (gens.empty()) return SimplicialComplex();
  return induced_complex(gens, nullptr, &k);
}

struct PseudomanifoldVerdict {
  bool ok = false;
  std::string reason;
  std::optional<Simplex> witness;
};

inline PseudomanifoldVerdict check_purity(const SimplicialComplex& k) {
  for (int d = 0; d < k.dim(); ++d) {
    auto cof = k.coface_counts(d);
    for (std::size_t i = 0; i < cof.size(); ++i)
      if (cof[i] == 0)
        return {false, "simplex is not contained in a top-dimensional simplex",
                k.simplex_at(d, i)};
  }
  return {true, "", std::nullopt};
}

inline PseudomanifoldVerdict check_pseudomanifold(const SimplicialComplex& k) {
  if (k.empty()) return {false, "empty complex", std::nullopt};
  auto pure = check_purity(k);
  if (!pure.ok) return pure;
  const int n = k.dim();
  if (n >= 1) {
    auto cof = k.coface_counts(n - 1);
    for (std::size_t i = 0; i < cof.size(); ++i)
      if (cof[i] != 2)
        return {false,
                "codimension-one simplex has " + std::to_string(cof[i]) +
                    " top-dimensional cofaces",
                k.simplex_at(n - 1, i)};
  }
  return {true, "", std::nullopt};
}

struct BoundaryDecomposition {
  SimplicialComplex boundary;
  std::vector<Vertex> boundary_inclusion;  // boundary vertex -> ambient vertex
  CellFlags on_boundary;                   // simplices of the ambient complex lying in the boundary

  bool empty() const { return boundary.empty(); }
  bool interior(int d, std::size_t i) const { return !on_boundary[d][i]; }
};

struct BoundaryVerdict {
  bool ok = false;
  std::string reason;
  std::optional<Simplex> witness;
  BoundaryDecomposition decomposition;
  std::string collar = "assumed";
};

inline BoundaryDecomposition extract_boundary(const SimplicialComplex& k) {
  BoundaryDecomposition b;
  b.on_boundary = empty_flags(k);
  const int n = k.dim();
  if (n < 1) return b;
  auto cof = k.coface_counts(n - 1);
  std::vector<Simplex> gens;
  for (std::size_t i = 0; i < cof.size(); ++i)
    if (cof[i] == 1) {
      b.on_boundary[n - 1][i] = 1;
      gens.push_back(k.simplex_at(n - 1, i));
    }
  close_downward(k, b.on_boundary);
  if (!gens.empty())
    b.boundary = induced_complex(gens, &b.boundary_inclusion, &k, "boundary(" + k.name() + ")");
  return b;
}

inline BoundaryVerdict check_boundary_pseudomanifold(const SimplicialComplex& k) {
  BoundaryVerdict v;
  if (k.empty()) {
    v.reason = "empty complex";
    return v;
  }
  auto pure = check_purity(k);
  if (!pure.ok) {
    v.reason = pure.reason;
    v.witness = pure.witness;
    return v;
  }
  const int n = k.dim();
  if (n >= 1) {
    auto cof = k.coface_counts(n - 1);
    for (std::size_t i = 0; i < cof.size(); ++i)
      if (cof[i] != 1 && cof[i] != 2) {
        v.reason = "codimension-one simplex has " + std::to_string(cof[i]) +
                   " top-dimensional cofaces";
        v.witness = k.simplex_at(n - 1, i);
        return v;
      }
  }
  v.decomposition = extract_boundary(k);
  if (!v.decomposition.empty()) {
    auto inner = check_pseudomanifold(v.decomposition.boundary);
    if (!inner.ok) {
      v.reason = "boundary is not a pseudomanifold: " + inner.reason;
      if (inner.witness) {
        std::vector<Vertex> w;
        for (Vertex x : *inner.witness) w.push_back(v.decomposition.boundary_inclusion[x]);
        v.witness = Simplex(std::move(w));
      }
      return v;
    }
  }
  v.ok = true;
  return v;
}

}  // namespace ihsig
