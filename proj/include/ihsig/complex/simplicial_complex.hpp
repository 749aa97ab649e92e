#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihsig/complex/simplex.hpp"
#include "ihsig/zlinalg/sparse.hpp"

namespace ihsig {

// Finite abstract simplicial complex on dense vertex ids 0..V-1.  All faces
// are stored per dimension as one flat, lexicographically sorted array so
// that large product complexes stay compact.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::vector<Simplex> facets,
                                       std::string name = {}) {
    SimplicialComplex k;
    k.name_ = std::move(name);
    {
      std::set<Simplex> seen;
      for (const auto& f : facets)
        if (!seen.insert(f).second)
          throw DuplicateFacet("facet listed twice: " + f.to_string());
    }
    int top = -1;
    for (const auto& f : facets) top = std::max(top, f.dim());
    std::vector<std::vector<std::vector<Vertex>>> per_dim(top + 1);
    for (const auto& f : facets) {
      const std::size_t n = f.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(f[i]);
        per_dim[s.size() - 1].push_back(std::move(s));
      }
    }
    k.faces_.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
      auto& list = per_dim[d];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      k.faces_[d].reserve(list.size() * (d + 1));
      for (const auto& s : list) k.faces_[d].insert(k.faces_[d].end(), s.begin(), s.end());
    }
    if (top >= 0) {
      const auto& verts = k.faces_[0];
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i] != i)
          throw ParseError("vertex ids must be dense 0..V-1; vertex " +
                           std::to_string(i) + " is unused");
    }
    k.facets_ = std::move(facets);
    return k;
  }

  // Each faces[d] is a flat sorted array of (d+1)-tuples already closed
  // under taking faces.  Used by constructions that enumerate all simplices.
  static SimplicialComplex from_closed_faces(std::vector<std::vector<Vertex>> faces,
                                             std::vector<Simplex> facets,
                                             std::string name = {}) {
    SimplicialComplex k;
    k.faces_ = std::move(faces);
    k.facets_ = std::move(facets);
    k.name_ = std::move(name);
    return k;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != num_vertices())
      throw ParseError("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }
  std::size_t num_vertices() const { return count(0); }

  std::size_t count(int k) const {
    if (k < 0 || k > dim()) return 0;
    return faces_[k].size() / (k + 1);
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (int k = 0; k <= dim(); ++k) f.push_back(count(k));
    return f;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dim(); ++k)
      chi += (k % 2 ? -1 : 1) * static_cast<long long>(count(k));
    return chi;
  }

  VertexSpan simplex(int k, std::size_t i) const {
    return VertexSpan(faces_[k].data() + i * (k + 1), k + 1);
  }
  Simplex simplex_at(int k, std::size_t i) const { return Simplex(simplex(k, i)); }

  const std::vector<Vertex>& flat(int k) const { return faces_[k]; }

  std::optional<std::size_t> index_of(VertexSpan s) const {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dim()) return std::nullopt;
    std::size_t lo = 0, hi = count(k);
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = simplex(k, mid);
      if (std::lexicographical_compare(m.begin(), m.end(), s.begin(), s.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count(k) && std::equal(s.begin(), s.end(), simplex(k, lo).begin()))
      return lo;
    return std::nullopt;
  }
  std::optional<std::size_t> index_of(const Simplex& s) const { return index_of(s.span()); }

  std::size_t require_index(VertexSpan s) const {
    auto i = index_of(s);
    if (!i) throw SimplexNotInComplex("simplex " + Simplex(s).to_string() +
                                      " is not in the complex");
    return *i;
  }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  const std::vector<Simplex>& facets() const { return facets_; }

  // Maximal simplices in canonical order.
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
      auto cof = coface_counts(k);
      for (std::size_t i = 0; i < count(k); ++i)
        if (cof[i] == 0) out.push_back(simplex_at(k, i));
    }
    return out;
  }

  // Number of (k+1)-dimensional cofaces of each k-simplex.
  std::vector<std::uint32_t> coface_counts(int k) const {
    std::vector<std::uint32_t> c(count(k), 0);
    if (k + 1 > dim()) return c;
    std::vector<Vertex> face(k + 1);
    for (std::size_t j = 0; j < count(k + 1); ++j) {
      auto s = simplex(k + 1, j);
      for (int i = 0; i <= k + 1; ++i) {
        face.clear();
        for (int t = 0; t <= k + 1; ++t)
          if (t != i) face.push_back(s[t]);
        ++c[*index_of(face)];
      }
    }
    return c;
  }

  // Rows: (k-1)-simplices, columns: k-simplices, entry (-1)^i for deleting
  // vertex i.
  IntMatrix boundary_matrix(int k) const {
    if (k < 0 || k > std::max(dim(), 0))
      throw DegreeOutOfRange("boundary degree " + std::to_string(k) +
                             " outside 0.." + std::to_string(dim()));
    IntMatrix d(count(k - 1), count(k));
    if (k == 0) return d;
    std::vector<Vertex> face(k);
    for (std::size_t j = 0; j < count(k); ++j) {
      auto s = simplex(k, j);
      std::vector<std::pair<Index, Integer>> entries;
      for (int i = 0; i <= k; ++i) {
        face.clear();
        for (int t = 0; t <= k; ++t)
          if (t != i) face.push_back(s[t]);
        entries.emplace_back(static_cast<Index>(*index_of(face)),
                             Integer(i % 2 ? -1 : 1));
      }
      d.set_column(j, IntVector::from_pairs(std::move(entries)));
    }
    return d;
  }

  // Boundary matrix extended to degree dim+1 (a |C_n| x 0 matrix).
  IntMatrix boundary_or_zero(int k) const {
    if (k == dim() + 1) return IntMatrix(count(dim()), 0);
    return boundary_matrix(k);
  }

 private:
  std::string name_;
  std::vector<std::vector<Vertex>> faces_;
  std::vector<Simplex> facets_;
  std::vector<std::string> labels_;
};

}  // namespace ihsig
