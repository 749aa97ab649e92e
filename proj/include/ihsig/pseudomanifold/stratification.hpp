#pragma once

#include <numeric>
#include <optional>
#include <set>

#include "ihsig/complex/homology.hpp"
#include "ihsig/io/complex_io.hpp"
#include "ihsig/pseudomanifold/checks.hpp"

namespace ihsig {

struct Stratum {
  std::size_t id = 0;
  int dimension = 0;
  int codimension = 0;
  bool regular = false;
  std::vector<std::pair<int, std::size_t>> cells;  // open simplices (dim, index)
  std::vector<Vertex> closure_vertices;            // sorted
};

class Stratification {
 public:
  int dim = -1;
  std::string source;
  std::vector<Stratum> strata;
  std::vector<std::vector<std::uint32_t>> stratum_of;  // [d][i] -> stratum id

  std::vector<std::size_t> singular_ids() const {
    std::vector<std::size_t> out;
    for (const auto& s : strata)
      if (!s.regular) out.push_back(s.id);
    return out;
  }

  bool has_singular_strata() const { return !singular_ids().empty(); }

  bool compatible_with(const SimplicialComplex& k) const {
    if (k.dim() != dim || static_cast<int>(stratum_of.size()) != dim + 1) return false;
    for (int d = 0; d <= dim; ++d)
      if (stratum_of[d].size() != k.count(d)) return false;
    return true;
  }

  // X^i as lists of maximal simplices, i = 0..n-2.
  std::vector<StratificationLevel> skeleta(const SimplicialComplex& k) const {
    std::vector<StratificationLevel> out;
    for (int i = 0; i + 2 <= dim; ++i) {
      std::vector<Simplex> cells;
      for (const auto& s : strata)
        if (!s.regular && s.dimension <= i)
          for (auto [d, idx] : s.cells) cells.push_back(k.simplex_at(d, idx));
      std::sort(cells.begin(), cells.end());
      StratificationLevel lv;
      lv.dimension = i;
      for (const auto& c : cells) {
        bool maximal = true;
        for (const auto& o : cells)
          if (o.size() > c.size() && c.is_face_of(o)) {
            maximal = false;
            break;
          }
        if (maximal) lv.simplices.push_back(c);
      }
      out.push_back(std::move(lv));
    }
    return out;
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// level[d][i] = smallest i with the simplex in X^i, or n when regular.
inline Stratification strata_from_levels(const SimplicialComplex& k,
                                         const std::vector<std::vector<int>>& level,
                                         std::string source) {
  Stratification st;
  st.dim = k.dim();
  st.source = std::move(source);
  std::vector<std::size_t> offset(k.dim() + 2, 0);
  for (int d = 0; d <= k.dim(); ++d) offset[d + 1] = offset[d] + k.count(d);
  UnionFind uf(offset.back());
  std::vector<Vertex> face;
  for (int d = 1; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      for (int skip = 0; skip <= d; ++skip) {
        face.clear();
        for (int t = 0; t <= d; ++t)
          if (t != skip) face.push_back(s[t]);
        std::size_t f = *k.index_of(face);
        if (level[d - 1][f] == level[d][i]) uf.unite(offset[d - 1] + f, offset[d] + i);
      }
    }
  std::map<std::size_t, std::vector<std::pair<int, std::size_t>>> groups;
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) groups[uf.find(offset[d] + i)].emplace_back(d, i);
  std::vector<Stratum> strata;
  for (auto& [root, cells] : groups) {
    Stratum s;
    s.dimension = level[cells.front().first][cells.front().second];
    s.codimension = k.dim() - s.dimension;
    s.regular = s.codimension == 0;
    s.cells = std::move(cells);
    std::set<Vertex> vs;
    for (auto [d, i] : s.cells)
      for (Vertex v : k.simplex(d, i)) vs.insert(v);
    s.closure_vertices.assign(vs.begin(), vs.end());
    strata.push_back(std::move(s));
  }
  std::stable_sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.cells.front() < b.cells.front();
  });
  st.stratum_of.resize(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) st.stratum_of[d].assign(k.count(d), 0);
  for (std::size_t id = 0; id < strata.size(); ++id) {
    strata[id].id = id;
    for (auto [d, i] : strata[id].cells) st.stratum_of[d][i] = static_cast<std::uint32_t>(id);
  }
  st.strata = std::move(strata);
  return st;
}

inline std::vector<std::vector<int>> default_levels(const SimplicialComplex& k,
                                                    const BoundaryDecomposition& bd) {
  const int n = k.dim();
  std::vector<std::vector<int>> level(n + 1);
  for (int d = 0; d <= n; ++d) level[d].assign(k.count(d), n);
  CellFlags y = empty_flags(k);
  for (int d = 0; d + 2 <= n; ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      Simplex t = k.simplex_at(d, i);
      bool regular;
      if (bd.on_boundary[d][i])
        regular = is_homology_sphere(link_within(k, bd.on_boundary, t), n - 2 - d) &&
                  reduced_homology(link(k, t)).acyclic();
      else
        regular = is_homology_sphere(link(k, t), n - d - 1);
      y[d][i] = !regular;
    }
  close_downward(k, y);
  for (int i = n - 2; i >= 0; --i) {
    for (int d = 0; d <= i; ++d)
      for (std::size_t j = 0; j < k.count(d); ++j)
        if (y[d][j]) level[d][j] = i;
    if (i == 0) break;
    CellFlags y_bd = y;
    for (int d = 0; d <= n; ++d)
      for (std::size_t j = 0; j < k.count(d); ++j) y_bd[d][j] = y[d][j] && bd.on_boundary[d][j];
    CellFlags next = empty_flags(k);
    for (int d = 0; d < i; ++d)
      for (std::size_t j = 0; j < k.count(d); ++j) {
        if (!y[d][j]) continue;
        Simplex t = k.simplex_at(d, j);
        SimplicialComplex ly = link_within(k, y, t);
        bool in_open_stratum = ly.dim() == i - d - 1;
        if (in_open_stratum && !bd.on_boundary[d][j]) {
          in_open_stratum = is_homology_sphere(ly, i - d - 1);
          if (in_open_stratum) {
            // Compare with a top cell of the candidate stratum through t.
            Simplex rho;
            for (std::size_t r = 0; r < k.count(i); ++r)
              if (y[i][r] && t.is_face_of(k.simplex_at(i, r))) {
                rho = k.simplex_at(i, r);
                break;
              }
            in_open_stratum = reduced_homology_shifted_equal(
                reduced_homology(link(k, t)), reduced_homology(link(k, rho)), i - d);
          }
        } else if (in_open_stratum) {
          SimplicialComplex lb = link_within(k, y_bd, t);
          in_open_stratum = is_homology_sphere(lb, i - d - 2);
          if (in_open_stratum) {
            Simplex rho = t;
            if (d < i - 1)
              for (std::size_t r = 0; r < k.count(i - 1); ++r)
                if (y_bd[i - 1][r] && t.is_face_of(k.simplex_at(i - 1, r))) {
                  rho = k.simplex_at(i - 1, r);
                  break;
                }
            in_open_stratum = reduced_homology_shifted_equal(
                reduced_homology(link_within(k, bd.on_boundary, t)),
                reduced_homology(link_within(k, bd.on_boundary, rho)), i - 1 - d);
          }
        }
        if (!in_open_stratum) next[d][j] = 1;
      }
    close_downward(k, next);
    y = std::move(next);
  }
  return level;
}

inline std::vector<std::vector<int>> user_levels(const SimplicialComplex& k,
                                                 const std::vector<StratificationLevel>& user) {
  const int n = k.dim();
  std::vector<StratificationLevel> sorted = user;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.dimension < b.dimension; });
  std::vector<std::vector<int>> level(n + 1);
  for (int d = 0; d <= n; ++d) level[d].assign(k.count(d), n);
  CellFlags previous = empty_flags(k);
  int previous_dim = -1;
  for (const auto& lv : sorted) {
    if (lv.dimension == previous_dim)
      throw InvalidUserStratification("skeleton level " + std::to_string(lv.dimension) +
                                      " listed twice");
    if (lv.dimension < 0 || lv.dimension > n - 1)
      throw InvalidUserStratification("skeleton dimension " + std::to_string(lv.dimension) +
                                      " is out of range");
    if (lv.dimension == n - 1)
      throw InvalidUserStratification("a level of dimension n-1 would create codimension-one strata");
    CellFlags here = empty_flags(k);
    for (const auto& s : lv.simplices) {
      auto idx = k.index_of(s);
      if (!idx)
        throw InvalidUserStratification("skeleton simplex " + s.to_string() +
                                        " is not in the complex");
      if (s.dim() > lv.dimension)
        throw InvalidUserStratification("simplex " + s.to_string() + " is too large for X^" +
                                        std::to_string(lv.dimension));
      here[s.dim()][*idx] = 1;
    }
    close_downward(k, here);
    for (int d = 0; d <= n; ++d)
      for (std::size_t i = 0; i < k.count(d); ++i) {
        if (previous[d][i] && !here[d][i])
          throw InvalidUserStratification("skeleta are not nested at " +
                                          k.simplex_at(d, i).to_string());
        if (here[d][i] && !previous[d][i]) level[d][i] = lv.dimension;
      }
    previous = std::move(here);
    previous_dim = lv.dimension;
  }
  return level;
}

template <class E>
void validate_strata(const SimplicialComplex& k, const Stratification& st,
                     const BoundaryDecomposition& bd) {
  const int n = k.dim();
  std::set<Simplex> all;
  for (const auto& s : st.strata) {
    if (s.regular) continue;
    bool has_top_cell = false;
    std::set<Simplex> closure;
    for (auto [d, i] : s.cells) {
      if (d == s.dimension) has_top_cell = true;
      Simplex c = k.simplex_at(d, i);
      const std::size_t m = c.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Vertex> f;
        for (std::size_t b = 0; b < m; ++b)
          if (mask >> b & 1) f.push_back(c[b]);
        closure.emplace(std::move(f));
      }
      if (d == s.dimension && !bd.on_boundary[d][i]) {
        SimplicialComplex lk = link(k, c);
        auto verdict = check_pseudomanifold(lk);
        if (!verdict.ok || lk.dim() != n - d - 1)
          throw E("the link of " + c.to_string() + " in a stratum of dimension " +
                  std::to_string(s.dimension) + " is not a pseudomanifold of dimension " +
                  std::to_string(n - d - 1));
      }
    }
    if (!has_top_cell)
      throw E("stratum " + std::to_string(s.id) + " has no simplex of its dimension " +
              std::to_string(s.dimension));
    // The closure must be a full subcomplex.
    std::vector<char> member(k.num_vertices(), 0);
    for (Vertex v : s.closure_vertices) member[v] = 1;
    for (int d = 0; d <= n; ++d)
      for (std::size_t i = 0; i < k.count(d); ++i) {
        auto sp = k.simplex(d, i);
        if (std::all_of(sp.begin(), sp.end(), [&](Vertex v) { return member[v]; }) &&
            !closure.count(Simplex(sp)))
          throw E("closure of stratum " + std::to_string(s.id) +
                  " is not a full subcomplex (missing " + Simplex(sp).to_string() + ")");
      }
  }
  // Every skeleton X^i must be a full subcomplex as well.
  for (int i = 0; i + 2 <= n; ++i) {
    std::vector<char> member(k.num_vertices(), 0);
    for (const auto& s : st.strata)
      if (!s.regular && s.dimension <= i)
        for (Vertex v : s.closure_vertices) member[v] = 1;
    for (int d = 0; d <= n; ++d)
      for (std::size_t j = 0; j < k.count(d); ++j) {
        auto sp = k.simplex(d, j);
        if (!std::all_of(sp.begin(), sp.end(), [&](Vertex v) { return member[v]; })) continue;
        const auto& s = st.strata[st.stratum_of[d][j]];
        if (s.regular || s.dimension > i)
          throw E("skeleton X^" + std::to_string(i) + " is not a full subcomplex (missing " +
                  Simplex(sp).to_string() + ")");
      }
  }
}

}  // namespace detail

inline Stratification trivial_stratification(const SimplicialComplex& k) {
  std::vector<std::vector<int>> level(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) level[d].assign(k.count(d), k.dim());
  return detail::strata_from_levels(k, level, "trivial");
}

inline Stratification skeletal_stratification(
    const SimplicialComplex& k,
    const std::optional<std::vector<StratificationLevel>>& user = std::nullopt) {
  auto verdict = check_boundary_pseudomanifold(k);
  if (!verdict.ok)
    throw NotPseudomanifold("stratification needs a pseudomanifold: " + verdict.reason);
  const auto& bd = verdict.decomposition;
  if (user) {
    auto st = detail::strata_from_levels(k, detail::user_levels(k, *user), "user");
    detail::validate_strata<InvalidUserStratification>(k, st, bd);
    return st;
  }
  auto st = detail::strata_from_levels(k, detail::default_levels(k, bd), "skeletal");
  detail::validate_strata<IncompatibleStratification>(k, st, bd);
  return st;
}

}  // namespace ihsig
