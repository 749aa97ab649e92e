#pragma once

// Reference topology computed from raw facet lists with dense matrices.
// Nothing here touches the library; inputs are plain vectors of ints.

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracles.hpp"
#include "json.hpp"

namespace oracle {

using Face = std::vector<int>;
using Facets = std::vector<Face>;

struct Group {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;
  bool operator==(const Group&) const = default;
};

struct RawComplex {
  Facets facets;
  std::vector<int> orientation;  // per facet, possibly empty
};

inline RawComplex load_raw(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str());
  RawComplex r;
  for (const auto& f : j["facets"]) {
    Face face = f.get<Face>();
    std::sort(face.begin(), face.end());
    r.facets.push_back(face);
  }
  if (j.contains("orientation")) {
    r.orientation.assign(r.facets.size(), 0);
    for (const auto& [k, v] : j["orientation"].items()) r.orientation[std::stoul(k)] = v.get<int>();
  }
  return r;
}

inline std::vector<std::vector<Face>> all_faces(const Facets& facets) {
  std::vector<std::set<Face>> by_dim;
  for (const auto& f : facets) {
    const std::size_t m = f.size();
    if (by_dim.size() < m) by_dim.resize(m);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Face s;
      for (std::size_t b = 0; b < m; ++b)
        if (mask >> b & 1) s.push_back(f[b]);
      by_dim[s.size() - 1].insert(s);
    }
  }
  std::vector<std::vector<Face>> out;
  for (const auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

// Rows: (k-1)-faces, columns: k-faces.
inline Dense boundary(const std::vector<std::vector<Face>>& faces, std::size_t k) {
  const auto& rows = faces[k - 1];
  const auto& cols = faces[k];
  std::map<Face, std::size_t> at;
  for (std::size_t i = 0; i < rows.size(); ++i) at[rows[i]] = i;
  Dense d(rows.size(), std::vector<mpz_class>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Face f = cols[j];
      f.erase(f.begin() + static_cast<long>(i));
      d[at[f]][j] = (i % 2) ? -1 : 1;
    }
  return d;
}

// Textbook dense Smith reduction, returning the nonzero diagonal.
inline std::vector<mpz_class> smith_diagonal(Dense a) {
  std::vector<mpz_class> diag;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean)
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              clean = false;
              break;
            }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

inline std::vector<Group> homology(const Facets& facets) {
  auto faces = all_faces(facets);
  const std::size_t top = faces.size();
  std::vector<std::vector<mpz_class>> diag(top + 1);
  for (std::size_t k = 1; k < top; ++k) diag[k] = smith_diagonal(boundary(faces, k));
  std::vector<Group> out(top);
  for (std::size_t k = 0; k < top; ++k) {
    std::size_t rank_out = k ? diag[k].size() : 0;
    std::size_t rank_in = k + 1 < top ? diag[k + 1].size() : 0;
    out[k].betti = faces[k].size() - rank_out - rank_in;
    if (k + 1 < top)
      for (const auto& d : diag[k + 1])
        if (d > 1) out[k].torsion.push_back(d);
  }
  return out;
}

// Intersection homology of the suspension of a closed (n-1)-manifold L whose
// two cone points carry perversity value p: truncation at t = n-1-p on both
// cones, glued by Mayer-Vietoris along L x (-1,1).
inline std::vector<Group> suspension_cone_formula(const std::vector<Group>& h_link, int p) {
  const int n = static_cast<int>(h_link.size());
  const int t = n - 1 - p;
  std::vector<Group> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (i < t) out[i] = h_link[i];
    else if (i > t) out[i] = h_link[i - 1];
  }
  return out;
}

// <x cup x, xi> for a 2k-cocycle pairing on a 4k-dimensional complex, with
// the Alexander-Whitney front/back faces of each sorted facet.
inline mpz_class cup_square_on_cycle(const Facets& facets, const std::vector<int>& xi,
                                     const std::map<Face, mpz_class>& x) {
  mpz_class total = 0;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Face& s = facets[f];
    const std::size_t half = (s.size() - 1) / 2;
    Face front(s.begin(), s.begin() + static_cast<long>(half) + 1);
    Face back(s.begin() + static_cast<long>(half), s.end());
    auto a = x.find(front), b = x.find(back);
    if (a != x.end() && b != x.end()) total += xi[f] * a->second * b->second;
  }
  return total;
}

// A cocycle of the given degree that is not a coboundary over Q, found by
// dense elimination on the transposed boundary matrices.
inline std::map<Face, mpz_class> noncobounding_cocycle(const Facets& facets, std::size_t degree) {
  auto faces = all_faces(facets);
  const auto& cells = faces[degree];
  const std::size_t n = cells.size();
  // Nullspace of delta = d_{degree+1}^T over Q.
  Dense d = boundary(faces, degree + 1);  // rows: degree-faces
  std::vector<std::vector<mpq_class>> m(d[0].size(), std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d[0].size(); ++j) m[j][i] = d[i][j];
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  Dense span = degree ? boundary(faces, degree) : Dense{};  // rows are delta(e)
  const std::size_t base = rank(span);
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free] / m[i][pivots[i]];
    mpz_class lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = mpq_class(v[i] * lcm).get_num();
    Dense trial = span;
    trial.push_back(z);
    if (rank(trial) > base) {
      std::map<Face, mpz_class> out;
      for (std::size_t i = 0; i < n; ++i)
        if (z[i] != 0) out[cells[i]] = z[i];
      return out;
    }
  }
  return {};
}

}  // namespace oracle

namespace oracle {

// Splits every vertex of a 2-dimensional complex whose link is disconnected
// into one copy per link component.
inline Facets normalize_surface(const Facets& facets) {
  int next = 0;
  for (const auto& f : facets)
    for (int v : f) next = std::max(next, v + 1);
  Facets out = facets;
  for (int v = 0; v < next; ++v) {
    std::vector<std::size_t> star;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (std::count(facets[i].begin(), facets[i].end(), v)) star.push_back(i);
    // Union triangles of the star sharing an edge through v.
    std::vector<std::size_t> comp(star.size());
    for (std::size_t i = 0; i < star.size(); ++i) comp[i] = i;
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x];
      return x;
    };
    for (std::size_t a = 0; a < star.size(); ++a)
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        int shared = 0;
        for (int x : facets[star[a]])
          if (x != v && std::count(facets[star[b]].begin(), facets[star[b]].end(), x)) ++shared;
        if (shared) comp[find(a)] = find(b);
      }
    std::map<std::size_t, int> copy;
    for (std::size_t i = 0; i < star.size(); ++i) {
      std::size_t r = find(i);
      if (!copy.count(r)) copy[r] = copy.empty() ? v : next++;
      for (int& x : out[star[i]])
        if (x == v) x = copy[r];
    }
  }
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

}  // namespace oracle
