#pragma once

#include <memory>
#include <numeric>

#include "ihsig/complex/chain.hpp"
#include "ihsig/complex/simplicial_complex.hpp"

namespace ihsig {

struct ProductComplex {
  std::shared_ptr<const SimplicialComplex> left, right;
  SimplicialComplex product;
  std::size_t right_count = 0;

  Vertex pair(Vertex l, Vertex r) const {
    return static_cast<Vertex>(l * right_count + r);
  }
  Vertex left_of(Vertex v) const { return static_cast<Vertex>(v / right_count); }
  Vertex right_of(Vertex v) const { return static_cast<Vertex>(v % right_count); }

  bool is_square() const {
    return left == right ||
           (left->dim() == right->dim() &&
            [&] {
              for (int k = 0; k <= left->dim(); ++k)
                if (left->flat(k) != right->flat(k)) return false;
              return true;
            }());
  }

  // The factor swap (l, r) -> (r, l) on a square product.  It preserves the
  // vertex order of every simplex, so it acts on chains without signs.
  Vertex swap(Vertex v) const { return pair(right_of(v), left_of(v)); }
};

namespace detail {

inline void sort_flat_rows(std::vector<Vertex>& flat, std::size_t width) {
  const std::size_t n = flat.size() / width;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Vertex* x = flat.data() + std::size_t(a) * width;
    const Vertex* y = flat.data() + std::size_t(b) * width;
    return std::lexicographical_compare(x, x + width, y, y + width);
  });
  std::vector<Vertex> sorted(flat.size());
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(flat.data() + std::size_t(order[i]) * width, width,
                sorted.data() + i * width);
  flat = std::move(sorted);
}

// Emits every lattice path from (0,0) to (p,q) with steps (1,0), (0,1) and,
// when `diagonal_steps` is set, (1,1).  The callback receives the visited
// grid points and the parity of the shuffle permutation.
template <class F>
void for_each_staircase(int p, int q, bool diagonal_steps, F&& emit) {
  std::vector<std::pair<int, int>> path{{0, 0}};
  auto rec = [&](auto&& self, int i, int j, int inversions, int right_steps) -> void {
    if (i == p && j == q) {
      emit(path, inversions & 1);
      return;
    }
    if (i < p) {
      path.emplace_back(i + 1, j);
      self(self, i + 1, j, inversions + right_steps, right_steps);
      path.pop_back();
    }
    if (j < q) {
      path.emplace_back(i, j + 1);
      self(self, i, j + 1, inversions, right_steps + 1);
      path.pop_back();
    }
    if (diagonal_steps && i < p && j < q) {
      path.emplace_back(i + 1, j + 1);
      self(self, i + 1, j + 1, inversions, right_steps);
      path.pop_back();
    }
  };
  rec(rec, 0, 0, 0, 0);
}

}  // namespace detail

inline ProductComplex product_staircase(const SimplicialComplex& l,
                                        const SimplicialComplex& r) {
  ProductComplex pc;
  pc.left = std::make_shared<SimplicialComplex>(l);
  pc.right = std::make_shared<SimplicialComplex>(r);
  pc.right_count = r.num_vertices();
  if (l.empty() || r.empty()) return pc;
  const int n = l.dim() + r.dim();
  std::vector<std::vector<Vertex>> faces(n + 1);
  for (int p = 0; p <= l.dim(); ++p)
    for (int q = 0; q <= r.dim(); ++q)
      for (std::size_t a = 0; a < l.count(p); ++a) {
        auto sigma = l.simplex(p, a);
        for (std::size_t b = 0; b < r.count(q); ++b) {
          auto tau = r.simplex(q, b);
          detail::for_each_staircase(p, q, true, [&](const auto& path, int) {
            auto& out = faces[path.size() - 1];
            for (auto [i, j] : path) out.push_back(pc.pair(sigma[i], tau[j]));
          });
        }
      }
  for (int k = 0; k <= n; ++k) detail::sort_flat_rows(faces[k], k + 1);
  std::vector<Simplex> facets;
  for (const auto& f : l.maximal_simplices())
    for (const auto& g : r.maximal_simplices())
      detail::for_each_staircase(f.dim(), g.dim(), false, [&](const auto& path, int) {
        std::vector<Vertex> v;
        for (auto [i, j] : path) v.push_back(pc.pair(f[i], g[j]));
        facets.emplace_back(std::move(v));
      });
  std::sort(facets.begin(), facets.end());
  pc.product = SimplicialComplex::from_closed_faces(
      std::move(faces), std::move(facets), l.name() + " x " + r.name());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < l.num_vertices(); ++a)
    for (std::size_t b = 0; b < r.num_vertices(); ++b)
      labels.push_back("(" + l.label(static_cast<Vertex>(a)) + "," +
                       r.label(static_cast<Vertex>(b)) + ")");
  pc.product.set_labels(std::move(labels));
  return pc;
}

// Eilenberg-Zilber shuffle map.  The shuffle that runs through the left
// factor first carries sign +1.
inline Chain shuffle_cross(const Chain& a, const Chain& b, const ProductComplex& pc) {
  const Field field = (a.field() == Field::Q || b.field() == Field::Q) ? Field::Q : Field::Z;
  Chain out(a.degree() + b.degree(), field);
  for (const auto& [s, x] : a.terms())
    if (!pc.left->contains(s))
      throw AmbientMismatch("left chain simplex " + s.to_string() + " not in the left factor");
  for (const auto& [t, y] : b.terms())
    if (!pc.right->contains(t))
      throw AmbientMismatch("right chain simplex " + t.to_string() + " not in the right factor");
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) {
      Rational xy = x * y;
      detail::for_each_staircase(s.dim(), t.dim(), false, [&](const auto& path, int odd) {
        std::vector<Vertex> v;
        v.reserve(path.size());
        for (auto [i, j] : path) v.push_back(pc.pair(s[i], t[j]));
        out.add(Simplex(std::move(v)), odd ? -xy : xy);
      });
    }
  return out;
}

inline Simplex diagonal_simplex(const Simplex& s, const ProductComplex& pc) {
  std::vector<Vertex> v;
  v.reserve(s.size());
  for (Vertex x : s) v.push_back(pc.pair(x, x));
  return Simplex(std::move(v));
}

inline Chain diagonal_chain(const Chain& c, const ProductComplex& pc) {
  if (!pc.is_square())
    throw AmbientMismatch("the diagonal needs a product of a complex with itself");
  Chain out(c.degree(), c.field());
  for (const auto& [s, x] : c.terms()) {
    if (!pc.left->contains(s))
      throw AmbientMismatch("chain simplex " + s.to_string() + " not in the factor");
    out.add(diagonal_simplex(s, pc), x);
  }
  return out;
}

inline Simplex swap_simplex(const Simplex& s, const ProductComplex& pc) {
  std::vector<Vertex> v;
  v.reserve(s.size());
  for (Vertex x : s) v.push_back(pc.swap(x));
  return Simplex(std::move(v));
}

inline Chain swap_chain(const Chain& c, const ProductComplex& pc) {
  Chain out(c.degree(), c.field());
  for (const auto& [s, x] : c.terms()) out.add(swap_simplex(s, pc), x);
  return out;
}

}  // namespace ihsig
