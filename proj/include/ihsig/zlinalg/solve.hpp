#pragma once

#include <optional>
#include <vector>

#include "ihsig/zlinalg/echelon.hpp"

namespace ihsig {

namespace detail {

template <class T>
void check_ambient(const SparseVector<T>& v, std::size_t ambient) {
  if (!v.empty() && v.low() >= ambient)
    throw DimensionMismatch("vector lives outside the ambient coordinates");
}

template <class T>
std::vector<T> densify(const SparseVector<T>& v, std::size_t n) {
  std::vector<T> out(n, T(0));
  for (const auto& e : v) out[e.index] = e.value;
  return out;
}

}  // namespace detail

// Echelon form of im B followed by a list of generators, so that several
// targets can be expressed modulo im B without redoing the elimination.
template <class T>
class QuotientSolver {
 public:
  explicit QuotientSolver(const SparseMatrix<T>& b) : ambient_(b.rows()) {
    for (const auto& col : b.columns()) echelon_.insert(col);
    image_rank_ = echelon_.size();
  }

  // Returns false when g is dependent on im B and the earlier generators.
  bool add_generator(const SparseVector<T>& g) {
    detail::check_ambient(g, ambient_);
    bool fresh = !echelon_.insert(g, SparseVector<T>::unit(static_cast<Index>(count_)));
    ++count_;
    if (!fresh) independent_ = false;
    return fresh;
  }

  std::size_t generators() const { return count_; }
  std::size_t image_rank() const { return image_rank_; }
  bool independent() const { return independent_; }

  std::optional<std::vector<T>> solve(const SparseVector<T>& target) const {
    detail::check_ambient(target, ambient_);
    auto red = echelon_.reduce(target);
    if (!red.remainder.empty()) return std::nullopt;
    return detail::densify(red.combination, count_);
  }

 private:
  std::size_t ambient_;
  EchelonBasis<T> echelon_;
  std::size_t image_rank_ = 0;
  std::size_t count_ = 0;
  bool independent_ = true;
};

// Finds c with target = sum c_i generators_i + B y.  Over Z both c and y are
// integral.  The result is one solution; it is unique exactly when the
// generator classes are independent modulo im B.
template <class T>
std::optional<std::vector<T>> solve_modulo_image_t(
    const SparseVector<T>& target, const std::vector<SparseVector<T>>& generators,
    const SparseMatrix<T>& b) {
  QuotientSolver<T> q(b);
  for (const auto& g : generators) q.add_generator(g);
  return q.solve(target);
}

inline std::optional<std::vector<Rational>> solve_modulo_image(
    const IntVector& target, const std::vector<IntVector>& generators,
    const IntMatrix& b, Field field) {
  if (field == Field::Z) {
    auto c = solve_modulo_image_t<Integer>(target, generators, b);
    if (!c) return std::nullopt;
    return std::vector<Rational>(c->begin(), c->end());
  }
  std::vector<RatVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.cast<Rational>());
  return solve_modulo_image_t<Rational>(target.cast<Rational>(), gens,
                                        b.cast<Rational>());
}

// Integral solve modulo the saturation of im B, i.e. modulo every integral
// vector that some positive multiple of lies in im B.
inline std::optional<std::vector<Integer>> solve_modulo_saturation(
    const IntVector& target, const std::vector<IntVector>& generators,
    const IntMatrix& b) {
  const std::size_t ambient = b.rows();
  detail::check_ambient(target, ambient);
  for (const auto& g : generators) detail::check_ambient(g, ambient);
  EchelonBasis<Rational> span;
  for (const auto& col : b.columns()) span.insert(col.cast<Rational>());
  std::vector<RatVector> reduced;
  reduced.push_back(span.reduce(target.cast<Rational>()).remainder);
  for (const auto& g : generators)
    reduced.push_back(span.reduce(g.cast<Rational>()).remainder);
  Integer common = 1;
  for (const auto& v : reduced)
    for (const auto& e : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
                                    e.value.get_den_mpz_t());
  auto scaled = [&](const RatVector& v) {
    IntVector out;
    for (const auto& e : v) {
      Rational x = e.value * common;
      out.push_back(e.index, x.get_num());
    }
    return out;
  };
  EchelonBasis<Integer> lattice;
  for (std::size_t j = 0; j < generators.size(); ++j)
    lattice.insert(scaled(reduced[j + 1]), IntVector::unit(static_cast<Index>(j)));
  auto red = lattice.reduce(scaled(reduced[0]));
  if (!red.remainder.empty()) return std::nullopt;
  return detail::densify(red.combination, generators.size());
}

}  // namespace ihsig
