#pragma once

#include <map>

#include "ihsig/complex/simplicial_complex.hpp"
#include "ihsig/zlinalg/scalar.hpp"

namespace ihsig {

// Finite simplicial chain.  Integer and rational chains share this type; the
// field tag says which coefficients are legal.
class Chain {
 public:
  explicit Chain(int degree = 0, Field field = Field::Z)
      : degree_(degree), field_(field) {}

  int degree() const { return degree_; }
  Field field() const { return field_; }
  const std::map<Simplex, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Chain& add(const Simplex& s, const Rational& c) {
    if (s.dim() != degree_)
      throw DimensionMismatch("simplex " + s.to_string() + " has dimension " +
                              std::to_string(s.dim()) + ", chain degree is " +
                              std::to_string(degree_));
    if (field_ == Field::Z && c.get_den() != 1)
      throw DimensionMismatch("non-integral coefficient in an integral chain");
    if (is_zero(c)) return *this;
    auto [it, fresh] = terms_.try_emplace(s, 0);
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
    return *this;
  }

  Chain& add_scaled(const Rational& k, const Chain& other) {
    check_compatible(other);
    for (const auto& [s, c] : other.terms_) add(s, k * c);
    return *this;
  }

  Chain& operator+=(const Chain& o) { return add_scaled(1, o); }
  Chain& operator-=(const Chain& o) { return add_scaled(-1, o); }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& k, const Chain& a) {
    Chain out(a.degree_, a.field_);
    return out.add_scaled(k, a);
  }

  Chain boundary() const {
    Chain out(degree_ - 1, field_);
    if (degree_ == 0) return out;
    for (const auto& [s, c] : terms_)
      for (std::size_t i = 0; i < s.size(); ++i)
        out.add(s.face(i), i % 2 ? -c : c);
    return out;
  }

  bool operator==(const Chain& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const Chain& o) const {
    if (o.degree_ != degree_)
      throw DimensionMismatch("adding chains of different degrees");
  }

  int degree_;
  Field field_;
  std::map<Simplex, Rational> terms_;
};

// Coordinates of an integral chain in the canonical k-simplex order of K.
inline IntVector chain_to_vector(const SimplicialComplex& k, const Chain& c) {
  std::vector<std::pair<Index, Integer>> entries;
  for (const auto& [s, v] : c.terms()) {
    auto i = k.index_of(s);
    if (!i) throw AmbientMismatch("chain simplex " + s.to_string() +
                                  " is not in the ambient complex");
    if (v.get_den() != 1)
      throw DimensionMismatch("rational coefficient in an integral coordinate vector");
    entries.emplace_back(static_cast<Index>(*i), v.get_num());
  }
  return IntVector::from_pairs(std::move(entries));
}

inline RatVector chain_to_rational_vector(const SimplicialComplex& k, const Chain& c) {
  std::vector<std::pair<Index, Rational>> entries;
  for (const auto& [s, v] : c.terms()) {
    auto i = k.index_of(s);
    if (!i) throw AmbientMismatch("chain simplex " + s.to_string() +
                                  " is not in the ambient complex");
    entries.emplace_back(static_cast<Index>(*i), v);
  }
  return RatVector::from_pairs(std::move(entries));
}

template <class T>
Chain vector_to_chain(const SimplicialComplex& k, int degree,
                      const SparseVector<T>& v, Field field = Field::Z) {
  Chain c(degree, field);
  for (const auto& e : v) c.add(k.simplex_at(degree, e.index), Rational(e.value));
  return c;
}

}  // namespace ihsig
