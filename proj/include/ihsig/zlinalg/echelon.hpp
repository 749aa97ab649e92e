#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ihsig/zlinalg/sparse.hpp"

namespace ihsig {

// Column echelon form keyed by the lowest (largest) row index of each stored
// column.  Every stored column remembers, as a tag, which combination of the
// inserted columns produced it.  Over Z the reduction uses only unimodular
// steps, so the stored columns always form a basis of the lattice spanned by
// everything inserted so far.
template <class T>
class EchelonBasis {
 public:
  struct Column {
    SparseVector<T> value;
    SparseVector<T> tag;
  };

  struct Reduction {
    SparseVector<T> remainder;
    SparseVector<T> combination;  // v = sum of combination[i]*tag-images + remainder
  };

  // Returns nullopt when v was independent (it becomes a stored column);
  // otherwise v reduced to zero and the returned tag is a relation.
  std::optional<SparseVector<T>> insert(SparseVector<T> v,
                                        SparseVector<T> tag = {}) {
    while (!v.empty()) {
      auto it = pivot_of_.find(v.low());
      if (it == pivot_of_.end()) {
        pivot_of_.emplace(v.low(), columns_.size());
        columns_.push_back({std::move(v), std::move(tag)});
        return std::nullopt;
      }
      Column& p = columns_[it->second];
      if constexpr (std::is_same_v<T, Integer>) {
        const Integer& a = p.value.low_value();
        const Integer& b = v.low_value();
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          Integer q = b / a;
          v.add_scaled(-q, p.value);
          tag.add_scaled(-q, p.tag);
        } else {
          GcdTriple e = extended_gcd(a, b);
          Integer ag = a / e.g, bg = b / e.g;
          SparseVector<T> np = p.value;
          np *= e.s;
          np.add_scaled(e.t, v);
          SparseVector<T> nptag = p.tag;
          nptag *= e.s;
          nptag.add_scaled(e.t, tag);
          v *= ag;
          v.add_scaled(-bg, p.value);
          tag *= ag;
          tag.add_scaled(-bg, p.tag);
          p.value = std::move(np);
          p.tag = std::move(nptag);
        }
      } else {
        T q = v.low_value() / p.value.low_value();
        v.add_scaled(-q, p.value);
        tag.add_scaled(-q, p.tag);
      }
    }
    return tag;
  }

  // Canonical representative of v modulo the stored span (Q) or lattice (Z).
  Reduction reduce(SparseVector<T> v) const {
    Reduction out;
    std::vector<typename SparseVector<T>::Entry> rest;
    while (!v.empty()) {
      auto it = pivot_of_.find(v.low());
      if (it != pivot_of_.end()) {
        const Column& p = columns_[it->second];
        T q;
        if constexpr (std::is_same_v<T, Integer>) {
          mpz_fdiv_q(q.get_mpz_t(), v.low_value().get_mpz_t(),
                     p.value.low_value().get_mpz_t());
        } else {
          q = v.low_value() / p.value.low_value();
        }
        if (!is_zero(q)) {
          Index r = v.low();
          v.add_scaled(-q, p.value);
          out.combination.add_scaled(q, p.tag);
          if (v.empty() || v.low() != r) continue;
        }
      }
      rest.push_back(v.pop_low());
    }
    for (auto it = rest.rbegin(); it != rest.rend(); ++it)
      out.remainder.push_back(it->index, std::move(it->value));
    return out;
  }

  bool contains(const SparseVector<T>& v) const {
    return reduce(v).remainder.empty();
  }

  std::size_t size() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  bool has_pivot(Index row) const { return pivot_of_.count(row) != 0; }

 private:
  std::vector<Column> columns_;
  std::unordered_map<Index, std::size_t> pivot_of_;
};

template <class T>
std::size_t rank(const SparseMatrix<T>& a) {
  EchelonBasis<T> e;
  for (const auto& c : a.columns()) e.insert(c);
  return e.size();
}

// Basis of ker A.  Over Z the result is a lattice basis of the kernel.
template <class T>
std::vector<SparseVector<T>> kernel_basis(const SparseMatrix<T>& a) {
  EchelonBasis<T> e;
  std::vector<SparseVector<T>> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto rel = e.insert(a.column(j), SparseVector<T>::unit(static_cast<Index>(j)));
    if (rel) out.push_back(std::move(*rel));
  }
  return out;
}

}  // namespace ihsig
