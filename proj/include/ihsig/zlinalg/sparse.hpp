#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ihsig/errors.hpp"
#include "ihsig/zlinalg/scalar.hpp"

namespace ihsig {

using Index = std::uint32_t;

// Sorted (index, value) list without explicit zeros.
template <class T>
class SparseVector {
 public:
  struct Entry {
    Index index;
    T value;
    bool operator==(const Entry&) const = default;
  };

  SparseVector() = default;

  static SparseVector unit(Index i, const T& v = T(1)) {
    SparseVector out;
    if (!is_zero(v)) out.entries_.push_back({i, v});
    return out;
  }

  // Accepts unsorted input with repeats; repeated indices are summed.
  static SparseVector from_pairs(std::vector<std::pair<Index, T>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, v] : pairs) {
      if (!out.entries_.empty() && out.entries_.back().index == i)
        out.entries_.back().value += v;
      else
        out.entries_.push_back({i, std::move(v)});
      if (is_zero(out.entries_.back().value)) out.entries_.pop_back();
    }
    return out;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  T get(Index i) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const Entry& e, Index k) { return e.index < k; });
    if (it != entries_.end() && it->index == i) return it->value;
    return T(0);
  }

  Index low() const { return entries_.back().index; }
  const T& low_value() const { return entries_.back().value; }

  Entry pop_low() {
    Entry e = std::move(entries_.back());
    entries_.pop_back();
    return e;
  }

  // Caller guarantees strictly increasing indices.
  void push_back(Index i, T v) {
    if (!is_zero(v)) entries_.push_back({i, std::move(v)});
  }

  void set(Index i, const T& v) {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const Entry& e, Index k) { return e.index < k; });
    if (it != entries_.end() && it->index == i) {
      if (is_zero(v))
        entries_.erase(it);
      else
        it->value = v;
    } else if (!is_zero(v)) {
      entries_.insert(it, Entry{i, v});
    }
  }

  // this += k * other
  SparseVector& add_scaled(const T& k, const SparseVector& other) {
    if (is_zero(k) || other.empty()) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    T tmp;
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() ||
          (a != entries_.end() && a->index < b->index)) {
        merged.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->index < a->index) {
        tmp = k * b->value;
        merged.push_back({b->index, tmp});
        ++b;
      } else {
        tmp = a->value + k * b->value;
        if (!is_zero(tmp)) merged.push_back({a->index, tmp});
        ++a;
        ++b;
      }
    }
    entries_ = std::move(merged);
    return *this;
  }

  SparseVector& operator+=(const SparseVector& o) { return add_scaled(T(1), o); }
  SparseVector& operator-=(const SparseVector& o) { return add_scaled(T(-1), o); }

  SparseVector& operator*=(const T& k) {
    if (is_zero(k)) {
      entries_.clear();
      return *this;
    }
    for (auto& e : entries_) e.value *= k;
    return *this;
  }

  SparseVector operator-() const {
    SparseVector out = *this;
    for (auto& e : out.entries_) e.value = -e.value;
    return out;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    return a += b;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    return a -= b;
  }

  bool operator==(const SparseVector&) const = default;

  template <class U>
  SparseVector<U> cast() const {
    SparseVector<U> out;
    for (const auto& e : entries_) out.push_back(e.index, U(e.value));
    return out;
  }

  Index max_index_plus_one() const { return empty() ? 0 : low() + 1; }

 private:
  std::vector<Entry> entries_;
};

using IntVector = SparseVector<Integer>;
using RatVector = SparseVector<Rational>;

// Column-major sparse matrix.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.columns_[i] = SparseVector<T>::unit(static_cast<Index>(i));
    return m;
  }

  template <class V>
  static SparseMatrix from_dense(const std::vector<std::vector<V>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw DimensionMismatch("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j)
        m.columns_[j].push_back(static_cast<Index>(i), T(rows[i][j]));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  const SparseVector<T>& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVector<T>>& columns() const { return columns_; }

  void set_column(std::size_t j, SparseVector<T> v) {
    check_column(v);
    columns_[j] = std::move(v);
  }

  void append_column(SparseVector<T> v) {
    check_column(v);
    columns_.push_back(std::move(v));
  }

  T get(std::size_t i, std::size_t j) const {
    return columns_[j].get(static_cast<Index>(i));
  }
  void set(std::size_t i, std::size_t j, const T& v) {
    columns_[j].set(static_cast<Index>(i), v);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nnz();
    return n;
  }

  bool is_zero_matrix() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }

  SparseMatrix transpose() const {
    std::vector<std::vector<std::pair<Index, T>>> buckets(rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& e : columns_[j])
        buckets[e.index].emplace_back(static_cast<Index>(j), e.value);
    SparseMatrix t(cols(), rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (auto& [j, v] : buckets[i]) t.columns_[i].push_back(j, std::move(v));
    return t;
  }

  SparseVector<T> apply(const SparseVector<T>& x) const {
    if (!x.empty() && x.low() >= cols())
      throw DimensionMismatch("vector index exceeds matrix columns");
    std::vector<std::pair<Index, T>> acc;
    for (const auto& e : x)
      for (const auto& f : columns_[e.index])
        acc.emplace_back(f.index, f.value * e.value);
    return SparseVector<T>::from_pairs(std::move(acc));
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
      throw DimensionMismatch("matrix product with incompatible shapes");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.columns_[j] = a.apply(b.columns_[j]);
    return out;
  }

  bool operator==(const SparseMatrix&) const = default;

  std::vector<std::vector<T>> to_dense() const {
    std::vector<std::vector<T>> d(rows_, std::vector<T>(cols(), T(0)));
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& e : columns_[j]) d[e.index][j] = e.value;
    return d;
  }

  template <class U>
  SparseMatrix<U> cast() const {
    SparseMatrix<U> out(rows_, 0);
    for (const auto& c : columns_) out.append_column(c.template cast<U>());
    return out;
  }

 private:
  void check_column(const SparseVector<T>& v) const {
    if (!v.empty() && v.low() >= rows_)
      throw DimensionMismatch("column entry outside the row range");
  }

  std::size_t rows_ = 0;
  std::vector<SparseVector<T>> columns_;
};

using IntMatrix = SparseMatrix<Integer>;
using RatMatrix = SparseMatrix<Rational>;

}  // namespace ihsig
