#pragma once

#include <map>
#include <set>
#include <vector>

#include "ihsig/zlinalg/sparse.hpp"

namespace ihsig {

struct SNFResult {
  IntMatrix U, S, V;
  IntMatrix U_inverse, V_inverse;
  std::size_t rank = 0;
  std::vector<Integer> diagonal;  // nonzero diagonal of S, d1 | d2 | ...
};

namespace detail {

class SmithEngine {
  using Row = std::map<Index, Integer>;

 public:
  SmithEngine(const IntMatrix& a, bool track)
      : m_(a.rows()), n_(a.cols()), rows_(a.rows()), colpat_(a.cols()),
        track_(track), row_done_(a.rows(), 0), col_done_(a.cols(), 0) {
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& e : a.column(j)) {
        rows_[e.index].emplace(static_cast<Index>(j), e.value);
        colpat_[j].insert(e.index);
      }
    if (track_) {
      U_ = identity_rows(m_);
      Uinv_ = identity_rows(m_);
      V_ = identity_rows(n_);
      Vinv_ = identity_rows(n_);
    }
  }

  void run() {
    Index r, c;
    while (pick_pivot(r, c)) {
      eliminate(r, c);
      Integer p = rows_[r].at(c);
      if (p < 0) {
        negate_row(r);
        p = -p;
      }
      rows_[r].clear();
      colpat_[c].clear();
      row_done_[r] = col_done_[c] = 1;
      diag_.push_back(p);
      prow_.push_back(r);
      pcol_.push_back(c);
    }
    fix_divisibility();
  }

  SNFResult result() const {
    SNFResult out;
    out.rank = diag_.size();
    out.diagonal = diag_;
    out.S = IntMatrix(m_, n_);
    for (std::size_t k = 0; k < diag_.size(); ++k) out.S.set(k, k, diag_[k]);
    if (!track_) return out;
    std::vector<Index> rperm = completed(prow_, m_);
    std::vector<Index> cperm = completed(pcol_, n_);
    // U and V_inverse are stored row-wise, V and U_inverse column-wise.
    out.U = IntMatrix(m_, m_);
    out.U_inverse = IntMatrix(m_, m_);
    for (std::size_t k = 0; k < m_; ++k) {
      for (const auto& [j, v] : U_[rperm[k]]) out.U.set(k, j, v);
      SparseVector<Integer> col;
      for (const auto& [i, v] : Uinv_[rperm[k]]) col.push_back(i, v);
      out.U_inverse.set_column(k, std::move(col));
    }
    out.V = IntMatrix(n_, n_);
    out.V_inverse = IntMatrix(n_, n_);
    for (std::size_t k = 0; k < n_; ++k) {
      SparseVector<Integer> col;
      for (const auto& [i, v] : V_[cperm[k]]) col.push_back(i, v);
      out.V.set_column(k, std::move(col));
      for (const auto& [j, v] : Vinv_[cperm[k]]) out.V_inverse.set(k, j, v);
    }
    return out;
  }

 private:
  static std::vector<Row> identity_rows(std::size_t n) {
    std::vector<Row> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i].emplace(static_cast<Index>(i), 1);
    return x;
  }

  static std::vector<Index> completed(const std::vector<Index>& head,
                                      std::size_t n) {
    std::vector<Index> out = head;
    std::vector<char> used(n, 0);
    for (Index h : head) used[h] = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) out.push_back(static_cast<Index>(i));
    return out;
  }

  // x_i += k * x_j
  static void add_multiple(std::vector<Row>& x, Index i, Index j,
                           const Integer& k) {
    for (const auto& [key, v] : x[j]) {
      auto [it, fresh] = x[i].try_emplace(key, 0);
      it->second += k * v;
      if (is_zero(it->second)) x[i].erase(it);
    }
  }

  // (x_i, x_j) <- (a x_i + b x_j, c x_i + d x_j)
  static void combo(std::vector<Row>& x, Index i, Index j, const Integer& a,
                    const Integer& b, const Integer& c, const Integer& d) {
    Row ni, nj;
    std::set<Index> keys;
    for (const auto& kv : x[i]) keys.insert(kv.first);
    for (const auto& kv : x[j]) keys.insert(kv.first);
    Integer zero(0);
    for (Index k : keys) {
      auto pi = x[i].find(k);
      auto pj = x[j].find(k);
      const Integer& u = pi == x[i].end() ? zero : pi->second;
      const Integer& w = pj == x[j].end() ? zero : pj->second;
      Integer nu = a * u + b * w;
      Integer nw = c * u + d * w;
      if (!is_zero(nu)) ni.emplace(k, std::move(nu));
      if (!is_zero(nw)) nj.emplace(k, std::move(nw));
    }
    x[i] = std::move(ni);
    x[j] = std::move(nj);
  }

  static void inverse_combo(std::vector<Row>& x, Index i, Index j,
                            const Integer& a, const Integer& b,
                            const Integer& c, const Integer& d) {
    Integer det = a * d - b * c;
    combo(x, i, j, det * d, -det * c, -det * b, det * a);
  }

  void set_entry(Index r, Index c, Integer v) {
    if (is_zero(v)) {
      rows_[r].erase(c);
      colpat_[c].erase(r);
    } else {
      rows_[r][c] = std::move(v);
      colpat_[c].insert(r);
    }
  }

  void row_add(Index i, Index r, const Integer& k) {
    for (const auto& [c, v] : std::vector<std::pair<Index, Integer>>(
             rows_[r].begin(), rows_[r].end())) {
      auto it = rows_[i].find(c);
      Integer nv = (it == rows_[i].end() ? Integer(0) : it->second) + k * v;
      set_entry(i, c, std::move(nv));
    }
    if (track_) {
      add_multiple(U_, i, r, k);
      add_multiple(Uinv_, r, i, -k);
    }
  }

  void row_combo(Index i, Index j, const Integer& a, const Integer& b,
                 const Integer& c, const Integer& d) {
    std::set<Index> cols;
    for (const auto& kv : rows_[i]) cols.insert(kv.first);
    for (const auto& kv : rows_[j]) cols.insert(kv.first);
    for (Index col : cols) {
      Integer u = get(i, col), w = get(j, col);
      set_entry(i, col, a * u + b * w);
      set_entry(j, col, c * u + d * w);
    }
    if (track_) {
      combo(U_, i, j, a, b, c, d);
      inverse_combo(Uinv_, i, j, a, b, c, d);
    }
  }

  void col_add(Index j, Index c, const Integer& k) {
    for (Index r : std::vector<Index>(colpat_[c].begin(), colpat_[c].end()))
      set_entry(r, j, get(r, j) + k * get(r, c));
    if (track_) {
      add_multiple(V_, j, c, k);
      add_multiple(Vinv_, c, j, -k);
    }
  }

  void col_combo(Index i, Index j, const Integer& a, const Integer& b,
                 const Integer& c, const Integer& d) {
    std::set<Index> rs(colpat_[i].begin(), colpat_[i].end());
    rs.insert(colpat_[j].begin(), colpat_[j].end());
    for (Index r : rs) {
      Integer u = get(r, i), w = get(r, j);
      set_entry(r, i, a * u + b * w);
      set_entry(r, j, c * u + d * w);
    }
    if (track_) {
      combo(V_, i, j, a, b, c, d);
      inverse_combo(Vinv_, i, j, a, b, c, d);
    }
  }

  void negate_row(Index r) {
    for (auto& kv : rows_[r]) kv.second = -kv.second;
    if (track_) {
      for (auto& kv : U_[r]) kv.second = -kv.second;
      for (auto& kv : Uinv_[r]) kv.second = -kv.second;
    }
  }

  Integer get(Index r, Index c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Integer(0) : it->second;
  }

  // Markowitz-style choice: sparsest column, then smallest magnitude,
  // then sparsest row.
  bool pick_pivot(Index& r, Index& c) {
    std::size_t best_count = SIZE_MAX;
    for (std::size_t j = 0; j < n_; ++j) {
      if (col_done_[j] || colpat_[j].empty()) continue;
      if (colpat_[j].size() < best_count) {
        best_count = colpat_[j].size();
        c = static_cast<Index>(j);
        if (best_count == 1) break;
      }
    }
    if (best_count == SIZE_MAX) return false;
    bool found = false;
    Integer best_abs;
    std::size_t best_row = SIZE_MAX;
    for (Index i : colpat_[c]) {
      Integer v = abs(rows_[i].at(c));
      if (!found || v < best_abs ||
          (v == best_abs && rows_[i].size() < best_row)) {
        found = true;
        best_abs = v;
        best_row = rows_[i].size();
        r = i;
      }
    }
    return true;
  }

  void eliminate(Index r, Index c) {
    for (;;) {
      for (Index i : std::vector<Index>(colpat_[c].begin(), colpat_[c].end())) {
        if (i == r) continue;
        Integer a = get(r, c), b = get(i, c);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          row_add(i, r, -(b / a));
        } else {
          GcdTriple e = extended_gcd(a, b);
          row_combo(r, i, e.s, e.t, -(b / e.g), a / e.g);
        }
      }
      bool column_dirty = false;
      std::vector<Index> others;
      for (const auto& kv : rows_[r])
        if (kv.first != c) others.push_back(kv.first);
      for (Index j : others) {
        Integer a = get(r, c), b = get(r, j);
        if (is_zero(b)) continue;
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          col_add(j, c, -(b / a));
        } else {
          GcdTriple e = extended_gcd(a, b);
          col_combo(c, j, e.s, e.t, -(b / e.g), a / e.g);
          column_dirty = true;
        }
      }
      if (!column_dirty) return;
    }
  }

  void fix_divisibility() {
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      if (diag_[i] == 1) continue;
      for (std::size_t j = i + 1; j < diag_.size(); ++j) {
        const Integer a = diag_[i], b = diag_[j];
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
        GcdTriple e = extended_gcd(a, b);
        if (track_) {
          Index pi = prow_[i], pj = prow_[j], qi = pcol_[i], qj = pcol_[j];
          add_multiple(U_, pi, pj, 1);
          add_multiple(Uinv_, pj, pi, -1);
          combo(V_, qi, qj, e.s, e.t, -(b / e.g), a / e.g);
          inverse_combo(Vinv_, qi, qj, e.s, e.t, -(b / e.g), a / e.g);
          Integer k = -(e.t * b / e.g);
          add_multiple(U_, pj, pi, k);
          add_multiple(Uinv_, pi, pj, -k);
        }
        diag_[i] = e.g;
        diag_[j] = a * b / e.g;
        if (diag_[i] == 1) break;
      }
    }
  }

  std::size_t m_, n_;
  std::vector<Row> rows_;
  std::vector<std::set<Index>> colpat_;
  bool track_;
  std::vector<Row> U_, Uinv_, V_, Vinv_;
  std::vector<char> row_done_, col_done_;
  std::vector<Integer> diag_;
  std::vector<Index> prow_, pcol_;
};

}  // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& a) {
  detail::SmithEngine engine(a, true);
  engine.run();
  return engine.result();
}

// Nonzero invariant factors in divisibility order, without transforms.
inline std::vector<Integer> invariant_factors(const IntMatrix& a) {
  detail::SmithEngine engine(a, false);
  engine.run();
  return engine.result().diagonal;
}

}  // namespace ihsig
