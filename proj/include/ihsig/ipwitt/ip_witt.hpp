#pragma once

#include "ihsig/complex/constructions.hpp"
#include "ihsig/ih/ih.hpp"
#include "ihsig/pseudomanifold/orientation.hpp"
#include "ihsig/pseudomanifold/stratification.hpp"

namespace ihsig {

enum class LinkCondition { Vanishing, TorsionFree };

inline const char* condition_name(LinkCondition c) {
  return c == LinkCondition::Vanishing ? "vanishing" : "torsion-free";
}

struct EvidenceRow {
  std::size_t stratum = 0;
  int codimension = 0;
  Simplex simplex;  // the stratum simplex whose link was examined
  std::vector<std::size_t> link_f_vector;
  int degree = 0;
  HomologyGroup group;
  LinkCondition condition = LinkCondition::Vanishing;
  bool pass = true;
  std::vector<HomologyGroup> full_table;  // audit mode only
};

struct IPReport {
  std::optional<bool> ip;  // unset for the rational survey
  bool witt = true;
  bool orientable = true;
  bool audit = false;
  Field field = Field::Z;
  std::vector<EvidenceRow> evidence;
};

struct IPOptions {
  bool audit = false;
  std::optional<std::vector<StratificationLevel>> stratification;
};

namespace detail {

inline std::optional<EvidenceRow> link_evidence(const SimplicialComplex& k, const Stratum& s,
                                                const Simplex& cell, Field field, bool witt_only,
                                                bool audit) {
  SimplicialComplex lk = link(k, cell);
  const int c = s.codimension;
  const bool even = (c % 2) == 1;  // link dimension c-1
  if (witt_only && !even) return std::nullopt;
  EvidenceRow row;
  row.stratum = s.id;
  row.codimension = c;
  row.simplex = cell;
  row.link_f_vector = lk.f_vector();
  row.condition = even ? LinkCondition::Vanishing : LinkCondition::TorsionFree;
  row.degree = even ? (c - 1) / 2 : c / 2 - 1;

  Stratification lst = skeletal_stratification(lk);
  ICComplex ic = ic_complex(lk, lst, Perversity::classical(PerversityName::LowerMiddle), false);
  if (audit) {
    for (int d = 0; d <= lk.dim(); ++d) row.full_table.push_back(ih_group(ic, d, field));
    row.group = row.full_table[row.degree];
  } else {
    row.group = ih_group(ic, row.degree, field);
  }
  row.pass = even ? row.group.betti == 0 && row.group.torsion.empty() : row.group.torsion.empty();
  return row;
}

inline IPReport link_survey(const SimplicialComplex& k, const IPOptions& opt, Field field,
                            bool witt_only) {
  auto verdict = check_boundary_pseudomanifold(k);
  if (!verdict.ok) throw NotPseudomanifold(verdict.reason);
  const auto& bd = verdict.decomposition;
  Stratification st = skeletal_stratification(k, opt.stratification);

  IPReport r;
  r.audit = opt.audit;
  r.field = field;
  r.orientable = try_orient(k).orientation.has_value();
  for (const auto& s : st.strata) {
    if (s.regular) continue;
    for (auto [d, i] : s.cells) {
      if (d != s.dimension || bd.on_boundary[d][i]) continue;
      auto row = link_evidence(k, s, k.simplex_at(d, i), field, witt_only, opt.audit);
      if (row) r.evidence.push_back(std::move(*row));
      if (!opt.audit) break;
    }
  }
  if (!witt_only) r.ip = true;
  for (const auto& row : r.evidence) {
    if (!row.pass && !witt_only) r.ip = false;
    if (row.condition == LinkCondition::Vanishing && row.group.betti != 0) r.witt = false;
  }
  return r;
}

}  // namespace detail

// Integral link conditions; the Witt verdict is read off the same rows since
// rational rank equals integral betti number.
inline IPReport check_ip(const SimplicialComplex& k, const IPOptions& opt = {}) {
  return detail::link_survey(k, opt, Field::Z, false);
}

// Rational variant: only even-dimensional links are examined.
inline IPReport check_witt(const SimplicialComplex& k, const IPOptions& opt = {}) {
  return detail::link_survey(k, opt, Field::Q, true);
}

}  // namespace ihsig
