#pragma once

#include "ihsig/ipwitt/ip_witt.hpp"
#include "ihsig/signature/duality.hpp"
#include "json.hpp"

namespace ihsig {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline Json rational_json(Rational x) {
  x.canonicalize();
  if (x.get_den() == 1) return integer_json(x.get_num());
  return x.get_str();
}

inline Json simplex_to_json(const Simplex& s) {
  Json j = Json::array();
  for (Vertex v : s) j.push_back(v);
  return j;
}

inline Json group_json(const HomologyGroup& g) {
  Json t = Json::array();
  for (const auto& x : g.torsion) t.push_back(integer_json(x));
  return {{"betti", g.betti}, {"torsion", t}};
}

inline Json ih_json(const IHResult& r) {
  Json table = Json::array();
  for (const auto& d : r.degrees) {
    Json torsion = Json::array();
    for (const auto& x : d.torsion) torsion.push_back(integer_json(x));
    Json row{{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion}};
    if (!d.generators.empty()) {
      Json gens = Json::array();
      for (const auto& g : d.generators) {
        Json chain = Json::array();
        for (const auto& e : g) chain.push_back({e.index, integer_json(e.value)});
        gens.push_back(chain);
      }
      row["generators"] = gens;
    }
    table.push_back(row);
  }
  return {{"coefficients", field_name(r.field)}, {"relative", r.relative}, {"table", table}};
}

inline Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline Json stratification_json(const SimplicialComplex& k, const Stratification& st) {
  Json strata = Json::array();
  for (const auto& s : st.strata) {
    Json top = Json::array();
    for (auto [d, i] : s.cells)
      if (d == s.dimension) top.push_back(simplex_to_json(k.simplex_at(d, i)));
    strata.push_back({{"id", s.id},
                      {"dimension", s.dimension},
                      {"codimension", s.codimension},
                      {"regular", s.regular},
                      {"cells", s.cells.size()},
                      {"closure_vertices", s.closure_vertices},
                      {"top_simplices", s.regular ? Json::array() : top}});
  }
  Json levels = Json::array();
  for (const auto& lv : st.skeleta(k)) {
    Json simplices = Json::array();
    for (const auto& s : lv.simplices) simplices.push_back(simplex_to_json(s));
    levels.push_back({{"dimension", lv.dimension}, {"simplices", simplices}});
  }
  return {{"source", st.source}, {"strata", strata}, {"skeleta", levels}};
}

inline Json ip_json(const IPReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.evidence) {
    Json row{{"stratum", e.stratum},
             {"codimension", e.codimension},
             {"simplex", simplex_to_json(e.simplex)},
             {"link_f_vector", e.link_f_vector},
             {"degree", e.degree},
             {"group", group_json(e.group)},
             {"condition", condition_name(e.condition)},
             {"pass", e.pass}};
    if (!e.full_table.empty()) {
      Json t = Json::array();
      for (const auto& g : e.full_table) t.push_back(group_json(g));
      row["link_ih"] = t;
    }
    rows.push_back(row);
  }
  Json j;
  if (r.ip) j["verdict"] = *r.ip ? "IP" : "not-IP";
  j["witt_verdict"] = r.witt ? "Witt" : "not-Witt";
  j["orientable"] = r.orientable;
  j["coefficients"] = field_name(r.field);
  j["audit"] = r.audit;
  j["evidence"] = rows;
  return j;
}

inline Json duality_json(const DualityReport& r) {
  Json m = Json::object();
  for (const auto& [i, x] : r.matrices) m[std::to_string(i)] = matrix_json(x);
  Json j{{"coefficients", field_name(r.field)},
         {"backend", backend_name(r.backend)},
         {"dimension", r.dim},
         {"betti", r.betti},
         {"matrices", m},
         {"nondegenerate", r.nondegenerate},
         {"koszul_symmetric", r.koszul_symmetric},
         {"signature", r.signature}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (r.integral_unimodular) j["integral_unimodular"] = *r.integral_unimodular;
  if (r.cocycles_verified) j["cocycles_verified"] = *r.cocycles_verified;
  return j;
}

inline Json conditions_json(const ConditionReport& r) {
  Json j{{"closed", r.closed},
         {"phi_allowable", r.phi_allowable},
         {"phi_invariant", r.phi_invariant},
         {"well_behaved", r.well_behaved},
         {"finite", r.finite},
         {"nondegenerate", r.nondegenerate()}};
  // Checks that were not run are null.
  const bool ran = r.chain_map_pairs > 0;
  j["beta_chain_map"] = ran ? Json(r.chain_map) : Json();
  j["beta_lands_in_D"] = ran ? Json(r.beta_in_d) : Json();
  j["beta_pairs_checked"] = r.chain_map_pairs;
  j["kunneth_expected"] = r.kunneth_expected;
  j["kunneth_rank"] = r.kunneth_rank ? Json(*r.kunneth_rank) : Json();
  j["kunneth_holds"] = r.kunneth_holds ? Json(*r.kunneth_holds) : Json();
  j["duality"] = duality_json(r.duality);
  return j;
}

}  // namespace ihsig
