#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ihsig/complex/simplicial_complex.hpp"
#include "json.hpp"

namespace ihsig {

// One listed skeleton level X^i, given by generating simplices.
struct StratificationLevel {
  int dimension = 0;
  std::vector<Simplex> simplices;
};

struct ComplexDocument {
  SimplicialComplex complex;
  std::optional<std::vector<StratificationLevel>> stratification;
  std::optional<std::map<std::size_t, int>> orientation;  // facet index -> +-1
};

namespace detail {

inline Simplex parse_simplex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where + ": a simplex must be a nonempty integer list");
  std::vector<Vertex> v;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw ParseError(where + ": vertex ids must be non-negative integers");
    v.push_back(static_cast<Vertex>(x.get<long long>()));
  }
  return Simplex::from_unsorted(std::move(v));
}

inline std::string simplex_json(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace detail

inline std::vector<StratificationLevel> parse_stratification_levels(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("'stratification' must be a list");
  std::vector<StratificationLevel> levels;
  for (const auto& lv : j) {
    if (!lv.is_object() || !lv.contains("dimension") || !lv.contains("simplices") ||
        !lv["dimension"].is_number_integer() || !lv["simplices"].is_array())
      throw ParseError("stratification levels need 'dimension' and 'simplices'");
    StratificationLevel level;
    level.dimension = lv["dimension"].get<int>();
    for (const auto& s : lv["simplices"])
      level.simplices.push_back(detail::parse_simplex(s, "stratification simplex"));
    levels.push_back(std::move(level));
  }
  return levels;
}

inline ComplexDocument parse_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("complex document must be a JSON object");
  for (const char* key : {"name", "dimension", "facets"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  if (!j["name"].is_string()) throw ParseError("'name' must be a string");
  if (!j["dimension"].is_number_integer()) throw ParseError("'dimension' must be an integer");
  if (!j["facets"].is_array()) throw ParseError("'facets' must be a list");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "dimension" && key != "facets" && key != "labels" &&
        key != "stratification" && key != "orientation")
      throw ParseError("unknown field '" + key + "'");

  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < j["facets"].size(); ++i)
    facets.push_back(detail::parse_simplex(j["facets"][i], "facet " + std::to_string(i)));
  ComplexDocument doc;
  doc.complex = SimplicialComplex::from_facets(std::move(facets), j["name"].get<std::string>());
  if (doc.complex.dim() != j["dimension"].get<int>())
    throw ParseError("declared dimension " + std::to_string(j["dimension"].get<int>()) +
                     " differs from the facet dimension " + std::to_string(doc.complex.dim()));

  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& x : j["labels"]) {
      if (!x.is_string()) throw ParseError("labels must be strings");
      labels.push_back(x.get<std::string>());
    }
    doc.complex.set_labels(std::move(labels));
  }
  if (j.contains("stratification")) doc.stratification = parse_stratification_levels(j["stratification"]);
  if (j.contains("orientation")) {
    if (!j["orientation"].is_object()) throw ParseError("'orientation' must be an object");
    std::map<std::size_t, int> signs;
    for (const auto& [key, value] : j["orientation"].items()) {
      std::size_t idx;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("orientation keys must be facet indices, got '" + key + "'");
      }
      if (idx >= doc.complex.facets().size())
        throw ParseError("orientation facet index out of range: " + key);
      if (!value.is_number_integer() || (value.get<int>() != 1 && value.get<int>() != -1))
        throw ParseError("orientation signs must be 1 or -1");
      signs[idx] = value.get<int>();
    }
    doc.orientation = std::move(signs);
  }
  return doc;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ComplexDocument load_complex_file(const std::string& path) {
  return parse_complex(read_text_file(path));
}

// A stratification file is either a bare list of levels or any object with a
// "stratification" list (for example a complex document).
inline std::vector<StratificationLevel> load_stratification_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  if (j.is_object() && j.contains("stratification")) return parse_stratification_levels(j["stratification"]);
  return parse_stratification_levels(j);
}

inline std::string save_complex(const ComplexDocument& doc) {
  const auto& k = doc.complex;
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << nlohmann::json(k.name()).dump() << ",\n";
  out << "  \"dimension\": " << k.dim() << ",\n";
  out << "  \"facets\": [";
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    out << (i ? ",\n    " : "\n    ") << detail::simplex_json(k.facets()[i]);
  out << (k.facets().empty() ? "]" : "\n  ]");
  if (!k.labels().empty()) out << ",\n  \"labels\": " << nlohmann::json(k.labels()).dump();
  if (doc.stratification) {
    out << ",\n  \"stratification\": [";
    const auto& levels = *doc.stratification;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      out << (i ? ",\n    " : "\n    ") << "{\"dimension\": " << levels[i].dimension
          << ", \"simplices\": [";
      for (std::size_t s = 0; s < levels[i].simplices.size(); ++s)
        out << (s ? ", " : "") << detail::simplex_json(levels[i].simplices[s]);
      out << "]}";
    }
    out << (levels.empty() ? "]" : "\n  ]");
  }
  if (doc.orientation) {
    out << ",\n  \"orientation\": {";
    bool first = true;
    for (const auto& [idx, sign] : *doc.orientation) {
      out << (first ? "" : ", ") << "\"" << idx << "\": " << sign;
      first = false;
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

inline void save_complex_file(const ComplexDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << save_complex(doc);
}

}  // namespace ihsig
