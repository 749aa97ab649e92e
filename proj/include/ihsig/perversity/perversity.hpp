#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihsig/pseudomanifold/stratification.hpp"

namespace ihsig {

enum class PerversityName { Zero, LowerMiddle, UpperMiddle, Top };

inline int classical_perversity(PerversityName name, int codim) {
  if (codim < 2)
    throw CodimTooSmall("classical perversities start at codimension 2, got " +
                        std::to_string(codim));
  switch (name) {
    case PerversityName::Zero: return 0;
    case PerversityName::LowerMiddle: return (codim - 2) / 2;
    case PerversityName::UpperMiddle: return (codim - 1) / 2;
    case PerversityName::Top: return codim - 2;
  }
  return 0;
}

inline const char* perversity_cli_name(PerversityName n) {
  switch (n) {
    case PerversityName::Zero: return "zero";
    case PerversityName::LowerMiddle: return "lower-middle";
    case PerversityName::UpperMiddle: return "upper-middle";
    case PerversityName::Top: return "top";
  }
  return "";
}

inline std::optional<PerversityName> parse_perversity_name(const std::string& s) {
  for (auto n : {PerversityName::Zero, PerversityName::LowerMiddle,
                 PerversityName::UpperMiddle, PerversityName::Top})
    if (s == perversity_cli_name(n)) return n;
  return std::nullopt;
}

struct StratumInfo {
  std::size_t id = 0;
  int codimension = 0;
  bool regular = true;
};

inline std::vector<StratumInfo> strata_info(const Stratification& st) {
  std::vector<StratumInfo> out;
  for (const auto& s : st.strata) out.push_back({s.id, s.codimension, s.regular});
  return out;
}

class Perversity {
 public:
  enum class Kind { Classical, General };

  static Perversity classical(PerversityName n) {
    Perversity p;
    p.kind_ = Kind::Classical;
    p.name_ = n;
    p.tag_ = perversity_cli_name(n);
    return p;
  }

  static Perversity from_codimensions(std::map<int, int> values, std::string tag) {
    Perversity p;
    p.kind_ = Kind::Classical;
    p.codim_values_ = std::move(values);
    p.tag_ = std::move(tag);
    return p;
  }

  static Perversity general(std::map<std::size_t, int> values, std::string tag) {
    Perversity p;
    p.kind_ = Kind::General;
    p.general_values_ = std::move(values);
    p.tag_ = std::move(tag);
    return p;
  }

  Kind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }
  std::optional<PerversityName> name() const { return name_; }
  const std::map<std::size_t, int>& general_values() const { return general_values_; }

  int value(const StratumInfo& s) const {
    if (s.regular) return 0;
    if (kind_ == Kind::General) {
      auto it = general_values_.find(s.id);
      if (it == general_values_.end())
        throw StrataMismatch("perversity '" + tag_ + "' has no value on stratum " +
                             std::to_string(s.id));
      return it->second;
    }
    if (name_) return classical_perversity(*name_, s.codimension);
    auto it = codim_values_.find(s.codimension);
    if (it == codim_values_.end())
      throw InvalidPerversity("perversity '" + tag_ + "' is undefined in codimension " +
                              std::to_string(s.codimension));
    return it->second;
  }

 private:
  Kind kind_ = Kind::Classical;
  std::optional<PerversityName> name_;
  std::map<int, int> codim_values_;
  std::map<std::size_t, int> general_values_;
  std::string tag_;
};

inline void validate_perversity(const Perversity& p, const std::vector<StratumInfo>& strata) {
  for (const auto& s : strata) {
    if (s.regular) {
      if (p.kind() == Perversity::Kind::General) {
        auto it = p.general_values().find(s.id);
        if (it != p.general_values().end() && it->second != 0)
          throw InvalidPerversity("perversity must vanish on the regular stratum " +
                                  std::to_string(s.id));
      }
      continue;
    }
    if (s.codimension < 2)
      throw CodimTooSmall("singular stratum " + std::to_string(s.id) + " has codimension " +
                          std::to_string(s.codimension));
    int v = p.value(s);
    if (v < 0 || v > s.codimension - 2)
      throw InvalidPerversity("perversity value " + std::to_string(v) + " on stratum " +
                              std::to_string(s.id) + " of codimension " +
                              std::to_string(s.codimension) + " lies outside [0, " +
                              std::to_string(s.codimension - 2) + "]");
  }
}

inline bool perversity_leq(const Perversity& p, const Perversity& q,
                           const std::vector<StratumInfo>& strata) {
  std::map<std::size_t, int> singular;
  for (const auto& s : strata)
    if (!s.regular) singular[s.id] = s.codimension;
  for (const Perversity* x : {&p, &q})
    if (x->kind() == Perversity::Kind::General)
      for (const auto& [id, v] : x->general_values())
        if (!singular.count(id) && v != 0)
          throw StrataMismatch("perversity '" + x->tag() + "' refers to stratum " +
                               std::to_string(id) + ", which is not a singular stratum");
  for (const auto& s : strata)
    if (!s.regular && p.value(s) > q.value(s)) return false;
  return true;
}

// Strata of a product Y_1 x ... x Y_k, each described by its factors.
struct FactorStratum {
  int codimension = 0;
  bool regular = true;
};

struct ProductStratumInfo {
  std::size_t id = 0;
  std::vector<FactorStratum> factors;

  StratumInfo info() const {
    StratumInfo s;
    s.id = id;
    for (const auto& f : factors) {
      s.codimension += f.codimension;
      s.regular = s.regular && f.regular;
    }
    return s;
  }
};

inline std::vector<StratumInfo> strata_info(const std::vector<ProductStratumInfo>& strata) {
  std::vector<StratumInfo> out;
  for (const auto& s : strata) out.push_back(s.info());
  return out;
}

inline int upper_middle(int codim) { return classical_perversity(PerversityName::UpperMiddle, codim); }

// Q over consecutive blocks: each block is one factor of codimension equal to
// the sum of its members.  The all-regular stratum receives 0.
inline int partition_value(const std::vector<FactorStratum>& factors,
                           const std::vector<std::size_t>& block_sizes) {
  std::size_t pos = 0;
  int singular_blocks = 0, sum = 0;
  for (std::size_t b : block_sizes) {
    int codim = 0;
    for (std::size_t i = 0; i < b; ++i) codim += factors.at(pos + i).codimension;
    pos += b;
    if (codim > 0) {
      ++singular_blocks;
      sum += upper_middle(codim);
    }
  }
  if (pos != factors.size())
    throw NotProductStratification("partition blocks do not cover the factors");
  if (singular_blocks == 0) return 0;
  return 2 * singular_blocks - 2 + sum;
}

inline Perversity partition_perversity(const std::vector<ProductStratumInfo>& strata,
                                       const std::vector<std::size_t>& block_sizes,
                                       std::string tag) {
  std::map<std::size_t, int> values;
  for (const auto& s : strata) values[s.id] = partition_value(s.factors, block_sizes);
  return Perversity::general(std::move(values), std::move(tag));
}

inline Perversity partition_perversity_Qk(const std::vector<ProductStratumInfo>& strata) {
  if (strata.empty()) return Perversity::general({}, "Q_0");
  const std::size_t k = strata.front().factors.size();
  for (const auto& s : strata)
    if (s.factors.size() != k)
      throw NotProductStratification("strata have different numbers of factors");
  return partition_perversity(strata, std::vector<std::size_t>(k, 1), "Q_" + std::to_string(k));
}

inline int q_nn_value(const FactorStratum& a, const FactorStratum& b) {
  if (!a.regular && !b.regular) return upper_middle(a.codimension) + upper_middle(b.codimension) + 2;
  if (!a.regular) return upper_middle(a.codimension);
  if (!b.regular) return upper_middle(b.codimension);
  return 0;
}

inline Perversity product_perversity_Qnn(const std::vector<ProductStratumInfo>& strata) {
  std::map<std::size_t, int> values;
  for (const auto& s : strata) {
    if (s.factors.size() != 2)
      throw NotProductStratification("Q_{n,n} needs strata of the form S1 x S2");
    values[s.id] = q_nn_value(s.factors[0], s.factors[1]);
  }
  return Perversity::general(std::move(values), "Q_nn");
}

}  // namespace ihsig
