#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ihsig/perversity.hpp"
#include "ihsig/pseudomanifold.hpp"
#include "zoo.hpp"

using namespace ihsig;

namespace {

int nbar(int c) { return (c + 1) / 2 - 1; }

// 2s - 2 + sum of n-bar over the singular blocks, written out from scratch.
int q_oracle(const std::vector<int>& codims, const std::vector<std::vector<int>>& blocks) {
  int s = 0, total = 0;
  for (const auto& b : blocks) {
    int c = 0;
    for (int i : b) c += codims[i];
    if (c > 0) {
      ++s;
      total += nbar(c);
    }
  }
  return s ? 2 * s - 2 + total : 0;
}

}  // namespace

TEST(Perversity, ClassicalValues) {
  for (int c = 2; c <= 9; ++c) {
    EXPECT_EQ(classical_perversity(PerversityName::Zero, c), 0);
    EXPECT_EQ(classical_perversity(PerversityName::LowerMiddle, c), (c - 2) / 2);
    EXPECT_EQ(classical_perversity(PerversityName::UpperMiddle, c), nbar(c));
    EXPECT_EQ(classical_perversity(PerversityName::Top, c), c - 2);
    EXPECT_EQ(classical_perversity(PerversityName::LowerMiddle, c) +
                  classical_perversity(PerversityName::UpperMiddle, c),
              c - 2);
  }
}

TEST(Perversity, NamesParse) {
  for (auto n : {PerversityName::Zero, PerversityName::LowerMiddle, PerversityName::UpperMiddle,
                 PerversityName::Top})
    EXPECT_EQ(parse_perversity_name(perversity_cli_name(n)), n);
  EXPECT_FALSE(parse_perversity_name("middle").has_value());
}

TEST(Perversity, ChainOfClassicalOnZoo) {
  const std::vector<PerversityName> chain{PerversityName::Zero, PerversityName::LowerMiddle,
                                          PerversityName::UpperMiddle, PerversityName::Top};
  for (const auto& name : {"pinched_torus", "sigma_t2", "sigma_rp3", "pinched_torus_x_interval"}) {
    auto info = strata_info(skeletal_stratification(zoo::load(name).complex));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto p = Perversity::classical(chain[i]), q = Perversity::classical(chain[i + 1]);
      validate_perversity(p, info);
      EXPECT_TRUE(perversity_leq(p, q, info)) << name;
    }
    bool deep = std::any_of(info.begin(), info.end(),
                            [](const StratumInfo& s) { return !s.regular && s.codimension > 2; });
    EXPECT_EQ(perversity_leq(Perversity::classical(PerversityName::Top),
                             Perversity::classical(PerversityName::Zero), info),
              !deep)
        << name;
  }
}

TEST(Perversity, ValidationErrors) {
  auto info = strata_info(skeletal_stratification(zoo::load("sigma_t2").complex));
  EXPECT_THROW(validate_perversity(Perversity::from_codimensions({{3, 2}}, "big"), info),
               InvalidPerversity);
  EXPECT_THROW(validate_perversity(Perversity::from_codimensions({{2, 0}}, "wrong"), info),
               InvalidPerversity);
  std::map<std::size_t, int> missing;
  EXPECT_THROW(validate_perversity(Perversity::general(missing, "g"), info), StrataMismatch);
  std::vector<StratumInfo> bad{{0, 1, false}};
  EXPECT_THROW(validate_perversity(Perversity::classical(PerversityName::Zero), bad),
               CodimTooSmall);
}

TEST(PartitionPerversity, OneBlockIsUpperMiddle) {
  std::vector<ProductStratumInfo> strata;
  std::size_t id = 0;
  for (int a : {0, 2, 3})
    for (int b : {0, 2, 4})
      for (int c : {0, 3}) strata.push_back({id++, {{a, a == 0}, {b, b == 0}, {c, c == 0}}});
  auto q1 = partition_perversity(strata, {3}, "Q_1");
  for (const auto& s : strata) {
    auto info = s.info();
    EXPECT_EQ(q1.value(info), info.regular ? 0 : nbar(info.codimension));
  }
}

TEST(PartitionPerversity, TwoFactorsGiveQnn) {
  for (const auto& name : {"pinched_torus", "sigma_t2", "sigma_rp3", "torus"}) {
    auto st = skeletal_stratification(zoo::load(name).complex);
    auto ps = product_stratification(st, st);
    auto qnn = product_perversity_Qnn(ps.strata);
    auto q2 = partition_perversity_Qk(ps.strata);
    auto info = ps.info();
    EXPECT_TRUE(perversity_leq(qnn, q2, info) && perversity_leq(q2, qnn, info)) << name;
    EXPECT_TRUE(perversity_leq(qnn, Perversity::classical(PerversityName::Top), info)) << name;
    for (const auto& s : ps.strata)
      EXPECT_EQ(q2.value(s.info()),
                q_oracle({s.factors[0].codimension, s.factors[1].codimension}, {{0}, {1}}));
  }
}

TEST(PartitionPerversity, RefinementMonotonicity) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> codim(0, 5), count(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = count(rng);
    std::vector<int> codims(k);
    for (int& c : codims) {
      c = codim(rng);
      if (c == 1) c = 0;
    }
    // Random set partition, then a random refinement of it.
    std::vector<int> label(k);
    for (int i = 0; i < k; ++i) label[i] = std::uniform_int_distribution<int>(0, i)(rng);
    std::map<int, std::vector<int>> coarse_map;
    for (int i = 0; i < k; ++i) coarse_map[label[i]].push_back(i);
    std::vector<std::vector<int>> coarse, fine;
    for (auto& [l, b] : coarse_map) {
      coarse.push_back(b);
      std::shuffle(b.begin(), b.end(), rng);
      std::size_t cut = std::uniform_int_distribution<std::size_t>(1, b.size())(rng);
      fine.emplace_back(b.begin(), b.begin() + static_cast<long>(cut));
      if (cut < b.size()) fine.emplace_back(b.begin() + static_cast<long>(cut), b.end());
    }
    // Put the factors in coarse-block order so both partitions are consecutive.
    std::vector<int> order;
    for (const auto& b : fine) order.insert(order.end(), b.begin(), b.end());
    std::vector<FactorStratum> factors;
    for (int i : order) factors.push_back({codims[i], codims[i] == 0});
    std::vector<std::size_t> fine_sizes, coarse_sizes;
    for (const auto& b : fine) fine_sizes.push_back(b.size());
    for (const auto& b : coarse) coarse_sizes.push_back(b.size());
    std::vector<ProductStratumInfo> strata{{0, factors}};
    auto qc = partition_perversity(strata, coarse_sizes, "coarse");
    auto qf = partition_perversity(strata, fine_sizes, "fine");
    EXPECT_TRUE(perversity_leq(qc, qf, strata_info(strata)));
    EXPECT_EQ(qc.value(strata[0].info()), q_oracle(codims, coarse));
    EXPECT_EQ(qf.value(strata[0].info()), q_oracle(codims, fine));
  }
}

TEST(PartitionPerversity, Errors) {
  std::vector<ProductStratumInfo> strata{{0, {{2, false}, {0, true}}}};
  EXPECT_THROW(partition_perversity(strata, {1}, "short"), NotProductStratification);
  std::vector<ProductStratumInfo> ragged{{0, {{2, false}}}, {1, {{2, false}, {0, true}}}};
  EXPECT_THROW(partition_perversity_Qk(ragged), NotProductStratification);
  EXPECT_THROW(product_perversity_Qnn(ragged), NotProductStratification);
}
