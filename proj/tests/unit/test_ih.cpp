#include <gtest/gtest.h>

#include "ihsig/complex.hpp"
#include "ihsig/ih.hpp"
#include "ihsig/pseudomanifold.hpp"
#include "topology_oracles.hpp"
#include "zoo.hpp"

using namespace ihsig;

namespace {

using G = HomologyGroup;
using Table = std::vector<G>;

const std::vector<PerversityName> kAll{PerversityName::Zero, PerversityName::LowerMiddle,
                                       PerversityName::UpperMiddle, PerversityName::Top};

Table ih_table(const ComplexDocument& doc, PerversityName p, Field f = Field::Z,
               bool relative = false) {
  auto st = skeletal_stratification(doc.complex, doc.stratification);
  return ih(doc.complex, st, Perversity::classical(p), f, relative).table();
}

Table from_oracle(const std::vector<oracle::Group>& g) {
  Table out;
  for (const auto& x : g) out.push_back({x.betti, x.torsion});
  return out;
}

Table cone_formula(const std::string& link_name, int p) {
  auto raw = oracle::load_raw(zoo::path(link_name));
  return from_oracle(oracle::suspension_cone_formula(oracle::homology(raw.facets), p));
}

}  // namespace

TEST(IH, ManifoldsAgreeWithHomologyForEveryPerversity) {
  for (const auto& name : {"boundary_delta3", "torus", "rp2", "rp3"}) {
    auto doc = zoo::load(name);
    auto expected = from_oracle(oracle::homology(oracle::load_raw(zoo::path(name)).facets));
    for (auto p : kAll) EXPECT_EQ(ih_table(doc, p), expected) << name << " " << perversity_cli_name(p);
  }
}

TEST(IH, SuspendedTorusFollowsConeFormula) {
  auto doc = zoo::load("sigma_t2");
  // Codimension-3 cone points: 0 = m-bar(3), 1 = n-bar(3) = t-bar(3).
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle), cone_formula("torus", 0));
  EXPECT_EQ(ih_table(doc, PerversityName::Zero), cone_formula("torus", 0));
  EXPECT_EQ(ih_table(doc, PerversityName::UpperMiddle), cone_formula("torus", 1));
  EXPECT_EQ(ih_table(doc, PerversityName::Top), cone_formula("torus", 1));
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle), (Table{{1, {}}, {2, {}}, {0, {}}, {1, {}}}));
  EXPECT_EQ(ih_table(doc, PerversityName::UpperMiddle), (Table{{1, {}}, {0, {}}, {2, {}}, {1, {}}}));
}

TEST(IH, SuspendedRP3FollowsConeFormula) {
  auto doc = zoo::load("sigma_rp3");
  for (auto p : kAll) {
    int value = classical_perversity(p, 4);
    EXPECT_EQ(ih_table(doc, p), cone_formula("rp3", value)) << perversity_cli_name(p);
  }
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle),
            (Table{{1, {}}, {0, {2}}, {0, {}}, {0, {}}, {1, {}}}));
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle, Field::Q),
            (Table{{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}}));
}

TEST(IH, PinchedTorusIsHomologyOfNormalization) {
  auto raw = oracle::load_raw(zoo::path("pinched_torus"));
  auto expected = from_oracle(oracle::homology(oracle::normalize_surface(raw.facets)));
  EXPECT_EQ(expected, (Table{{1, {}}, {0, {}}, {1, {}}}));
  for (const auto& name : {"pinched_torus", "pinched_torus_user"})
    for (auto p : kAll) EXPECT_EQ(ih_table(zoo::load(name), p), expected) << name;
  // Ordinary homology differs: H_1 = Z.
  EXPECT_EQ(simplicial_homology(zoo::load("pinched_torus").complex)[1], (G{1, {}}));
}

TEST(IH, PinchedTorusTimesInterval) {
  auto doc = zoo::load("pinched_torus_x_interval");
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle),
            (Table{{1, {}}, {0, {}}, {1, {}}, {0, {}}}));
  // Relative to both ends: the pinched torus shifted up by one.
  EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle, Field::Z, true),
            (Table{{0, {}}, {1, {}}, {0, {}}, {1, {}}}));
}

TEST(IH, AllowabilityMatchesDirectInequality) {
  for (const auto& name : {"pinched_torus", "sigma_t2", "sigma_rp3"}) {
    auto k = zoo::load(name).complex;
    auto st = skeletal_stratification(k);
    // Singular strata here are isolated points: a k-simplex meets one in a
    // vertex or not at all.
    std::vector<Vertex> points;
    for (auto id : st.singular_ids()) {
      ASSERT_EQ(st.strata[id].dimension, 0);
      points.push_back(st.strata[id].closure_vertices.at(0));
    }
    const int c = k.dim();
    for (auto p : kAll) {
      int pv = classical_perversity(p, c);
      for (int d = 0; d <= k.dim(); ++d) {
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < k.count(d); ++i) {
          auto s = k.simplex(d, i);
          bool hits = std::any_of(points.begin(), points.end(), [&](Vertex v) {
            return std::find(s.begin(), s.end(), v) != s.end();
          });
          if (!hits || 0 <= d - c + pv) expected.push_back(i);
        }
        EXPECT_EQ(allowable_simplices(k, st, Perversity::classical(p), d), expected)
            << name << " degree " << d;
      }
    }
  }
  auto k = zoo::load("torus").complex;
  EXPECT_THROW(allowable_simplices(k, skeletal_stratification(k),
                                   Perversity::classical(PerversityName::Zero), 3),
               DegreeOutOfRange);
}

TEST(IH, MiddlePerversitiesAgreeOnIPMembers) {
  for (const auto& name : zoo::ip_members()) {
    if (name == "cp2" || name == "s2xs2") continue;  // manifolds, covered by the acceptance run
    auto doc = zoo::load(name);
    EXPECT_EQ(ih_table(doc, PerversityName::LowerMiddle), ih_table(doc, PerversityName::UpperMiddle))
        << name;
  }
}

TEST(IH, GeneratorsAreAllowableCycles) {
  auto doc = zoo::load("sigma_t2");
  auto st = skeletal_stratification(doc.complex);
  auto ic = ic_complex(doc.complex, st, Perversity::classical(PerversityName::LowerMiddle), false);
  auto r = ih(ic, Field::Z, true);
  for (const auto& d : r.degrees) {
    EXPECT_EQ(d.generators.size(), d.betti);
    for (const auto& g : d.generators) {
      Chain c = vector_to_chain(doc.complex, d.degree, g);
      EXPECT_TRUE(c.boundary().empty());
      for (const auto& [s, x] : c.terms()) EXPECT_TRUE(is_allowable(s.span(), ic.constraints()));
    }
  }
}
