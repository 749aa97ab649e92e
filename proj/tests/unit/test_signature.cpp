#include <gtest/gtest.h>

#include "ihsig/signature.hpp"
#include "topology_oracles.hpp"
#include "zoo.hpp"

using namespace ihsig;

namespace {

DualityOptions backend(DualityBackend b) {
  DualityOptions o;
  o.backend = b;
  return o;
}

ConditionReport conditions(const std::string& name, bool full, Field field = Field::Q) {
  auto doc = zoo::load(name);
  auto xi = fundamental_cycle(doc.complex, zoo::orientation(doc));
  auto s = symmetric_complex(doc.complex, xi);
  ConditionOptions opt;
  opt.chain_map = full;
  opt.kunneth = full;
  opt.duality.field = field;
  return verify_symmetric_conditions(s, opt);
}

}  // namespace

TEST(FundamentalCycle, ClosedAndRelative) {
  auto t = zoo::load("torus");
  auto xi = fundamental_cycle(t.complex, zoo::orientation(t));
  EXPECT_FALSE(xi.relative);
  EXPECT_EQ(xi.xi.size(), 14u);
  EXPECT_TRUE(xi.xi.boundary().empty());
  auto px = zoo::load("pinched_torus_x_interval").complex;
  EXPECT_TRUE(fundamental_cycle(px).relative);
  EXPECT_THROW(fundamental_cycle(zoo::load("rp2").complex), NonOrientable);
  EXPECT_THROW(symmetric_complex(px, fundamental_cycle(px)), NotClosed);
}

TEST(SymmetricComplex, SphereSatisfiesAllConditions) {
  auto r = conditions("boundary_delta3", true, Field::Z);
  EXPECT_TRUE(r.closed);
  EXPECT_TRUE(r.phi_allowable);
  EXPECT_TRUE(r.phi_invariant);
  EXPECT_TRUE(r.beta_in_d);
  EXPECT_TRUE(r.chain_map);
  EXPECT_GT(r.chain_map_pairs, 0u);
  ASSERT_TRUE(r.kunneth_holds.has_value());
  EXPECT_TRUE(*r.kunneth_holds);
  EXPECT_EQ(r.kunneth_expected, 2u);
  EXPECT_TRUE(r.nondegenerate());
  EXPECT_TRUE(r.duality.koszul_symmetric);
  ASSERT_TRUE(r.duality.integral_unimodular.has_value());
  EXPECT_TRUE(*r.duality.integral_unimodular);
  for (const auto& [i, m] : r.duality.matrices) {
    if (m.rows) {
      EXPECT_EQ(abs(determinant(m)), 1) << i;
    }
  }
}

TEST(SymmetricComplex, PinchedTorusSatisfiesAllConditions) {
  auto r = conditions("pinched_torus", true, Field::Z);
  EXPECT_TRUE(r.closed && r.phi_allowable && r.phi_invariant && r.beta_in_d && r.chain_map);
  EXPECT_TRUE(*r.kunneth_holds);
  EXPECT_EQ(r.kunneth_expected, 2u);
  EXPECT_TRUE(r.nondegenerate());
  EXPECT_TRUE(*r.duality.integral_unimodular);
}

TEST(SymmetricComplex, TorusPairingIsAntisymmetricInMiddleDegree) {
  auto r = conditions("torus", false);
  ASSERT_TRUE(r.nondegenerate());
  const auto& m1 = r.duality.matrices.at(1);
  ASSERT_EQ(m1.rows, 2u);
  DenseMatrix neg = m1.transpose();
  for (auto& x : neg.data) x = -x;
  EXPECT_EQ(m1, neg);
  EXPECT_NE(determinant(m1), 0);
}

TEST(SymmetricComplex, SuspendedTorusIsDegenerate) {
  auto doc = zoo::load("sigma_t2");
  auto s = symmetric_complex(doc.complex, fundamental_cycle(doc.complex, zoo::orientation(doc)));
  ConditionOptions opt;
  opt.chain_map = false;
  auto r = verify_symmetric_conditions(s, opt);
  EXPECT_TRUE(r.closed);
  EXPECT_FALSE(r.nondegenerate());
  EXPECT_FALSE(r.duality.failure.empty());
}

TEST(Duality, BackendsAgreeOnManifolds) {
  for (const auto& name : {"boundary_delta3", "torus", "rp3"}) {
    auto doc = zoo::load(name);
    auto s = symmetric_complex(doc.complex, fundamental_cycle(doc.complex, zoo::orientation(doc)));
    auto q = duality_matrices(s, backend(DualityBackend::Quotient));
    auto c = duality_matrices(s, backend(DualityBackend::Cocycle));
    EXPECT_EQ(q.backend, DualityBackend::Quotient);
    EXPECT_EQ(c.backend, DualityBackend::Cocycle);
    ASSERT_TRUE(c.cocycles_verified.has_value());
    EXPECT_TRUE(*c.cocycles_verified);
    for (const auto& [i, m] : q.matrices) EXPECT_EQ(m, c.matrices.at(i)) << name << " " << i;
  }
}

TEST(Duality, CocycleBackendRefusesSingularSpaces) {
  auto doc = zoo::load("pinched_torus");
  auto s = symmetric_complex(doc.complex, fundamental_cycle(doc.complex, zoo::orientation(doc)));
  EXPECT_THROW(duality_matrices(s, backend(DualityBackend::Cocycle)), Error);
}

TEST(Signature, DimensionRule) {
  for (const auto& name : {"boundary_delta3", "torus", "rp3", "pinched_torus"}) {
    auto doc = zoo::load(name);
    auto r = signature_report(doc.complex, zoo::orientation(doc));
    EXPECT_TRUE(r.dimension_rule) << name;
    EXPECT_EQ(r.signature, 0) << name;
  }
  EXPECT_THROW(signature(zoo::load("sigma_rp3").complex), NotIP);
  EXPECT_THROW(signature(zoo::load("rp2").complex), NonOrientable);
  EXPECT_THROW(signature(zoo::load("sigma_t2").complex), NotIP);
}

TEST(Signature, FourSphereIsZero) {
  std::vector<Simplex> facets;
  for (Vertex skip = 0; skip < 6; ++skip) {
    std::vector<Vertex> f;
    for (Vertex v = 0; v < 6; ++v)
      if (v != skip) f.push_back(v);
    facets.emplace_back(std::move(f));
  }
  auto s4 = SimplicialComplex::from_facets(std::move(facets), "S4");
  auto r = signature_report(s4, orient(s4));
  EXPECT_FALSE(r.dimension_rule);
  EXPECT_EQ(r.signature, 0);
  ASSERT_TRUE(r.duality.has_value());
  EXPECT_EQ(r.duality->matrices.at(2).rows, 0u);
  EXPECT_EQ(signature(zoo::load("boundary_delta4").complex), 0);
}

TEST(Signature, ComplexProjectivePlaneAgainstCupProduct) {
  auto doc = zoo::load("cp2");
  auto raw = oracle::load_raw(zoo::path("cp2"));
  auto x = oracle::noncobounding_cocycle(raw.facets, 2);
  ASSERT_FALSE(x.empty());
  mpz_class cup = oracle::cup_square_on_cycle(raw.facets, raw.orientation, x);
  ASSERT_NE(cup, 0);
  const long long expected = cup > 0 ? 1 : -1;
  EXPECT_EQ(expected, 1);

  auto o = zoo::orientation(doc);
  auto r = signature_report(doc.complex, o, std::nullopt, backend(DualityBackend::Cocycle));
  EXPECT_EQ(r.signature, expected);
  EXPECT_TRUE(r.duality->nondegenerate);
  EXPECT_TRUE(*r.duality->integral_unimodular);
  EXPECT_EQ(signature_report(doc.complex, o.reversed(), std::nullopt,
                             backend(DualityBackend::Cocycle))
                .signature,
            -expected);
}
