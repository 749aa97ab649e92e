#include <gtest/gtest.h>

#include "ihsig/ipwitt.hpp"
#include "ihsig/pseudomanifold.hpp"
#include "zoo.hpp"

using namespace ihsig;

namespace {

IPReport ip_of(const std::string& name, bool audit = false) {
  auto doc = zoo::load(name);
  IPOptions opt;
  opt.audit = audit;
  opt.stratification = doc.stratification;
  return check_ip(doc.complex, opt);
}

}  // namespace

TEST(IPWitt, ManifoldsPassVacuously) {
  for (const auto& name : {"boundary_delta3", "boundary_delta4", "rp2", "torus", "rp3", "cp2"}) {
    auto r = ip_of(name);
    EXPECT_TRUE(*r.ip) << name;
    EXPECT_TRUE(r.witt) << name;
    EXPECT_TRUE(r.evidence.empty()) << name;
  }
}

TEST(IPWitt, PinchedTorusIsIP) {
  auto r = ip_of("pinched_torus");
  EXPECT_TRUE(*r.ip);
  EXPECT_TRUE(r.witt);
  ASSERT_EQ(r.evidence.size(), 1u);
  // Codimension 2, so the link is a 1-dimensional pair of circles.
  EXPECT_EQ(r.evidence[0].codimension, 2);
  EXPECT_EQ(r.evidence[0].condition, LinkCondition::TorsionFree);
  EXPECT_TRUE(r.evidence[0].pass);
}

TEST(IPWitt, SuspendedRP3IsWittButNotIP) {
  auto r = ip_of("sigma_rp3");
  EXPECT_FALSE(*r.ip);
  EXPECT_TRUE(r.witt);
  bool found = false;
  for (const auto& e : r.evidence)
    if (!e.pass) {
      EXPECT_EQ(e.condition, LinkCondition::TorsionFree);
      EXPECT_EQ(e.degree, 1);
      EXPECT_EQ(e.group, (HomologyGroup{0, {2}}));
      found = true;
    }
  EXPECT_TRUE(found);
  auto w = check_witt(zoo::load("sigma_rp3").complex);
  EXPECT_FALSE(w.ip.has_value());
  EXPECT_TRUE(w.witt);
  EXPECT_EQ(w.field, Field::Q);
}

TEST(IPWitt, SuspendedTorusIsNeither) {
  auto r = ip_of("sigma_t2");
  EXPECT_FALSE(*r.ip);
  EXPECT_FALSE(r.witt);
  ASSERT_FALSE(r.evidence.empty());
  EXPECT_EQ(r.evidence[0].condition, LinkCondition::Vanishing);
  EXPECT_EQ(r.evidence[0].group, (HomologyGroup{2, {}}));
  EXPECT_FALSE(check_witt(zoo::load("sigma_t2").complex).witt);
}

TEST(IPWitt, AuditExaminesEveryStratumCellWithFullTables) {
  auto quick = ip_of("sigma_t2");
  auto audit = ip_of("sigma_t2", true);
  EXPECT_EQ(*quick.ip, *audit.ip);
  EXPECT_TRUE(audit.audit);
  EXPECT_GE(audit.evidence.size(), quick.evidence.size());
  for (const auto& e : audit.evidence) EXPECT_EQ(e.full_table.size(), 3u);
}

TEST(IPWitt, VerdictIndependentOfStratification) {
  auto skeletal = check_ip(zoo::load("pinched_torus_user").complex);
  auto user = ip_of("pinched_torus_user");
  EXPECT_EQ(*skeletal.ip, *user.ip);
  EXPECT_EQ(skeletal.witt, user.witt);
}

TEST(IPWitt, BoundaryOfPinchedTorusTimesIntervalIsIP) {
  auto v = check_boundary_pseudomanifold(zoo::load("pinched_torus_x_interval").complex);
  ASSERT_TRUE(v.ok);
  EXPECT_TRUE(*check_ip(v.decomposition.boundary).ip);
}

TEST(IPWitt, NeedsPseudomanifold) {
  EXPECT_THROW(check_ip(zoo::load("wedge_of_triangles").complex), NotPseudomanifold);
}
