#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ihsig/io/report_json.hpp"
#include "zoo.hpp"

using namespace ihsig;

namespace {

std::string temp_file(const std::string& text) {
  std::string path = testing::TempDir() + "ihsig_levels.json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(ReportJson, Scalars) {
  EXPECT_EQ(integer_json(Integer(-7)).dump(), "-7");
  Integer big("123456789012345678901234567890");
  EXPECT_EQ(integer_json(big).dump(), "\"123456789012345678901234567890\"");
  EXPECT_EQ(rational_json(Rational(6, 4)).dump(), "\"3/2\"");
  EXPECT_EQ(rational_json(Rational(4, 2)).dump(), "2");
}

TEST(ReportJson, TorsionIsAnInvariantFactorList) {
  HomologyGroup g{1, {Integer(2), Integer(6)}};
  EXPECT_EQ(group_json(g).dump(), R"({"betti":1,"torsion":[2,6]})");
}

TEST(ReportJson, IHTableOrder) {
  auto doc = zoo::load("rp2");
  auto st = skeletal_stratification(doc.complex);
  auto j = ih_json(ih(doc.complex, st, Perversity::classical(PerversityName::Zero), Field::Z));
  ASSERT_EQ(j["table"].size(), 3u);
  EXPECT_EQ(j["table"][1]["torsion"].dump(), "[2]");
  EXPECT_EQ(j["coefficients"], "Z");
}

TEST(ReportJson, IPEvidenceCarriesTheWitness) {
  auto j = ip_json(check_ip(zoo::load("sigma_rp3").complex));
  std::string text = j.dump();
  EXPECT_NE(text.find("\"torsion\":[2]"), std::string::npos);
}

TEST(StratificationFile, BareListAndDocumentForms) {
  auto bare = load_stratification_file(temp_file(R"([{"dimension": 0, "simplices": [[3], [9]]}])"));
  ASSERT_EQ(bare.size(), 1u);
  EXPECT_EQ(bare[0].simplices.size(), 2u);
  auto from_doc = load_stratification_file(zoo::path("pinched_torus_user"));
  ASSERT_EQ(from_doc.size(), 1u);
  EXPECT_EQ(from_doc[0].simplices, bare[0].simplices);
  EXPECT_THROW(load_stratification_file(temp_file(R"({"levels": 3})")), ParseError);
  EXPECT_THROW(load_stratification_file(temp_file("[{\"dimension\": 0}]")), ParseError);
  EXPECT_THROW(load_stratification_file("/nonexistent/levels.json"), ParseError);
}
