#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toledo/serialize.hpp"

namespace toledo {
namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TOLEDO_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Decimal, Truncates) {
  EXPECT_EQ(decimal_string(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(decimal_string(Rational(2, 3), 4), "0.6666");
  EXPECT_EQ(decimal_string(Rational(15), 2), "15.00");
  EXPECT_EQ(decimal_string(Rational(1, 8), 0), "0");
}

TEST(Json, ScalarAndMatrix) {
  EXPECT_EQ(scalar_json(FieldScalar::i()), "0/1 + 0/1*r2 + (1/1 + 0/1*r2)*i");
  const Json m = matrix_json(MatrixF{{1, 0}, {0, FieldScalar::sqrt2()}});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[1][1], "0/1 + 1/1*r2 + (0/1 + 0/1*r2)*i");
}

TEST(Json, Groups) {
  EXPECT_EQ(group_json(GroupSpec::su(2, 3)), Json({{"family", "su"}, {"name", "su(2,3)"}, {"p", 2}, {"q", 3}}));
  EXPECT_EQ(group_json(GroupSpec::sp(2)), Json({{"family", "sp"}, {"name", "sp(4,R)"}, {"n", 2}}));
}

TEST(Json, AlgebraGolden) {
  EXPECT_EQ(dump(algebra_json(RealLieAlgebra::build(GroupSpec::su(1, 1)))), fixture("algebra_su11.json"));
}

TEST(Json, AlgebraStructureConstantsReproduceBrackets) {
  const RealLieAlgebra g = RealLieAlgebra::build(GroupSpec::su(2, 1));
  const Json j = algebra_json(g);
  std::vector<MatrixF> basis;
  for (const auto& b : j.at("basis")) {
    const auto& rows = b.at("matrix");
    MatrixF m(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = FieldScalar::parse(rows[r][c].get<std::string>());
    }
    basis.push_back(m);
  }
  ASSERT_EQ(basis.size(), g.dim());
  std::vector<std::vector<MatrixF>> expected(basis.size(), std::vector<MatrixF>(basis.size(), MatrixF(3, 3)));
  for (const auto& sc : j.at("structure_constants")) {
    const auto i = sc[0].get<std::size_t>();
    const auto k = sc[2].get<std::size_t>();
    const auto jj = sc[1].get<std::size_t>();
    ASSERT_LT(i, jj);
    expected[i][jj] += FieldScalar(parse_rational(sc[3].get<std::string>())) * basis[k];
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = i + 1; k < basis.size(); ++k) ASSERT_EQ(commutator(basis[i], basis[k]), expected[i][k]);
  }
}

TEST(Json, ReportGoldenSu23) {
  const MWReport r = build_report(GroupSpec::su(2, 3), Rational(100), {});
  EXPECT_EQ(dump(report_json(r)), fixture("report_su23_vol100.json"));
}

TEST(Json, ReportGoldenSp6) {
  const MWReport r = build_report(GroupSpec::sp(3), Rational(1), {});
  EXPECT_EQ(dump(report_json(r)), fixture("report_sp6_vol1.json"));
}

TEST(Json, ReportFields) {
  const Json j = report_json(build_report(GroupSpec::su(1, 1), Rational(30), {}));
  EXPECT_EQ(j.at("schema"), kReportSchemaVersion);
  EXPECT_EQ(j.at("c_sigma"), "-2");
  EXPECT_EQ(j.at("vol"), "30");
  EXPECT_EQ(j.at("bound").at("max_degree"), 2);
  EXPECT_EQ(j.at("toledo_table").size(), 7u);
  EXPECT_EQ(j.at("toledo_table")[6].at("gate"), "FAIL");
  EXPECT_EQ(j.at("toledo_table")[6].at("margin"), true);
  EXPECT_EQ(j.at("certificates").at("identities").at("passed"), 8);
}

TEST(Json, EmbeddingStatusesSkipAfterFailure) {
  const HermitianSymmetricSpace space = build_space(GroupSpec::sp(1));
  const EmbeddingCheck bad = check_embedding(space, embedding_for(1, Fault::DropSqrt2));
  const auto st = embedding_statuses(bad);
  ASSERT_EQ(st.size(), 5u);
  EXPECT_EQ(st[0].second, "pass");
  EXPECT_EQ(st[1], std::make_pair(std::string("t_unitary"), std::string("fail")));
  for (std::size_t k = 2; k < st.size(); ++k) EXPECT_EQ(st[k].second, "skipped");
  const Json j = embedding_check_json(bad);
  EXPECT_EQ(j.at("ok"), false);
  EXPECT_TRUE(j.contains("failure"));
  const Json good = embedding_check_json(check_embedding(space, EmbeddingData::make(1)));
  EXPECT_EQ(good.at("ok"), true);
  EXPECT_FALSE(good.contains("failure"));
}

TEST(Json, IdentityReport) {
  const HiggsSample s = make_sample(1, 2, SampleMode::IMultiple, 4);
  const HermitianSymmetricSpace space = build_space(GroupSpec::su(1, 2));
  const Json j = identity_report_json(run_identity_suite(s, standard_rep_su(space), Rational(-2)));
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("mode"), "I_MULTIPLE");
  for (const auto& c : j.at("checks")) {
    EXPECT_EQ(c.at("status"), "pass");
    EXPECT_FALSE(c.contains("witness"));
  }
}

TEST(Text, CsvAndTable) {
  const DegreeBound b = degree_bound(1, Rational(-2), Rational(30));
  const auto rows = degree_table(1, Rational(-2), Rational(30), b, kDefaultPiBits, 100);
  const std::string csv = degree_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "degree,coeff,gate,margin");
  EXPECT_NE(csv.find("-2,2/15,PASS,\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n3,-1/5,FAIL,margin\n"), std::string::npos) << csv;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_NE(degree_text_table(rows).find("FAIL"), std::string::npos);
  const MWReport r = build_report(GroupSpec::su(1, 1), Rational(30), {});
  EXPECT_NE(report_text(r).find("su(1,1)"), std::string::npos);
  EXPECT_NE(report_csv(r).find("\"su(1,1)\""), std::string::npos);
}

}  // namespace
}  // namespace toledo
