#include <gtest/gtest.h>

#include "superlie/suite.hpp"

using namespace superlie;

TEST(Suite, NamesAreChecked) {
  EXPECT_THROW(run_suite(""), AlgebraError);
  EXPECT_THROW(run_suite("everything"), AlgebraError);
}

TEST(Suite, BracketReportsAreSortedAndPass) {
  auto r = run_suite("brackets");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].id, "C01");
  EXPECT_EQ(r[1].id, "C02");
  for (const auto& x : r) {
    EXPECT_EQ(x.status, Status::Pass) << x.witness.value_or("");
    EXPECT_FALSE(x.bound.empty());
    EXPECT_EQ(x.seed, SuiteOptions{}.seed);
  }
}

TEST(Suite, ReportsAreDeterministic) {
  SuiteOptions opt;
  opt.seed = 7;
  opt.maxdeg = 3;
  auto a = check_generating_brackets(opt), b = check_generating_brackets(opt);
  EXPECT_EQ(a.notes, b.notes);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_NE(a.bound.find("degree <= 3"), std::string::npos);
}

TEST(Suite, FockGroupPasses) {
  auto r = run_suite("fock");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].id, "C09");
  EXPECT_EQ(r[0].status, Status::Pass) << r[0].witness.value_or("");
}

TEST(ReportBuilder, FailureCarriesTheFirstWitness) {
  detail::ReportBuilder rb("X", "claim", 1);
  rb.check(true, "fine");
  rb.check(false, "first", "w1");
  rb.check(false, "second", "w2");
  Report r = rb.finish();
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(*r.witness, "first: w1");
  EXPECT_EQ(r.notes.size(), 3u);
}

TEST(ReportBuilder, PartialNeedsABound) {
  detail::ReportBuilder a("X", "claim", 1);
  EXPECT_THROW(a.finish(true), AlgebraError);
  detail::ReportBuilder b("X", "claim", 1);
  b.bound("degree <= 2");
  EXPECT_EQ(b.finish(true).status, Status::Partial);
  detail::ReportBuilder c("X", "claim", 1);
  c.check(false, "bad", "w");
  EXPECT_EQ(c.finish(true).status, Status::Fail);
}
