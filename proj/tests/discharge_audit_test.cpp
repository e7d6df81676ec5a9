#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <unionsep/discharge_audit.hpp>

using namespace unionsep;
using namespace unionsep::audit;

namespace {

const TupleRecord *find(const std::vector<TupleRecord> &rs, std::int64_t a,
                        std::int64_t b, std::int64_t c, std::int64_t d) {
  for (const auto &r : rs)
    if (r.d3 == a && r.d3_star == b && r.d4 == c && r.d5 == d)
      return &r;
  return nullptr;
}

std::vector<GoldenRow> load_golden() {
  std::ifstream in(UNIONSEP_TEST_DATA "/tuple_table.txt");
  return parse_golden(in);
}

std::vector<std::string> violations(const AuditReport &r) {
  std::vector<std::string> out;
  for (const auto &rec : r.records)
    if (rec.verdict == Ineq1Verdict::Violates)
      out.push_back(format_row(rec));
  return out;
}

} // namespace

TEST(EnumerateTuples, CountAndEndpoints) {
  const auto rs = enumerate_tuples();
  ASSERT_EQ(rs.size(), 77u);
  EXPECT_EQ(rs.front(), (TupleRecord{0, 0, 0, 0, 6, Ineq1Verdict::FailsIneq1}));
  EXPECT_EQ(find(rs, 5, 0, 0, 0)->min_degree, 11);
  EXPECT_EQ(find(rs, 0, 0, 0, 3)->min_degree, 9);
  EXPECT_EQ(find(rs, 0, 1, 0, 0)->min_degree, 10);
  // LHS(3) = 6 exactly: excluded.
  EXPECT_EQ(find(rs, 0, 0, 4, 0), nullptr);
  EXPECT_EQ(find(rs, 6, 0, 0, 0), nullptr);
}

TEST(EnumerateTuples, MatchesBruteForceOverBox) {
  std::size_t count = 0;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c)
        for (int d = 0; d <= 10; ++d)
          // 10 * (3) in integers.
          if (10 * a + 10 * b + 15 * c + 18 * d < 60)
            ++count;
  EXPECT_EQ(count, enumerate_tuples().size());
}

TEST(EnumerateTuples, DownwardClosed) {
  const auto rs = enumerate_tuples();
  for (const auto &r : rs) {
    if (r.d3 > 0)
      EXPECT_TRUE(find(rs, r.d3 - 1, r.d3_star, r.d4, r.d5));
    if (r.d3_star > 0)
      EXPECT_TRUE(find(rs, r.d3, r.d3_star - 1, r.d4, r.d5));
    if (r.d4 > 0)
      EXPECT_TRUE(find(rs, r.d3, r.d3_star, r.d4 - 1, r.d5));
    if (r.d5 > 0)
      EXPECT_TRUE(find(rs, r.d3, r.d3_star, r.d4, r.d5 - 1));
  }
}

TEST(AuditInequality1, Examples) {
  EXPECT_EQ(audit_inequality1({0, 0, 0, 3, 9}), Ineq1Verdict::FailsIneq1);
  EXPECT_EQ(audit_inequality1({1, 4, 0, 0, 11}), Ineq1Verdict::FailsIneq1);
  // Same tuple at a degree the implications do not allow.
  EXPECT_EQ(audit_inequality1({1, 0, 0, 0, 6}), Ineq1Verdict::Violates);
  EXPECT_EQ(audit_inequality1({0, 0, 0, 3, 5}), Ineq1Verdict::Violates);
  EXPECT_THROW(audit_inequality1({0, 0, 4, 0, 10}), UsageError);
  EXPECT_THROW(audit_inequality1({-1, 0, 0, 0, 6}), UsageError);
}

TEST(AuditInequality1, ScaledIntegersAgree) {
  for (const auto &r : enumerate_tuples())
    for (std::int64_t dv = 0; dv <= 30; ++dv) {
      auto at = r;
      at.min_degree = dv;
      EXPECT_EQ(audit_inequality1(at), audit_inequality1_scaled(at));
      EXPECT_TRUE(satisfies_ineq3_scaled(at));
    }
}

TEST(AuditInequality1, FailsForAllLargerDegrees) {
  for (const auto &r : enumerate_tuples())
    for (std::int64_t dv = r.min_degree; dv <= r.min_degree + 20; ++dv) {
      auto at = r;
      at.min_degree = dv;
      EXPECT_EQ(audit_inequality1(at), Ineq1Verdict::FailsIneq1)
          << format_row(at);
    }
}

TEST(AuditInequality2, Consistency) {
  EXPECT_TRUE(audit_inequality2_consistency({0, 0, 0, 0}, 6));
  EXPECT_TRUE(audit_inequality2_consistency({5, 0, 0, 0}, 11));
  EXPECT_FALSE(audit_inequality2_consistency({0, 5, 0, 0}, 7));
  for (const auto &r : enumerate_tuples())
    EXPECT_EQ(ineq2_lhs(r) - ineq1_lhs(r), ineq3_lhs(r));
}

TEST(FullAudit, AllRowsFailInequality1) {
  const auto report = full_audit();
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.failing, 77u);
  EXPECT_EQ(format_row(report.records.front()),
            "(0,0,0,0) fails (1) for d(v) >= 6");
}

TEST(FullAudit, MatchesReferenceTable) {
  const auto golden = load_golden();
  ASSERT_EQ(golden.size(), 77u);
  const auto diff = diff_against_golden(full_audit(), golden);
  EXPECT_TRUE(diff.empty()) << (diff.empty() ? "" : diff.lines.front());
}

TEST(FullAudit, ReferenceTableRoundTrips) {
  std::ostringstream os;
  for (const auto &r : full_audit().records)
    os << format_row(r) << '\n';
  std::istringstream in(os.str());
  EXPECT_EQ(parse_golden(in), load_golden());
}

TEST(FullAudit, DiffReportsMissingAndChangedRows) {
  auto golden = load_golden();
  golden.pop_back();
  golden[3].min_degree = 7;
  const auto diff = diff_against_golden(full_audit(), golden);
  ASSERT_EQ(diff.lines.size(), 2u);
  EXPECT_NE(diff.lines[0].find("row 4"), std::string::npos);
  EXPECT_NE(diff.lines[1].find("extra in audit"), std::string::npos);
}

TEST(Mutation, RaisingD3StarCoefficientTripsThreeRows) {
  Ineq1Coefficients co;
  co.d3_star = Rational(1);
  const auto report = full_audit(co);
  EXPECT_FALSE(report.pass());
  EXPECT_EQ(violations(report),
            (std::vector<std::string>{
                "(0,4,0,1) satisfies (1) for d(v) >= 10",
                "(0,4,1,0) satisfies (1) for d(v) >= 10",
                "(0,5,0,0) satisfies (1) for d(v) >= 10"}));
  EXPECT_FALSE(diff_against_golden(report, load_golden()).empty());
}

TEST(Mutation, DoublingD3CoefficientTripsFifteenRows) {
  Ineq1Coefficients co;
  co.d3 = Rational(2);
  EXPECT_EQ(violations(full_audit(co)).size(), 15u);
}

TEST(Mutation, TightRowDetectsSmallestPerturbation) {
  // (5,0,0,0) sits on equality at d(v) = 11.
  Ineq1Coefficients co;
  co.d3 = Rational(101, 100);
  EXPECT_EQ(violations(full_audit(co)),
            (std::vector<std::string>{
                "(5,0,0,0) satisfies (1) for d(v) >= 11"}));
}

TEST(Mutation, D5CoefficientHasSlack) {
  // d5 <= 3 and d(v) >= 9 whenever d5 > 0, so 1/2 is still absorbed.
  Ineq1Coefficients co;
  co.d5 = Rational(1, 2);
  EXPECT_TRUE(full_audit(co).pass());
  co.d5 = Rational(2);
  EXPECT_FALSE(full_audit(co).pass());
}

TEST(ParseGolden, ErrorsCarryLineNumbers) {
  std::istringstream in("# header\n(0,0,0,0) fails (1) for d(v) >= 6\n"
                        "(0,0,0) fails (1) for d(v) >= 6\n");
  try {
    parse_golden(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
