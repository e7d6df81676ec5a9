#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

// Numeric residue of the (3,11) discharging argument.
//
// Around a 6+-vertex v, d3 / d3* / d4 / d5 count low-degree neighbors sharing
// triangles with v:
//   (1) negative final charge:  d3 + d3*/2 + d4/2 + d5/5  >  d(v) - 6
//   (2) strike counting:        2d3 + (3/2)d3* + 2d4 + 2d5 <= d(v)
//   (3) = (2) - (1):            d3 + d3* + (3/2)d4 + (9/5)d5 < 6
// and the degree-sum reduction forces d(v) >= 6, d5 > 0 => d(v) >= 9,
// d3* + d4 > 0 => d(v) >= 10, d3 > 0 => d(v) >= 11.

namespace unionsep::audit {

enum class Ineq1Verdict {
  /// (1) fails at the minimum admissible degree, so v cannot end negative.
  FailsIneq1,
  /// (1) holds at the minimum admissible degree: the argument has a hole.
  Violates
};

inline const char *to_string(Ineq1Verdict v) {
  return v == Ineq1Verdict::FailsIneq1 ? "FAILS_INEQ1" : "VIOLATES";
}

struct TupleRecord {
  std::int64_t d3 = 0, d3_star = 0, d4 = 0, d5 = 0;
  std::int64_t min_degree = 6;
  Ineq1Verdict verdict = Ineq1Verdict::FailsIneq1;

  friend bool operator==(const TupleRecord &, const TupleRecord &) = default;
};

/// Left-hand side coefficients of (1); overridable for mutation tests.
struct Ineq1Coefficients {
  Rational d3{1}, d3_star{1, 2}, d4{1, 2}, d5{1, 5};
};

inline Rational ineq3_lhs(const TupleRecord &r) {
  return Rational(r.d3) + Rational(r.d3_star) + Rational(3, 2) * r.d4 +
         Rational(9, 5) * r.d5;
}

inline bool satisfies_ineq3(const TupleRecord &r) {
  return r.d3 >= 0 && r.d3_star >= 0 && r.d4 >= 0 && r.d5 >= 0 &&
         ineq3_lhs(r) < 6;
}

inline Rational ineq1_lhs(const TupleRecord &r,
                          const Ineq1Coefficients &co = {}) {
  return co.d3 * r.d3 + co.d3_star * r.d3_star + co.d4 * r.d4 + co.d5 * r.d5;
}

inline Rational ineq2_lhs(const TupleRecord &r) {
  return Rational(2 * r.d3) + Rational(3, 2) * r.d3_star +
         Rational(2 * r.d4) + Rational(2 * r.d5);
}

/// Smallest d(v) allowed by the degree implications.
inline std::int64_t min_admissible_degree(std::int64_t d3, std::int64_t d3_star,
                                          std::int64_t d4, std::int64_t d5) {
  std::int64_t m = 6;
  if (d5 > 0)
    m = std::max<std::int64_t>(m, 9);
  if (d3_star + d4 > 0)
    m = std::max<std::int64_t>(m, 10);
  if (d3 > 0)
    m = std::max<std::int64_t>(m, 11);
  return m;
}

/// FailsIneq1 iff LHS(1) <= min_degree - 6.
inline Ineq1Verdict audit_inequality1(const TupleRecord &rec,
                                      const Ineq1Coefficients &co = {}) {
  if (!satisfies_ineq3(rec))
    throw UsageError("tuple does not satisfy inequality (3)");
  return ineq1_lhs(rec, co) <= Rational(rec.min_degree - 6)
             ? Ineq1Verdict::FailsIneq1
             : Ineq1Verdict::Violates;
}

/// Same decision in integers: everything times 10.
inline Ineq1Verdict audit_inequality1_scaled(const TupleRecord &rec) {
  const std::int64_t lhs =
      10 * rec.d3 + 5 * rec.d3_star + 5 * rec.d4 + 2 * rec.d5;
  return lhs <= 10 * (rec.min_degree - 6) ? Ineq1Verdict::FailsIneq1
                                          : Ineq1Verdict::Violates;
}

inline bool satisfies_ineq3_scaled(const TupleRecord &r) {
  return 10 * r.d3 + 10 * r.d3_star + 15 * r.d4 + 18 * r.d5 < 60;
}

/// Every nonnegative tuple satisfying (3), in lexicographic order, with its
/// minimum admissible degree and the verdict of audit_inequality1.
inline std::vector<TupleRecord> enumerate_tuples() {
  std::vector<TupleRecord> out;
  // (3) bounds each coordinate: d3, d3* <= 5, d4 <= 3, d5 <= 3.
  for (std::int64_t d3 = 0; d3 <= 5; ++d3)
    for (std::int64_t d3s = 0; d3s <= 5; ++d3s)
      for (std::int64_t d4 = 0; d4 <= 3; ++d4)
        for (std::int64_t d5 = 0; d5 <= 3; ++d5) {
          TupleRecord r{d3, d3s, d4, d5, min_admissible_degree(d3, d3s, d4, d5)};
          if (!satisfies_ineq3(r))
            continue;
          r.verdict = audit_inequality1(r);
          out.push_back(r);
        }
  return out;
}

/// Whether (2) holds at d(v) = dv. Also confirms that (2) minus (1), taken
/// at equality, is exactly (3) for this tuple: the coefficient-wise
/// difference of the left sides equals LHS(3), and the right sides differ by
/// dv - (dv - 6) = 6. Returns false if that re-derivation ever disagrees.
inline bool audit_inequality2_consistency(const TupleRecord &rec,
                                          std::int64_t dv) {
  if (ineq2_lhs(rec) - ineq1_lhs(rec) != ineq3_lhs(rec))
    return false;
  if (Rational(dv) - Rational(dv - 6) != Rational(6))
    return false;
  return ineq2_lhs(rec) <= Rational(dv);
}

struct AuditReport {
  std::vector<TupleRecord> records;
  std::size_t failing = 0; // records with FailsIneq1
  bool pass() const { return !records.empty() && failing == records.size(); }
};

inline AuditReport full_audit(const Ineq1Coefficients &co = {}) {
  AuditReport r;
  r.records = enumerate_tuples();
  for (auto &rec : r.records) {
    rec.verdict = audit_inequality1(rec, co);
    if (rec.verdict == Ineq1Verdict::FailsIneq1)
      ++r.failing;
  }
  return r;
}

/// "(d3,d3*,d4,d5) fails (1) for d(v) >= m", or "holds" for a violation.
inline std::string format_row(const TupleRecord &r) {
  std::ostringstream os;
  os << '(' << r.d3 << ',' << r.d3_star << ',' << r.d4 << ',' << r.d5 << ") "
     << (r.verdict == Ineq1Verdict::FailsIneq1 ? "fails" : "satisfies")
     << " (1) for d(v) >= " << r.min_degree;
  return os.str();
}

/// One row of the reference table: a tuple and the degree it is stated for.
struct GoldenRow {
  std::array<std::int64_t, 4> tuple{};
  std::int64_t min_degree = 0;
  friend bool operator==(const GoldenRow &, const GoldenRow &) = default;
};

/// Reads rows of the form "(a,b,c,d) fails (1) for d(v) >= m". Blank lines
/// and '#' comments are skipped; whitespace is free.
inline std::vector<GoldenRow> parse_golden(std::istream &in) {
  static const std::regex row(
      R"(^\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*fails\s*\(1\)\s*for\s*d\(v\)\s*>=\s*(\d+)\s*\.?\s*$)");
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::smatch m;
    if (!std::regex_match(line, m, row))
      throw ParseError(lineno, "not a tuple row: " + line);
    GoldenRow g;
    for (int i = 0; i < 4; ++i)
      g.tuple[i] = std::stoll(m[i + 1]);
    g.min_degree = std::stoll(m[5]);
    rows.push_back(g);
  }
  return rows;
}

struct GoldenDiff {
  std::vector<std::string> lines; // human-readable differences
  bool empty() const { return lines.empty(); }
};

/// Row-by-row comparison of the audit against a reference table.
inline GoldenDiff diff_against_golden(const AuditReport &report,
                                      const std::vector<GoldenRow> &golden) {
  GoldenDiff d;
  const std::size_t n = std::max(report.records.size(), golden.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= report.records.size()) {
      d.lines.push_back("missing from audit: row " + std::to_string(i + 1));
      continue;
    }
    const auto &r = report.records[i];
    if (i >= golden.size()) {
      d.lines.push_back("extra in audit: " + format_row(r));
      continue;
    }
    const GoldenRow mine{{r.d3, r.d3_star, r.d4, r.d5}, r.min_degree};
    if (!(mine == golden[i]) || r.verdict != Ineq1Verdict::FailsIneq1)
      d.lines.push_back("row " + std::to_string(i + 1) + ": audit has " +
                        format_row(r));
  }
  return d;
}

} // namespace unionsep::audit
