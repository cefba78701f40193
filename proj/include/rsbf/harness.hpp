#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsbf/report.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

/// A reproduced table laid out like the reference one.
struct TableArtifact {
  int id = 0;
  std::string corner;                    // label of the key column
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<std::int64_t>> cells;  // cells[row][column]

  // RFC 4180 CSV, header row first.
  std::string to_csv() const;
};

// Transcribed reference values.
struct GoldenTable1 {
  static constexpr unsigned kFirstArity = 4;
  static constexpr unsigned kLastArity = 11;
  // Upper-triangle rows (i <= j) in reference order, then the F_4 row.
  static constexpr std::array<std::array<unsigned, 2>, 10> kRowIds{{
      {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
  std::array<std::array<std::int64_t, 8>, 11> rows{};
};

struct GoldenTable2 {
  static constexpr std::array<std::uint64_t, 16> kMasks{
      2, 3, 6, 7, 10, 11, 14, 15, 18, 19, 22, 23, 26, 27, 30, 31};
  // rows[mask index][4 i + j]
  std::array<std::array<std::int64_t, 16>, 16> rows{};
};

const GoldenTable1& golden_table1();
const GoldenTable2& golden_table2();

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
  bool contains(unsigned v) const { return lo <= v && v <= hi; }
};

struct HarnessConfig {
  unsigned max_n = kDefaultMaxArity;
  unsigned workers = 1;
  // Substitute for the embedded Table 1, used for harness self-tests.
  std::optional<GoldenTable1> table1_override;

  Range lemma_grid{8, 12};
  unsigned lemma_exhaustive_limit = 12;
  unsigned lemma_samples = 10000;
  Range eq23{7, 14};
  Range recurrence{8, 22};
  Range bound{4, 16};
  Range theorem_n{4, 20};
  // Upper end 0 means "up to n".
  Range theorem_e{1, 0};
  std::vector<unsigned> conjecture_l{5, 6};
  unsigned conjecture_max_n = 20;
  Range conjecture_e{1, 3};
  Range cubic_n{4, 16};
  Range cubic_e{1, 4};
  Range quadratic_n{2, 16};
  Range quadratic_e{1, 2};
  std::vector<std::array<unsigned, 2>> factor_cases{{10, 2}, {12, 3}, {12, 4}, {14, 2}};
};

// Validates caps (1 <= max_n <= 28, workers >= 1); throws ConfigError.
void validate(const HarnessConfig& cfg);

struct TableRun {
  TableArtifact table;
  VerificationReport report;
};

TableRun reproduce_table1(const HarnessConfig& cfg = {});
TableRun reproduce_table2(const HarnessConfig& cfg = {});

// Recursion grid at one arity: lemma 21 covers masks with the top bit clear, 22 with it set.
VerificationReport check_lemma_grid(unsigned lemma, unsigned n, const HarnessConfig& cfg);
VerificationReport check_eq23(unsigned n, const HarnessConfig& cfg);
// All sixteen (i, j) recurrence values at arity n against direct summation.
VerificationReport check_eq26(unsigned n, const HarnessConfig& cfg);
VerificationReport check_thm24(unsigned n, const HarnessConfig& cfg);
VerificationReport check_bound(unsigned n, const HarnessConfig& cfg);
VerificationReport check_factorization(unsigned n, unsigned e, const HarnessConfig& cfg);

// One spectrum-based case: N(F) = wt(F) and max |W| attained at c = 0.
VerificationReport check_nonlinearity_case(unsigned n, unsigned l, unsigned e,
                                           const HarnessConfig& cfg);

// Expectation attached to a degree l scan.
Expectation expectation_for_degree(unsigned l);

// Every (n, e) in the ranges for degree l, sorted by (n, e). For l = 2 a
// trailing summary report passes iff some case with cycle length t >= l has N != wt.
std::vector<VerificationReport> verify_theorem(Range n_range, Range e_range, unsigned l,
                                               const HarnessConfig& cfg);

using ReportSink = std::function<void(const VerificationReport&)>;

enum class CheckKind {
  kTable1, kTable2, kLemma21, kLemma22, kEq23, kEq26, kThm24, kBound,
  kTheorem, kConjecture, kFactor, kAll,
};

std::optional<CheckKind> parse_check_kind(std::string_view name);

struct CheckRequest {
  CheckKind kind = CheckKind::kAll;
  std::optional<Range> n_range;
  std::optional<Range> e_range;
  std::optional<unsigned> l;
};

// Runs one check family (or all of them), streaming reports in a stable
// order. Returns true iff the aggregate verdict is a pass.
bool run_check(const CheckRequest& req, const HarnessConfig& cfg, const ReportSink& sink);
bool run_all(const HarnessConfig& cfg, const ReportSink& sink);

// Aggregate verdict over a report list. Skipped reports never fail, nor do
// exploratory cases or the individual cases of a counterexample search (the
// search's summary report decides for it).
bool aggregate_pass(const std::vector<VerificationReport>& reports);

}  // namespace rsbf
