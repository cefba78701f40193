#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <regex>

#include "rsbf/errors.hpp"
#include "rsbf/families.hpp"
#include "rsbf/harness.hpp"
#include "rsbf/walsh.hpp"

using namespace rsbf;

namespace {

std::vector<VerificationReport> collect(const CheckRequest& req, const HarnessConfig& cfg,
                                        bool* passed = nullptr) {
  std::vector<VerificationReport> out;
  bool ok = run_check(req, cfg, [&](const VerificationReport& r) { out.push_back(r); });
  if (passed) *passed = ok;
  return out;
}

std::string strip_elapsed(const std::string& line) {
  static const std::regex kElapsed(R"("elapsed_ms":\d+)");
  return std::regex_replace(line, kElapsed, "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("golden table spot values") {
  const auto& t1 = golden_table1();
  CHECK(t1.rows[3][9 - 4] == 120);   // f_{0,3}, n = 9
  CHECK(t1.rows[8][5 - 4] == 4);     // f_{2,3}, n = 5
  CHECK(t1.rows[10][10 - 4] == 624); // F_4, n = 10
  const auto& t2 = golden_table2();
  CHECK(t2.rows[0][1] == 8);          // c = 2, f_{0,1}
  CHECK(t2.rows[15][15] == 8);        // c = 31, f_{3,3}
  CHECK(t2.rows[9][7] == 4);          // c = 19, f_{1,3}
}

TEST_CASE("table reproduction") {
  auto t1 = reproduce_table1();
  CHECK(t1.report.status == Status::kPass);
  CHECK(*t1.report.find_metric("cells") == 88);
  CHECK(t1.table.rows.size() == 11);
  CHECK(t1.table.rows.back() == "F_4");
  CHECK(t1.table.columns.front() == "4");
  CHECK(t1.table.cells[10][7] == 1144);

  auto t2 = reproduce_table2();
  CHECK(t2.report.status == Status::kPass);
  CHECK(*t2.report.find_metric("cells") == 256);
  CHECK(t2.table.columns[10] == "f_{2,2}");
  CHECK(t2.table.rows.front() == "2");

  auto csv = t2.table.to_csv();
  CHECK(csv.rfind("c,\"f_{0,0}\",\"f_{0,1}\"", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  CHECK(csv.find("\r\n") != std::string::npos);
}

TEST_CASE("csv quoting") {
  TableArtifact t;
  t.corner = "a\"b";
  t.columns = {"plain", "x,y"};
  t.rows = {"r\n1"};
  t.cells = {{1, -2}};
  CHECK(t.to_csv() == "\"a\"\"b\",plain,\"x,y\"\r\n\"r\n1\",1,-2\r\n");
}

TEST_CASE("corrupted golden cell") {
  HarnessConfig cfg;
  auto bad = golden_table1();
  bad.rows[4][2] += 2;
  cfg.table1_override = bad;
  bool passed = true;
  auto reports = collect(CheckRequest{CheckKind::kTable1, {}, {}, {}}, cfg, &passed);
  CHECK_FALSE(passed);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::kFail);
  REQUIRE(reports[0].witnesses.size() == 1);
  CHECK(reports[0].witnesses[0].key == "f_{1,1} n=6");
  CHECK(reports[0].witnesses[0].actual == 40);
  CHECK(reports[0].witnesses[0].expected == 42);
}

TEST_CASE("resource gating") {
  HarnessConfig cfg;
  cfg.max_n = 6;
  auto t1 = reproduce_table1(cfg);
  CHECK(t1.report.status == Status::kSkipped);
  CHECK(t1.report.note.find("max_n 6") != std::string::npos);
  CHECK(reproduce_table2(cfg).report.status == Status::kPass);
  CHECK(check_thm24(12, cfg).status == Status::kSkipped);
  CHECK(check_bound(4, cfg).status == Status::kSkipped);
  auto scan = verify_theorem(Range{4, 8}, Range{1, 1}, 4, cfg);
  CHECK(scan[2].status == Status::kPass);
  CHECK(scan[3].status == Status::kSkipped);
  CHECK(aggregate_pass(scan));

  HarnessConfig bad;
  bad.max_n = 29;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad.max_n = 8;
  bad.workers = 0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("lemma grids") {
  HarnessConfig cfg;
  for (unsigned lemma : {21u, 22u}) {
    auto r = check_lemma_grid(lemma, 9, cfg);
    CHECK(r.status == Status::kPass);
    CHECK(*r.find_metric("checks") == 16 * 256);
  }
  cfg.lemma_exhaustive_limit = 8;
  cfg.lemma_samples = 100;
  auto r = check_lemma_grid(22, 10, cfg);
  CHECK(r.status == Status::kPass);
  CHECK(*r.find_metric("checks") == 1600);
  CHECK_THROWS_AS(check_lemma_grid(23, 9, cfg), UsageError);
  CHECK_THROWS_AS(check_lemma_grid(21, 7, cfg), UsageError);
}

TEST_CASE("recursions against brute force") {
  HarnessConfig cfg;
  CHECK(check_eq23(10, cfg).status == Status::kPass);
  CHECK(check_eq26(12, cfg).status == Status::kPass);
  auto t = check_thm24(11, cfg);
  CHECK(t.status == Status::kPass);
  CHECK(*t.find_metric("value") == 1144);
  auto b = check_bound(5, cfg);
  CHECK(b.status == Status::kPass);
  CHECK(*b.find_metric("max_abs") == 12);
}

TEST_CASE("factorization cases") {
  HarnessConfig cfg;
  auto r = check_factorization(10, 2, cfg);
  CHECK(r.status == Status::kPass);
  CHECK(*r.find_metric("value_at_zero") == 400);
  CHECK(*r.find_metric("s") == 2);
  CHECK(*r.find_metric("t") == 5);
}

TEST_CASE("nonlinearity cases") {
  HarnessConfig cfg;
  auto r = check_nonlinearity_case(8, 4, 1, cfg);
  CHECK(r.status == Status::kPass);
  CHECK(*r.find_metric("weight") == 40);
  CHECK(*r.find_metric("nonlinearity") == 40);
  CHECK(*r.find_metric("w0") == 176);

  auto z = check_nonlinearity_case(12, 4, 3, cfg);
  CHECK(z.status == Status::kPass);
  CHECK(*z.find_metric("weight") == 0);
  CHECK(*z.find_metric("nonlinearity") == 0);

  auto five = check_nonlinearity_case(10, 5, 1, cfg);
  CHECK(five.expectation == Expectation::kConjectured);
  CHECK(five.status == Status::kPass);

  // e = n turns every monomial into a single variable
  auto lin = check_nonlinearity_case(6, 4, 6, cfg);
  CHECK(lin.status == Status::kFail);
  CHECK(*lin.find_metric("nonlinearity") == 0);
  CHECK(*lin.find_metric("weight") == 32);
  CHECK(*lin.find_metric("t") == 1);

  auto deg = check_nonlinearity_case(3, 4, 1, cfg);
  CHECK(deg.note == "degenerate (n < l)");
  CHECK(check_nonlinearity_case(9, 7, 1, cfg).expectation == Expectation::kExploratory);
}

TEST_CASE("theorem scan flags exactly the linear cases") {
  HarnessConfig cfg;
  auto reports = verify_theorem(Range{4, 12}, Range{1, 0}, 4, cfg);
  CHECK(reports.size() == 72);  // sum of n for n = 4..12
  for (const auto& r : reports) {
    const bool linear = *r.params.n == *r.params.e;
    CHECK((r.status == Status::kFail) == linear);
  }
  CHECK_FALSE(aggregate_pass(reports));
  auto proper = verify_theorem(Range{4, 12}, Range{1, 11}, 4, cfg);
  bool ok = true;
  for (const auto& r : proper)
    if (*r.params.e < *r.params.n) ok = ok && r.status == Status::kPass;
  CHECK(ok);
}

TEST_CASE("cubic scan fails only where e is a multiple of n") {
  HarnessConfig cfg;
  auto reports = verify_theorem(Range{4, 12}, Range{1, 4}, 3, cfg);
  for (const auto& r : reports) {
    CHECK(r.expectation == Expectation::kCited);
    CHECK((r.status == Status::kFail) == (*r.params.e % *r.params.n == 0));
  }
}

TEST_CASE("quadratic counterexample search") {
  HarnessConfig cfg;
  auto reports = verify_theorem(Range{2, 10}, Range{1, 2}, 2, cfg);
  const auto& summary = reports.back();
  CHECK(summary.check == "counterexample");
  CHECK(summary.status == Status::kPass);
  CHECK(*summary.find_metric("counterexamples") > 0);
  CHECK(aggregate_pass(reports));
  // no counterexample in range: the search itself fails
  auto none = verify_theorem(Range{4, 4}, Range{1, 1}, 2, cfg);
  CHECK(none.back().status == Status::kFail);
  CHECK_FALSE(aggregate_pass(none));
}

TEST_CASE("parallel scan is order-stable") {
  HarnessConfig one;
  HarnessConfig four;
  four.workers = 4;
  auto a = verify_theorem(Range{4, 11}, Range{1, 3}, 5, one);
  auto b = verify_theorem(Range{4, 11}, Range{1, 3}, 5, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    CHECK(strip_elapsed(to_json_line(a[k])) == strip_elapsed(to_json_line(b[k])));
}

TEST_CASE("json lines") {
  VerificationReport r;
  r.check = "demo";
  r.params.n = 5;
  r.params.id = "x";
  r.fail("c=3", 4, -2);
  r.metric("m", 7);
  r.elapsed_ms = 12;
  auto line = to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line ==
        R"({"check":"demo","params":{"n":5,"id":"x"},"status":"fail","expectation":"expected",)"
        R"("witnesses":[{"at":"c=3","expected":4,"actual":-2}],"metrics":{"m":7},"elapsed_ms":12})");
  auto j = nlohmann::json::parse(line);
  CHECK(j["witnesses"][0]["actual"] == -2);
  CHECK(to_json_line(VerificationReport{}).find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("dispatch and determinism") {
  HarnessConfig cfg;
  cfg.theorem_n = Range{4, 9};
  cfg.theorem_e = Range{1, 3};
  cfg.conjecture_max_n = 10;
  cfg.cubic_n = Range{5, 9};
  cfg.quadratic_n = Range{2, 9};
  cfg.recurrence = Range{8, 12};
  cfg.bound = Range{4, 7};
  cfg.lemma_grid = Range{8, 9};
  cfg.eq23 = Range{7, 9};
  cfg.factor_cases = {{10, 2}};
  std::vector<std::string> first;
  std::vector<std::string> second;
  CHECK(run_all(cfg, [&](const VerificationReport& r) { first.push_back(strip_elapsed(to_json_line(r))); }));
  CHECK(run_all(cfg, [&](const VerificationReport& r) { second.push_back(strip_elapsed(to_json_line(r))); }));
  CHECK(first == second);
  CHECK(first.size() > 40);

  CHECK(parse_check_kind("thm24") == CheckKind::kThm24);
  CHECK_FALSE(parse_check_kind("nope"));
  bool passed = false;
  auto thm = collect(CheckRequest{CheckKind::kThm24, Range{8, 10}, {}, {}}, cfg, &passed);
  CHECK(passed);
  CHECK(thm.size() == 3);
  auto conj = collect(CheckRequest{CheckKind::kConjecture, Range{5, 9}, {}, 5u}, cfg, &passed);
  CHECK(passed);
  CHECK(conj.size() == 15);
}
