#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "rsbf/rsbf.h"

namespace {

void collect(const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); }

}  // namespace

TEST_CASE("c api: tables and queries") {
  rsbf_truth_table* f = nullptr;
  REQUIRE(rsbf_tt_monomial_rsbf(8, 4, 1, &f) == RSBF_OK);
  CHECK(rsbf_tt_arity(f) == 8);
  std::uint64_t w = 0;
  REQUIRE(rsbf_tt_weight(f, &w) == RSBF_OK);
  CHECK(w == 40);
  std::uint64_t nl = 0;
  REQUIRE(rsbf_tt_nonlinearity(f, &nl) == RSBF_OK);
  CHECK(nl == 40);
  std::int64_t v = 0;
  REQUIRE(rsbf_tt_walsh_at(f, 0, &v) == RSBF_OK);
  CHECK(v == 176);
  int bit = -1;
  REQUIRE(rsbf_tt_eval(f, 255, &bit) == RSBF_OK);
  CHECK(bit == 0);  // eight monomials all 1

  rsbf_truth_table* zero = nullptr;
  REQUIRE(rsbf_tt_zero(8, &zero) == RSBF_OK);
  std::uint64_t d = 0;
  REQUIRE(rsbf_tt_distance(f, zero, &d) == RSBF_OK);
  CHECK(d == 40);

  rsbf_spectrum* s = nullptr;
  REQUIRE(rsbf_walsh_transform(f, &s) == RSBF_OK);
  CHECK(rsbf_spectrum_arity(s) == 8);
  CHECK(rsbf_spectrum_values(s)[0] == 176);
  rsbf_peak peak{};
  REQUIRE(rsbf_spectrum_peak(s, &peak) == RSBF_OK);
  CHECK(peak.abs_argmax == 0);
  CHECK(peak.abs_max == 176);
  int at_zero = 0;
  REQUIRE(rsbf_spectrum_max_at_zero(s, &at_zero) == RSBF_OK);
  CHECK(at_zero == 1);
  REQUIRE(rsbf_spectrum_at(s, 3, &v) == RSBF_OK);
  CHECK(v == rsbf_spectrum_values(s)[3]);

  rsbf_spectrum_free(s);
  rsbf_tt_free(zero);
  rsbf_tt_free(f);
}

TEST_CASE("c api: other constructors") {
  rsbf_truth_table* t = nullptr;
  std::int64_t v = 0;
  REQUIRE(rsbf_tt_subfunction(3, 3, 5, &t) == RSBF_OK);
  REQUIRE(rsbf_tt_walsh_at(t, 2, &v) == RSBF_OK);
  CHECK(v == -8);
  rsbf_tt_free(t);
  REQUIRE(rsbf_tt_chain(5, &t) == RSBF_OK);
  REQUIRE(rsbf_tt_walsh_at(t, 0, &v) == RSBF_OK);
  CHECK(v == 28);
  rsbf_tt_free(t);
  REQUIRE(rsbf_tt_suffix_sum(1, 3, 1, 4, &t) == RSBF_OK);
  std::uint64_t w = 0;
  REQUIRE(rsbf_tt_weight(t, &w) == RSBF_OK);
  CHECK(w == 2);
  rsbf_tt_free(t);
  REQUIRE(rsbf_tt_linear(3, 5, &t) == RSBF_OK);
  REQUIRE(rsbf_tt_weight(t, &w) == RSBF_OK);
  CHECK(w == 4);
  rsbf_tt_free(t);
  CHECK(rsbf_rotate_input(1, 4, 1) == 8);
  REQUIRE(rsbf_factored_walsh(10, 4, 2, 0, &v) == RSBF_OK);
  CHECK(v == 400);
  CHECK(rsbf_hard_max_arity() == 28);
  CHECK(std::string(rsbf_version()) == "1.0.0");
}

TEST_CASE("c api: errors") {
  rsbf_truth_table* t = nullptr;
  CHECK(rsbf_tt_zero(0, &t) == RSBF_ERR_USAGE);
  CHECK(t == nullptr);
  CHECK(std::string(rsbf_last_error()).find("arity") != std::string::npos);
  CHECK(rsbf_tt_zero(29, &t) == RSBF_ERR_USAGE);
  CHECK(rsbf_tt_subfunction(4, 0, 6, &t) == RSBF_ERR_USAGE);
  CHECK(rsbf_tt_zero(4, nullptr) == RSBF_ERR_USAGE);
  REQUIRE(rsbf_tt_zero(3, &t) == RSBF_OK);
  CHECK(std::string(rsbf_last_error()).empty());
  std::int64_t v = 0;
  CHECK(rsbf_tt_walsh_at(t, 8, &v) == RSBF_ERR_USAGE);
  int bit = 0;
  CHECK(rsbf_tt_eval(t, 8, &bit) == RSBF_ERR_USAGE);
  rsbf_truth_table* u = nullptr;
  REQUIRE(rsbf_tt_zero(4, &u) == RSBF_OK);
  std::uint64_t d = 0;
  CHECK(rsbf_tt_distance(t, u, &d) == RSBF_ERR_USAGE);
  rsbf_tt_free(u);
  rsbf_tt_free(t);
  rsbf_tt_free(nullptr);
  rsbf_spectrum_free(nullptr);
  CHECK(rsbf_tt_arity(nullptr) == 0);
}

TEST_CASE("c api: checks") {
  rsbf_check_options opts;
  rsbf_check_options_init(&opts);
  opts.workers = 1;
  std::vector<std::string> lines;
  int passed = 0;
  REQUIRE(rsbf_check("table2", &opts, collect, &lines, &passed) == RSBF_OK);
  CHECK(passed == 1);
  REQUIRE(lines.size() == 1);
  auto j = nlohmann::json::parse(lines[0]);
  CHECK(j["check"] == "table2");
  CHECK(j["status"] == "pass");

  lines.clear();
  opts.n_lo = 8;
  opts.n_hi = 10;
  REQUIRE(rsbf_check("thm24", &opts, collect, &lines, &passed) == RSBF_OK);
  CHECK(passed == 1);
  CHECK(lines.size() == 3);

  opts.n_lo = 4;
  opts.n_hi = 6;
  opts.l = 4;
  lines.clear();
  REQUIRE(rsbf_check("theorem", &opts, collect, &lines, &passed) == RSBF_OK);
  CHECK(passed == 0);  // e = n cases
  CHECK(lines.size() == 15);

  CHECK(rsbf_check("bogus", &opts, collect, &lines, &passed) == RSBF_ERR_USAGE);
  opts.max_n = 40;
  CHECK(rsbf_check("table1", &opts, collect, &lines, &passed) == RSBF_ERR_CONFIG);
  opts.max_n = 10;
  opts.n_hi = 12;
  CHECK(rsbf_check("thm24", &opts, collect, &lines, &passed) == RSBF_ERR_USAGE);
  CHECK(rsbf_check(nullptr, &opts, collect, &lines, &passed) == RSBF_ERR_USAGE);

  lines.clear();
  REQUIRE(rsbf_table_csv(1, collect, &lines, &passed) == RSBF_OK);
  CHECK(passed == 1);
  CHECK(lines.size() == 12);
  CHECK(lines[0] == "n,4,5,6,7,8,9,10,11");
  CHECK(lines[11] == "F_4,16,20,52,84,176,312,624,1144");
  CHECK(rsbf_table_csv(3, collect, &lines, &passed) == RSBF_ERR_USAGE);
}
