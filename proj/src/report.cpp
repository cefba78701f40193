#include "rsbf/report.hpp"

#include <json.hpp>

namespace rsbf {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::kExpected: return "expected";
    case Expectation::kCited: return "cited";
    case Expectation::kConjectured: return "conjectured";
    case Expectation::kExploratory: return "exploratory";
    case Expectation::kCounterexample: return "counterexample-search";
  }
  return "expected";
}

void VerificationReport::fail(std::string key, std::int64_t expected, std::int64_t actual) {
  status = Status::kFail;
  witnesses.push_back(Witness{std::move(key), expected, actual});
}

std::optional<std::int64_t> VerificationReport::find_metric(std::string_view key) const {
  for (const auto& [k, v] : metrics) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string to_json_line(const VerificationReport& r) {
  // ordered_json keeps insertion order, so the layout is fixed.
  nlohmann::ordered_json j;
  j["check"] = r.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (r.params.n) params["n"] = *r.params.n;
  if (r.params.l) params["l"] = *r.params.l;
  if (r.params.e) params["e"] = *r.params.e;
  if (r.params.id) params["id"] = *r.params.id;
  j["params"] = std::move(params);
  j["status"] = std::string(to_string(r.status));
  j["expectation"] = std::string(to_string(r.expectation));
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"at", w.key}, {"expected", w.expected}, {"actual", w.actual}});
  }
  j["witnesses"] = std::move(witnesses);
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  j["metrics"] = std::move(metrics);
  if (!r.note.empty()) j["note"] = r.note;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

}  // namespace rsbf
