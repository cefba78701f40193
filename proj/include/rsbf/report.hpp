#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsbf {

enum class Status { kPass, kFail, kSkipped };

std::string_view to_string(Status s);

// How a failing case should be read.
enum class Expectation {
  kExpected,        // the claim is proved; a failure is an error
  kCited,           // proved elsewhere; still checked
  kConjectured,     // open conjecture; a failure is a finding
  kExploratory,     // no claim either way
  kCounterexample,  // a failure is the sought-after result
};

std::string_view to_string(Expectation e);

struct Witness {
  std::string key;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct ReportParams {
  std::optional<unsigned> n;
  std::optional<unsigned> l;
  std::optional<unsigned> e;
  std::optional<std::string> id;
};

struct VerificationReport {
  std::string check;
  ReportParams params;
  Status status = Status::kPass;
  Expectation expectation = Expectation::kExpected;
  std::vector<Witness> witnesses;
  // Ordered integer observations (max values, bounds, counts).
  std::vector<std::pair<std::string, std::int64_t>> metrics;
  std::string note;
  std::int64_t elapsed_ms = 0;

  // Records a mismatch; flips status to fail.
  void fail(std::string key, std::int64_t expected, std::int64_t actual);
  void metric(std::string key, std::int64_t value) { metrics.emplace_back(std::move(key), value); }
  std::optional<std::int64_t> find_metric(std::string_view key) const;
};

// One JSON object on a single line; keys in a fixed order, elapsed_ms last.
std::string to_json_line(const VerificationReport& r);

// Witness lists are capped at this many entries; the metric "mismatches"
// carries the full count.
inline constexpr std::size_t kMaxWitnesses = 64;

}  // namespace rsbf
