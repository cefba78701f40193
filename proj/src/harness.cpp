#include "rsbf/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "rsbf/errors.hpp"
#include "rsbf/families.hpp"
#include "rsbf/recurrence.hpp"
#include "rsbf/walsh.hpp"
#include "worker_pool.hpp"

namespace rsbf {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string sub_label(unsigned i, unsigned j) {
  return "f_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

VerificationReport make_report(std::string check, std::optional<unsigned> n = std::nullopt) {
  VerificationReport r;
  r.check = std::move(check);
  r.params.n = n;
  return r;
}

// Marks the report skipped when the check needs arities above the cap.
bool gate(VerificationReport& r, unsigned needed, const HarnessConfig& cfg) {
  if (needed <= cfg.max_n) return false;
  r.status = Status::kSkipped;
  r.note = "needs arity " + std::to_string(needed) + " > max_n " + std::to_string(cfg.max_n);
  return true;
}

// Records a mismatch, keeping at most kMaxWitnesses of them.
void mismatch(VerificationReport& r, std::uint64_t& count, std::string key, std::int64_t expected,
              std::int64_t actual) {
  ++count;
  if (r.witnesses.size() < kMaxWitnesses) {
    r.fail(std::move(key), expected, actual);
  } else {
    r.status = Status::kFail;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Range e_bounds(const Range& e_range, unsigned n) {
  return Range{e_range.lo, e_range.hi == 0 ? n : e_range.hi};
}

}  // namespace

std::string TableArtifact::to_csv() const {
  std::ostringstream out;
  out << csv_field(corner);
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << "\r\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << csv_field(rows[r]);
    for (const std::int64_t v : cells[r]) out << ',' << v;
    out << "\r\n";
  }
  return out.str();
}

void validate(const HarnessConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > kHardMaxArity) {
    throw ConfigError("max_n must be in 1.." + std::to_string(kHardMaxArity));
  }
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
}

TableRun reproduce_table1(const HarnessConfig& cfg) {
  const auto start = Clock::now();
  TableRun run;
  run.report = make_report("table1");
  run.report.params.id = "1";
  auto& table = run.table;
  table.id = 1;
  table.corner = "n";
  for (unsigned n = GoldenTable1::kFirstArity; n <= GoldenTable1::kLastArity; ++n) {
    table.columns.push_back(std::to_string(n));
  }
  if (gate(run.report, GoldenTable1::kLastArity, cfg)) return run;

  const GoldenTable1& golden = cfg.table1_override ? *cfg.table1_override : golden_table1();
  std::uint64_t mismatches = 0;
  std::uint64_t cells = 0;
  for (std::size_t row = 0; row <= GoldenTable1::kRowIds.size(); ++row) {
    const bool full = row == GoldenTable1::kRowIds.size();
    const std::string label = full ? "F_4" : sub_label(GoldenTable1::kRowIds[row][0],
                                                       GoldenTable1::kRowIds[row][1]);
    table.rows.push_back(label);
    auto& values = table.cells.emplace_back();
    for (unsigned n = GoldenTable1::kFirstArity; n <= GoldenTable1::kLastArity; ++n) {
      const TruthTable f = full ? gen_F(MonomialRsbfSpec{n, 4, 1})
                                : gen_f(SubFunctionId{GoldenTable1::kRowIds[row][0],
                                                      GoldenTable1::kRowIds[row][1], n});
      const std::int64_t by_butterfly = walsh_transform(f)[0];
      const std::int64_t by_sum = walsh_at(f, LinearMask{n, 0});
      const std::int64_t expected = golden.rows[row][n - GoldenTable1::kFirstArity];
      const std::string key = label + " n=" + std::to_string(n);
      if (by_butterfly != by_sum) mismatch(run.report, mismatches, key + " fwht-vs-direct", by_sum, by_butterfly);
      if (by_butterfly != expected) mismatch(run.report, mismatches, key, expected, by_butterfly);
      values.push_back(by_butterfly);
      ++cells;
    }
  }
  run.report.metric("cells", static_cast<std::int64_t>(cells));
  run.report.metric("mismatches", static_cast<std::int64_t>(mismatches));
  run.report.elapsed_ms = elapsed_since(start);
  return run;
}

TableRun reproduce_table2(const HarnessConfig& cfg) {
  const auto start = Clock::now();
  constexpr unsigned n = 5;
  TableRun run;
  run.report = make_report("table2", n);
  run.report.params.id = "2";
  auto& table = run.table;
  table.id = 2;
  table.corner = "c";
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) table.columns.push_back(sub_label(i, j));
  }
  if (gate(run.report, n, cfg)) return run;

  std::vector<TruthTable> fs;
  std::vector<WalshSpectrum> spectra;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      fs.push_back(gen_f(SubFunctionId{i, j, n}));
      spectra.push_back(walsh_transform(fs.back()));
    }
  }
  const auto& golden = golden_table2();
  std::uint64_t mismatches = 0;
  std::uint64_t cells = 0;
  for (std::size_t row = 0; row < GoldenTable2::kMasks.size(); ++row) {
    const std::uint64_t c = GoldenTable2::kMasks[row];
    table.rows.push_back(std::to_string(c));
    auto& values = table.cells.emplace_back();
    for (std::size_t col = 0; col < 16; ++col) {
      const std::int64_t by_butterfly = spectra[col][c];
      const std::int64_t by_sum = walsh_at(fs[col], LinearMask{n, c});
      const std::int64_t expected = golden.rows[row][col];
      const std::string key = table.columns[col] + " c=" + std::to_string(c);
      if (by_butterfly != by_sum) mismatch(run.report, mismatches, key + " fwht-vs-direct", by_sum, by_butterfly);
      if (by_butterfly != expected) mismatch(run.report, mismatches, key, expected, by_butterfly);
      values.push_back(by_butterfly);
      ++cells;
    }
  }
  run.report.metric("cells", static_cast<std::int64_t>(cells));
  run.report.metric("mismatches", static_cast<std::int64_t>(mismatches));
  run.report.elapsed_ms = elapsed_since(start);
  return run;
}

VerificationReport check_lemma_grid(unsigned lemma, unsigned n, const HarnessConfig& cfg) {
  if (lemma != 21 && lemma != 22) throw UsageError("lemma must be 21 or 22");
  const auto start = Clock::now();
  auto r = make_report(lemma == 21 ? "lemma21" : "lemma22", n);
  if (n < 8) throw UsageError("lemma grids need n >= 8");
  if (gate(r, n, cfg)) return r;

  const CachedSubSpectra rhs_source(n - 4, n - 2);
  const std::uint64_t top = lemma == 21 ? 0 : (std::uint64_t{1} << (n - 1));
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::vector<std::uint64_t> masks;
  if (n <= cfg.lemma_exhaustive_limit) {
    masks.reserve(half);
    for (std::uint64_t low = 0; low < half; ++low) masks.push_back(top | low);
  } else {
    std::mt19937_64 rng(1000003ULL * n + lemma);
    std::uniform_int_distribution<std::uint64_t> pick(0, half - 1);
    for (unsigned k = 0; k < cfg.lemma_samples; ++k) masks.push_back(top | pick(rng));
    r.note = "sampled " + std::to_string(cfg.lemma_samples) + " masks";
  }

  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      const TruthTable f = gen_f(SubFunctionId{i, j, n});
      for (const std::uint64_t c : masks) {
        const LinearMask mask{n, c};
        const std::int64_t direct = walsh_at(f, mask);
        const std::int64_t rhs = lemma == 21 ? lemma21_rhs(i, j, n, mask, rhs_source)
                                             : lemma22_rhs(i, j, n, mask, rhs_source);
        ++checks;
        if (rhs != direct) {
          mismatch(r, mismatches, sub_label(i, j) + " c=" + std::to_string(c), direct, rhs);
        }
      }
    }
  }
  r.metric("checks", static_cast<std::int64_t>(checks));
  r.metric("mismatches", static_cast<std::int64_t>(mismatches));
  r.elapsed_ms = elapsed_since(start);
  return r;
}

VerificationReport check_eq23(unsigned n, const HarnessConfig& cfg) {
  const auto start = Clock::now();
  auto r = make_report("eq23", n);
  r.params.l = 4;
  r.params.e = 1;
  if (n < 7) throw UsageError("eq23 needs n >= 7");
  if (gate(r, n, cfg)) return r;

  const CachedSubSpectra rhs_source(n - 3, n - 3);
  const TruthTable f = gen_F(MonomialRsbfSpec{n, 4, 1});
  std::uint64_t mismatches = 0;
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    const LinearMask mask{n, c};
    const std::int64_t direct = walsh_at(f, mask);
    const std::int64_t rhs = eq23_rhs(n, mask, rhs_source);
    if (rhs != direct) mismatch(r, mismatches, "c=" + std::to_string(c), direct, rhs);
  }
  r.metric("checks", static_cast<std::int64_t>(f.size()));
  r.metric("mismatches", static_cast<std::int64_t>(mismatches));
  r.elapsed_ms = elapsed_since(start);
  return r;
}

VerificationReport check_eq26(unsigned n, const HarnessConfig& cfg) {
  const auto start = Clock::now();
  auto r = make_report("eq26", n);
  if (n < 8) throw UsageError("eq26 needs n >= 8");
  if (gate(r, n, cfg)) return r;

  const auto seeded = SpectralBaseTable::from_brute_force(4, 7);
  const auto reference = SpectralBaseTable::from_golden();
  std::uint64_t mismatches = 0;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      const std::int64_t direct = walsh_at(gen_f(SubFunctionId{i, j, n}), LinearMask{n, 0});
      const std::int64_t from_seeds = eq26_zero(i, j, n, seeded);
      const std::int64_t from_table = eq26_zero(i, j, n, reference);
      const std::string key = sub_label(i, j);
      if (from_seeds != direct) mismatch(r, mismatches, key + " computed seeds", direct, from_seeds);
      if (from_table != direct) mismatch(r, mismatches, key + " reference seeds", direct, from_table);
    }
  }
  r.metric("mismatches", static_cast<std::int64_t>(mismatches));
  r.elapsed_ms = elapsed_since(start);
  return r;
}

VerificationReport check_thm24(unsigned n, const HarnessConfig& cfg) {
  const auto start = Clock::now();
  auto r = make_report("thm24", n);
  r.params.l = 4;
  r.params.e = 1;
  if (n < 8) throw UsageError("thm24 needs n >= 8");
  if (gate(r, n, cfg)) return r;

  const std::int64_t direct = walsh_at(gen_F(MonomialRsbfSpec{n, 4, 1}), LinearMask{n, 0});
  const std::int64_t from_seeds = thm24_zero(n, SpectralBaseTable::from_brute_force(4, 7));
  const std::int64_t from_table = thm24_zero(n, SpectralBaseTable::from_golden());
  std::uint64_t mismatches = 0;
  if (from_seeds != direct) mismatch(r, mismatches, "computed seeds", direct, from_seeds);
  if (from_table != direct) mismatch(r, mismatches, "reference seeds", direct, from_table);
  r.metric("value", direct);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

VerificationReport check_bound(unsigned n, const HarnessConfig& cfg) {
  auto r = make_report("bound", n);
  if (n < 4) throw UsageError("bound needs n >= 4");
  if (gate(r, n + 3, cfg)) return r;
  return lemma32_check(n);
}

VerificationReport check_factorization(unsigned n, unsigned e, const HarnessConfig& cfg) {
  const auto start = Clock::now();
  auto r = make_report("factor", n);
  r.params.l = 4;
  r.params.e = e;
  if (gate(r, n, cfg)) return r;

  const auto spec = MonomialRsbfSpec::make(n, 4, e);
  const FactoredWalsh factored(spec);
  const auto spectrum = walsh_transform(gen_F(spec));
  std::uint64_t mismatches = 0;
  for (std::uint64_t c = 0; c < spectrum.size(); ++c) {
    const std::int64_t product = factored(c);
    if (product != spectrum[c]) mismatch(r, mismatches, "c=" + std::to_string(c), spectrum[c], product);
  }
  r.metric("s", factored.cycles().s);
  r.metric("t", factored.cycles().t);
  r.metric("value_at_zero", factored(0));
  r.metric("mismatches", static_cast<std::int64_t>(mismatches));
  r.elapsed_ms = elapsed_since(start);
  return r;
}

Expectation expectation_for_degree(unsigned l) {
  if (l == 2) return Expectation::kCounterexample;
  if (l == 3) return Expectation::kCited;
  if (l == 4) return Expectation::kExpected;
  if (l <= 6) return Expectation::kConjectured;
  return Expectation::kExploratory;
}

VerificationReport check_nonlinearity_case(unsigned n, unsigned l, unsigned e,
                                           const HarnessConfig& cfg) {
  const auto start = Clock::now();
  const auto spec = MonomialRsbfSpec::make(n, l, e);
  auto r = make_report("nonlinearity", n);
  r.params.l = l;
  r.params.e = e;
  r.expectation = expectation_for_degree(l);
  if (gate(r, n, cfg)) return r;

  const auto spectrum = walsh_transform(gen_F(spec));
  const auto peak = spectrum_argmax(spectrum);
  const std::int64_t w0 = spectrum[0];
  const auto wt = static_cast<std::int64_t>((static_cast<std::int64_t>(spectrum.size()) - w0) / 2);
  const auto nl = static_cast<std::int64_t>(nonlinearity(spectrum));
  const bool max_at_zero = prop31_criterion(spectrum);

  bool strict_abs = true;
  bool strict_signed = true;
  for (std::uint64_t c = 1; c < spectrum.size(); ++c) {
    if (std::llabs(spectrum[c]) >= w0) strict_abs = false;
    if (spectrum[c] >= w0) strict_signed = false;
  }

  const auto cycles = cycle_decompose(n, e);
  r.metric("weight", wt);
  r.metric("nonlinearity", nl);
  r.metric("w0", w0);
  r.metric("max", peak.max);
  r.metric("argmax", static_cast<std::int64_t>(peak.argmax.c));
  r.metric("abs_max", static_cast<std::int64_t>(peak.abs_max));
  r.metric("abs_argmax", static_cast<std::int64_t>(peak.abs_argmax.c));
  r.metric("max_abs_at_zero", max_at_zero ? 1 : 0);
  r.metric("strict_abs_max_at_zero", strict_abs ? 1 : 0);
  r.metric("strict_signed_max_at_zero", strict_signed ? 1 : 0);
  r.metric("s", cycles.s);
  r.metric("t", cycles.t);

  if (nl != wt) r.fail("nonlinearity", wt, nl);
  if (!max_at_zero) {
    r.fail("max |W| at c=" + std::to_string(peak.abs_argmax.c), w0,
           static_cast<std::int64_t>(peak.abs_max));
  }
  if (w0 <= 0) r.fail("W(0) > 0", 1, w0);

  if (spec.degenerate()) {
    r.note = "degenerate (n < l)";
  } else if (cycles.t == 1) {
    r.note = "t = 1: every monomial collapses to a single variable, F is linear";
  } else if (cycles.t < l) {
    r.note = "t < l: monomials repeat indices";
  }
  r.elapsed_ms = elapsed_since(start);
  return r;
}

std::vector<VerificationReport> verify_theorem(Range n_range, Range e_range, unsigned l,
                                               const HarnessConfig& cfg) {
  validate(cfg);
  if (l < 2) throw UsageError("degree l must be >= 2");
  if (n_range.lo < 1 || n_range.hi < n_range.lo) throw UsageError("bad n range");
  if (e_range.lo < 1) throw UsageError("bad e range");

  std::vector<std::array<unsigned, 2>> cases;
  for (unsigned n = n_range.lo; n <= n_range.hi; ++n) {
    const Range es = e_bounds(e_range, n);
    for (unsigned e = es.lo; e <= es.hi; ++e) cases.push_back({n, e});
  }
  std::vector<VerificationReport> reports(cases.size());
  detail::parallel_for(cases.size(), cfg.workers, [&](std::size_t k) {
    reports[k] = check_nonlinearity_case(cases[k][0], l, cases[k][1], cfg);
  });

  if (l == 2) {
    VerificationReport summary = make_report("counterexample");
    summary.params.l = l;
    // Cases with t < l collapse to lower degree (t = 1 is linear); only
    // t >= l counts as a genuine quadratic counterexample.
    std::int64_t found = 0;
    std::int64_t genuine = 0;
    std::string first;
    for (const auto& r : reports) {
      if (r.status != Status::kFail) continue;
      ++found;
      if (*r.find_metric("t") < static_cast<std::int64_t>(l)) continue;
      if (genuine++ == 0) {
        first = "first: n=" + std::to_string(*r.params.n) + " e=" + std::to_string(*r.params.e) +
                " N=" + std::to_string(*r.find_metric("nonlinearity")) +
                " wt=" + std::to_string(*r.find_metric("weight"));
      }
    }
    summary.metric("counterexamples", genuine);
    summary.metric("collapsed_counterexamples", found - genuine);
    summary.metric("cases", static_cast<std::int64_t>(reports.size()));
    if (genuine == 0) {
      summary.fail("cases with N != wt and t >= l", 1, 0);
    } else {
      summary.note = first;
    }
    reports.push_back(std::move(summary));
  }
  return reports;
}

std::optional<CheckKind> parse_check_kind(std::string_view name) {
  static constexpr std::pair<std::string_view, CheckKind> kNames[] = {
      {"table1", CheckKind::kTable1}, {"table2", CheckKind::kTable2},
      {"lemma21", CheckKind::kLemma21}, {"lemma22", CheckKind::kLemma22},
      {"eq23", CheckKind::kEq23}, {"eq26", CheckKind::kEq26},
      {"thm24", CheckKind::kThm24}, {"bound", CheckKind::kBound},
      {"theorem", CheckKind::kTheorem}, {"conjecture", CheckKind::kConjecture},
      {"factor", CheckKind::kFactor}, {"all", CheckKind::kAll},
  };
  for (const auto& [key, kind] : kNames) {
    if (key == name) return kind;
  }
  return std::nullopt;
}

bool aggregate_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != Status::kFail) continue;
    if (r.expectation == Expectation::kCounterexample ||
        r.expectation == Expectation::kExploratory) {
      continue;
    }
    return false;
  }
  return true;
}

namespace {

class Collector {
 public:
  explicit Collector(const ReportSink& sink) : sink_(sink) {}
  void add(VerificationReport r) {
    if (sink_) sink_(r);
    reports_.push_back(std::move(r));
  }
  void add_all(std::vector<VerificationReport> rs) {
    for (auto& r : rs) add(std::move(r));
  }
  bool passed() const { return aggregate_pass(reports_); }

 private:
  const ReportSink& sink_;
  std::vector<VerificationReport> reports_;
};

template <typename F>
void per_arity(Range range, Collector& out, F&& check) {
  for (unsigned n = range.lo; n <= range.hi; ++n) out.add(check(n));
}

Range or_default(const std::optional<Range>& r, Range fallback) { return r ? *r : fallback; }

void run_degree_scan(unsigned l, const CheckRequest& req, const HarnessConfig& cfg,
                     Collector& out) {
  Range n_default{l, cfg.conjecture_max_n};
  Range e_default = cfg.conjecture_e;
  if (l == 2) {
    n_default = cfg.quadratic_n;
    e_default = cfg.quadratic_e;
  } else if (l == 3) {
    n_default = cfg.cubic_n;
    e_default = cfg.cubic_e;
  } else if (l == 4) {
    n_default = cfg.theorem_n;
    e_default = cfg.theorem_e;
  }
  out.add_all(verify_theorem(or_default(req.n_range, n_default),
                             or_default(req.e_range, e_default), l, cfg));
}

void dispatch(const CheckRequest& req, const HarnessConfig& cfg, Collector& out) {
  switch (req.kind) {
    case CheckKind::kTable1:
      out.add(reproduce_table1(cfg).report);
      break;
    case CheckKind::kTable2:
      out.add(reproduce_table2(cfg).report);
      break;
    case CheckKind::kLemma21:
    case CheckKind::kLemma22: {
      const unsigned lemma = req.kind == CheckKind::kLemma21 ? 21 : 22;
      per_arity(or_default(req.n_range, cfg.lemma_grid), out,
                [&](unsigned n) { return check_lemma_grid(lemma, n, cfg); });
      break;
    }
    case CheckKind::kEq23:
      per_arity(or_default(req.n_range, cfg.eq23), out,
                [&](unsigned n) { return check_eq23(n, cfg); });
      break;
    case CheckKind::kEq26:
      per_arity(or_default(req.n_range, cfg.recurrence), out,
                [&](unsigned n) { return check_eq26(n, cfg); });
      break;
    case CheckKind::kThm24:
      per_arity(or_default(req.n_range, cfg.recurrence), out,
                [&](unsigned n) { return check_thm24(n, cfg); });
      break;
    case CheckKind::kBound:
      per_arity(or_default(req.n_range, cfg.bound), out,
                [&](unsigned n) { return check_bound(n, cfg); });
      break;
    case CheckKind::kTheorem:
      run_degree_scan(req.l.value_or(4), req, cfg, out);
      break;
    case CheckKind::kConjecture:
      if (req.l) {
        run_degree_scan(*req.l, req, cfg, out);
      } else {
        for (const unsigned l : cfg.conjecture_l) run_degree_scan(l, req, cfg, out);
      }
      break;
    case CheckKind::kFactor: {
      std::vector<std::array<unsigned, 2>> cases = cfg.factor_cases;
      if (req.n_range || req.e_range) {
        cases.clear();
        const Range ns = or_default(req.n_range, Range{4, 14});
        for (unsigned n = ns.lo; n <= ns.hi; ++n) {
          const Range es = e_bounds(or_default(req.e_range, Range{1, 0}), n);
          for (unsigned e = es.lo; e <= es.hi; ++e) cases.push_back({n, e});
        }
      }
      std::vector<VerificationReport> reports(cases.size());
      detail::parallel_for(cases.size(), cfg.workers, [&](std::size_t k) {
        reports[k] = check_factorization(cases[k][0], cases[k][1], cfg);
      });
      out.add_all(std::move(reports));
      break;
    }
    case CheckKind::kAll:
      for (const CheckKind kind :
           {CheckKind::kTable1, CheckKind::kTable2, CheckKind::kLemma21, CheckKind::kLemma22,
            CheckKind::kEq23, CheckKind::kEq26, CheckKind::kThm24, CheckKind::kBound,
            CheckKind::kTheorem, CheckKind::kFactor}) {
        dispatch(CheckRequest{kind, std::nullopt, std::nullopt, std::nullopt}, cfg, out);
      }
      for (const unsigned l : cfg.conjecture_l) {
        run_degree_scan(l, CheckRequest{}, cfg, out);
      }
      run_degree_scan(3, CheckRequest{}, cfg, out);
      run_degree_scan(2, CheckRequest{}, cfg, out);
      break;
  }
}

}  // namespace

bool run_check(const CheckRequest& req, const HarnessConfig& cfg, const ReportSink& sink) {
  validate(cfg);
  Collector out(sink);
  dispatch(req, cfg, out);
  return out.passed();
}

bool run_all(const HarnessConfig& cfg, const ReportSink& sink) {
  return run_check(CheckRequest{CheckKind::kAll, std::nullopt, std::nullopt, std::nullopt}, cfg,
                   sink);
}

}  // namespace rsbf
