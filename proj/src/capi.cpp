#include "rsbf/rsbf.h"

#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <thread>

#include "rsbf/errors.hpp"
#include "rsbf/families.hpp"
#include "rsbf/harness.hpp"
#include "rsbf/recurrence.hpp"
#include "rsbf/walsh.hpp"

struct rsbf_truth_table {
  rsbf::TruthTable table;
};

struct rsbf_spectrum {
  rsbf::WalshSpectrum spectrum;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
rsbf_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return RSBF_OK;
  } catch (const rsbf::UsageError& e) {
    g_last_error = e.what();
    return RSBF_ERR_USAGE;
  } catch (const rsbf::PreconditionError& e) {
    g_last_error = e.what();
    return RSBF_ERR_PRECONDITION;
  } catch (const rsbf::ConfigError& e) {
    g_last_error = e.what();
    return RSBF_ERR_CONFIG;
  } catch (const rsbf::OverflowError& e) {
    g_last_error = e.what();
    return RSBF_ERR_OVERFLOW;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RSBF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSBF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RSBF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw rsbf::UsageError(std::string(what) + " must not be null");
}

template <typename F>
rsbf_status make_table(rsbf_truth_table** out, F&& build) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new rsbf_truth_table{build()};
  });
}

}  // namespace

extern "C" {

const char* rsbf_last_error(void) { return g_last_error.c_str(); }

const char* rsbf_version(void) { return "1.0.0"; }

uint32_t rsbf_hard_max_arity(void) { return rsbf::kHardMaxArity; }

rsbf_status rsbf_tt_zero(uint32_t n, rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::TruthTable(n); });
}

rsbf_status rsbf_tt_linear(uint32_t n, uint64_t c, rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::linear_function(rsbf::LinearMask::make(n, c)); });
}

rsbf_status rsbf_tt_monomial_rsbf(uint32_t n, uint32_t l, uint32_t e, rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::gen_F(rsbf::MonomialRsbfSpec::make(n, l, e)); });
}

rsbf_status rsbf_tt_subfunction(uint32_t i, uint32_t j, uint32_t n, rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::gen_f(rsbf::SubFunctionId::make(i, j, n)); });
}

rsbf_status rsbf_tt_chain(uint32_t n, rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::gen_t(n); });
}

rsbf_status rsbf_tt_suffix_sum(uint32_t i, uint32_t j, uint32_t k, uint32_t n,
                               rsbf_truth_table** out) {
  return make_table(out, [&] { return rsbf::gen_X(i, j, k, n); });
}

void rsbf_tt_free(rsbf_truth_table* tt) { delete tt; }

uint32_t rsbf_tt_arity(const rsbf_truth_table* tt) { return tt ? tt->table.arity() : 0; }

rsbf_status rsbf_tt_eval(const rsbf_truth_table* tt, uint64_t x, int* out) {
  return guarded([&] {
    require(tt, "tt");
    require(out, "out");
    *out = tt->table.eval(x) ? 1 : 0;
  });
}

rsbf_status rsbf_tt_weight(const rsbf_truth_table* tt, uint64_t* out) {
  return guarded([&] {
    require(tt, "tt");
    require(out, "out");
    *out = rsbf::weight(tt->table);
  });
}

rsbf_status rsbf_tt_distance(const rsbf_truth_table* f, const rsbf_truth_table* g, uint64_t* out) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(out, "out");
    *out = rsbf::distance(f->table, g->table);
  });
}

rsbf_status rsbf_tt_nonlinearity(const rsbf_truth_table* tt, uint64_t* out) {
  return guarded([&] {
    require(tt, "tt");
    require(out, "out");
    *out = rsbf::nonlinearity(tt->table);
  });
}

rsbf_status rsbf_tt_walsh_at(const rsbf_truth_table* tt, uint64_t c, int64_t* out) {
  return guarded([&] {
    require(tt, "tt");
    require(out, "out");
    *out = rsbf::walsh_at(tt->table, rsbf::LinearMask::make(tt->table.arity(), c));
  });
}

uint64_t rsbf_rotate_input(uint64_t x, uint32_t n, uint32_t shift) {
  uint64_t result = x;
  guarded([&] { result = rsbf::rotate_input(x, n, shift); });
  return result;
}

rsbf_status rsbf_walsh_transform(const rsbf_truth_table* tt, rsbf_spectrum** out) {
  return guarded([&] {
    require(tt, "tt");
    require(out, "out");
    *out = nullptr;
    *out = new rsbf_spectrum{rsbf::walsh_transform(tt->table)};
  });
}

void rsbf_spectrum_free(rsbf_spectrum* s) { delete s; }

uint32_t rsbf_spectrum_arity(const rsbf_spectrum* s) { return s ? s->spectrum.arity() : 0; }

const int64_t* rsbf_spectrum_values(const rsbf_spectrum* s) {
  return s ? s->spectrum.values().data() : nullptr;
}

rsbf_status rsbf_spectrum_at(const rsbf_spectrum* s, uint64_t c, int64_t* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = s->spectrum.at(rsbf::LinearMask::make(s->spectrum.arity(), c));
  });
}

rsbf_status rsbf_spectrum_peak(const rsbf_spectrum* s, rsbf_peak* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    const auto p = rsbf::spectrum_argmax(s->spectrum);
    *out = rsbf_peak{p.argmax.c, p.max, p.abs_argmax.c, p.abs_max};
  });
}

rsbf_status rsbf_spectrum_nonlinearity(const rsbf_spectrum* s, uint64_t* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = rsbf::nonlinearity(s->spectrum);
  });
}

rsbf_status rsbf_spectrum_max_at_zero(const rsbf_spectrum* s, int* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = rsbf::prop31_criterion(s->spectrum) ? 1 : 0;
  });
}

rsbf_status rsbf_factored_walsh(uint32_t n, uint32_t l, uint32_t e, uint64_t c, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rsbf::factored_walsh(rsbf::MonomialRsbfSpec::make(n, l, e), rsbf::LinearMask::make(n, c));
  });
}

void rsbf_check_options_init(rsbf_check_options* opts) {
  if (opts != nullptr) *opts = rsbf_check_options{};
}

rsbf_status rsbf_check(const char* which, const rsbf_check_options* opts, rsbf_line_sink sink,
                       void* user, int* passed) {
  return guarded([&] {
    require(which, "which");
    require(passed, "passed");
    const auto kind = rsbf::parse_check_kind(which);
    if (!kind) throw rsbf::UsageError(std::string("unknown check '") + which + "'");
    rsbf_check_options o{};
    if (opts != nullptr) o = *opts;

    rsbf::HarnessConfig cfg;
    if (o.max_n != 0) cfg.max_n = o.max_n;
    cfg.workers = o.workers != 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());
    rsbf::validate(cfg);

    rsbf::CheckRequest req;
    req.kind = *kind;
    if (o.n_lo != 0 || o.n_hi != 0) {
      if (o.n_lo == 0 || o.n_hi < o.n_lo) throw rsbf::UsageError("bad n range");
      if (o.n_hi > cfg.max_n) throw rsbf::UsageError("n range exceeds max_n");
      req.n_range = rsbf::Range{o.n_lo, o.n_hi};
    }
    if (o.e_lo != 0 || o.e_hi != 0) {
      if (o.e_lo == 0 || o.e_hi < o.e_lo) throw rsbf::UsageError("bad e range");
      req.e_range = rsbf::Range{o.e_lo, o.e_hi};
    }
    if (o.l != 0) {
      if (o.l < 2) throw rsbf::UsageError("l must be >= 2");
      req.l = o.l;
    }
    const bool ok = rsbf::run_check(req, cfg, [&](const rsbf::VerificationReport& r) {
      if (sink != nullptr) sink(rsbf::to_json_line(r).c_str(), user);
    });
    *passed = ok ? 1 : 0;
  });
}

rsbf_status rsbf_table_csv(int table_id, rsbf_line_sink sink, void* user, int* passed) {
  return guarded([&] {
    require(passed, "passed");
    if (table_id != 1 && table_id != 2) throw rsbf::UsageError("table id must be 1 or 2");
    const auto run = table_id == 1 ? rsbf::reproduce_table1() : rsbf::reproduce_table2();
    *passed = run.report.status == rsbf::Status::kPass ? 1 : 0;
    if (sink == nullptr) return;
    std::istringstream lines(run.table.to_csv());
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      sink(line.c_str(), user);
    }
  });
}

}  // extern "C"
