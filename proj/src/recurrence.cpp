#include "rsbf/recurrence.hpp"

#include <chrono>
#include <cstdlib>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsbf/errors.hpp"
#include "rsbf/harness.hpp"

namespace rsbf {
namespace {

std::int64_t sign(bool odd) { return odd ? -1 : 1; }

std::size_t slot(unsigned lo, unsigned i, unsigned j, unsigned m) {
  return static_cast<std::size_t>(m - lo) * 16 + 4 * i + j;
}

void require_arity_range(unsigned lo, unsigned hi) {
  if (lo < 4 || hi < lo || hi > kHardMaxArity) {
    throw UsageError("sub-function arity range must satisfy 4 <= lo <= hi <= 28");
  }
}

void require_range(unsigned lo, unsigned hi, unsigned m) {
  if (m < lo || m > hi) {
    throw ConfigError("sub-function arity " + std::to_string(m) + " not prepared (have " +
                      std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }
}

void check_recursion_args(unsigned i, unsigned j, unsigned n, LinearMask c, const char* what) {
  if (i > 3 || j > 3) throw UsageError(std::string(what) + ": i and j must be in 0..3");
  if (n < 8) throw UsageError(std::string(what) + ": needs n >= 8");
  if (c.n != n) throw UsageError(std::string(what) + ": mask arity mismatch");
}

std::int64_t run_recurrence(const std::array<std::int64_t, 4>& seeds, unsigned n) {
  if (n < 4) throw UsageError("recurrence defined from n = 4");
  if (n <= 7) return seeds[n - 4];
  std::array<std::int64_t, 4> w = seeds;  // w[k] holds a_{m-3+k} for current m
  for (unsigned m = 8; m <= n; ++m) {
    std::int64_t sum = 0;
    std::int64_t next = 0;
    if (__builtin_add_overflow(w[2], w[1], &sum) || __builtin_add_overflow(sum, w[0], &sum) ||
        __builtin_mul_overflow(sum, std::int64_t{2}, &next)) {
      throw OverflowError("recurrence value at n=" + std::to_string(m) + " exceeds int64");
    }
    w = {w[1], w[2], w[3], next};
  }
  return w[3];
}

}  // namespace

DirectSubSpectra::DirectSubSpectra(unsigned lo, unsigned hi) : lo_(lo), hi_(hi) {
  require_arity_range(lo, hi);
  tables_.reserve(static_cast<std::size_t>(hi - lo + 1) * 16);
  for (unsigned m = lo; m <= hi; ++m) {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 4; ++j) tables_.push_back(gen_f(SubFunctionId{i, j, m}));
    }
  }
}

const TruthTable& DirectSubSpectra::table(unsigned i, unsigned j, unsigned m) const {
  require_range(lo_, hi_, m);
  return tables_[slot(lo_, i, j, m)];
}

std::int64_t DirectSubSpectra::at(unsigned i, unsigned j, unsigned m, std::uint64_t c) const {
  return walsh_at(table(i, j, m), LinearMask::make(m, c));
}

CachedSubSpectra::CachedSubSpectra(unsigned lo, unsigned hi) : lo_(lo), hi_(hi) {
  require_arity_range(lo, hi);
  spectra_.reserve(static_cast<std::size_t>(hi - lo + 1) * 16);
  for (unsigned m = lo; m <= hi; ++m) {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 4; ++j) spectra_.push_back(walsh_transform(gen_f(SubFunctionId{i, j, m})));
    }
  }
}

std::int64_t CachedSubSpectra::at(unsigned i, unsigned j, unsigned m, std::uint64_t c) const {
  require_range(lo_, hi_, m);
  return spectra_[slot(lo_, i, j, m)].at(LinearMask::make(m, c));
}

MaskSuffix MaskSuffix::of(LinearMask c) {
  if (c.n < 4) throw UsageError("MaskSuffix needs n >= 4");
  const unsigned n = c.n;
  MaskSuffix s;
  s.c1 = c.bit(n - 1);
  s.c2 = c.bit(n - 2);
  s.c3 = c.bit(n - 3);
  s.c4 = c.bit(n - 4);
  s.trunc2 = c.c & ((std::uint64_t{1} << (n - 2)) - 1);
  s.trunc3 = c.c & ((std::uint64_t{1} << (n - 3)) - 1);
  s.trunc4 = c.c & ((std::uint64_t{1} << (n - 4)) - 1);
  return s;
}

std::int64_t eq23_rhs(unsigned n, LinearMask c, const SubSpectrumSource& src) {
  if (n < 7) throw UsageError("eq23_rhs: needs n >= 7");
  if (c.n != n) throw UsageError("eq23_rhs: mask arity mismatch");
  const auto s = MaskSuffix::of(c);
  const unsigned m = n - 3;
  const std::uint64_t a = s.trunc3;
  return (1 + sign(s.c2)) * src.at(0, 0, m, a) +
         sign(s.c1) * src.at(0, 1, m, a) +
         sign(s.c2 != s.c1) * src.at(0, 2, m, a) +
         sign(s.c3) * src.at(1, 0, m, a) +
         sign(s.c3 != s.c1) * src.at(1, 1, m, a) +
         sign(s.c3 != s.c2) * src.at(2, 0, m, a) +
         sign(s.c3 ^ s.c2 ^ s.c1) * src.at(3, 3, m, a);
}

std::int64_t eq23_rhs(unsigned n, LinearMask c) {
  if (n < 7) throw UsageError("eq23_rhs: needs n >= 7");
  return eq23_rhs(n, c, DirectSubSpectra(n - 3, n - 3));
}

std::int64_t lemma21_rhs(unsigned i, unsigned j, unsigned n, LinearMask c,
                         const SubSpectrumSource& src) {
  check_recursion_args(i, j, n, c, "lemma21_rhs");
  const auto s = MaskSuffix::of(c);
  if (s.c1) throw PreconditionError("lemma21_rhs: requires c_{n-1} = 0");
  const std::int64_t s2 = sign(s.c2);
  const std::int64_t s23 = sign(s.c2 != s.c3);
  const std::int64_t s234 = sign(s.c2 ^ s.c3 ^ s.c4);
  switch (i) {
    case 0:
      return 2 * src.at(0, j, n - 2, s.trunc2) + 2 * s2 * src.at(0, j, n - 3, s.trunc3) +
             2 * s23 * src.at(0, j, n - 4, s.trunc4);
    case 1:
      return 2 * src.at(0, j, n - 2, s.trunc2) + 2 * s2 * src.at(0, j, n - 3, s.trunc3) +
             2 * s234 * src.at(3, j, n - 4, s.trunc4);
    case 2:
      return 2 * src.at(0, j, n - 2, s.trunc2) + 2 * s23 * src.at(0, j, n - 4, s.trunc4);
    default:
      return 2 * s2 * src.at(0, j, n - 3, s.trunc3) + 2 * s234 * src.at(3, j, n - 4, s.trunc4);
  }
}

std::int64_t lemma21_rhs(unsigned i, unsigned j, unsigned n, LinearMask c) {
  check_recursion_args(i, j, n, c, "lemma21_rhs");
  return lemma21_rhs(i, j, n, c, DirectSubSpectra(n - 4, n - 2));
}

std::int64_t lemma22_rhs(unsigned i, unsigned j, unsigned n, LinearMask c,
                         const SubSpectrumSource& src) {
  check_recursion_args(i, j, n, c, "lemma22_rhs");
  const auto s = MaskSuffix::of(c);
  if (!s.c1) throw PreconditionError("lemma22_rhs: requires c_{n-1} = 1");
  const std::int64_t s2 = sign(s.c2);
  const std::int64_t s23 = sign(s.c2 != s.c3);
  switch (i) {
    case 0:
      return s2 * src.at(1, j, n - 2, s.trunc2) - s2 * src.at(2, j, n - 2, s.trunc2);
    case 1:
      return s2 * src.at(1, j, n - 2, s.trunc2) - s2 * src.at(3, j, n - 2, s.trunc2);
    case 2:
      return s2 * src.at(1, j, n - 2, s.trunc2) + s2 * src.at(3, j, n - 2, s.trunc2);
    default:
      return 2 * src.at(0, j, n - 2, s.trunc2) + 2 * s23 * src.at(0, j, n - 4, s.trunc4);
  }
}

std::int64_t lemma22_rhs(unsigned i, unsigned j, unsigned n, LinearMask c) {
  check_recursion_args(i, j, n, c, "lemma22_rhs");
  return lemma22_rhs(i, j, n, c, DirectSubSpectra(n - 4, n - 2));
}

SpectralBaseTable SpectralBaseTable::from_golden() {
  const auto& g = golden_table1();
  SpectralBaseTable t;
  for (std::size_t r = 0; r < GoldenTable1::kRowIds.size(); ++r) {
    const auto [i, j] = GoldenTable1::kRowIds[r];
    for (unsigned n = GoldenTable1::kFirstArity; n <= GoldenTable1::kLastArity; ++n) {
      const std::int64_t v = g.rows[r][n - GoldenTable1::kFirstArity];
      t.set_sub(i, j, n, v);
      t.set_sub(j, i, n, v);
    }
  }
  for (unsigned n = GoldenTable1::kFirstArity; n <= GoldenTable1::kLastArity; ++n) {
    t.set_full(n, g.rows[10][n - GoldenTable1::kFirstArity]);
  }
  return t;
}

SpectralBaseTable SpectralBaseTable::from_brute_force(unsigned lo, unsigned hi) {
  require_arity_range(lo, hi);
  SpectralBaseTable t;
  for (unsigned n = lo; n <= hi; ++n) {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 4; ++j) {
        t.set_sub(i, j, n, walsh_at(gen_f(SubFunctionId{i, j, n}), LinearMask{n, 0}));
      }
    }
    t.set_full(n, walsh_at(gen_F(MonomialRsbfSpec{n, 4, 1}), LinearMask{n, 0}));
  }
  return t;
}

void SpectralBaseTable::set_sub(unsigned i, unsigned j, unsigned n, std::int64_t value) {
  sub_[{i, j, n}] = value;
}

void SpectralBaseTable::set_full(unsigned n, std::int64_t value) { full_[n] = value; }

std::optional<std::int64_t> SpectralBaseTable::sub(unsigned i, unsigned j, unsigned n) const {
  const auto it = sub_.find({i, j, n});
  if (it == sub_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> SpectralBaseTable::full(unsigned n) const {
  const auto it = full_.find(n);
  if (it == full_.end()) return std::nullopt;
  return it->second;
}

std::int64_t eq26_zero(unsigned i, unsigned j, unsigned n, const SpectralBaseTable& base) {
  if (i > 3 || j > 3) throw UsageError("eq26_zero: i and j must be in 0..3");
  std::array<std::int64_t, 4> seeds{};
  for (unsigned m = 4; m <= 7; ++m) {
    const auto v = base.sub(i, j, m);
    if (!v) {
      throw ConfigError("base table lacks f_{" + std::to_string(i) + "," + std::to_string(j) +
                        "}^" + std::to_string(m) + "(0)");
    }
    seeds[m - 4] = *v;
  }
  return run_recurrence(seeds, n);
}

std::int64_t thm24_zero(unsigned n, const SpectralBaseTable& base) {
  std::array<std::int64_t, 4> seeds{};
  for (unsigned m = 4; m <= 7; ++m) {
    const auto v = base.full(m);
    if (!v) throw ConfigError("base table lacks F_4^" + std::to_string(m) + "(0)");
    seeds[m - 4] = *v;
  }
  return run_recurrence(seeds, n);
}

std::string recurrence_decimal(const std::array<std::int64_t, 4>& seeds, unsigned n) {
  using boost::multiprecision::cpp_int;
  if (n < 4) throw UsageError("recurrence defined from n = 4");
  std::array<cpp_int, 4> w{seeds[0], seeds[1], seeds[2], seeds[3]};
  if (n <= 7) return w[n - 4].str();
  for (unsigned m = 8; m <= n; ++m) {
    cpp_int next = 2 * (w[2] + w[1] + w[0]);
    w = {w[1], w[2], w[3], std::move(next)};
  }
  return w[3].str();
}

VerificationReport lemma32_check(unsigned n) {
  if (n < 4 || n + 3 > kHardMaxArity) throw UsageError("lemma32_check: needs 4 <= n <= 25");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "bound";
  r.params.n = n;
  const std::int64_t bound = walsh_at(gen_F(MonomialRsbfSpec{n + 3, 4, 1}), LinearMask{n + 3, 0});
  std::int64_t max_abs = 0;
  std::uint64_t mismatches = 0;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      const auto spectrum = walsh_transform(gen_f(SubFunctionId{i, j, n}));
      for (std::uint64_t c = 2; c < spectrum.size(); ++c) {
        if (((c >> 1) & 1u) == 0) continue;
        const std::int64_t mag = std::llabs(spectrum[c]);
        max_abs = std::max(max_abs, mag);
        if (8 * mag >= bound) {
          ++mismatches;
          if (r.witnesses.size() < kMaxWitnesses) {
            r.fail("f_{" + std::to_string(i) + "," + std::to_string(j) + "} c=" + std::to_string(c),
                   bound, 8 * mag);
          }
        }
      }
    }
  }
  r.metric("max_abs", max_abs);
  r.metric("F4_zero_at_n_plus_3", bound);
  r.metric("mismatches", static_cast<std::int64_t>(mismatches));
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  return r;
}

bool prop31_criterion(const WalshSpectrum& s) {
  const std::int64_t w0 = s[0];
  for (const std::int64_t v : s.values()) {
    if (std::llabs(v) > w0) return false;
  }
  return true;
}

}  // namespace rsbf
