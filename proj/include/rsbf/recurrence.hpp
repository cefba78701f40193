#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rsbf/families.hpp"
#include "rsbf/report.hpp"
#include "rsbf/walsh.hpp"

namespace rsbf {

/// Source of sub-function coefficients f^_{i,j}^m(c) used on the right-hand
/// sides of the recursions.
class SubSpectrumSource {
 public:
  virtual ~SubSpectrumSource() = default;
  virtual std::int64_t at(unsigned i, unsigned j, unsigned m, std::uint64_t c) const = 0;
};

// Direct summation (walsh_at) over truth tables built for arities [lo, hi].
class DirectSubSpectra final : public SubSpectrumSource {
 public:
  DirectSubSpectra(unsigned lo, unsigned hi);
  std::int64_t at(unsigned i, unsigned j, unsigned m, std::uint64_t c) const override;
  const TruthTable& table(unsigned i, unsigned j, unsigned m) const;

 private:
  unsigned lo_;
  unsigned hi_;
  std::vector<TruthTable> tables_;
};

// Full butterfly spectra for arities [lo, hi], computed once; lookups are O(1).
class CachedSubSpectra final : public SubSpectrumSource {
 public:
  CachedSubSpectra(unsigned lo, unsigned hi);
  std::int64_t at(unsigned i, unsigned j, unsigned m, std::uint64_t c) const override;

 private:
  unsigned lo_;
  unsigned hi_;
  std::vector<WalshSpectrum> spectra_;
};

/// Trailing bits of a mask and its truncations c^m (bits 0..m-1 kept).
struct MaskSuffix {
  bool c1 = false;  // c_{n-1}
  bool c2 = false;  // c_{n-2}
  bool c3 = false;  // c_{n-3}
  bool c4 = false;  // c_{n-4}
  std::uint64_t trunc2 = 0;  // c^{n-2}
  std::uint64_t trunc3 = 0;  // c^{n-3}
  std::uint64_t trunc4 = 0;  // c^{n-4}

  static MaskSuffix of(LinearMask c);
};

// F^_4^n(c) expanded into seven sub-functions of arity n-3. Requires n >= 7.
std::int64_t eq23_rhs(unsigned n, LinearMask c, const SubSpectrumSource& src);
std::int64_t eq23_rhs(unsigned n, LinearMask c);

// f^_{i,j}^n(c) for c_{n-1} = 0, via arities n-2, n-3, n-4. Requires n >= 8.
std::int64_t lemma21_rhs(unsigned i, unsigned j, unsigned n, LinearMask c,
                         const SubSpectrumSource& src);
std::int64_t lemma21_rhs(unsigned i, unsigned j, unsigned n, LinearMask c);

// f^_{i,j}^n(c) for c_{n-1} = 1. Requires n >= 8.
std::int64_t lemma22_rhs(unsigned i, unsigned j, unsigned n, LinearMask c,
                         const SubSpectrumSource& src);
std::int64_t lemma22_rhs(unsigned i, unsigned j, unsigned n, LinearMask c);

/// Coefficients at the zero mask for arities 4..11: f^_{i,j}^n(0) for all
/// sixteen (i, j) and F^_4^n(0).
class SpectralBaseTable {
 public:
  static constexpr unsigned kMinArity = 4;

  // Reference W(0) values, upper triangle mirrored via f^_{i,j}(0) = f^_{j,i}(0).
  static SpectralBaseTable from_golden();
  // Every seed recomputed by direct summation for arities lo..hi.
  static SpectralBaseTable from_brute_force(unsigned lo, unsigned hi);

  void set_sub(unsigned i, unsigned j, unsigned n, std::int64_t value);
  void set_full(unsigned n, std::int64_t value);
  std::optional<std::int64_t> sub(unsigned i, unsigned j, unsigned n) const;
  std::optional<std::int64_t> full(unsigned n) const;

 private:
  std::map<std::array<unsigned, 3>, std::int64_t> sub_;
  std::map<unsigned, std::int64_t> full_;
};

// a_n = 2 (a_{n-2} + a_{n-3} + a_{n-4}) run bottom-up from seeds at 4..7.
// Throws ConfigError on a missing seed and OverflowError past int64.
std::int64_t eq26_zero(unsigned i, unsigned j, unsigned n, const SpectralBaseTable& base);
std::int64_t thm24_zero(unsigned n, const SpectralBaseTable& base);

// Same recurrence from explicit seeds a_4..a_7 in exact arithmetic, returned
// as a decimal string; usable far beyond the int64 range.
std::string recurrence_decimal(const std::array<std::int64_t, 4>& seeds, unsigned n);

// Checks 8 |f^_{i,j}^n(c)| < F^_4^{n+3}(0) for all (i, j) and all c with
// c_1 = 1. Requires n >= 4.
VerificationReport lemma32_check(unsigned n);

// |W(c)| <= W(0) for every c.
bool prop31_criterion(const WalshSpectrum& s);

}  // namespace rsbf
