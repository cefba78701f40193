#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsbf/truth_table.hpp"

namespace rsbf {

/// Unnormalised Fourier (Walsh) spectrum: values[c] = sum_x (-1)^{f(x) + c.x}.
class WalshSpectrum {
 public:
  WalshSpectrum(unsigned n, std::vector<std::int64_t> values);

  unsigned arity() const { return n_; }
  std::uint64_t size() const { return values_.size(); }
  std::int64_t operator[](std::uint64_t c) const { return values_[c]; }
  std::int64_t at(LinearMask c) const;
  std::span<const std::int64_t> values() const { return values_; }

 private:
  unsigned n_;
  std::vector<std::int64_t> values_;
};

// In-place butterfly on a length-2^k vector. Applying it twice multiplies
// the vector by 2^k.
void fwht_in_place(std::span<std::int64_t> v);

// Full spectrum via the butterfly over the +-1 vector, O(n 2^n).
WalshSpectrum walsh_transform(const TruthTable& f);

// Single coefficient by direct summation over all inputs. Independent of
// the butterfly; word-parallel with popcounts.
std::int64_t walsh_at(const TruthTable& f, LinearMask c);

// min_c d(f, l_c) over linear functions only.
std::uint64_t nonlinearity(const TruthTable& f);
std::uint64_t nonlinearity(const WalshSpectrum& s);

// Distance to the nearest affine function (l_c or l_c + 1). Not used by any
// of the theorem checks, which work with linear functions only.
std::uint64_t affine_nonlinearity(const WalshSpectrum& s);

struct SpectrumPeak {
  LinearMask argmax;
  std::int64_t max = 0;
  LinearMask abs_argmax;
  std::uint64_t abs_max = 0;
};

// Lowest mask index wins ties.
SpectrumPeak spectrum_argmax(const WalshSpectrum& s);

}  // namespace rsbf
