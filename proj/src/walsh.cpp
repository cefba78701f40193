#include "rsbf/walsh.hpp"

#include <bit>
#include <cassert>
#include <cstdlib>
#include <string>

#include "rsbf/errors.hpp"

namespace rsbf {

WalshSpectrum::WalshSpectrum(unsigned n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != (std::uint64_t{1} << n)) {
    throw UsageError("spectrum length does not match 2^n");
  }
}

std::int64_t WalshSpectrum::at(LinearMask c) const {
  if (c.n != n_) throw UsageError("spectrum lookup: arity mismatch");
  return values_[c.c];
}

void fwht_in_place(std::span<std::int64_t> v) {
  const std::size_t len = v.size();
  assert(std::has_single_bit(len));
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t block = 0; block < len; block += h << 1) {
      for (std::size_t k = block; k < block + h; ++k) {
        const std::int64_t a = v[k];
        const std::int64_t b = v[k + h];
        v[k] = a + b;
        v[k + h] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const TruthTable& f) {
  std::vector<std::int64_t> v(f.size());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = f[x] ? -1 : 1;
  fwht_in_place(v);
  return WalshSpectrum(f.arity(), std::move(v));
}

std::int64_t walsh_at(const TruthTable& f, LinearMask c) {
  if (c.n != f.arity()) throw UsageError("walsh_at: arity mismatch");
  const auto words = f.words();
  const std::uint64_t valid = valid_bits_mask(f.arity());
  std::uint64_t disagreements = 0;
  for (std::uint64_t w = 0; w < words.size(); ++w) {
    disagreements += static_cast<std::uint64_t>(
        std::popcount((words[w] ^ linear_word(c.c, w)) & valid));
  }
  return static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(disagreements);
}

SpectrumPeak spectrum_argmax(const WalshSpectrum& s) {
  SpectrumPeak peak{LinearMask{s.arity(), 0}, s[0], LinearMask{s.arity(), 0},
                    static_cast<std::uint64_t>(std::llabs(s[0]))};
  const auto values = s.values();
  for (std::uint64_t c = 1; c < values.size(); ++c) {
    if (values[c] > peak.max) {
      peak.max = values[c];
      peak.argmax.c = c;
    }
    const auto mag = static_cast<std::uint64_t>(std::llabs(values[c]));
    if (mag > peak.abs_max) {
      peak.abs_max = mag;
      peak.abs_argmax.c = c;
    }
  }
  return peak;
}

std::uint64_t nonlinearity(const WalshSpectrum& s) {
  const std::int64_t top = spectrum_argmax(s).max;
  return static_cast<std::uint64_t>((static_cast<std::int64_t>(s.size()) - top) / 2);
}

std::uint64_t nonlinearity(const TruthTable& f) { return nonlinearity(walsh_transform(f)); }

std::uint64_t affine_nonlinearity(const WalshSpectrum& s) {
  return (s.size() - spectrum_argmax(s).abs_max) / 2;
}

}  // namespace rsbf
