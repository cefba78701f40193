#include "rsbf/truth_table.hpp"

#include <bit>
#include <string>

#include "rsbf/errors.hpp"

namespace rsbf {
namespace {

// Truth table word of x_i for i < 6.
constexpr std::uint64_t kVarWord[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};

constexpr std::uint64_t product_word(std::uint64_t low_vars) {
  std::uint64_t w = ~std::uint64_t{0};
  for (unsigned i = 0; i < 6; ++i) {
    if ((low_vars >> i) & 1u) w &= kVarWord[i];
  }
  return w;
}

constexpr std::uint64_t parity_word(std::uint64_t low_mask) {
  std::uint64_t w = 0;
  for (unsigned i = 0; i < 6; ++i) {
    if ((low_mask >> i) & 1u) w ^= kVarWord[i];
  }
  return w;
}

std::size_t word_count(unsigned n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

}  // namespace

LinearMask LinearMask::make(unsigned n, std::uint64_t c) {
  if (n > kHardMaxArity || (n < 64 && c >> n) != 0) {
    throw UsageError("mask " + std::to_string(c) + " out of range for n=" + std::to_string(n));
  }
  return LinearMask{n, c};
}

std::uint64_t valid_bits_mask(unsigned n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

std::uint64_t linear_word(std::uint64_t c, std::uint64_t w) {
  std::uint64_t word = parity_word(c & 63);
  if (std::popcount((c >> 6) & w) & 1) word = ~word;
  return word;
}

TruthTable::TruthTable(unsigned n) : n_(n) {
  if (n < 1 || n > kHardMaxArity) {
    throw UsageError("arity " + std::to_string(n) + " outside 1.." +
                     std::to_string(kHardMaxArity));
  }
  words_.assign(word_count(n), 0);
}

bool TruthTable::eval(std::uint64_t x) const {
  if (x >= size()) {
    throw UsageError("input " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
  }
  return (*this)[x];
}

void TruthTable::set(std::uint64_t x, bool value) {
  if (x >= size()) {
    throw UsageError("input " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
  }
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= bit;
  } else {
    words_[x >> 6] &= ~bit;
  }
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) throw UsageError("arity mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

TruthTable TruthTable::from_anf(unsigned n, std::span<const std::uint64_t> monomials) {
  TruthTable f(n);
  const std::uint64_t vars = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::size_t words = f.words_.size();
  for (const std::uint64_t m : monomials) {
    if ((m & ~vars) != 0) throw UsageError("monomial uses a variable beyond n");
    const std::uint64_t low = product_word(m & 63);
    const std::uint64_t high = m >> 6;
    // Walk only the word indices that contain every high variable.
    const std::uint64_t free_bits = (words - 1) & ~high;
    std::uint64_t sub = 0;
    do {
      f.words_[high | sub] ^= low;
      sub = (sub - free_bits) & free_bits;
    } while (sub != 0);
  }
  f.words_[0] &= valid_bits_mask(n);
  return f;
}

std::uint64_t weight(const TruthTable& f) {
  std::uint64_t total = 0;
  for (const std::uint64_t w : f.words()) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t distance(const TruthTable& f, const TruthTable& g) {
  if (f.arity() != g.arity()) throw UsageError("distance: arity mismatch");
  const auto a = f.words();
  const auto b = g.words();
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    total += static_cast<std::uint64_t>(std::popcount(a[w] ^ b[w]));
  }
  return total;
}

TruthTable linear_function(LinearMask c) {
  std::vector<std::uint64_t> monomials;
  for (unsigned i = 0; i < c.n; ++i) {
    if (c.bit(i)) monomials.push_back(std::uint64_t{1} << i);
  }
  return TruthTable::from_anf(c.n, monomials);
}

}  // namespace rsbf
