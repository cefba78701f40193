#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rsbf {

// Largest arity any table may have; 2^28 bits is 32 MiB packed, but a full
// 64-bit spectrum at that size is 2 GiB.
inline constexpr unsigned kHardMaxArity = 28;
inline constexpr unsigned kDefaultMaxArity = 24;

// Mask c^n of a linear function l_c(x) = c . x; bit i of `c` holds c_i.
struct LinearMask {
  unsigned n = 0;
  std::uint64_t c = 0;

  // Throws UsageError if c >= 2^n.
  static LinearMask make(unsigned n, std::uint64_t c);

  bool bit(unsigned i) const { return (c >> i) & 1u; }
  friend bool operator==(const LinearMask&, const LinearMask&) = default;
};

/// Packed truth table of an n-variable Boolean function.
///
/// Input x = (x_0, ..., x_{n-1}) is stored at index sum x_i 2^i, so x_0 is
/// the least significant bit. Bit k of word w holds f(64 w + k). For n < 6
/// the single storage word keeps every bit at index >= 2^n cleared.
class TruthTable {
 public:
  // The zero function on n variables. Throws UsageError unless 1 <= n <= 28.
  explicit TruthTable(unsigned n);

  unsigned arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  // Unchecked lookup.
  bool operator[](std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  // Checked lookup; throws UsageError when x >= 2^n.
  bool eval(std::uint64_t x) const;
  void set(std::uint64_t x, bool value);

  std::span<const std::uint64_t> words() const { return words_; }

  TruthTable& operator^=(const TruthTable& other);
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  // Builds sum over monomials of prod_{i in m} x_i over GF(2), each monomial
  // given as a variable bitmask (0 is the constant 1). Repeated monomials
  // cancel in pairs. Evaluation is word-parallel.
  static TruthTable from_anf(unsigned n, std::span<const std::uint64_t> monomials);

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

// Mask selecting the valid bits of a single-word table, all ones for n >= 6.
std::uint64_t valid_bits_mask(unsigned n);

// Word w (64 consecutive inputs starting at 64 w) of the linear function l_c.
std::uint64_t linear_word(std::uint64_t c, std::uint64_t w);

std::uint64_t weight(const TruthTable& f);
std::uint64_t distance(const TruthTable& f, const TruthTable& g);
TruthTable linear_function(LinearMask c);

}  // namespace rsbf
