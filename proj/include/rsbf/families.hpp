#pragma once

#include <cstdint>
#include <vector>

#include "rsbf/truth_table.hpp"

namespace rsbf {

/// F_{l,e}^n = sum_{i<n} x_i x_<i+e> ... x_<i+(l-1)e>, indices mod n.
struct MonomialRsbfSpec {
  unsigned n = 0;
  unsigned l = 4;
  unsigned e = 1;

  // Throws UsageError unless n >= 1, l >= 2, e >= 1.
  static MonomialRsbfSpec make(unsigned n, unsigned l, unsigned e);
  // n < l: monomials necessarily repeat or cancel.
  bool degenerate() const { return n < l; }
};

/// Names f_{i,j}^n: i selects the suffix correction, j the prefix one.
struct SubFunctionId {
  unsigned i = 0;
  unsigned j = 0;
  unsigned n = 4;

  // Throws UsageError unless i, j <= 3 and n >= 4.
  static SubFunctionId make(unsigned i, unsigned j, unsigned n);
  friend bool operator==(const SubFunctionId&, const SubFunctionId&) = default;
};

/// Orbits of i -> <i + e> on {0..n-1}: s = gcd(n, e) cycles of length t = n/s.
/// Cycle k lists k, <e+k>, <2e+k>, ..., <(t-1)e+k> in that order.
struct CycleDecomposition {
  unsigned n = 0;
  unsigned e = 0;
  unsigned s = 0;
  unsigned t = 0;
  std::vector<std::vector<unsigned>> cycles;
};

// Variable bitmask of each monomial of F_{l,e}^n, one per i, with repeated
// indices already collapsed (x x = x). Identical monomials are kept.
std::vector<std::uint64_t> rsbf_monomials(const MonomialRsbfSpec& spec);

// t_n = sum_{0 <= i <= n-4} x_i x_{i+1} x_{i+2} x_{i+3}; zero for n < 4.
TruthTable gen_t(unsigned n);
// X(i, j, k) = sum_{r<k} prod_{s=i+r}^{j} x_s on n variables; X(i, j, 0) = 0.
TruthTable gen_X(unsigned i, unsigned j, unsigned k, unsigned n);
TruthTable gen_f(SubFunctionId id);
TruthTable gen_F(const MonomialRsbfSpec& spec);

// Index whose bit i equals bit <i + shift> of x.
std::uint64_t rotate_input(std::uint64_t x, unsigned n, unsigned shift);

CycleDecomposition cycle_decompose(unsigned n, unsigned e);

// Mask c restricted to one cycle, packed in orbit order (bit r = c_{cycle[r]}).
std::uint64_t restrict_mask(std::uint64_t c, const std::vector<unsigned>& cycle);

// Walsh coefficient of F_{l,e}^n at c as the product over cycles of the
// coefficient of F_{l,1}^t at the restricted mask.
std::int64_t factored_walsh(const MonomialRsbfSpec& spec, LinearMask c);

// Same product, with the spectrum of F_{l,1}^t computed once up front.
class FactoredWalsh {
 public:
  explicit FactoredWalsh(const MonomialRsbfSpec& spec);

  const CycleDecomposition& cycles() const { return cycles_; }
  std::int64_t operator()(std::uint64_t c) const;

 private:
  MonomialRsbfSpec spec_;
  CycleDecomposition cycles_;
  std::vector<std::int64_t> cycle_spectrum_;
};

}  // namespace rsbf
