#include "rsbf/families.hpp"

#include <numeric>
#include <string>

#include "rsbf/errors.hpp"
#include "rsbf/walsh.hpp"

namespace rsbf {
namespace {

// Bitmask of x_lo ... x_hi.
std::uint64_t run_mask(unsigned lo, unsigned hi) {
  const std::uint64_t upto_hi = (hi >= 63) ? ~std::uint64_t{0} : (std::uint64_t{2} << hi) - 1;
  return upto_hi & ~((std::uint64_t{1} << lo) - 1);
}

void append_chain(unsigned n, std::vector<std::uint64_t>& out) {
  for (unsigned i = 0; i + 4 <= n; ++i) out.push_back(run_mask(i, i + 3));
}

void append_suffix_sum(unsigned i, unsigned j, unsigned k, std::vector<std::uint64_t>& out) {
  for (unsigned r = 0; r < k; ++r) out.push_back(run_mask(i + r, j));
}

}  // namespace

MonomialRsbfSpec MonomialRsbfSpec::make(unsigned n, unsigned l, unsigned e) {
  if (n < 1 || l < 2 || e < 1) {
    throw UsageError("F_{l,e}^n needs n >= 1, l >= 2, e >= 1 (got n=" + std::to_string(n) +
                     ", l=" + std::to_string(l) + ", e=" + std::to_string(e) + ")");
  }
  return MonomialRsbfSpec{n, l, e};
}

SubFunctionId SubFunctionId::make(unsigned i, unsigned j, unsigned n) {
  if (i > 3 || j > 3 || n < 4) {
    throw UsageError("f_{i,j}^n needs 0 <= i, j <= 3 and n >= 4");
  }
  return SubFunctionId{i, j, n};
}

std::vector<std::uint64_t> rsbf_monomials(const MonomialRsbfSpec& spec) {
  std::vector<std::uint64_t> out;
  out.reserve(spec.n);
  const std::uint64_t step = spec.e % spec.n;
  for (unsigned i = 0; i < spec.n; ++i) {
    std::uint64_t m = 0;
    std::uint64_t idx = i;
    for (unsigned k = 0; k < spec.l; ++k) {
      m |= std::uint64_t{1} << idx;
      idx = (idx + step) % spec.n;
    }
    out.push_back(m);
  }
  return out;
}

TruthTable gen_t(unsigned n) {
  std::vector<std::uint64_t> monomials;
  append_chain(n, monomials);
  return TruthTable::from_anf(n, monomials);
}

TruthTable gen_X(unsigned i, unsigned j, unsigned k, unsigned n) {
  if (!(i <= j && j < n) || k > j - i + 1) {
    throw UsageError("X(i,j,k) needs 0 <= i <= j < n and k <= j-i+1");
  }
  std::vector<std::uint64_t> monomials;
  append_suffix_sum(i, j, k, monomials);
  return TruthTable::from_anf(n, monomials);
}

TruthTable gen_f(SubFunctionId id) {
  id = SubFunctionId::make(id.i, id.j, id.n);
  const unsigned n = id.n;
  std::vector<std::uint64_t> monomials;
  append_chain(n, monomials);
  append_suffix_sum(n - 3, n - 1, id.i, monomials);
  if (id.j >= 1) monomials.push_back(0b111);
  if (id.j >= 2) monomials.push_back(0b011);
  if (id.j >= 3) monomials.push_back(0b001);
  return TruthTable::from_anf(n, monomials);
}

TruthTable gen_F(const MonomialRsbfSpec& spec) {
  const auto checked = MonomialRsbfSpec::make(spec.n, spec.l, spec.e);
  return TruthTable::from_anf(checked.n, rsbf_monomials(checked));
}

std::uint64_t rotate_input(std::uint64_t x, unsigned n, unsigned shift) {
  if (n < 1 || n > 63 || (x >> n) != 0) {
    throw UsageError("rotate_input: input out of range");
  }
  shift %= n;
  if (shift == 0) return x;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return ((x >> shift) | (x << (n - shift))) & all;
}

CycleDecomposition cycle_decompose(unsigned n, unsigned e) {
  if (n < 1 || e < 1) throw UsageError("cycle_decompose needs n, e >= 1");
  CycleDecomposition d;
  d.n = n;
  d.e = e;
  d.s = std::gcd(n, e);
  d.t = n / d.s;
  d.cycles.resize(d.s);
  for (unsigned k = 0; k < d.s; ++k) {
    auto& cycle = d.cycles[k];
    cycle.reserve(d.t);
    for (unsigned r = 0; r < d.t; ++r) {
      cycle.push_back(static_cast<unsigned>((k + std::uint64_t{r} * e) % n));
    }
  }
  return d;
}

std::uint64_t restrict_mask(std::uint64_t c, const std::vector<unsigned>& cycle) {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < cycle.size(); ++r) out |= ((c >> cycle[r]) & 1u) << r;
  return out;
}

FactoredWalsh::FactoredWalsh(const MonomialRsbfSpec& spec)
    : spec_(MonomialRsbfSpec::make(spec.n, spec.l, spec.e)),
      cycles_(cycle_decompose(spec_.n, spec_.e)) {
  const auto g = gen_F(MonomialRsbfSpec{cycles_.t, spec_.l, 1});
  const auto s = walsh_transform(g);
  cycle_spectrum_.assign(s.values().begin(), s.values().end());
}

std::int64_t FactoredWalsh::operator()(std::uint64_t c) const {
  std::int64_t product = 1;
  for (const auto& cycle : cycles_.cycles) product *= cycle_spectrum_[restrict_mask(c, cycle)];
  return product;
}

std::int64_t factored_walsh(const MonomialRsbfSpec& spec, LinearMask c) {
  if (c.n != spec.n) throw UsageError("factored_walsh: arity mismatch");
  return FactoredWalsh(spec)(c.c);
}

}  // namespace rsbf
