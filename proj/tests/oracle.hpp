#pragma once

// Slow reference implementations used only by the tests. Nothing here shares
// code with the library beyond the TruthTable container.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rsbf/truth_table.hpp"

namespace oracle {

using Fn = std::function<bool(std::uint64_t)>;

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

inline bool bit(std::uint64_t x, unsigned i) { return (x >> i) & 1u; }

inline rsbf::TruthTable tabulate(unsigned n, const Fn& f) {
  rsbf::TruthTable t(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) t.set(x, f(x));
  return t;
}

// Sum over x of (-1)^{f(x) + c.x}, one input at a time.
inline std::int64_t walsh(const rsbf::TruthTable& f, std::uint64_t c) {
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) s += (f[x] ^ parity(c & x)) ? -1 : 1;
  return s;
}

inline std::uint64_t weight(const rsbf::TruthTable& f) {
  std::uint64_t w = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) w += f[x];
  return w;
}

// Minimum distance to the 2^n linear functions, counted input by input.
inline std::uint64_t nonlinearity(const rsbf::TruthTable& f) {
  std::uint64_t best = f.size();
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    std::uint64_t d = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) d += f[x] != static_cast<bool>(parity(c & x));
    best = std::min(best, d);
  }
  return best;
}

// Chain t_n, evaluated straight from the definition.
inline bool t(unsigned n, std::uint64_t x) {
  bool v = false;
  for (unsigned i = 0; i + 3 < n; ++i)
    v ^= bit(x, i) && bit(x, i + 1) && bit(x, i + 2) && bit(x, i + 3);
  return v;
}

// X(i, j, k) = sum_{r<k} prod_{s=i+r}^{j} x_s.
inline bool X(unsigned i, unsigned j, unsigned k, std::uint64_t x) {
  bool v = false;
  for (unsigned r = 0; r < k; ++r) {
    bool p = true;
    for (unsigned s = i + r; s <= j; ++s) p = p && bit(x, s);
    v ^= p;
  }
  return v;
}

inline bool f(unsigned i, unsigned j, unsigned n, std::uint64_t x) {
  bool v = t(n, x) ^ X(n - 3, n - 1, i, x);
  if (j >= 1) v ^= bit(x, 0) && bit(x, 1) && bit(x, 2);
  if (j >= 2) v ^= bit(x, 0) && bit(x, 1);
  if (j >= 3) v ^= bit(x, 0);
  return v;
}

// F_{l,e}^n: product over the index set (duplicates are harmless in a product).
inline bool F(unsigned n, unsigned l, unsigned e, std::uint64_t x) {
  bool v = false;
  for (unsigned i = 0; i < n; ++i) {
    bool p = true;
    for (unsigned k = 0; k < l; ++k) p = p && bit(x, (i + k * e) % n);
    v ^= p;
  }
  return v;
}

// ANF coefficients by the Moebius transform of a truth table.
inline std::vector<std::uint8_t> anf(const rsbf::TruthTable& f) {
  std::vector<std::uint8_t> a(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) a[x] = f[x];
  for (std::uint64_t h = 1; h < a.size(); h <<= 1)
    for (std::uint64_t x = 0; x < a.size(); ++x)
      if (x & h) a[x] ^= a[x ^ h];
  return a;
}

inline std::uint64_t reverse_bits(std::uint64_t x, unsigned n) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < n; ++i) r |= std::uint64_t{bit(x, i)} << (n - 1 - i);
  return r;
}

// y with y_i = x_{(i+1) mod n}.
inline std::uint64_t rotate(std::uint64_t x, unsigned n) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < n; ++i) r |= std::uint64_t{bit(x, (i + 1) % n)} << i;
  return r;
}

inline rsbf::TruthTable random_table(unsigned n, std::mt19937_64& rng) {
  rsbf::TruthTable t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1u);
  return t;
}

}  // namespace oracle
