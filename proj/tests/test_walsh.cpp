#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rsbf/errors.hpp"
#include "rsbf/families.hpp"
#include "rsbf/recurrence.hpp"
#include "rsbf/walsh.hpp"

using namespace rsbf;

namespace {

std::vector<TruthTable> corpus() {
  std::vector<TruthTable> out;
  // every function on up to 3 variables
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (1ull << (1u << n)); ++bits)
      out.push_back(oracle::tabulate(n, [&](std::uint64_t x) { return (bits >> x) & 1u; }));
  std::mt19937_64 rng(11);
  for (unsigned n = 4; n <= 10; ++n)
    for (int k = 0; k < 6; ++k) out.push_back(oracle::random_table(n, rng));
  for (unsigned n = 4; n <= 10; ++n) {
    out.push_back(gen_F(MonomialRsbfSpec::make(n, 4, 1)));
    out.push_back(gen_f(SubFunctionId::make(n % 4, (n + 1) % 4, n)));
  }
  return out;
}

}  // namespace

TEST_CASE("spectrum examples") {
  auto z = walsh_transform(TruthTable(3));
  CHECK(z[0] == 8);
  for (std::uint64_t c = 1; c < 8; ++c) CHECK(z[c] == 0);
  CHECK(walsh_transform(gen_F(MonomialRsbfSpec::make(4, 4, 1)))[0] == 16);
  CHECK(walsh_transform(gen_f(SubFunctionId::make(0, 0, 5)))[0] == 28);
  CHECK(walsh_at(gen_f(SubFunctionId::make(0, 0, 5)), LinearMask::make(5, 2)) == 4);
  CHECK(walsh_at(gen_f(SubFunctionId::make(3, 3, 5)), LinearMask::make(5, 2)) == -8);
  CHECK_THROWS_AS(walsh_at(TruthTable(4), LinearMask::make(5, 0)), UsageError);
  CHECK_THROWS_AS(z.at(LinearMask::make(4, 0)), UsageError);
}

TEST_CASE("all functions on four variables") {
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    auto f = oracle::tabulate(4, [&](std::uint64_t x) { return (bits >> x) & 1u; });
    auto s = walsh_transform(f);
    std::int64_t energy = 0;
    for (std::uint64_t c = 0; c < 16; ++c) {
      REQUIRE(s[c] == oracle::walsh(f, c));
      energy += s[c] * s[c];
    }
    REQUIRE(energy == 256);
    REQUIRE(nonlinearity(s) == oracle::nonlinearity(f));
  }
}

TEST_CASE("corpus properties") {
  for (const auto& f : corpus()) {
    const unsigned n = f.arity();
    auto s = walsh_transform(f);
    std::int64_t energy = 0;
    for (std::uint64_t c = 0; c < f.size(); ++c) {
      REQUIRE(s[c] % 2 == 0);
      REQUIRE(s[c] == walsh_at(f, LinearMask::make(n, c)));
      REQUIRE(s[c] == oracle::walsh(f, c));
      auto d = distance(f, linear_function(LinearMask::make(n, c)));
      REQUIRE(static_cast<std::int64_t>(d) == (static_cast<std::int64_t>(f.size()) - s[c]) / 2);
      energy += s[c] * s[c];
    }
    CHECK(energy == static_cast<std::int64_t>(f.size() * f.size()));
    CHECK(s[0] == static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(weight(f)));
    CHECK(nonlinearity(f) == oracle::nonlinearity(f));
    if (prop31_criterion(s)) CHECK(nonlinearity(f) == weight(f));
  }
}

TEST_CASE("randomized properties up to 14 variables") {
  std::mt19937_64 rng(29);
  for (unsigned n = 11; n <= 14; ++n) {
    auto f = oracle::random_table(n, rng);
    auto s = walsh_transform(f);
    std::int64_t energy = 0;
    for (auto v : s.values()) energy += v * v;
    CHECK(energy == static_cast<std::int64_t>(f.size() * f.size()));
    for (int k = 0; k < 64; ++k) {
      std::uint64_t c = rng() & (f.size() - 1);
      REQUIRE(s[c] == oracle::walsh(f, c));
      REQUIRE(s[c] == walsh_at(f, LinearMask::make(n, c)));
    }
  }
}

TEST_CASE("butterfly twice scales by 2^n") {
  std::mt19937_64 rng(5);
  for (unsigned n = 1; n <= 12; ++n) {
    auto f = oracle::random_table(n, rng);
    std::vector<std::int64_t> v(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) v[x] = f[x] ? -1 : 1;
    auto w = v;
    fwht_in_place(w);
    fwht_in_place(w);
    for (std::uint64_t x = 0; x < f.size(); ++x)
      REQUIRE(w[x] == static_cast<std::int64_t>(f.size()) * v[x]);
  }
}

TEST_CASE("nonlinearity examples") {
  for (std::uint64_t c = 0; c < 16; ++c) CHECK(nonlinearity(linear_function(LinearMask::make(4, c))) == 0);
  CHECK(nonlinearity(gen_F(MonomialRsbfSpec::make(5, 4, 1))) == 6);
  CHECK(nonlinearity(gen_F(MonomialRsbfSpec::make(8, 4, 1))) == 40);
  auto x0x1 = TruthTable::from_anf(2, std::vector<std::uint64_t>{0b11});
  CHECK(nonlinearity(x0x1) == oracle::nonlinearity(x0x1));
  CHECK(nonlinearity(x0x1) == 1);
  // the complement of a linear function is affine but far from every linear one
  auto g = linear_function(LinearMask::make(3, 5));
  g ^= TruthTable::from_anf(3, std::vector<std::uint64_t>{0});
  auto s = walsh_transform(g);
  CHECK(nonlinearity(s) == 4);
  CHECK(affine_nonlinearity(s) == 0);
}

TEST_CASE("argmax") {
  auto p = spectrum_argmax(walsh_transform(gen_F(MonomialRsbfSpec::make(8, 4, 1))));
  CHECK(p.abs_argmax.c == 0);
  CHECK(p.abs_max == 176);
  CHECK(p.argmax.c == 0);
  auto z = spectrum_argmax(walsh_transform(TruthTable(3)));
  CHECK(z.argmax.c == 0);
  CHECK(z.max == 8);
  auto l = spectrum_argmax(walsh_transform(linear_function(LinearMask::make(3, 5))));
  CHECK(l.argmax.c == 5);
  CHECK(l.max == 8);
  // bent function: every |W| ties, the lowest mask wins
  auto bent = spectrum_argmax(walsh_transform(TruthTable::from_anf(2, std::vector<std::uint64_t>{0b11})));
  CHECK(bent.abs_argmax.c == 0);
  CHECK(bent.argmax.c == 0);
  auto neg = spectrum_argmax(walsh_transform(linear_function(LinearMask::make(3, 0)) ^
                                             TruthTable::from_anf(3, std::vector<std::uint64_t>{0})));
  CHECK(neg.abs_argmax.c == 0);
  CHECK(neg.abs_max == 8);
  CHECK(neg.max == 0);
  CHECK(neg.argmax.c == 1);
}

TEST_CASE("criterion") {
  CHECK(prop31_criterion(walsh_transform(gen_F(MonomialRsbfSpec::make(8, 4, 1)))));
  for (std::uint64_t c = 1; c < 8; ++c)
    CHECK_FALSE(prop31_criterion(walsh_transform(linear_function(LinearMask::make(3, c)))));
  bool found = false;
  for (unsigned n = 4; n <= 16 && !found; ++n)
    found = !prop31_criterion(walsh_transform(gen_F(MonomialRsbfSpec::make(n, 2, 1))));
  CHECK(found);
}
