#include <charconv>
#include <cstdio>
#include <random>
#include <string>

#include "doctest.h"
#include "ifma_itoa/scalar.hpp"

using namespace ifma_itoa;

namespace {

std::string oracle(std::uint64_t v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::uint64_t pow10(unsigned k) {
  std::uint64_t p = 1;
  while (k--) p *= 10;
  return p;
}

}  // namespace

TEST_CASE("digit_count on powers of ten and their neighbours") {
  CHECK(digit_count(0) == 1);
  CHECK(digit_count(~0ULL) == 20);
  for (unsigned k = 1; k <= 19; ++k) {
    const std::uint64_t p = pow10(k);
    CAPTURE(k);
    CHECK(digit_count(p - 1) == k);
    CHECK(digit_count(p) == k + 1);
    CHECK(digit_count(p + 1) == k + 1);
  }
}

TEST_CASE("digit_count on every power of two and neighbour") {
  for (unsigned b = 0; b < 64; ++b) {
    const std::uint64_t p = std::uint64_t{1} << b;
    for (std::uint64_t v : {p - 1, p, p + 1}) REQUIRE(digit_count(v) == oracle(v).size());
  }
}

TEST_CASE("digit_count exhaustive below 10^6") {
  for (std::uint64_t v = 0; v < 1'000'000; ++v) REQUIRE(digit_count(v) == detail::slow_digit_count(v));
  CHECK(detail::slow_digit_count(999'999) == oracle(999'999).size());
}

TEST_CASE("digit_count random") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500000; ++i) {
    const std::uint64_t v = rng() >> (rng() % 64);
    REQUIRE(digit_count(v) == oracle(v).size());
  }
}

TEST_CASE("digit_count is usable at compile time") {
  static_assert(digit_count(9) == 1);
  static_assert(digit_count(10) == 2);
  static_assert(digit_count(18446744073709551615ULL) == 20);
}

TEST_CASE("pair table") {
  char buf[3] = {};
  for (unsigned x = 0; x < 100; ++x) {
    std::snprintf(buf, sizeof buf, "%02u", x);
    REQUIRE(std::string(kPairTable.pair(x), 2) == buf);
  }
}

TEST_CASE("pseudo-remainder reciprocal gives exact quotients and an injective byte") {
  int owner[256];
  for (int& o : owner) o = -1;
  for (std::uint32_t x = 0; x < 10000; ++x) {
    const std::uint32_t t = x * kPseudoRecip;
    REQUIRE((t >> kPseudoShift) == x / 100);
    const unsigned pr = (t >> (kPseudoShift - 8)) & 0xFF;
    const int r = static_cast<int>(x % 100);
    if (owner[pr] < 0) owner[pr] = r;
    REQUIRE(owner[pr] == r);
    char want[3];
    std::snprintf(want, sizeof want, "%02d", r);
    REQUIRE(std::string(kPseudoRemainderTable.pair(pr), 2) == want);
  }
}

TEST_CASE("split_1e4 and split_1e16 over the full range") {
  std::mt19937_64 rng(2);
  auto check = [](std::uint64_t v) {
    REQUIRE(split_1e4(v) == QuotRem{v / 10000, v % 10000});
    REQUIRE(split_1e16(v) == QuotRem{v / 10'000'000'000'000'000ULL, v % 10'000'000'000'000'000ULL});
  };
  for (int i = 0; i < 300000; ++i) check(rng());
  for (unsigned k = 0; k <= 19; ++k)
    for (std::uint64_t v : {pow10(k) - 1, pow10(k), pow10(k) + 1}) check(v);
  check(~0ULL);
  check(0);
}

TEST_CASE("split multipliers are the ones the search derives") {
  CHECK(kDiv1e4 == find_mul_shift(~0ULL, 10'000));
  CHECK(kDiv1e8 == find_mul_shift(~0ULL, 100'000'000));
  CHECK(kDiv1e16 == find_mul_shift(~0ULL, 10'000'000'000'000'000ULL));
  CHECK(find_mul_shift(9999, 100) == MulShift{kPseudoRecip, kPseudoShift});
}

TEST_CASE("split_1e8") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300000; ++i) {
    const std::uint64_t v = rng() % 10'000'000'000'000'000ULL;
    REQUIRE(split_1e8(v) == QuotRem{v / 100'000'000, v % 100'000'000});
  }
  CHECK(split_1e8(9'999'999'999'999'999ULL) == QuotRem{99'999'999, 99'999'999});
  CHECK_THROWS_AS(split_1e8(10'000'000'000'000'000ULL), std::out_of_range);
  // The unchecked form is exact on all of u64.
  CHECK(detail::split_1e8(~0ULL) == QuotRem{~0ULL / 100'000'000, ~0ULL % 100'000'000});
}

TEST_CASE("write_four_digits exhaustive") {
  char buf[8];
  char want[8];
  for (std::uint32_t x = 0; x < 10000; ++x) {
    std::snprintf(want, sizeof want, "%04u", x);
    write_four_digits(std::span<char>(buf, 4), x);
    REQUIRE(std::string(buf, 4) == want);
  }
  CHECK_THROWS_AS(write_four_digits(std::span<char>(buf, 4), 10000), std::out_of_range);
  CHECK_THROWS_AS(write_four_digits(std::span<char>(buf, 3), 1), std::length_error);
}

TEST_CASE("write_prefix_1_to_4 exhaustive") {
  char buf[4];
  for (std::uint32_t q = 1; q < 10000; ++q) {
    const std::size_t n = write_prefix_1_to_4(buf, q);
    REQUIRE(std::string(buf, n) == oracle(q));
  }
  CHECK_THROWS_AS(write_prefix_1_to_4(buf, 0), std::out_of_range);
  CHECK_THROWS_AS(write_prefix_1_to_4(buf, 10000), std::out_of_range);
  CHECK_THROWS_AS(write_prefix_1_to_4(std::span<char>(buf, 3), 5), std::length_error);
  // The unchecked form also renders zero.
  CHECK(detail::write_prefix_1_to_4(buf, 0) == buf + 1);
  CHECK(buf[0] == '0');
}

TEST_CASE("naive_to_string matches to_chars") {
  char buf[20];
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200000; ++i) {
    const std::uint64_t v = rng() >> (rng() % 64);
    REQUIRE(std::string(buf, naive_to_string(v, buf)) == oracle(v));
  }
  CHECK(std::string(buf, naive_to_string(0, buf)) == "0");
  CHECK(std::string(buf, naive_to_string(~0ULL, buf)) == "18446744073709551615");
  CHECK_THROWS_AS(naive_to_string(1, std::span<char>(buf, 19)), std::length_error);
}
