#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ifma_itoa/scalar.hpp"
#include "ifma_itoa/vector.hpp"

using namespace ifma_itoa;

namespace {

std::vector<Backend> available_backends() {
  std::vector<Backend> b = {Backend::portable};
  if (host_supports_ifma()) b.push_back(Backend::hardware_ifma);
  return b;
}

LaneVector random_lanes(std::mt19937_64& rng) {
  LaneVector v;
  for (auto& x : v.lanes) x = rng();
  return v;
}

std::string padded(std::uint64_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*llu", width, static_cast<unsigned long long>(n));
  return buf;
}

}  // namespace

TEST_CASE("backend selection rule") {
  CHECK(select_backend(true, false) == Backend::hardware_ifma);
  CHECK(select_backend(true, true) == Backend::portable);
  CHECK(select_backend(false, false) == Backend::portable);
  CHECK(select_backend(false, true) == Backend::portable);
  CHECK(to_string(Backend::portable) == "portable");
  CHECK(to_string(Backend::hardware_ifma) == "hardware-ifma");
}

TEST_CASE("backend detection honours the environment and the override") {
  const char* env = std::getenv(std::string(kForcePortableEnv).c_str());
  const bool env_forced = env != nullptr && *env != '\0' && std::string(env) != "0";
  CHECK(detect_backend() == select_backend(host_supports_ifma(), env_forced));
  force_portable_backend(true);
  CHECK(detect_backend() == Backend::portable);
  force_portable_backend(false);
  CHECK(detect_backend() == select_backend(host_supports_ifma(), env_forced));
}

TEST_CASE("backend madd52 matches a 128-bit oracle, upper 12 bits ignored") {
  std::mt19937_64 rng(5);
  for (Backend be : available_backends()) {
    CAPTURE(to_string(be));
    for (int it = 0; it < 20000; ++it) {
      // Full 64-bit random lanes: the upper 12 bits of a and b are garbage that must not leak in.
      const LaneVector acc = random_lanes(rng), a = random_lanes(rng), b = random_lanes(rng);
      const LaneVector lo = madd52lo(acc, a, b, be);
      const LaneVector hi = madd52hi(acc, a, b, be);
      for (int j = 0; j < 8; ++j) {
        const uint128 p = uint128{a.lanes[j] & kMask52} * (b.lanes[j] & kMask52);
        REQUIRE(lo.lanes[j] == acc.lanes[j] + static_cast<std::uint64_t>(p & kMask52));
        REQUIRE(hi.lanes[j] == acc.lanes[j] + static_cast<std::uint64_t>(p >> 52));
      }
    }
  }
}

TEST_CASE("backend madd52 edge lanes") {
  const LaneVector ones = LaneVector::broadcast(~0ULL);
  const LaneVector zero{};
  for (Backend be : available_backends()) {
    // (2^52-1)^2 = 2^104 - 2^53 + 1: low 52 bits are 1, high 52 bits are 2^52 - 2.
    CHECK(madd52lo(zero, ones, ones, be) == LaneVector::broadcast(1));
    CHECK(madd52hi(zero, ones, ones, be) == LaneVector::broadcast(kMask52 - 1));
    // The accumulator wraps at 64 bits.
    CHECK(madd52lo(ones, ones, ones, be) == LaneVector::broadcast(0));
    // Bits above 52 alone contribute nothing.
    const LaneVector high_only = LaneVector::broadcast(~kMask52);
    CHECK(madd52lo(zero, high_only, ones, be) == zero);
    CHECK(madd52hi(zero, high_only, ones, be) == zero);
  }
}

TEST_CASE("backend ascii_digits_8 renders zero-padded digits") {
  std::mt19937_64 rng(6);
  for (Backend be : available_backends()) {
    auto check = [&](std::uint64_t n) {
      const LaneVector r = ascii_digits_8(n, be);
      const std::string want = padded(n, 8);
      for (int j = 0; j < 8; ++j) REQUIRE(r.lanes[j] == static_cast<unsigned char>(want[j]));
    };
    for (std::uint64_t n : {0ULL, 1ULL, 9ULL, 10ULL, 12345678ULL, 99'999'999ULL, 10'000'000ULL}) check(n);
    for (int i = 0; i < 100000; ++i) check(rng() % 100'000'000);
    CHECK_THROWS_AS(ascii_digits_8(100'000'000, be), std::out_of_range);
  }
}

TEST_CASE("backend ascii_digits_16 renders zero-padded digits") {
  std::mt19937_64 rng(7);
  for (Backend be : available_backends()) {
    for (int i = 0; i < 100000; ++i) {
      const std::uint64_t n = rng() % 10'000'000'000'000'000ULL;
      REQUIRE(ascii_digits_16(n, be).view() == padded(n, 16));
    }
    CHECK(ascii_digits_16(0, be).view() == "0000000000000000");
    CHECK(ascii_digits_16(9'999'999'999'999'999ULL, be).view() == "9999999999999999");
    CHECK_THROWS_AS(ascii_digits_16(10'000'000'000'000'000ULL, be), std::out_of_range);
  }
}

TEST_CASE("backend ascii_digits agree across backends") {
  if (!host_supports_ifma()) return;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200000; ++i) {
    const std::uint64_t n = rng() % 10'000'000'000'000'000ULL;
    REQUIRE(ascii_digits_16(n, Backend::portable) == ascii_digits_16(n, Backend::hardware_ifma));
    REQUIRE(ascii_digits_8(n % 100'000'000, Backend::portable) ==
            ascii_digits_8(n % 100'000'000, Backend::hardware_ifma));
  }
}

TEST_CASE("backend emit_suffix writes exactly n bytes") {
  AsciiBlock16 block;
  const std::string src = "0123456789abcdef";
  std::copy(src.begin(), src.end(), block.bytes.begin());
  for (Backend be : available_backends()) {
    for (unsigned n = 1; n <= 16; ++n) {
      std::vector<char> buf(48, '\xAA');
      emit_suffix(std::span<char>(buf.data() + 16, n), block, n, be);
      for (std::size_t i = 0; i < buf.size(); ++i) {
        if (i >= 16 && i < 16 + n) REQUIRE(buf[i] == src[16 - n + (i - 16)]);
        else REQUIRE(buf[i] == '\xAA');
      }
    }
    char small[4];
    CHECK_THROWS_AS(emit_suffix(small, block, 0, be), std::out_of_range);
    CHECK_THROWS_AS(emit_suffix(small, block, 17, be), std::out_of_range);
    CHECK_THROWS_AS(emit_suffix(small, block, 5, be), std::length_error);
  }
}

TEST_CASE("backend request for missing hardware is rejected") {
  if (host_supports_ifma()) return;
  CHECK_THROWS_AS(ascii_digits_16(1, Backend::hardware_ifma), std::invalid_argument);
}
