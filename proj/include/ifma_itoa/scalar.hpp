// Scalar building blocks shared by both conversion variants.
//
// Everything in `detail` is unchecked and meant to be inlined into the
// conversion kernels; the functions outside `detail` validate their inputs.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

#include "ifma_itoa/divmath.hpp"

namespace ifma_itoa {

/// Indexed by leading-zero count. candidate[lz] is the digit count of the
/// smallest value with 64 - lz significant bits; threshold[lz] is the largest
/// value with that many digits. digit_count = candidate + (v > threshold).
struct DigitCountTables {
  std::array<std::uint8_t, 65> candidate;
  std::array<std::uint64_t, 65> threshold;
};

/// "00".."99" packed as 200 bytes.
struct PairTable {
  std::array<char, 200> bytes;
  constexpr const char* pair(unsigned x) const { return bytes.data() + 2 * x; }
};

/// Maps the 8-bit fractional byproduct of x * kPseudoRecip (x < 10^4) to the
/// ASCII pair of x mod 100.
struct PseudoRemainderTable {
  std::array<char, 512> bytes;
  constexpr const char* pair(unsigned pr) const { return bytes.data() + 2 * pr; }
};

struct QuotRem {
  std::uint64_t quotient;
  std::uint64_t remainder;

  friend constexpr bool operator==(const QuotRem&, const QuotRem&) = default;
};

// floor(x / 100) == (x * kPseudoRecip) >> kPseudoShift for x < 10^4; both fit in 32 bits.
inline constexpr std::uint32_t kPseudoRecip = 5243;
inline constexpr unsigned kPseudoShift = 19;

// Multipliers for exact division over the full 64-bit range.
inline constexpr MulShift kDiv1e4{0x346dc5d63886594bULL, 75};
inline constexpr MulShift kDiv1e8{0xabcc77118461cefdULL, 90};
inline constexpr MulShift kDiv1e16{0x39a5652fb1137857ULL, 115};

namespace detail {

constexpr std::uint64_t pow10_u64(unsigned k) {
  std::uint64_t p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

constexpr unsigned slow_digit_count(std::uint64_t v) {
  unsigned n = 1;
  while (v >= 10) {
    v /= 10;
    ++n;
  }
  return n;
}

constexpr DigitCountTables make_digit_count_tables() {
  DigitCountTables t{};
  for (unsigned lz = 0; lz <= 64; ++lz) {
    const unsigned bits = 64 - lz;
    const std::uint64_t smallest = bits == 0 ? 0 : std::uint64_t{1} << (bits - 1);
    const unsigned cand = slow_digit_count(smallest);
    t.candidate[lz] = static_cast<std::uint8_t>(cand);
    t.threshold[lz] = pow10_u64(cand) - 1;
  }
  return t;
}

constexpr PairTable make_pair_table() {
  PairTable t{};
  for (unsigned x = 0; x < 100; ++x) {
    t.bytes[2 * x] = static_cast<char>('0' + x / 10);
    t.bytes[2 * x + 1] = static_cast<char>('0' + x % 10);
  }
  return t;
}

constexpr unsigned pseudo_remainder(std::uint32_t x) {
  return ((x * kPseudoRecip) >> (kPseudoShift - 8)) & 0xFF;
}

// Brute force over [0, 10^4). Throws (and so fails constant evaluation) if the
// quotient is ever inexact or a pseudo-remainder maps to two true remainders.
constexpr PseudoRemainderTable make_pseudo_remainder_table() {
  std::array<int, 256> owner{};
  for (auto& o : owner) o = -1;
  for (std::uint32_t x = 0; x < 10000; ++x) {
    if (((x * kPseudoRecip) >> kPseudoShift) != x / 100)
      throw std::logic_error("pseudo-remainder reciprocal gives an inexact quotient");
    const unsigned pr = pseudo_remainder(x);
    const int r = static_cast<int>(x % 100);
    if (owner[pr] == -1) owner[pr] = r;
    else if (owner[pr] != r) throw std::logic_error("ambiguous pseudo-remainder");
  }
  PseudoRemainderTable t{};
  for (unsigned pr = 0; pr < 256; ++pr) {
    const int r = owner[pr] < 0 ? 0 : owner[pr];
    t.bytes[2 * pr] = static_cast<char>('0' + r / 10);
    t.bytes[2 * pr + 1] = static_cast<char>('0' + r % 10);
  }
  return t;
}

}  // namespace detail

inline constexpr DigitCountTables kDigitCountTables = detail::make_digit_count_tables();
inline constexpr PairTable kPairTable = detail::make_pair_table();
inline constexpr PseudoRemainderTable kPseudoRemainderTable = detail::make_pseudo_remainder_table();

/// Decimal digit count, 1..20. digit_count(0) == 1.
constexpr unsigned digit_count(std::uint64_t v) noexcept {
  const int lz = std::countl_zero(v);
  return kDigitCountTables.candidate[lz] + (v > kDigitCountTables.threshold[lz] ? 1u : 0u);
}

constexpr QuotRem split_1e4(std::uint64_t v) noexcept {
  const auto q = static_cast<std::uint64_t>((uint128{v} * kDiv1e4.multiplier) >> kDiv1e4.shift);
  return {q, v - q * 10'000};
}

constexpr QuotRem split_1e16(std::uint64_t v) noexcept {
  const auto q = static_cast<std::uint64_t>((uint128{v} * kDiv1e16.multiplier) >> kDiv1e16.shift);
  return {q, v - q * 10'000'000'000'000'000ULL};
}

namespace detail {

constexpr QuotRem split_1e8(std::uint64_t v) noexcept {
  const auto q = static_cast<std::uint64_t>((uint128{v} * kDiv1e8.multiplier) >> kDiv1e8.shift);
  return {q, v - q * 100'000'000};
}

inline void write_four_digits(char* out, std::uint32_t x) noexcept {
  const std::uint32_t t = x * kPseudoRecip;
  std::memcpy(out, kPairTable.pair(t >> kPseudoShift), 2);
  std::memcpy(out + 2, kPseudoRemainderTable.pair((t >> (kPseudoShift - 8)) & 0xFF), 2);
}

// Also accepts q == 0 (writes "0").
inline char* write_prefix_1_to_4(char* out, std::uint32_t q) noexcept {
  if (q < 10) {
    *out = static_cast<char>('0' + q);
    return out + 1;
  }
  if (q < 100) {
    std::memcpy(out, kPairTable.pair(q), 2);
    return out + 2;
  }
  if (q < 1000) {
    const std::uint32_t t = q * kPseudoRecip;
    *out = static_cast<char>('0' + (t >> kPseudoShift));
    std::memcpy(out + 1, kPseudoRemainderTable.pair((t >> (kPseudoShift - 8)) & 0xFF), 2);
    return out + 3;
  }
  write_four_digits(out, q);
  return out + 4;
}

// Repeated division by ten, then reverse.
inline std::size_t naive_to_string(std::uint64_t v, char* out) noexcept {
  if (v == 0) {
    *out = '0';
    return 1;
  }
  char* p = out;
  while (v > 0) {
    *p++ = static_cast<char>('0' + v % 10);
    v /= 10;
  }
  for (char *lo = out, *hi = p - 1; lo < hi; ++lo, --hi) {
    const char tmp = *lo;
    *lo = *hi;
    *hi = tmp;
  }
  return static_cast<std::size_t>(p - out);
}

}  // namespace detail

/// Reference conversion. Throws std::length_error if out.size() < 20.
std::size_t naive_to_string(std::uint64_t v, std::span<char> out);

/// (v / 10^8, v % 10^8) via the ceil(2^90 / 10^8) multiplier.
/// Throws std::out_of_range for v >= 10^16.
QuotRem split_1e8(std::uint64_t v);

/// Exactly four zero-padded digits of x. Throws std::out_of_range for x >= 10^4
/// and std::length_error if out.size() < 4.
void write_four_digits(std::span<char> out, std::uint32_t x);

/// q without leading zeros; returns the number of bytes written.
/// Throws std::out_of_range unless 1 <= q <= 9999, std::length_error if out.size() < 4.
std::size_t write_prefix_1_to_4(std::span<char> out, std::uint32_t q);

}  // namespace ifma_itoa
