// Multiplicative division by constants: derivation and exact verification of
// (multiplier, shift) pairs, plus the scalar digit extractor that defines what
// the lane-parallel kernel must compute.

#pragma once

#include <array>
#include <cstdint>

namespace ifma_itoa {

__extension__ typedef unsigned __int128 uint128;

/// floor(n / d) == floor(multiplier * n / 2^shift) over the range it was derived for.
struct MulShift {
  uint128 multiplier = 0;
  unsigned shift = 0;

  friend constexpr bool operator==(const MulShift&, const MulShift&) = default;
};

/// recip52[k-1] == floor(2^52 / 10^k), k = 1..8.
struct DigitConstants {
  std::array<std::uint64_t, 8> recip52;
};

namespace detail {

constexpr DigitConstants make_digit_constants() {
  DigitConstants dc{};
  std::uint64_t pow10 = 1;
  for (std::size_t k = 1; k <= dc.recip52.size(); ++k) {
    pow10 *= 10;
    dc.recip52[k - 1] = (std::uint64_t{1} << 52) / pow10;
  }
  return dc;
}

}  // namespace detail

inline constexpr DigitConstants kDigitConstants = detail::make_digit_constants();

inline constexpr std::uint64_t kMask52 = (std::uint64_t{1} << 52) - 1;

/// Smallest shift L (and multiplier ceil(2^L / d)) that makes floor(n / d) ==
/// floor(c * n / 2^L) for all n in [0, max_numerator].
///
/// Throws std::invalid_argument when divisor < 2 or max_numerator == 0, and
/// std::overflow_error when no shift up to 128 works.
MulShift find_mul_shift(std::uint64_t max_numerator, std::uint64_t divisor);

/// Exact test of 1/d <= c/2^L < (1 + 1/(N - (N+1) mod d)) / d.
/// When N < d - 1 (so N - (N+1) mod d < 0) every quotient is 0 and the upper
/// bound becomes c*N < 2^L. Returns false for d == 0.
bool check_quotient_bound(uint128 multiplier, unsigned shift, std::uint64_t divisor,
                          std::uint64_t max_numerator);

/// Exact test of (1 - 1/(N+1)) / d^k <= c/2^L < 1/d^k, the condition under which
/// floor(((c*n + c) mod 2^L) * d / 2^L) yields digit k of n (base d) for all n <= N.
/// Returns false for base < 2 or k == 0.
bool check_digit_bound(uint128 multiplier, unsigned shift, std::uint64_t base,
                       unsigned k, std::uint64_t max_numerator);

/// k-th decimal digit of n counting from the least significant (k = 1), computed
/// as floor(((c_k*n + c_k) mod 2^52) * 10 / 2^52) with c_k = recip52[k-1].
/// Throws std::out_of_range unless n < 10^8 and 1 <= k <= 8.
unsigned extract_digit_ref(std::uint64_t n, unsigned k);

}  // namespace ifma_itoa
