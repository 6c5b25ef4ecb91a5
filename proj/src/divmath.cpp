#include "ifma_itoa/divmath.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifma_itoa {

namespace {

using boost::multiprecision::cpp_int;

constexpr unsigned kMaxShift = 128;

cpp_int to_big(uint128 v) {
  cpp_int r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

uint128 from_big(const cpp_int& v) {
  const cpp_int lo_mask = (cpp_int{1} << 64) - 1;
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v & lo_mask);
  return (uint128{hi} << 64) | lo;
}

cpp_int pow2(unsigned e) { return cpp_int{1} << e; }

// N - (N+1) mod d, the largest n <= N with n mod d == d - 1; negative when N < d - 1.
cpp_int adjusted_bound(std::uint64_t max_numerator, std::uint64_t divisor) {
  const cpp_int n{max_numerator};
  return n - (n + 1) % divisor;
}

}  // namespace

MulShift find_mul_shift(std::uint64_t max_numerator, std::uint64_t divisor) {
  if (divisor < 2) throw std::invalid_argument("find_mul_shift: divisor must be >= 2");
  if (max_numerator == 0) throw std::invalid_argument("find_mul_shift: max_numerator must be >= 1");

  const cpp_int d{divisor};
  const cpp_int ra = adjusted_bound(max_numerator, divisor);
  const cpp_int n{max_numerator};
  for (unsigned shift = 1; shift <= kMaxShift; ++shift) {
    const cpp_int m = pow2(shift);
    const cpp_int c = (m + d - 1) / d;
    // With N < d - 1 every quotient is 0 and ra goes negative, where the
    // bound below holds vacuously; require c*N < 2^L instead.
    const bool ok = ra < 0 ? c * n < m : c * d * ra < m * (ra + 1);
    if (ok) return MulShift{from_big(c), shift};
  }
  throw std::overflow_error("find_mul_shift: no shift <= 128 satisfies the bound");
}

bool check_quotient_bound(uint128 multiplier, unsigned shift, std::uint64_t divisor,
                          std::uint64_t max_numerator) {
  if (divisor == 0) return false;
  const cpp_int c = to_big(multiplier);
  const cpp_int d{divisor};
  const cpp_int m = pow2(shift);
  if (c * d < m) return false;
  const cpp_int ra = adjusted_bound(max_numerator, divisor);
  if (ra < 0) return c * cpp_int{max_numerator} < m;
  return c * d * ra < m * (ra + 1);
}

bool check_digit_bound(uint128 multiplier, unsigned shift, std::uint64_t base,
                       unsigned k, std::uint64_t max_numerator) {
  if (base < 2 || k == 0) return false;
  const cpp_int c = to_big(multiplier);
  const cpp_int m = pow2(shift);
  const cpp_int dk = boost::multiprecision::pow(cpp_int{base}, k);
  const cpp_int n{max_numerator};
  // (N/(N+1)) / d^k <= c/m  <=>  N*m <= c*d^k*(N+1)
  const bool lower = n * m <= c * dk * (n + 1);
  const bool upper = c * dk < m;
  return lower && upper;
}

unsigned extract_digit_ref(std::uint64_t n, unsigned k) {
  if (n >= 100'000'000) throw std::out_of_range("extract_digit_ref: n must be < 10^8");
  if (k < 1 || k > 8) throw std::out_of_range("extract_digit_ref: k must be in [1, 8]");
  const std::uint64_t c = kDigitConstants.recip52[k - 1];
  // c*(n+1) < 2^52 * 10^8 / 10^k, comfortably inside 128 bits.
  const uint128 frac = (uint128{c} * (n + 1)) & kMask52;
  return static_cast<unsigned>((frac * 10) >> 52);
}

}  // namespace ifma_itoa
