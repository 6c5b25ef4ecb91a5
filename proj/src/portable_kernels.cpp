// Reference backend: the 52-bit multiply-adds are evaluated lane by lane with
// scalar 128-bit products. Everything else is defined in terms of these two.

#include <cstring>

#include "ifma_itoa/divmath.hpp"
#include "ifma_itoa/scalar.hpp"
#include "kernels.hpp"
#include "routines.hpp"

namespace ifma_itoa::detail {
namespace {

void madd52lo_lanes(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out) {
  for (int i = 0; i < 8; ++i) {
    const uint128 p = uint128{a[i] & kMask52} * (b[i] & kMask52);
    out[i] = acc[i] + (static_cast<std::uint64_t>(p) & kMask52);
  }
}

void madd52hi_lanes(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out) {
  for (int i = 0; i < 8; ++i) {
    const uint128 p = uint128{a[i] & kMask52} * (b[i] & kMask52);
    out[i] = acc[i] + static_cast<std::uint64_t>(p >> 52);
  }
}

// Lane order: most significant digit first, so constants run 10^8 .. 10^1.
constexpr std::array<std::uint64_t, 8> kLaneRecip = {
    kDigitConstants.recip52[7], kDigitConstants.recip52[6], kDigitConstants.recip52[5],
    kDigitConstants.recip52[4], kDigitConstants.recip52[3], kDigitConstants.recip52[2],
    kDigitConstants.recip52[1], kDigitConstants.recip52[0]};

void ascii8_lanes(std::uint64_t n, std::uint64_t* lanes) {
  std::uint64_t vn[8], ten[8], zero[8], low[8];
  for (int i = 0; i < 8; ++i) {
    vn[i] = n;
    ten[i] = 10;
    zero[i] = '0';
  }
  madd52lo_lanes(kLaneRecip.data(), vn, kLaneRecip.data(), low);
  madd52hi_lanes(zero, ten, low, lanes);
}

void ascii8_bytes(std::uint64_t n, char* out8) {
  std::uint64_t lanes[8];
  ascii8_lanes(n, lanes);
  for (int i = 0; i < 8; ++i) out8[i] = static_cast<char>(lanes[i]);
}

void ascii16_bytes(std::uint64_t n, char* out16) {
  const auto [hi, lo] = split_1e8(n);
  ascii8_bytes(hi, out16);
  ascii8_bytes(lo, out16 + 8);
}

void emit_suffix_bytes(char* dst, const char* block16, unsigned n) {
  std::memcpy(dst, block16 + 16 - n, n);
}

struct PortablePolicy {
  static void store_tail8(std::uint64_t n, char* out, unsigned len) {
    char block[8];
    ascii8_bytes(n, block);
    std::memcpy(out, block + 8 - len, len);
  }
  static void store_tail16(std::uint64_t n, char* out, unsigned len) {
    char block[16];
    ascii16_bytes(n, block);
    std::memcpy(out, block + 16 - len, len);
  }
  static void store8_left_aligned(std::uint64_t n, unsigned len, char* out) {
    char block[16] = {};
    ascii8_bytes(n, block);
    std::memcpy(out, block + 8 - len, 8);
  }
  static void store16(std::uint64_t n, char* out) { ascii16_bytes(n, out); }
};

using P = PortablePolicy;

const KernelSet kPortable = {
    madd52lo_lanes,
    madd52hi_lanes,
    ascii8_lanes,
    ascii16_bytes,
    emit_suffix_bytes,
    hetero<P>,
    {homog_1_4<P>, homog_5_8<P>, homog_9_16<P>, homog_17_20<P>},
    batch_hetero<P>,
    batch_homog<P>,
    batch_homog_dispatch<P>,
};

}  // namespace

const KernelSet& portable_kernels() noexcept { return kPortable; }

}  // namespace ifma_itoa::detail
