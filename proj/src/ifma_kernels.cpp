// AVX-512 IFMA backend. Only the functions below the target pragma use
// AVX-512; everything included before it keeps the default target so shared
// inline functions are never emitted with wider instructions.

#include <cstring>

#include "ifma_itoa/divmath.hpp"
#include "ifma_itoa/scalar.hpp"
#include "kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define IFMA_ITOA_HAVE_IFMA 1
#include <immintrin.h>
#else
#define IFMA_ITOA_HAVE_IFMA 0
#endif

#if IFMA_ITOA_HAVE_IFMA

#pragma GCC push_options
#pragma GCC target("avx512f,avx512bw,avx512vl,avx512vbmi,avx512ifma")
#ifdef __clang__
#pragma clang attribute push(__attribute__((target("avx512f,avx512bw,avx512vl,avx512vbmi,avx512ifma"))), apply_to = function)
#endif

#include "routines.hpp"

namespace ifma_itoa::detail {
namespace {

inline __m512i digits8_vec(std::uint64_t n) {
  const __m512i c = _mm512_setr_epi64(
      static_cast<long long>(kDigitConstants.recip52[7]), static_cast<long long>(kDigitConstants.recip52[6]),
      static_cast<long long>(kDigitConstants.recip52[5]), static_cast<long long>(kDigitConstants.recip52[4]),
      static_cast<long long>(kDigitConstants.recip52[3]), static_cast<long long>(kDigitConstants.recip52[2]),
      static_cast<long long>(kDigitConstants.recip52[1]), static_cast<long long>(kDigitConstants.recip52[0]));
  const __m512i vn = _mm512_set1_epi64(static_cast<long long>(n));
  const __m512i low = _mm512_madd52lo_epu64(c, vn, c);
  return _mm512_madd52hi_epu64(_mm512_set1_epi64('0'), _mm512_set1_epi64(10), low);
}

// Byte j of the result is byte 0 of lane j of hi (j < 8) or of lane j - 8 of lo.
inline __m128i digits16_vec(std::uint64_t n) {
  const auto [hi, lo] = detail::split_1e8(n);
  const __m512i idx = _mm512_set_epi64(0, 0, 0, 0, 0, 0, 0x7870686058504840LL, 0x3830282018100800LL);
  const __m512i perm = _mm512_permutex2var_epi8(digits8_vec(hi), idx, digits8_vec(lo));
  return _mm512_castsi512_si128(perm);
}

inline __m128i digits8_packed(std::uint64_t n) { return _mm512_cvtepi64_epi8(digits8_vec(n)); }

// Masked-out bytes below dst are never accessed, so the shifted base may
// precede the buffer.
inline void* shifted(char* dst, unsigned width, unsigned len) {
  return reinterpret_cast<void*>(reinterpret_cast<std::uintptr_t>(dst) - width + len);
}

struct IfmaPolicy {
  static void store_tail8(std::uint64_t n, char* out, unsigned len) {
    const auto mask = static_cast<__mmask16>((0xFFu << (8 - len)) & 0xFFu);
    _mm_mask_storeu_epi8(shifted(out, 8, len), mask, digits8_packed(n));
  }
  static void store_tail16(std::uint64_t n, char* out, unsigned len) {
    const auto mask = static_cast<__mmask16>(0xFFFFu << (16 - len));
    _mm_mask_storeu_epi8(shifted(out, 16, len), mask, digits16_vec(n));
  }
  static void store8_left_aligned(std::uint64_t n, unsigned len, char* out) {
    const auto word = static_cast<std::uint64_t>(_mm_cvtsi128_si64(digits8_packed(n))) >> (8 * (8 - len));
    std::memcpy(out, &word, 8);
  }
  static void store16(std::uint64_t n, char* out) {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out), digits16_vec(n));
  }
};

using P = IfmaPolicy;

void madd52lo_lanes(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out) {
  const __m512i r = _mm512_madd52lo_epu64(_mm512_loadu_si512(acc), _mm512_loadu_si512(a),
                                          _mm512_loadu_si512(b));
  _mm512_storeu_si512(out, r);
}

void madd52hi_lanes(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out) {
  const __m512i r = _mm512_madd52hi_epu64(_mm512_loadu_si512(acc), _mm512_loadu_si512(a),
                                          _mm512_loadu_si512(b));
  _mm512_storeu_si512(out, r);
}

void ascii8_lanes(std::uint64_t n, std::uint64_t* lanes) { _mm512_storeu_si512(lanes, digits8_vec(n)); }

void ascii16_bytes(std::uint64_t n, char* out16) { IfmaPolicy::store16(n, out16); }

void emit_suffix_bytes(char* dst, const char* block16, unsigned n) {
  const __m128i block = _mm_loadu_si128(reinterpret_cast<const __m128i*>(block16));
  _mm_mask_storeu_epi8(shifted(dst, 16, n), static_cast<__mmask16>(0xFFFFu << (16 - n)), block);
}

const KernelSet kIfma = {
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
}  // namespace ifma_itoa::detail

#ifdef __clang__
#pragma clang attribute pop
#endif
#pragma GCC pop_options

namespace ifma_itoa::detail {
const KernelSet* ifma_kernels() noexcept { return &kIfma; }
}  // namespace ifma_itoa::detail

#else

namespace ifma_itoa::detail {
const KernelSet* ifma_kernels() noexcept { return nullptr; }
}  // namespace ifma_itoa::detail

#endif
