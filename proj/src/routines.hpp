// Conversion routines written once against a digit-block policy. Each backend
// translation unit instantiates them with its own (internal-linkage) policy.
//
// A policy provides:
//   store_tail8(n, out, len)          last len digits of the 8-digit block of n -> out[0, len), nothing else
//   store_tail16(n, out, len)         same for the 16-digit block
//   store8_left_aligned(n, len, out)  8 unmasked bytes at out, the first len being the last len digits
//   store16(n, out)                   16 unmasked bytes: the 16-digit block of n
//
// Include only after every other header; ifma_kernels.cpp compiles this file
// under an AVX-512 target pragma.

#pragma once

namespace ifma_itoa::detail {

inline constexpr std::uint64_t k1e4 = 10'000;
inline constexpr std::uint64_t k1e8 = 100'000'000;
inline constexpr std::uint64_t k1e16 = 10'000'000'000'000'000ULL;

template <class P>
inline std::size_t hetero(std::uint64_t v, char* out) {
  const unsigned n = digit_count(v);
  if (v < k1e8) {
    P::store_tail8(v, out, n);
    return n;
  }
  if (v < k1e16) {
    P::store_tail16(v, out, n);
    return n;
  }
  const auto [q, r] = split_1e4(v);
  const unsigned nq = n - 4;
  P::store_tail16(q, out, nq);
  detail::write_four_digits(out + nq, static_cast<std::uint32_t>(r));
  return n;
}

template <class P>
inline std::size_t homog_1_4(std::uint64_t v, char* out) {
  return static_cast<std::size_t>(detail::write_prefix_1_to_4(out, static_cast<std::uint32_t>(v)) - out);
}

template <class P>
inline std::size_t homog_5_8(std::uint64_t v, char* out) {
  const unsigned n = digit_count(v);
  P::store8_left_aligned(v, n, out);
  return n;
}

template <class P>
inline std::size_t homog_9_16(std::uint64_t v, char* out) {
  const unsigned n = digit_count(v);
  const auto [hi, lo] = detail::split_1e8(v);
  const unsigned nh = n - 8;
  P::store8_left_aligned(hi, nh, out);
  P::store8_left_aligned(lo, 8, out + nh);
  return n;
}

template <class P>
inline std::size_t homog_17_20(std::uint64_t v, char* out) {
  const auto [q, r] = split_1e16(v);
  char* p = detail::write_prefix_1_to_4(out, static_cast<std::uint32_t>(q));
  P::store16(r, p);
  return static_cast<std::size_t>(p - out) + 16;
}

template <class P>
inline std::size_t homog_dispatch(std::uint64_t v, char* out) {
  if (v < k1e4) return homog_1_4<P>(v, out);
  if (v < k1e8) return homog_5_8<P>(v, out);
  if (v < k1e16) return homog_9_16<P>(v, out);
  return homog_17_20<P>(v, out);
}

template <class P>
std::size_t batch_hetero(const std::uint64_t* data, std::size_t count, char* out,
                         std::uint8_t* lengths) {
  char* p = out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = hetero<P>(data[i], p);
    lengths[i] = static_cast<std::uint8_t>(len);
    p += len;
  }
  return static_cast<std::size_t>(p - out);
}

template <class P, std::uint64_t Lo, std::uint64_t Hi, std::size_t (*Arm)(std::uint64_t, char*)>
std::size_t batch_homog_arm(const std::uint64_t* data, std::size_t count, char* out,
                            std::uint8_t* lengths) {
  char* p = out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t v = data[i];
    // Unsigned wrap turns the range test into one comparison.
    const std::size_t len = (v - Lo) <= (Hi - Lo) ? Arm(v, p) : hetero<P>(v, p);
    lengths[i] = static_cast<std::uint8_t>(len);
    p += len;
  }
  return static_cast<std::size_t>(p - out);
}

template <class P>
std::size_t batch_homog(const std::uint64_t* data, std::size_t count, LengthClass cls, char* out,
                        std::uint8_t* lengths) {
  switch (cls) {
    case LengthClass::c1_4:
      return batch_homog_arm<P, 0, k1e4 - 1, homog_1_4<P>>(data, count, out, lengths);
    case LengthClass::c5_8:
      return batch_homog_arm<P, k1e4, k1e8 - 1, homog_5_8<P>>(data, count, out, lengths);
    case LengthClass::c9_16:
      return batch_homog_arm<P, k1e8, k1e16 - 1, homog_9_16<P>>(data, count, out, lengths);
    case LengthClass::c17_20:
      return batch_homog_arm<P, k1e16, ~std::uint64_t{0}, homog_17_20<P>>(data, count, out, lengths);
  }
  return 0;
}

template <class P>
std::size_t batch_homog_dispatch(const std::uint64_t* data, std::size_t count, char* out,
                                 std::uint8_t* lengths) {
  char* p = out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = homog_dispatch<P>(data[i], p);
    lengths[i] = static_cast<std::uint8_t>(len);
    p += len;
  }
  return static_cast<std::size_t>(p - out);
}

}  // namespace ifma_itoa::detail
