// Lane-parallel digit extraction on eight 64-bit lanes with 52-bit fused
// multiply-add semantics.
//
// Two backends compute byte-identical results: `portable` defines the
// semantics with scalar wide products, `hardware_ifma` runs the AVX-512 IFMA
// instructions. The active backend is detected once per process. Setting the
// environment variable IFMA_ITOA_FORCE_PORTABLE to anything other than "" or
// "0" before the first call, or calling force_portable_backend(true), pins the
// portable backend.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace ifma_itoa {

struct LaneVector {
  std::array<std::uint64_t, 8> lanes{};

  static constexpr LaneVector broadcast(std::uint64_t v) {
    LaneVector r;
    r.lanes.fill(v);
    return r;
  }

  friend constexpr bool operator==(const LaneVector&, const LaneVector&) = default;
};

/// Sixteen ASCII digits, most significant first, zero-padded on the left.
struct AsciiBlock16 {
  std::array<char, 16> bytes{};

  std::string_view view() const { return {bytes.data(), bytes.size()}; }
  friend constexpr bool operator==(const AsciiBlock16&, const AsciiBlock16&) = default;
};

enum class Backend : std::uint8_t { portable, hardware_ifma };

inline constexpr std::string_view kForcePortableEnv = "IFMA_ITOA_FORCE_PORTABLE";

std::string_view to_string(Backend b);

/// True when the hardware kernels were compiled in and the CPU (and OS) expose
/// AVX-512 F/BW/VL/VBMI/IFMA.
bool host_supports_ifma() noexcept;

/// Pure selection rule behind detect_backend().
constexpr Backend select_backend(bool host_has_ifma, bool force_portable) noexcept {
  return host_has_ifma && !force_portable ? Backend::hardware_ifma : Backend::portable;
}

/// Active backend; first call reads the environment and probes the CPU.
Backend detect_backend() noexcept;

/// Process-wide override. Passing false returns to the detected backend.
void force_portable_backend(bool force) noexcept;

/// Per lane: acc + low52(low52(a) * low52(b)), wrapping at 64 bits.
LaneVector madd52lo(const LaneVector& acc, const LaneVector& a, const LaneVector& b,
                    Backend backend = detect_backend());

/// Per lane: acc + bits [52, 104) of low52(a) * low52(b), wrapping at 64 bits.
LaneVector madd52hi(const LaneVector& acc, const LaneVector& a, const LaneVector& b,
                    Backend backend = detect_backend());

/// Lane j holds the ASCII code of digit j of the 8-digit zero-padded rendering
/// of n (lane 0 most significant). Throws std::out_of_range for n >= 10^8.
LaneVector ascii_digits_8(std::uint64_t n, Backend backend = detect_backend());

/// Zero-padded 16-digit rendering. Throws std::out_of_range for n >= 10^16.
AsciiBlock16 ascii_digits_16(std::uint64_t n, Backend backend = detect_backend());

/// Copies the last n bytes of block to dst[0, n) without touching anything
/// else. Throws std::out_of_range unless 1 <= n <= 16, std::length_error if
/// dst.size() < n.
void emit_suffix(std::span<char> dst, const AsciiBlock16& block, unsigned n,
                 Backend backend = detect_backend());

}  // namespace ifma_itoa
