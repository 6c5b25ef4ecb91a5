// Public conversion API.
//
// Every entry point writes into a caller-owned buffer of at least
// kMinOutputCapacity (32) bytes and returns the number of significant bytes.
// No terminator is written.
//
//   to_chars_hetero  branch-light; masked stores, writes exactly [0, length).
//   to_chars_homog   one straight-line arm per LengthClass with fixed-width
//                    stores; bytes in [length, 32) may be overwritten.
//   to_chars         default entry, same as to_chars_hetero.
//   to_chars_signed  '-' followed by the magnitude; needs 33 bytes.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

#include "ifma_itoa/vector.hpp"

namespace ifma_itoa {

inline constexpr std::size_t kMinOutputCapacity = 32;
inline constexpr std::size_t kMinSignedOutputCapacity = 33;

using OutBuffer = std::span<char>;

enum class LengthClass : std::uint8_t { c1_4, c5_8, c9_16, c17_20 };

inline constexpr std::array<LengthClass, 4> kAllLengthClasses = {
    LengthClass::c1_4, LengthClass::c5_8, LengthClass::c9_16, LengthClass::c17_20};

constexpr LengthClass length_class_of(unsigned digits) noexcept {
  if (digits <= 4) return LengthClass::c1_4;
  if (digits <= 8) return LengthClass::c5_8;
  if (digits <= 16) return LengthClass::c9_16;
  return LengthClass::c17_20;
}

/// Value-range form of length_class_of(digit_count(v)).
constexpr bool in_length_class(std::uint64_t v, LengthClass c) noexcept {
  switch (c) {
    case LengthClass::c1_4: return v < 10'000;
    case LengthClass::c5_8: return v >= 10'000 && v < 100'000'000;
    case LengthClass::c9_16: return v >= 100'000'000 && v < 10'000'000'000'000'000ULL;
    case LengthClass::c17_20: return v >= 10'000'000'000'000'000ULL;
  }
  return false;
}

std::string_view to_string(LengthClass c);

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by to_chars_homog when the value's digit count is outside the class.
class ClassMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::size_t to_chars_hetero(std::uint64_t v, OutBuffer out);
std::size_t to_chars_hetero(std::uint64_t v, OutBuffer out, Backend backend);

std::size_t to_chars_homog(std::uint64_t v, OutBuffer out, LengthClass cls);
std::size_t to_chars_homog(std::uint64_t v, OutBuffer out, LengthClass cls, Backend backend);

std::size_t to_chars(std::uint64_t v, OutBuffer out);

std::size_t to_chars_signed(std::int64_t v, OutBuffer out);

}  // namespace ifma_itoa
