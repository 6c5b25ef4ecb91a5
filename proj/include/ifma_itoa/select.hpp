// Sampling-based choice between the homogeneous and heterogeneous variants.
//
// A batch is profiled by drawing m = ceil(alpha * N) elements uniformly at
// random (with replacement) and counting their digit lengths. If the most
// frequent length accounts for at least tau of the sample, the batch is
// converted with the homogeneous arm for that length's class; otherwise with
// the heterogeneous routine.
//
// Sampler: std::mt19937_64 seeded with SelectionConfig::seed; each index is
// the high 64 bits of engine() * N (multiply-shift range reduction).

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ifma_itoa/convert.hpp"

namespace ifma_itoa {

struct SelectionConfig {
  double alpha = 0.01;
  double tau = 0.95;
  std::uint64_t seed = 0x5eed'1e55'c0de'f00dULL;

  /// Throws std::invalid_argument unless alpha in (0, 1] and tau in (0, 1).
  void validate() const;
};

struct DigitHistogram {
  std::array<std::uint64_t, 21> counts{};  // indexed by digit length; bin 0 stays empty
  std::uint64_t sample_size = 0;

  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;
};

enum class Variant : std::uint8_t { homogeneous, heterogeneous };

struct VariantChoice {
  Variant variant = Variant::heterogeneous;
  unsigned dominant_length = 0;
  LengthClass dominant_class = LengthClass::c1_4;  // meaningful for homogeneous
  double rho_max = 0.0;

  friend bool operator==(const VariantChoice&, const VariantChoice&) = default;
};

std::string_view to_string(Variant v);

/// ceil(alpha * n), clamped to [1, n].
std::size_t sample_size_for(std::size_t n, double alpha);

/// Throws std::invalid_argument for empty data or an invalid config.
DigitHistogram sample_histogram(std::span<const std::uint64_t> data, const SelectionConfig& cfg);

/// Homogeneous iff max bin / m >= tau; ties go to the shorter length.
/// Throws std::invalid_argument if the histogram is empty.
VariantChoice choose_variant(const DigitHistogram& h, const SelectionConfig& cfg);

/// Output bytes that guarantee 32 bytes of headroom past every element start.
constexpr std::size_t batch_capacity(std::size_t count) {
  return count == 0 ? 0 : 20 * (count - 1) + kMinOutputCapacity;
}

struct BatchResult {
  std::vector<std::uint8_t> lengths;
  std::size_t bytes_written = 0;
  VariantChoice choice;
};

/// Converts every element with the given choice; elements outside a
/// homogeneous class fall back to the heterogeneous routine. Writes the
/// concatenated strings to out and one length per element to lengths.
/// Throws CapacityError if out would overflow (see batch_capacity) and
/// std::invalid_argument if lengths.size() != data.size().
std::size_t convert_with(const VariantChoice& choice, std::span<const std::uint64_t> data,
                         std::span<char> out, std::span<std::uint8_t> lengths,
                         Backend backend = detect_backend());

/// Sample, decide, convert. Output bytes do not depend on the decision.
BatchResult convert_batch(std::span<const std::uint64_t> data, std::span<char> out,
                          const SelectionConfig& cfg = {}, Backend backend = detect_backend());

}  // namespace ifma_itoa
