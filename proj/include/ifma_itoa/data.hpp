// Synthetic datasets with controlled digit-length distributions, and a loader
// for plain-text integer dumps.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifma_itoa {

enum class DatasetModel : std::uint8_t { fixed, uniform, natural };

struct DatasetSpec {
  DatasetModel model = DatasetModel::uniform;
  unsigned param = 0;  // k for fixed, kmax for natural, unused for uniform
  std::size_t count = 1'000'000;
  std::uint64_t seed = 42;

  /// Throws std::invalid_argument on k outside [1, 20], kmax not 8 or 16, or count == 0.
  void validate() const;
  /// "fixed:K", "uniform" or "natural:K".
  std::string label() const;
};

/// Failure while reading an integer file; line() is 1-based, 0 when not line-specific.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Uniform over [lo, hi] by multiply-shift with rejection (no modulo bias).
std::uint64_t uniform_in(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Values uniform over [10^(k-1), min(10^k - 1, 2^64 - 1)].
std::vector<std::uint64_t> gen_fixed(unsigned k, std::size_t count, std::uint64_t seed);

/// Length uniform over 1..20, then a uniform value of that length.
std::vector<std::uint64_t> gen_uniform_lengths(std::size_t count, std::uint64_t seed);

/// Length distribution of the natural-kmax model: index = digit length.
/// 0.968 at kmax; the remaining 0.032 decays by 1/10 per digit below kmax.
std::array<double, 21> natural_length_probabilities(unsigned kmax);

/// kmax must be 8 or 16.
std::vector<std::uint64_t> gen_natural(unsigned kmax, std::size_t count, std::uint64_t seed);

std::vector<std::uint64_t> generate(const DatasetSpec& spec);

/// One unsigned decimal per line, LF or CRLF, optional trailing newline.
std::vector<std::uint64_t> load_integers_text(const std::filesystem::path& path);

}  // namespace ifma_itoa
