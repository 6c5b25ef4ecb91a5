// Benchmark harness: times whole-batch conversions, checks every output
// against the reference conversion, and writes CSV reports.
//
// CSV columns (header is kCsvHeader, one row per routine):
//   routine             hetero | homog | auto | naive
//   dataset             dataset label (fixed:K, uniform, natural:K, file:PATH)
//   backend             portable | hardware-ifma
//   count               number of integers
//   bytes               total output bytes
//   ns_per_num_median   median over repetitions of (batch time / count)
//   ns_per_num_min/max  extremes over repetitions
//   selection_ns        auto only: median time spent sampling and deciding
//   conversion_ns       median time of the conversion pass alone
//   variant             auto only: homogeneous(<class>) | heterogeneous
//   rho_max             auto only: dominant length ratio in the sample
//   checksum            FNV-1a 64 of the output bytes, hex
//   verified            1 if every element matched the reference, else 0
//   mismatches          number of mismatching elements

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifma_itoa/convert.hpp"
#include "ifma_itoa/data.hpp"
#include "ifma_itoa/select.hpp"

namespace ifma_itoa {

enum class Routine : std::uint8_t { hetero, homog, auto_select, naive };

inline constexpr std::array<Routine, 4> kAllRoutines = {Routine::hetero, Routine::homog,
                                                        Routine::auto_select, Routine::naive};

std::string_view to_string(Routine r);
std::optional<Routine> parse_routine(std::string_view name);

using DatasetSource = std::variant<DatasetSpec, std::filesystem::path>;

struct BenchConfig {
  DatasetSource dataset = DatasetSpec{};
  std::vector<Routine> routines = {Routine::auto_select};
  unsigned repetitions = 5;
  unsigned warmup = 2;
  SelectionConfig selection;
  Backend backend = detect_backend();

  /// Throws std::invalid_argument on repetitions == 0, no routines, or bad selection parameters.
  void validate() const;
};

struct BenchRow {
  Routine routine = Routine::hetero;
  std::string dataset;
  Backend backend = Backend::portable;
  std::size_t count = 0;
  std::size_t bytes = 0;
  double ns_per_num_median = 0;
  double ns_per_num_min = 0;
  double ns_per_num_max = 0;
  double conversion_ns = 0;
  std::optional<double> selection_ns;
  std::optional<VariantChoice> choice;
  std::uint64_t checksum = 0;
  bool verified = false;
  std::size_t mismatches = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool all_verified() const;
};

inline constexpr std::string_view kCsvHeader =
    "routine,dataset,backend,count,bytes,ns_per_num_median,ns_per_num_min,ns_per_num_max,"
    "selection_ns,conversion_ns,variant,rho_max,checksum,verified,mismatches";

std::string dataset_label(const DatasetSource& src);

/// Generates or loads the dataset. Throws DataError on load failure.
std::vector<std::uint64_t> resolve_dataset(const DatasetSource& src);

BenchReport run_benchmark(const BenchConfig& cfg);

/// Same, over data already in memory.
BenchReport run_benchmark(const BenchConfig& cfg, std::span<const std::uint64_t> data,
                          const std::string& label);

std::uint64_t fnv1a64(std::span<const char> bytes);

void write_csv(const BenchReport& report, std::ostream& os);
void write_summary(const BenchReport& report, std::ostream& os);

struct Mismatch {
  std::size_t index = 0;
  std::uint64_t value = 0;
  std::string expected;
  std::string actual;
  std::string note;  // e.g. a class-mismatch report from the homogeneous routine
};

struct VerifyOptions {
  /// Homogeneous routine only: use this class for every element instead of dispatching.
  std::optional<LengthClass> forced_class;
  SelectionConfig selection;
  Backend backend = detect_backend();
};

/// Every element whose conversion differs from the reference. Empty means pass.
std::vector<Mismatch> verify_dataset(std::span<const std::uint64_t> data, Routine routine,
                                     const VerifyOptions& opts = {});

}  // namespace ifma_itoa
