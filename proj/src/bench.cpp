#include "ifma_itoa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ifma_itoa/scalar.hpp"
#include "kernels.hpp"

namespace ifma_itoa {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point a, Clock::time_point b) {
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Reference {
  std::vector<char> bytes;
  std::vector<std::size_t> offsets;  // count + 1 entries
};

Reference reference_output(std::span<const std::uint64_t> data) {
  Reference ref;
  ref.bytes.resize(20 * data.size());
  ref.offsets.reserve(data.size() + 1);
  std::size_t pos = 0;
  for (std::uint64_t v : data) {
    ref.offsets.push_back(pos);
    pos += detail::naive_to_string(v, ref.bytes.data() + pos);
  }
  ref.offsets.push_back(pos);
  ref.bytes.resize(pos);
  return ref;
}

std::size_t naive_batch(std::span<const std::uint64_t> data, char* out, std::uint8_t* lengths) {
  char* p = out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t len = detail::naive_to_string(data[i], p);
    lengths[i] = static_cast<std::uint8_t>(len);
    p += len;
  }
  return static_cast<std::size_t>(p - out);
}

std::size_t count_mismatches(const Reference& ref, std::span<const char> out, std::span<const std::uint8_t> lengths) {
  std::size_t bad = 0, pos = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::size_t want = ref.offsets[i + 1] - ref.offsets[i];
    const std::size_t got = lengths[i];
    if (got != want || pos + got > out.size() ||
        !std::equal(out.begin() + static_cast<std::ptrdiff_t>(pos), out.begin() + static_cast<std::ptrdiff_t>(pos + got),
                    ref.bytes.begin() + static_cast<std::ptrdiff_t>(ref.offsets[i]))) {
      ++bad;
    }
    pos += got;
  }
  return bad;
}

std::string variant_label(const VariantChoice& c) {
  if (c.variant == Variant::heterogeneous) return "heterogeneous";
  return "homogeneous(" + std::string(to_string(c.dominant_class)) + ")";
}

struct Pass {
  std::size_t bytes = 0;
  double selection_ns = 0;
  double conversion_ns = 0;
  std::optional<VariantChoice> choice;
};

Pass run_pass(Routine routine, const BenchConfig& cfg, const detail::KernelSet& k,
              std::span<const std::uint64_t> data, std::vector<char>& out, std::vector<std::uint8_t>& lengths) {
  Pass p;
  const auto t0 = Clock::now();
  switch (routine) {
    case Routine::hetero:
      p.bytes = k.batch_hetero(data.data(), data.size(), out.data(), lengths.data());
      break;
    case Routine::homog:
      p.bytes = k.batch_homog_dispatch(data.data(), data.size(), out.data(), lengths.data());
      break;
    case Routine::naive:
      p.bytes = naive_batch(data, out.data(), lengths.data());
      break;
    case Routine::auto_select: {
      const VariantChoice choice = choose_variant(sample_histogram(data, cfg.selection), cfg.selection);
      const auto t1 = Clock::now();
      p.bytes = convert_with(choice, data, out, lengths, cfg.backend);
      const auto t2 = Clock::now();
      p.selection_ns = elapsed_ns(t0, t1);
      p.conversion_ns = elapsed_ns(t1, t2);
      p.choice = choice;
      return p;
    }
  }
  p.conversion_ns = elapsed_ns(t0, Clock::now());
  return p;
}

}  // namespace

std::string_view to_string(Routine r) {
  switch (r) {
    case Routine::hetero: return "hetero";
    case Routine::homog: return "homog";
    case Routine::auto_select: return "auto";
    case Routine::naive: return "naive";
  }
  return "?";
}

std::optional<Routine> parse_routine(std::string_view name) {
  for (Routine r : kAllRoutines)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

void BenchConfig::validate() const {
  if (repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  if (routines.empty()) throw std::invalid_argument("bench: no routine selected");
  selection.validate();
  if (const auto* spec = std::get_if<DatasetSpec>(&dataset)) spec->validate();
}

bool BenchReport::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.verified; });
}

std::string dataset_label(const DatasetSource& src) {
  if (const auto* spec = std::get_if<DatasetSpec>(&src)) return spec->label();
  return "file:" + std::get<std::filesystem::path>(src).string();
}

std::vector<std::uint64_t> resolve_dataset(const DatasetSource& src) {
  if (const auto* spec = std::get_if<DatasetSpec>(&src)) return generate(*spec);
  return load_integers_text(std::get<std::filesystem::path>(src));
}

BenchReport run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  const std::vector<std::uint64_t> data = resolve_dataset(cfg.dataset);
  return run_benchmark(cfg, data, dataset_label(cfg.dataset));
}

BenchReport run_benchmark(const BenchConfig& cfg, std::span<const std::uint64_t> data, const std::string& label) {
  cfg.validate();
  if (data.empty()) throw std::invalid_argument("bench: dataset is empty");
  const detail::KernelSet& k = detail::kernels_for(cfg.backend);
  const Reference ref = reference_output(data);

  std::vector<char> out(batch_capacity(data.size()));
  std::vector<std::uint8_t> lengths(data.size());
  const auto n = static_cast<double>(data.size());

  BenchReport report;
  for (Routine routine : cfg.routines) {
    for (unsigned i = 0; i < cfg.warmup; ++i) run_pass(routine, cfg, k, data, out, lengths);

    std::vector<double> per_num, conversion, selection;
    Pass last;
    for (unsigned i = 0; i < cfg.repetitions; ++i) {
      last = run_pass(routine, cfg, k, data, out, lengths);
      per_num.push_back((last.selection_ns + last.conversion_ns) / n);
      conversion.push_back(last.conversion_ns);
      selection.push_back(last.selection_ns);
    }

    BenchRow row;
    row.routine = routine;
    row.dataset = label;
    row.backend = cfg.backend;
    row.count = data.size();
    row.bytes = last.bytes;
    row.ns_per_num_median = median(per_num);
    row.ns_per_num_min = *std::min_element(per_num.begin(), per_num.end());
    row.ns_per_num_max = *std::max_element(per_num.begin(), per_num.end());
    row.conversion_ns = median(conversion);
    if (routine == Routine::auto_select) {
      row.selection_ns = median(selection);
      row.choice = last.choice;
    }
    const std::span<const char> written(out.data(), last.bytes);
    row.checksum = fnv1a64(written);
    row.mismatches = count_mismatches(ref, written, lengths);
    row.verified = row.mismatches == 0 && last.bytes == ref.bytes.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_csv(const BenchReport& report, std::ostream& os) {
  os << kCsvHeader << '\n';
  char buf[64];
  for (const BenchRow& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r.checksum));
    os << to_string(r.routine) << ',' << r.dataset << ',' << to_string(r.backend) << ',' << r.count << ','
       << r.bytes << ',' << r.ns_per_num_median << ',' << r.ns_per_num_min << ',' << r.ns_per_num_max << ',';
    if (r.selection_ns) os << *r.selection_ns;
    os << ',' << r.conversion_ns << ',';
    if (r.choice) os << variant_label(*r.choice) << ',' << r.choice->rho_max;
    else os << ',';
    os << ',' << buf << ',' << (r.verified ? 1 : 0) << ',' << r.mismatches << '\n';
  }
}

void write_summary(const BenchReport& report, std::ostream& os) {
  char line[256];
  for (const BenchRow& r : report.rows) {
    std::snprintf(line, sizeof line, "%-7s %-24s %-13s n=%-9zu %8.3f ns/n (min %.3f, max %.3f)  %s",
                  std::string(to_string(r.routine)).c_str(), r.dataset.c_str(),
                  std::string(to_string(r.backend)).c_str(), r.count, r.ns_per_num_median, r.ns_per_num_min,
                  r.ns_per_num_max, r.verified ? "verified" : "MISMATCH");
    os << line;
    if (r.choice) {
      os << "  [" << variant_label(*r.choice) << ", rho_max=" << r.choice->rho_max
         << ", selection " << *r.selection_ns << " ns, conversion " << r.conversion_ns << " ns]";
    }
    if (!r.verified) os << "  (" << r.mismatches << " mismatches)";
    os << '\n';
  }
}

std::vector<Mismatch> verify_dataset(std::span<const std::uint64_t> data, Routine routine, const VerifyOptions& opts) {
  std::vector<Mismatch> out;
  if (data.empty()) return out;
  const detail::KernelSet& k = detail::kernels_for(opts.backend);

  std::vector<char> actual;
  std::vector<std::uint8_t> lengths;
  if (routine == Routine::auto_select) {
    actual.resize(batch_capacity(data.size()));
    lengths = convert_batch(data, actual, opts.selection, opts.backend).lengths;
  }

  char expected[32], got[32];
  std::size_t batch_pos = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::uint64_t v = data[i];
    const std::size_t want = detail::naive_to_string(v, expected);
    std::size_t len = 0;
    const char* src = got;
    std::string note;
    switch (routine) {
      case Routine::hetero: len = to_chars_hetero(v, got, opts.backend); break;
      case Routine::naive: len = naive_to_string(v, got); break;
      case Routine::homog:
        if (opts.forced_class) {
          try {
            len = to_chars_homog(v, got, *opts.forced_class, opts.backend);
          } catch (const ClassMismatch& e) {
            note = e.what();
          }
        } else {
          len = k.homog[detail::homog_index(length_class_of(digit_count(v)))](v, got);
        }
        break;
      case Routine::auto_select:
        len = lengths[i];
        src = actual.data() + batch_pos;
        batch_pos += len;
        break;
    }
    if (!note.empty() || len != want || !std::equal(src, src + len, expected)) {
      out.push_back(Mismatch{i, v, std::string(expected, want), std::string(src, len), std::move(note)});
    }
  }
  return out;
}

}  // namespace ifma_itoa
