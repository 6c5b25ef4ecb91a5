#include "ifma_itoa/data.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <string_view>

#include "ifma_itoa/divmath.hpp"
#include "ifma_itoa/scalar.hpp"

namespace ifma_itoa {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t length_lo(unsigned k) { return detail::pow10_u64(k - 1); }
std::uint64_t length_hi(unsigned k) { return k >= 20 ? kMax : detail::pow10_u64(k) - 1; }

void check_length(unsigned k) {
  if (k < 1 || k > 20) throw std::invalid_argument("digit length must be in [1, 20]");
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void DatasetSpec::validate() const {
  if (count == 0) throw std::invalid_argument("dataset: count must be >= 1");
  if (model == DatasetModel::fixed) check_length(param);
  if (model == DatasetModel::natural && param != 8 && param != 16)
    throw std::invalid_argument("dataset: natural model supports kmax 8 or 16");
}

std::string DatasetSpec::label() const {
  switch (model) {
    case DatasetModel::fixed: return "fixed:" + std::to_string(param);
    case DatasetModel::uniform: return "uniform";
    case DatasetModel::natural: return "natural:" + std::to_string(param);
  }
  return "?";
}

std::uint64_t uniform_in(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t range = hi - lo;
  if (range == kMax) return rng();
  const std::uint64_t s = range + 1;
  uint128 m = uint128{rng()} * s;
  auto low = static_cast<std::uint64_t>(m);
  if (low < s) {
    const std::uint64_t threshold = (0 - s) % s;
    while (low < threshold) {
      m = uint128{rng()} * s;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return lo + static_cast<std::uint64_t>(m >> 64);
}

std::vector<std::uint64_t> gen_fixed(unsigned k, std::size_t count, std::uint64_t seed) {
  check_length(k);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(count);
  const std::uint64_t lo = length_lo(k), hi = length_hi(k);
  for (auto& v : out) v = uniform_in(rng, lo, hi);
  return out;
}

std::vector<std::uint64_t> gen_uniform_lengths(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) {
    const auto k = static_cast<unsigned>(uniform_in(rng, 1, 20));
    v = uniform_in(rng, length_lo(k), length_hi(k));
  }
  return out;
}

std::array<double, 21> natural_length_probabilities(unsigned kmax) {
  if (kmax != 8 && kmax != 16) throw std::invalid_argument("natural: kmax must be 8 or 16");
  constexpr double kHead = 0.968;
  std::array<double, 21> p{};
  double norm = 0.0, w = 1.0;
  for (unsigned len = kmax - 1; len >= 1; --len, w /= 10.0) norm += w;
  w = 1.0;
  for (unsigned len = kmax - 1; len >= 1; --len, w /= 10.0) p[len] = (1.0 - kHead) * w / norm;
  p[kmax] = kHead;
  return p;
}

std::vector<std::uint64_t> gen_natural(unsigned kmax, std::size_t count, std::uint64_t seed) {
  const auto p = natural_length_probabilities(kmax);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) {
    const double u = unit_double(rng);
    unsigned k = kmax;
    double acc = p[kmax];
    while (u >= acc && k > 1) acc += p[--k];
    v = uniform_in(rng, length_lo(k), length_hi(k));
  }
  return out;
}

std::vector<std::uint64_t> generate(const DatasetSpec& spec) {
  spec.validate();
  switch (spec.model) {
    case DatasetModel::fixed: return gen_fixed(spec.param, spec.count, spec.seed);
    case DatasetModel::uniform: return gen_uniform_lengths(spec.count, spec.seed);
    case DatasetModel::natural: return gen_natural(spec.param, spec.count, spec.seed);
  }
  return {};
}

std::vector<std::uint64_t> load_integers_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string(), 0);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw DataError("read error on " + path.string(), 0);

  std::vector<std::uint64_t> values;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": value exceeds 2^64-1", line_no);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": malformed integer '" +
                          std::string(line) + "'",
                      line_no);
    values.push_back(v);
  }
  return values;
}

}  // namespace ifma_itoa
