#include "ifma_itoa/select.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "ifma_itoa/scalar.hpp"
#include "kernels.hpp"

namespace ifma_itoa {

void SelectionConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("selection: alpha must be in (0, 1]");
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("selection: tau must be in (0, 1)");
}

std::string_view to_string(Variant v) {
  return v == Variant::homogeneous ? "homogeneous" : "heterogeneous";
}

std::size_t sample_size_for(std::size_t n, double alpha) {
  if (n == 0) return 0;
  // alpha is rarely exact in binary (0.07 * 100 == 7.000000000000001); shave
  // the representation error before rounding up.
  const long double x = static_cast<long double>(alpha) * static_cast<long double>(n);
  auto m = static_cast<std::size_t>(std::ceil(x - x * 1e-12L));
  if (m < 1) m = 1;
  if (m > n) m = n;
  return m;
}

DigitHistogram sample_histogram(std::span<const std::uint64_t> data, const SelectionConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw std::invalid_argument("sample_histogram: empty input");
  const std::size_t n = data.size();
  const std::size_t m = sample_size_for(n, cfg.alpha);

  DigitHistogram h;
  h.sample_size = m;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < m; ++i) {
    const auto idx = static_cast<std::size_t>((uint128{rng()} * n) >> 64);
    ++h.counts[digit_count(data[idx])];
  }
  return h;
}

VariantChoice choose_variant(const DigitHistogram& h, const SelectionConfig& cfg) {
  cfg.validate();
  if (h.sample_size == 0) throw std::invalid_argument("choose_variant: empty histogram");
  unsigned best = 0;
  for (unsigned len = 1; len < h.counts.size(); ++len)
    if (h.counts[len] > h.counts[best]) best = len;

  VariantChoice c;
  c.dominant_length = best;
  c.dominant_class = length_class_of(best);
  c.rho_max = static_cast<double>(h.counts[best]) / static_cast<double>(h.sample_size);
  c.variant = c.rho_max >= cfg.tau ? Variant::homogeneous : Variant::heterogeneous;
  return c;
}

std::size_t convert_with(const VariantChoice& choice, std::span<const std::uint64_t> data,
                         std::span<char> out, std::span<std::uint8_t> lengths, Backend backend) {
  if (lengths.size() != data.size()) throw std::invalid_argument("convert_with: lengths size must match data");
  const detail::KernelSet& k = detail::kernels_for(backend);
  const bool homog = choice.variant == Variant::homogeneous;

  if (out.size() >= batch_capacity(data.size())) {
    return homog ? k.batch_homog(data.data(), data.size(), choice.dominant_class, out.data(), lengths.data())
                 : k.batch_hetero(data.data(), data.size(), out.data(), lengths.data());
  }

  // Tight buffer: check the 32-byte headroom element by element.
  const auto arm = k.homog[detail::homog_index(choice.dominant_class)];
  std::size_t pos = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (out.size() - pos < kMinOutputCapacity)
      throw CapacityError("convert_with: output overflow at element " + std::to_string(i));
    const std::uint64_t v = data[i];
    const std::size_t len = homog && in_length_class(v, choice.dominant_class) ? arm(v, out.data() + pos)
                                                                                : k.hetero(v, out.data() + pos);
    lengths[i] = static_cast<std::uint8_t>(len);
    pos += len;
  }
  return pos;
}

BatchResult convert_batch(std::span<const std::uint64_t> data, std::span<char> out,
                          const SelectionConfig& cfg, Backend backend) {
  BatchResult r;
  r.choice = choose_variant(sample_histogram(data, cfg), cfg);
  r.lengths.resize(data.size());
  r.bytes_written = convert_with(r.choice, data, out, r.lengths, backend);
  return r;
}

}  // namespace ifma_itoa
