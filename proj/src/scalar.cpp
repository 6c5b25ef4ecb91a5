#include "ifma_itoa/scalar.hpp"

namespace ifma_itoa {

std::size_t naive_to_string(std::uint64_t v, std::span<char> out) {
  if (out.size() < 20) throw std::length_error("naive_to_string: capacity must be >= 20");
  return detail::naive_to_string(v, out.data());
}

QuotRem split_1e8(std::uint64_t v) {
  if (v >= 10'000'000'000'000'000ULL) throw std::out_of_range("split_1e8: value must be < 10^16");
  return detail::split_1e8(v);
}

void write_four_digits(std::span<char> out, std::uint32_t x) {
  if (x >= 10000) throw std::out_of_range("write_four_digits: value must be < 10^4");
  if (out.size() < 4) throw std::length_error("write_four_digits: capacity must be >= 4");
  detail::write_four_digits(out.data(), x);
}

std::size_t write_prefix_1_to_4(std::span<char> out, std::uint32_t q) {
  if (q == 0 || q >= 10000) throw std::out_of_range("write_prefix_1_to_4: value must be in [1, 9999]");
  if (out.size() < 4) throw std::length_error("write_prefix_1_to_4: capacity must be >= 4");
  return static_cast<std::size_t>(detail::write_prefix_1_to_4(out.data(), q) - out.data());
}

}  // namespace ifma_itoa
