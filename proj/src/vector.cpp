#include "ifma_itoa/vector.hpp"

#include <stdexcept>

#include "kernels.hpp"

namespace ifma_itoa {

LaneVector madd52lo(const LaneVector& acc, const LaneVector& a, const LaneVector& b, Backend backend) {
  LaneVector r;
  detail::kernels_for(backend).madd52lo(acc.lanes.data(), a.lanes.data(), b.lanes.data(), r.lanes.data());
  return r;
}

LaneVector madd52hi(const LaneVector& acc, const LaneVector& a, const LaneVector& b, Backend backend) {
  LaneVector r;
  detail::kernels_for(backend).madd52hi(acc.lanes.data(), a.lanes.data(), b.lanes.data(), r.lanes.data());
  return r;
}

LaneVector ascii_digits_8(std::uint64_t n, Backend backend) {
  if (n >= 100'000'000) throw std::out_of_range("ascii_digits_8: n must be < 10^8");
  LaneVector r;
  detail::kernels_for(backend).ascii8(n, r.lanes.data());
  return r;
}

AsciiBlock16 ascii_digits_16(std::uint64_t n, Backend backend) {
  if (n >= 10'000'000'000'000'000ULL) throw std::out_of_range("ascii_digits_16: n must be < 10^16");
  AsciiBlock16 r;
  detail::kernels_for(backend).ascii16(n, r.bytes.data());
  return r;
}

void emit_suffix(std::span<char> dst, const AsciiBlock16& block, unsigned n, Backend backend) {
  if (n < 1 || n > 16) throw std::out_of_range("emit_suffix: n must be in [1, 16]");
  if (dst.size() < n) throw std::length_error("emit_suffix: destination smaller than n");
  detail::kernels_for(backend).emit_suffix(dst.data(), block.bytes.data(), n);
}

}  // namespace ifma_itoa
