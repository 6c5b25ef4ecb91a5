#include "ifma_itoa/convert.hpp"

#include <string>

#include "ifma_itoa/scalar.hpp"
#include "kernels.hpp"

namespace ifma_itoa {

namespace {

void require_capacity(OutBuffer out, std::size_t needed, const char* who) {
  if (out.size() < needed)
    throw CapacityError(std::string(who) + ": output buffer needs at least " + std::to_string(needed) + " bytes");
}

}  // namespace

std::string_view to_string(LengthClass c) {
  switch (c) {
    case LengthClass::c1_4: return "1-4";
    case LengthClass::c5_8: return "5-8";
    case LengthClass::c9_16: return "9-16";
    case LengthClass::c17_20: return "17-20";
  }
  return "?";
}

std::size_t to_chars_hetero(std::uint64_t v, OutBuffer out, Backend backend) {
  require_capacity(out, kMinOutputCapacity, "to_chars_hetero");
  return detail::kernels_for(backend).hetero(v, out.data());
}

std::size_t to_chars_hetero(std::uint64_t v, OutBuffer out) {
  return to_chars_hetero(v, out, detect_backend());
}

std::size_t to_chars_homog(std::uint64_t v, OutBuffer out, LengthClass cls, Backend backend) {
  require_capacity(out, kMinOutputCapacity, "to_chars_homog");
  if (!in_length_class(v, cls)) {
    throw ClassMismatch("to_chars_homog: " + std::to_string(v) + " has " + std::to_string(digit_count(v)) +
                        " digits, outside class " + std::string(to_string(cls)));
  }
  return detail::kernels_for(backend).homog[detail::homog_index(cls)](v, out.data());
}

std::size_t to_chars_homog(std::uint64_t v, OutBuffer out, LengthClass cls) {
  return to_chars_homog(v, out, cls, detect_backend());
}

std::size_t to_chars(std::uint64_t v, OutBuffer out) { return to_chars_hetero(v, out); }

std::size_t to_chars_signed(std::int64_t v, OutBuffer out) {
  require_capacity(out, kMinSignedOutputCapacity, "to_chars_signed");
  if (v >= 0) return to_chars_hetero(static_cast<std::uint64_t>(v), out);
  out[0] = '-';
  // Two's-complement negation in unsigned arithmetic covers INT64_MIN.
  const std::uint64_t magnitude = ~static_cast<std::uint64_t>(v) + 1;
  return 1 + to_chars_hetero(magnitude, out.subspan(1));
}

}  // namespace ifma_itoa
