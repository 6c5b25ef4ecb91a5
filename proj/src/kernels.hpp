// Backend function table. Each backend compiles its own copy of the
// conversion routines so the per-element work inlines into the batch loops.

#pragma once

#include <cstddef>
#include <cstdint>

#include "ifma_itoa/convert.hpp"

namespace ifma_itoa::detail {

struct KernelSet {
  void (*madd52lo)(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                   std::uint64_t* out);
  void (*madd52hi)(const std::uint64_t* acc, const std::uint64_t* a, const std::uint64_t* b,
                   std::uint64_t* out);
  void (*ascii8)(std::uint64_t n, std::uint64_t* lanes);
  void (*ascii16)(std::uint64_t n, char* out16);
  void (*emit_suffix)(char* dst, const char* block16, unsigned n);

  std::size_t (*hetero)(std::uint64_t v, char* out);
  std::size_t (*homog[4])(std::uint64_t v, char* out);

  // Caller guarantees 20 * (count - 1) + 32 bytes at out.
  std::size_t (*batch_hetero)(const std::uint64_t* data, std::size_t count, char* out,
                              std::uint8_t* lengths);
  // Elements outside cls go through the heterogeneous routine.
  std::size_t (*batch_homog)(const std::uint64_t* data, std::size_t count, LengthClass cls,
                             char* out, std::uint8_t* lengths);
  // Homogeneous arms chosen per element by a digit-count dispatcher.
  std::size_t (*batch_homog_dispatch)(const std::uint64_t* data, std::size_t count, char* out,
                                      std::uint8_t* lengths);
};

const KernelSet& portable_kernels() noexcept;

/// nullptr when the hardware kernels were not compiled in.
const KernelSet* ifma_kernels() noexcept;

/// Throws std::invalid_argument if the hardware backend is requested but unavailable.
const KernelSet& kernels_for(Backend backend);

inline std::size_t homog_index(LengthClass c) { return static_cast<std::size_t>(c); }

}  // namespace ifma_itoa::detail
