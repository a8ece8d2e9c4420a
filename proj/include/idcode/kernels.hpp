#pragma once

// Data-parallel inner loops used by ball construction and code
// verification. Every kernel has a portable scalar reference; an AVX2
// variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. Both must produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace idcode::kernels {

struct KernelTable {
  std::string_view name;

  // out bit i := values[i] <= limit, for i < count. Words past count/64 are
  // untouched; trailing bits of the last word are cleared. values must be
  // readable up to count rounded up to 32.
  void (*threshold_bits)(const std::uint16_t* values, std::size_t count, std::uint16_t limit,
                         std::uint64_t* out);

  // out[w] := a[w] & b[w].
  void (*and_words)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                    std::size_t words);

  // masks[i] |= bit wherever ids[i] != value.
  void (*mark_differences)(const std::uint32_t* ids, std::size_t count, std::uint32_t value,
                           std::uint64_t bit, std::uint64_t* masks);

  // True iff a[w] & b[w] is nonzero for some w.
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const KernelTable& scalar();
// Null when the build or the host lacks AVX2.
const KernelTable* avx2();

// Kernel set in use. Defaults to the widest supported variant; setting the
// environment variable IDCODE_ISA=scalar forces the reference kernels.
const KernelTable& active();
void force_scalar(bool enable);

}  // namespace idcode::kernels
