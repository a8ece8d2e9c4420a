#include "idcode/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace idcode::kernels {

namespace detail {
const KernelTable* avx2_table();
}

namespace {

void threshold_bits_scalar(const std::uint16_t* values, std::size_t count, std::uint16_t limit,
                           std::uint64_t* out) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = 0;
    const std::size_t base = w * 64;
    const std::size_t end = base + 64 < count ? base + 64 : count;
    for (std::size_t i = base; i < end; ++i) {
      bits |= std::uint64_t{values[i] <= limit} << (i - base);
    }
    out[w] = bits;
  }
}

void and_words_scalar(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                      std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

void mark_differences_scalar(const std::uint32_t* ids, std::size_t count, std::uint32_t value,
                             std::uint64_t bit, std::uint64_t* masks) {
  for (std::size_t i = 0; i < count; ++i) {
    if (ids[i] != value) masks[i] |= bit;
  }
}

bool intersects_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

constexpr KernelTable kScalar{"scalar", threshold_bits_scalar, and_words_scalar,
                              mark_differences_scalar, intersects_scalar};

std::atomic<bool> g_force_scalar{[] {
  const char* isa = std::getenv("IDCODE_ISA");
  return isa != nullptr && std::string_view(isa) == "scalar";
}()};

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
#if defined(IDCODE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
  const KernelTable* wide = avx2();
  return wide != nullptr ? *wide : kScalar;
}

void force_scalar(bool enable) { g_force_scalar.store(enable, std::memory_order_relaxed); }

}  // namespace idcode::kernels
