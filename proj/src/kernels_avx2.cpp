#include "idcode/kernels.hpp"

#if defined(IDCODE_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace idcode::kernels::detail {

#if defined(IDCODE_HAVE_AVX2)

namespace {

// 32 consecutive u16 values -> 32-bit mask of (value <= limit).
inline std::uint32_t le_mask32(const std::uint16_t* values, __m256i limit) {
  const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values));
  const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + 16));
  // Unsigned v <= limit  <=>  min(v, limit) == v.
  const __m256i lo_le = _mm256_cmpeq_epi16(_mm256_min_epu16(lo, limit), lo);
  const __m256i hi_le = _mm256_cmpeq_epi16(_mm256_min_epu16(hi, limit), hi);
  // packs works per 128-bit lane; restore element order afterwards.
  const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(lo_le, hi_le), 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

void threshold_bits_avx2(const std::uint16_t* values, std::size_t count, std::uint16_t limit,
                         std::uint64_t* out) {
  const __m256i lim = _mm256_set1_epi16(static_cast<short>(limit));
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint16_t* base = values + w * 64;
    std::uint64_t bits = le_mask32(base, lim);
    if (w * 64 + 32 < count) bits |= std::uint64_t{le_mask32(base + 32, lim)} << 32;
    const std::size_t valid = count - w * 64;
    if (valid < 64) bits &= (std::uint64_t{1} << valid) - 1;
    out[w] = bits;
  }
}

void and_words_avx2(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                    std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_and_si256(va, vb));
  }
  for (; w < words; ++w) out[w] = a[w] & b[w];
}

void mark_differences_avx2(const std::uint32_t* ids, std::size_t count, std::uint32_t value,
                           std::uint64_t bit, std::uint64_t* masks) {
  const __m128i needle = _mm_set1_epi32(static_cast<int>(value));
  const __m256i bits = _mm256_set1_epi64x(static_cast<long long>(bit));
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids + i));
    // Sign extension turns each all-ones 32-bit lane into an all-ones 64-bit lane.
    const __m256i equal = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(id, needle));
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    m = _mm256_or_si256(m, _mm256_andnot_si256(equal, bits));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(masks + i), m);
  }
  for (; i < count; ++i) {
    if (ids[i] != value) masks[i] |= bit;
  }
}

bool intersects_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

constexpr KernelTable kAvx2{"avx2", threshold_bits_avx2, and_words_avx2, mark_differences_avx2,
                            intersects_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace idcode::kernels::detail
