#include "parastab/simd/fp_kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace parastab::simd::avx2 {

namespace {

// Barrett reduction of 16 lanes holding x < 2^16 / 2 modulo p. With
// m = floor(2^16 / p) the quotient estimate is short by at most one, so a
// single conditional subtraction (expressed as an unsigned min) finishes.
struct ModP {
    __m256i p;
    __m256i m;

    explicit ModP(std::uint16_t prime)
        : p(_mm256_set1_epi16(static_cast<short>(prime))),
          m(_mm256_set1_epi16(static_cast<short>(65536u / prime))) {}

    __m256i reduce(__m256i x) const {
        const __m256i q = _mm256_mulhi_epu16(x, m);
        const __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, p));
        return _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
    }
};

}  // namespace

void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p) {
    const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
    const ModP mod(p);
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t k = 0;
    for (; k + 16 <= n; k += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
        const __m256i x = _mm256_add_epi16(a, _mm256_mullo_epi16(b, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), mod.reduce(x));
    }
    if (k < n) {
        alignas(32) std::uint16_t a[16] = {};
        alignas(32) std::uint16_t b[16] = {};
        const std::size_t tail = n - k;
        for (std::size_t t = 0; t < tail; ++t) {
            a[t] = dst[k + t];
            b[t] = src[k + t];
        }
        const __m256i x = _mm256_add_epi16(_mm256_load_si256(reinterpret_cast<const __m256i*>(a)),
                                           _mm256_mullo_epi16(_mm256_load_si256(reinterpret_cast<const __m256i*>(b)), vc));
        _mm256_store_si256(reinterpret_cast<__m256i*>(a), mod.reduce(x));
        for (std::size_t t = 0; t < tail; ++t) dst[k + t] = a[t];
    }
}

void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p) {
    const ModP mod(p);
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t k = 0;
    const std::size_t n = row.size();
    for (; k + 16 <= n; k += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + k),
                            mod.reduce(_mm256_mullo_epi16(a, vc)));
    }
    if (k < n) {
        alignas(32) std::uint16_t a[16] = {};
        const std::size_t tail = n - k;
        for (std::size_t t = 0; t < tail; ++t) a[t] = row[k + t];
        const __m256i x = _mm256_mullo_epi16(_mm256_load_si256(reinterpret_cast<const __m256i*>(a)), vc);
        _mm256_store_si256(reinterpret_cast<__m256i*>(a), mod.reduce(x));
        for (std::size_t t = 0; t < tail; ++t) row[k + t] = a[t];
    }
}

}  // namespace parastab::simd::avx2

#else

#include <stdexcept>

namespace parastab::simd::avx2 {

void axpy_mod(std::span<std::uint16_t>, std::span<const std::uint16_t>, std::uint16_t, std::uint16_t) {
    throw std::logic_error("AVX2 kernels not compiled for this target");
}

void scale_mod(std::span<std::uint16_t>, std::uint16_t, std::uint16_t) {
    throw std::logic_error("AVX2 kernels not compiled for this target");
}

}  // namespace parastab::simd::avx2

#endif
