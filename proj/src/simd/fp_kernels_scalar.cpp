#include "parastab/simd/fp_kernels.hpp"

namespace parastab::simd::scalar {

void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p) {
    const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
    for (std::size_t k = 0; k < n; ++k) {
        dst[k] = static_cast<std::uint16_t>((dst[k] + static_cast<unsigned>(c) * src[k]) % p);
    }
}

void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p) {
    for (auto& v : row) v = static_cast<std::uint16_t>((static_cast<unsigned>(c) * v) % p);
}

}  // namespace parastab::simd::scalar
