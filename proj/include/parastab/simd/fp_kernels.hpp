#pragma once

// Row kernels for arithmetic modulo a small prime. Elements are stored as
// uint16_t in [0, p) with p <= 31, so a + c*b never leaves 16 bits.
//
// The scalar namespace is the reference; the avx2 namespace must produce
// bit-identical rows. The unqualified entry points dispatch to the fastest
// backend the CPU supports.

#include <cstdint>
#include <span>

namespace parastab::simd {

enum class Backend { scalar, avx2 };

/// dst[k] = (dst[k] + c * src[k]) mod p
using AxpyFn = void (*)(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src,
                        std::uint16_t c, std::uint16_t p);
/// row[k] = (c * row[k]) mod p
using ScaleFn = void (*)(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p);

namespace scalar {
void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p);
void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p);
void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p);
}  // namespace avx2

bool avx2_available() noexcept;

Backend active_backend() noexcept;

/// Forces a backend (tests, benchmarking). Throws std::invalid_argument if the
/// CPU lacks it.
void set_backend(Backend backend);

void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p);
void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p);

}  // namespace parastab::simd
