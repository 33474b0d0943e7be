#include "parastab/simd/fp_kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace parastab::simd {

namespace {

struct Kernels {
    Backend backend;
    AxpyFn axpy;
    ScaleFn scale;
};

constexpr Kernels kScalar{Backend::scalar, &scalar::axpy_mod, &scalar::scale_mod};
constexpr Kernels kAvx2{Backend::avx2, &avx2::axpy_mod, &avx2::scale_mod};

bool detect_avx2() noexcept {
#if defined(__x86_64__) && PARASTAB_HAVE_AVX2_TU
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<const Kernels*>& current() {
    static std::atomic<const Kernels*> kernels{detect_avx2() ? &kAvx2 : &kScalar};
    return kernels;
}

}  // namespace

bool avx2_available() noexcept {
    static const bool available = detect_avx2();
    return available;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed)->backend; }

void set_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_available()) {
        throw std::invalid_argument("AVX2 backend requested but not supported by this CPU");
    }
    current().store(backend == Backend::avx2 ? &kAvx2 : &kScalar, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, std::uint16_t c,
              std::uint16_t p) {
    current().load(std::memory_order_relaxed)->axpy(dst, src, c, p);
}

void scale_mod(std::span<std::uint16_t> row, std::uint16_t c, std::uint16_t p) {
    current().load(std::memory_order_relaxed)->scale(row, c, p);
}

}  // namespace parastab::simd
