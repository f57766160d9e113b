#include "qbridge/sim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qbridge::sim::kernels {
namespace {

enum class Backend { Auto, Scalar, Avx2 };

std::atomic<Backend> g_backend{Backend::Auto};

Backend parse_backend(std::string_view name) {
    if (name == "auto") {
        return Backend::Auto;
    }
    if (name == "scalar") {
        return Backend::Scalar;
    }
    if (name == "avx2") {
        return Backend::Avx2;
    }
    throw std::invalid_argument("unknown SIMD backend: " + std::string(name));
}

Backend env_backend() {
    if (const char* env = std::getenv("QBRIDGE_SIMD")) {
        return parse_backend(env);
    }
    return Backend::Auto;
}

} // namespace

bool avx2_supported() {
#if defined(QBRIDGE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void select_backend(std::string_view name) {
    const Backend b = parse_backend(name);
    if (b == Backend::Avx2 && !avx2_supported()) {
        throw std::invalid_argument("AVX2 backend requested but not available");
    }
    g_backend.store(b, std::memory_order_relaxed);
}

const KernelSet& active_kernels() {
    Backend b = g_backend.load(std::memory_order_relaxed);
    if (b == Backend::Auto) {
        static const Backend from_env = env_backend();
        b = from_env;
    }
#if defined(QBRIDGE_HAVE_AVX2)
    if (b != Backend::Scalar && avx2_supported()) {
        return avx2_kernels();
    }
#endif
    return scalar_kernels();
}

} // namespace qbridge::sim::kernels
