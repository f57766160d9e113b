#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>

namespace qbridge::sim::kernels {

using cdouble = std::complex<double>;
// Row-major 2x2 unitary: {u00, u01, u10, u11}.
using Matrix2 = std::array<cdouble, 4>;

// One set of amplitude-update kernels. `amps` always points at a 2^n array
// in the qubit-0-least-significant basis order; `dim` is its length.
//
// Two interchangeable implementations exist: a scalar reference and an AVX2
// variant compiled when the toolchain supports it. The active set is picked
// at runtime from CPU capabilities and can be forced for equivalence tests.
struct KernelSet {
    void (*apply_1q)(cdouble* amps, std::size_t dim, int target, const Matrix2& u);
    void (*apply_diag_1q)(cdouble* amps, std::size_t dim, int target, cdouble p0, cdouble p1);
    void (*apply_cx)(cdouble* amps, std::size_t dim, int control, int target);
    void (*apply_controlled_1q)(cdouble* amps, std::size_t dim, int control, int target,
                                const Matrix2& u);
    void (*apply_zz_phase)(cdouble* amps, std::size_t dim, int a, int b, double theta);
    const char* name;
};

const KernelSet& scalar_kernels();
#if defined(QBRIDGE_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif

bool avx2_supported(); // compiled in and available on this CPU

// Active set: AVX2 when supported, otherwise scalar. The QBRIDGE_SIMD
// environment variable ("scalar", "avx2", "auto") overrides the default,
// as does select_backend().
const KernelSet& active_kernels();
void select_backend(std::string_view name);

// Spreads the bits of `k` so positions `lo` and `hi` (lo < hi) are zero.
// Shared by kernel implementations and their tests.
inline std::size_t expand_two_zero_bits(std::size_t k, int lo, int hi) {
    const std::size_t lo_mask = (std::size_t(1) << lo) - 1;
    const std::size_t hi_mask = (std::size_t(1) << (hi - 1)) - 1;
    std::size_t x = ((k & ~hi_mask) << 1) | (k & hi_mask);
    return ((x & ~lo_mask) << 1) | (x & lo_mask);
}

} // namespace qbridge::sim::kernels
