#include "qbridge/sim/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

// Reference kernels. Plain index arithmetic, no vector intrinsics; the AVX2
// variants are equivalence-tested against these.

namespace qbridge::sim::kernels {
namespace {

void apply_1q_scalar(cdouble* amps, std::size_t dim, int target, const Matrix2& u) {
    const std::size_t tm = std::size_t(1) << target;
    for (std::size_t base = 0; base < dim; base += 2 * tm) {
        for (std::size_t k = 0; k < tm; ++k) {
            const std::size_t i0 = base + k;
            const std::size_t i1 = i0 + tm;
            const cdouble v0 = amps[i0];
            const cdouble v1 = amps[i1];
            amps[i0] = u[0] * v0 + u[1] * v1;
            amps[i1] = u[2] * v0 + u[3] * v1;
        }
    }
}

void apply_diag_1q_scalar(cdouble* amps, std::size_t dim, int target, cdouble p0, cdouble p1) {
    const std::size_t tm = std::size_t(1) << target;
    for (std::size_t base = 0; base < dim; base += 2 * tm) {
        for (std::size_t k = 0; k < tm; ++k) {
            amps[base + k] *= p0;
            amps[base + k + tm] *= p1;
        }
    }
}

void apply_cx_scalar(cdouble* amps, std::size_t dim, int control, int target) {
    const std::size_t cm = std::size_t(1) << control;
    const std::size_t tm = std::size_t(1) << target;
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    for (std::size_t k = 0; k < dim / 4; ++k) {
        const std::size_t i0 = expand_two_zero_bits(k, lo, hi) | cm;
        std::swap(amps[i0], amps[i0 | tm]);
    }
}

void apply_controlled_1q_scalar(cdouble* amps, std::size_t dim, int control, int target,
                                const Matrix2& u) {
    const std::size_t cm = std::size_t(1) << control;
    const std::size_t tm = std::size_t(1) << target;
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    for (std::size_t k = 0; k < dim / 4; ++k) {
        const std::size_t i0 = expand_two_zero_bits(k, lo, hi) | cm;
        const std::size_t i1 = i0 | tm;
        const cdouble v0 = amps[i0];
        const cdouble v1 = amps[i1];
        amps[i0] = u[0] * v0 + u[1] * v1;
        amps[i1] = u[2] * v0 + u[3] * v1;
    }
}

void apply_zz_phase_scalar(cdouble* amps, std::size_t dim, int a, int b, double theta) {
    const cdouble agree(std::cos(theta), std::sin(theta));
    const cdouble differ = std::conj(agree);
    for (std::size_t k = 0; k < dim; ++k) {
        const bool parity = (((k >> a) ^ (k >> b)) & 1U) != 0;
        amps[k] *= parity ? differ : agree;
    }
}

} // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{
        apply_1q_scalar,     apply_diag_1q_scalar,    apply_cx_scalar,
        apply_controlled_1q_scalar, apply_zz_phase_scalar, "scalar",
    };
    return set;
}

} // namespace qbridge::sim::kernels
