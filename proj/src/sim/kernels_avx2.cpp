#include "qbridge/sim/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// AVX2 kernels. One __m256d carries two interleaved complex<double> values
// [re0, im0, re1, im1]; std::complex guarantees that layout. Each kernel
// splits on whether the acted-on qubit sits inside a vector (bit 0) or
// across vectors, mirroring the scalar pair enumeration otherwise.

namespace qbridge::sim::kernels {
namespace {

inline double* raw(cdouble* amps) { return reinterpret_cast<double*>(amps); }

// v * c for both complex lanes, c a single complex constant.
inline __m256d cmul_const(__m256d v, double c_re, double c_im) {
    const __m256d t_re = _mm256_mul_pd(v, _mm256_set1_pd(c_re));
    const __m256d v_swap = _mm256_permute_pd(v, 0x5);
    return _mm256_addsub_pd(t_re, _mm256_mul_pd(v_swap, _mm256_set1_pd(c_im)));
}

// v * c with an independent complex constant per lane. `c_re` and `c_im`
// hold each constant duplicated across its lane.
inline __m256d cmul_lanes(__m256d v, __m256d c_re, __m256d c_im) {
    const __m256d t_re = _mm256_mul_pd(v, c_re);
    const __m256d v_swap = _mm256_permute_pd(v, 0x5);
    return _mm256_addsub_pd(t_re, _mm256_mul_pd(v_swap, c_im));
}

inline __m256d lane_consts_re(cdouble lane0, cdouble lane1) {
    return _mm256_setr_pd(lane0.real(), lane0.real(), lane1.real(), lane1.real());
}

inline __m256d lane_consts_im(cdouble lane0, cdouble lane1) {
    return _mm256_setr_pd(lane0.imag(), lane0.imag(), lane1.imag(), lane1.imag());
}

void apply_1q_avx2(cdouble* amps, std::size_t dim, int target, const Matrix2& u) {
    double* p = raw(amps);
    if (target == 0) {
        const __m256d col0_re = lane_consts_re(u[0], u[2]);
        const __m256d col0_im = lane_consts_im(u[0], u[2]);
        const __m256d col1_re = lane_consts_re(u[1], u[3]);
        const __m256d col1_im = lane_consts_im(u[1], u[3]);
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            const __m256d v0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d v1 = _mm256_permute2f128_pd(v, v, 0x11);
            const __m256d w = _mm256_add_pd(cmul_lanes(v0, col0_re, col0_im),
                                            cmul_lanes(v1, col1_re, col1_im));
            _mm256_storeu_pd(p + 2 * i, w);
        }
        return;
    }
    const std::size_t tm = std::size_t(1) << target;
    for (std::size_t base = 0; base < dim; base += 2 * tm) {
        for (std::size_t k = 0; k < tm; k += 2) {
            const std::size_t i0 = base + k;
            const std::size_t i1 = i0 + tm;
            const __m256d v0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d v1 = _mm256_loadu_pd(p + 2 * i1);
            const __m256d w0 = _mm256_add_pd(cmul_const(v0, u[0].real(), u[0].imag()),
                                             cmul_const(v1, u[1].real(), u[1].imag()));
            const __m256d w1 = _mm256_add_pd(cmul_const(v0, u[2].real(), u[2].imag()),
                                             cmul_const(v1, u[3].real(), u[3].imag()));
            _mm256_storeu_pd(p + 2 * i0, w0);
            _mm256_storeu_pd(p + 2 * i1, w1);
        }
    }
}

void apply_diag_1q_avx2(cdouble* amps, std::size_t dim, int target, cdouble p0, cdouble p1) {
    double* p = raw(amps);
    if (target == 0) {
        const __m256d c_re = lane_consts_re(p0, p1);
        const __m256d c_im = lane_consts_im(p0, p1);
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            _mm256_storeu_pd(p + 2 * i, cmul_lanes(v, c_re, c_im));
        }
        return;
    }
    const std::size_t tm = std::size_t(1) << target;
    for (std::size_t base = 0; base < dim; base += 2 * tm) {
        for (std::size_t k = 0; k < tm; k += 2) {
            const std::size_t i0 = base + k;
            const std::size_t i1 = i0 + tm;
            const __m256d v0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d v1 = _mm256_loadu_pd(p + 2 * i1);
            _mm256_storeu_pd(p + 2 * i0, cmul_const(v0, p0.real(), p0.imag()));
            _mm256_storeu_pd(p + 2 * i1, cmul_const(v1, p1.real(), p1.imag()));
        }
    }
}

void apply_cx_avx2(cdouble* amps, std::size_t dim, int control, int target) {
    double* p = raw(amps);
    const std::size_t cm = std::size_t(1) << control;
    const std::size_t tm = std::size_t(1) << target;
    if (target == 0) {
        // Pair sits inside one vector: swap its complex halves where the
        // control bit is set.
        for (std::size_t outer = cm; outer < dim; outer += 2 * cm) {
            for (std::size_t inner = 0; inner < cm; inner += 2) {
                const std::size_t base = outer + inner;
                const __m256d v = _mm256_loadu_pd(p + 2 * base);
                _mm256_storeu_pd(p + 2 * base, _mm256_permute2f128_pd(v, v, 0x01));
            }
        }
        return;
    }
    if (control == 0) {
        // Control alternates inside the vector: exchange only the odd lane.
        for (std::size_t outer = 0; outer < dim; outer += 2 * tm) {
            for (std::size_t inner = 0; inner < tm; inner += 2) {
                const std::size_t b = outer + inner;
                const __m256d v0 = _mm256_loadu_pd(p + 2 * b);
                const __m256d v1 = _mm256_loadu_pd(p + 2 * (b + tm));
                _mm256_storeu_pd(p + 2 * b, _mm256_blend_pd(v0, v1, 0xC));
                _mm256_storeu_pd(p + 2 * (b + tm), _mm256_blend_pd(v1, v0, 0xC));
            }
        }
        return;
    }
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    for (std::size_t k = 0; k < dim / 4; k += 2) {
        const std::size_t i0 = expand_two_zero_bits(k, lo, hi) | cm;
        const std::size_t i1 = i0 | tm;
        const __m256d v0 = _mm256_loadu_pd(p + 2 * i0);
        const __m256d v1 = _mm256_loadu_pd(p + 2 * i1);
        _mm256_storeu_pd(p + 2 * i0, v1);
        _mm256_storeu_pd(p + 2 * i1, v0);
    }
}

void apply_zz_phase_avx2(cdouble* amps, std::size_t dim, int a, int b, double theta) {
    double* p = raw(amps);
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const cdouble agree(std::cos(theta), std::sin(theta));
    const cdouble differ = std::conj(agree);
    if (lo == 0) {
        // Parity alternates inside the vector; pick the lane pattern from
        // the high bit of the vector's base index.
        const __m256d even_re = lane_consts_re(agree, differ);
        const __m256d even_im = lane_consts_im(agree, differ);
        const __m256d odd_re = lane_consts_re(differ, agree);
        const __m256d odd_im = lane_consts_im(differ, agree);
        for (std::size_t i = 0; i < dim; i += 2) {
            const bool hi_set = ((i >> hi) & 1U) != 0;
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            const __m256d w = hi_set ? cmul_lanes(v, odd_re, odd_im)
                                     : cmul_lanes(v, even_re, even_im);
            _mm256_storeu_pd(p + 2 * i, w);
        }
        return;
    }
    for (std::size_t i = 0; i < dim; i += 2) {
        const bool parity = (((i >> a) ^ (i >> b)) & 1U) != 0;
        const cdouble c = parity ? differ : agree;
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul_const(v, c.real(), c.imag()));
    }
}

} // namespace

const KernelSet& avx2_kernels() {
    static const KernelSet set{
        apply_1q_avx2,
        apply_diag_1q_avx2,
        apply_cx_avx2,
        // Controlled single-qubit unitaries are off the hot path; the scalar
        // kernel serves both sets.
        scalar_kernels().apply_controlled_1q,
        apply_zz_phase_avx2,
        "avx2",
    };
    return set;
}

} // namespace qbridge::sim::kernels
