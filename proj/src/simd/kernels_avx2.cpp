// Built with -mavx2 -mfma; only reached after the cpuid check below.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "fflab/simd/kernels.hpp"

namespace fflab::simd {

namespace {

inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// [ar ai br bi] * [cr ci dr di] as two complex products
inline __m256d mul2(__m256d a, __m256d b) {
    __m256d bre = _mm256_movedup_pd(b);
    __m256d bim = _mm256_permute_pd(b, 0xF);
    __m256d asw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(asw, bim));
}

inline __m256d mul2_conj(__m256d a, __m256d b) {
    __m256d bre = _mm256_movedup_pd(b);
    __m256d bim = _mm256_permute_pd(b, 0xF);
    __m256d asw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmsubadd_pd(a, bre, _mm256_mul_pd(asw, bim));
}

inline cd hsum_complex(__m256d v) {
    alignas(32) double t[4];
    _mm256_store_pd(t, v);
    return {t[0] + t[2], t[1] + t[3]};
}

cd cdot_a(const cd* a, const cd* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, mul2(load2(a + i), load2(b + i)));
        acc1 = _mm256_add_pd(acc1, mul2(load2(a + i + 2), load2(b + i + 2)));
    }
    for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, mul2(load2(a + i), load2(b + i)));
    cd s = hsum_complex(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

cd cdot_conj_a(const cd* a, const cd* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, mul2_conj(load2(a + i), load2(b + i)));
        acc1 = _mm256_add_pd(acc1, mul2_conj(load2(a + i + 2), load2(b + i + 2)));
    }
    for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, mul2_conj(load2(a + i), load2(b + i)));
    cd s = hsum_complex(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * std::conj(b[i]);
    return s;
}

void caxpy_a(cd c, const cd* x, cd* y, std::size_t n) {
    __m256d cv = _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), mul2(load2(x + i), cv)));
    for (; i < n; ++i) y[i] += c * x[i];
}

void cmul_a(const cd* a, const cd* b, cd* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(out + i, mul2(load2(a + i), load2(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

double sum_abs2_a(const cd* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = load2(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, acc);
    double s = (t[0] + t[2]) + (t[1] + t[3]);
    for (; i < n; ++i) s += std::norm(a[i]);
    return s;
}

double max_abs_a(const cd* a, std::size_t n) {
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = load2(a + i);
        __m256d sq = _mm256_mul_pd(v, v);
        m = _mm256_max_pd(m, _mm256_hadd_pd(sq, sq));
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, m);
    double r = std::max(std::max(t[0], t[1]), std::max(t[2], t[3]));
    for (; i < n; ++i) r = std::max(r, std::norm(a[i]));
    return std::sqrt(r);
}

const Kernels kAvx2{"avx2", cdot_a, cdot_conj_a, caxpy_a, cmul_a, sum_abs2_a, max_abs_a};

} // namespace

const Kernels* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &kAvx2 : nullptr;
}

} // namespace fflab::simd
