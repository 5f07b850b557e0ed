#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "fflab/simd/kernels.hpp"

namespace fflab::simd {

namespace {

cd cdot_s(const cd* a, const cd* b, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cd cdot_conj_s(const cd* a, const cd* b, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
    }
    return {re, im};
}

void caxpy_s(cd c, const cd* x, cd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = {y[i].real() + c.real() * x[i].real() - c.imag() * x[i].imag(),
                y[i].imag() + c.real() * x[i].imag() + c.imag() * x[i].real()};
}

void cmul_s(const cd* a, const cd* b, cd* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = {a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
                  a[i].real() * b[i].imag() + a[i].imag() * b[i].real()};
}

double sum_abs2_s(const cd* a, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

double max_abs_s(const cd* a, std::size_t n) {
    double m = 0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    return std::sqrt(m);
}

const Kernels kScalar{"scalar", cdot_s, cdot_conj_s, caxpy_s, cmul_s, sum_abs2_s, max_abs_s};

const Kernels& pick() {
    const char* env = std::getenv("FFLAB_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return kScalar;
    if (const Kernels* k = avx2_kernels()) return *k;
    return kScalar;
}

} // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active() {
    static const Kernels& k = pick();
    return k;
}

#ifndef FFLAB_HAVE_AVX2_TU
const Kernels* avx2_kernels() { return nullptr; }
#endif

} // namespace fflab::simd
