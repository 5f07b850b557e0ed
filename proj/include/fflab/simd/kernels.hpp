#pragma once

#include <complex>
#include <cstddef>

namespace fflab::simd {

using cd = std::complex<double>;

// One table per ISA; the scalar table is the reference every variant is tested against.
struct Kernels {
    const char* isa;
    cd (*cdot)(const cd* a, const cd* b, std::size_t n);        // sum a_i b_i
    cd (*cdot_conj)(const cd* a, const cd* b, std::size_t n);   // sum a_i conj(b_i)
    void (*caxpy)(cd c, const cd* x, cd* y, std::size_t n);     // y += c x
    void (*cmul)(const cd* a, const cd* b, cd* out, std::size_t n);
    double (*sum_abs2)(const cd* a, std::size_t n);
    double (*max_abs)(const cd* a, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the binary or the CPU lacks AVX2+FMA.
const Kernels* avx2_kernels();
// Picked once: FFLAB_SIMD=scalar forces the reference path.
const Kernels& active();

inline cd cdot(const cd* a, const cd* b, std::size_t n) { return active().cdot(a, b, n); }
inline cd cdot_conj(const cd* a, const cd* b, std::size_t n) { return active().cdot_conj(a, b, n); }
inline void caxpy(cd c, const cd* x, cd* y, std::size_t n) { active().caxpy(c, x, y, n); }
inline void cmul(const cd* a, const cd* b, cd* out, std::size_t n) { active().cmul(a, b, out, n); }
inline double sum_abs2(const cd* a, std::size_t n) { return active().sum_abs2(a, n); }
inline double max_abs(const cd* a, std::size_t n) { return active().max_abs(a, n); }

} // namespace fflab::simd
