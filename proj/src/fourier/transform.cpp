#include "fflab/fourier/transform.hpp"

#include <cmath>
#include <string>

#include "fflab/ff/parallel.hpp"
#include "fflab/simd/kernels.hpp"

namespace fflab {

void dft_inplace(std::vector<cd>& data, int p, int d, int sign) {
    CharacterTable chi(p);
    // rows[j][k] = e(sign * j * k)
    std::vector<cd> rows(size_t(p) * p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) rows[size_t(j) * p + k] = chi.at((long long)sign * j * k);

    std::vector<cd> out(data.size());
    std::uint64_t stride = 1;
    for (int axis = 0; axis < d; ++axis) {
        std::uint64_t block = stride * p;
        std::uint64_t outer = data.size() / block;
        const cd* in = data.data();
        cd* dst = out.data();
        parallel_for(outer, [&](std::uint64_t o) {
            std::uint64_t base = o * block;
            if (stride == 1) {
                for (int j = 0; j < p; ++j)
                    dst[base + j] = simd::cdot(in + base, rows.data() + size_t(j) * p, p);
            } else {
                for (int j = 0; j < p; ++j) {
                    cd* y = dst + base + j * stride;
                    for (std::uint64_t i = 0; i < stride; ++i) y[i] = 0;
                    for (int k = 0; k < p; ++k)
                        simd::caxpy(rows[size_t(j) * p + k], in + base + k * stride, y, stride);
                }
            }
        });
        data.swap(out);
        stride = block;
    }
}

FFunction fourier_transform(const FFunction& f) {
    FFunction g = f;
    dft_inplace(g.data(), f.p(), f.dim(), -1);
    return g;
}

FFunction inverse_transform(const FFunction& g) {
    FFunction f = g;
    dft_inplace(f.data(), g.p(), g.dim(), +1);
    double s = 1.0 / double(f.size());
    for (auto& v : f.data()) v *= s;
    return f;
}

static FFunction naive(const FFunction& f, int sign, double scale) {
    const auto& F = f.field();
    int p = F.p(), d = f.dim();
    CharacterTable chi(p);
    FFunction out(F, d);
    std::uint64_t n = f.size();
    parallel_for(n, [&](std::uint64_t xi_idx) {
        FFVector xi = decode(xi_idx, p, d), x(d);
        cd s = 0;
        for (std::uint64_t x_idx = 0; x_idx < n; ++x_idx) {
            decode_into(x_idx, p, x);
            s += f[x_idx] * chi.at((long long)sign * F.dot(x, xi));
        }
        out[xi_idx] = s * scale;
    });
    return out;
}

FFunction fourier_transform_naive(const FFunction& f) { return naive(f, -1, 1.0); }

FFunction inverse_transform_naive(const FFunction& g) { return naive(g, +1, 1.0 / double(g.size())); }

double mixed_norm(const FFunction& F, const MixedNormSpec& spec, Measure m) {
    const auto& V = spec.V;
    const auto& W = spec.W;
    if (!complementary(V, W)) throw NonComplementary("V + W does not decompose the parameter space");
    int base_dim = V.ambient();
    if (F.dim() != base_dim + (spec.include_t ? 1 : 0))
        throw ConfigError("mixed_norm: function dimension " + std::to_string(F.dim()) +
                          " does not match the decomposition");
    int p = F.p();
    auto vs = V.elements();
    auto ws = W.elements();
    int tcount = spec.include_t ? p : 1;
    double q = spec.outer_exp, r = spec.inner_exp;
    double inner_w = m == Measure::normalized ? 1.0 / double(ws.size()) : 1.0;
    double outer_w = m == Measure::normalized ? 1.0 / double(vs.size() * tcount) : 1.0;
    double outer = 0.0;
    FFVector x(F.dim());
    for (int t = 0; t < tcount; ++t)
        for (const auto& v : vs) {
            double inner = 0.0;
            for (const auto& w : ws) {
                for (int i = 0; i < base_dim; ++i) x[i] = F.field().add(v[i], w[i]);
                if (spec.include_t) x[base_dim] = t;
                double a = std::abs(F.at(x));
                inner = std::isinf(r) ? std::max(inner, a) : inner + std::pow(a, r);
            }
            double in_norm = std::isinf(r) ? inner : std::pow(inner_w * inner, 1.0 / r);
            outer = std::isinf(q) ? std::max(outer, in_norm) : outer + std::pow(in_norm, q);
        }
    return std::isinf(q) ? outer : std::pow(outer_w * outer, 1.0 / q);
}

} // namespace fflab
