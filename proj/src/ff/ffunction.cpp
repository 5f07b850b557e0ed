#include "fflab/ff/ffunction.hpp"

#include <cmath>
#include <string>

#include "fflab/simd/kernels.hpp"

namespace fflab {

FFunction::FFunction(const PrimeField& F, int d) : F_(F), d_(d) {
    data_.assign(checked_size(F.p(), d), cd(0.0, 0.0));
}

FFunction::FFunction(const PrimeField& F, int d, std::vector<cd> data)
    : F_(F), d_(d), data_(std::move(data)) {
    if (data_.size() != checked_size(F.p(), d))
        throw ConfigError("FFunction data length " + std::to_string(data_.size()) +
                          " does not match p^d");
}

FFunction FFunction::delta(const PrimeField& F, int d, const FFVector& x) {
    FFunction f(F, d);
    f.at(x) = 1.0;
    return f;
}

FFunction FFunction::constant(const PrimeField& F, int d, cd value) {
    FFunction f(F, d);
    for (auto& v : f.data_) v = value;
    return f;
}

double lp_norm(const std::vector<cd>& v, double p_exp, double weight) {
    if (p_exp < 1.0) throw ConfigError("lp_norm exponent must be >= 1");
    if (std::isinf(p_exp)) return simd::max_abs(v.data(), v.size());
    if (p_exp == 2.0) return std::sqrt(weight * simd::sum_abs2(v.data(), v.size()));
    double s = 0.0;
    for (const auto& z : v) s += std::pow(std::abs(z), p_exp);
    return std::pow(weight * s, 1.0 / p_exp);
}

double lp_norm(const FFunction& f, double p_exp, Measure m) {
    double w = m == Measure::counting ? 1.0 : 1.0 / double(f.size());
    return lp_norm(f.data(), p_exp, w);
}

cd inner(const FFunction& f, const FFunction& g, Measure m) {
    cd s = simd::cdot_conj(f.data().data(), g.data().data(), f.size());
    return m == Measure::counting ? s : s / double(f.size());
}

double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace fflab
