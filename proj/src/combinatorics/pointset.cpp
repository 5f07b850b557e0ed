#include "fflab/combinatorics/pointset.hpp"

#include <algorithm>

namespace fflab {

PointSet::PointSet(const PrimeField& F, int d, std::vector<FFVector> pts) : F_(F), d_(d), pts_(std::move(pts)) {
    for (const auto& x : pts_)
        if (int(x.size()) != d) throw ConfigError("point dimension does not match the ambient space");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const FFVector& x) const { return std::binary_search(pts_.begin(), pts_.end(), x); }

FFunction PointSet::indicator() const {
    FFunction f(F_, d_);
    for (const auto& x : pts_) f.at(x) = 1.0;
    return f;
}

std::vector<char> PointSet::bitmap() const {
    std::vector<char> b(checked_size(F_.p(), d_), 0);
    for (const auto& x : pts_) b[encode(x, F_.p())] = 1;
    return b;
}

PointSet lift_to_surface(const Surface& S, const std::vector<FFVector>& params) {
    std::vector<FFVector> pts;
    pts.reserve(params.size());
    for (const auto& xi : params) pts.push_back(S.point(encode(xi, S.p())));
    return PointSet(S.field(), S.dim(), std::move(pts));
}

std::vector<FFVector> surface_params(const Surface& S, const PointSet& E) {
    std::vector<FFVector> out;
    for (const auto& x : E.points()) {
        if (!S.contains(x)) throw NotOnSurface("point is not on the surface");
        out.emplace_back(x.begin(), x.end() - 1);
    }
    return out;
}

SurfaceFunction surface_function_on(const SurfacePtr& S, const PointSet& E, const std::vector<cd>& values) {
    SurfaceFunction f(S);
    auto params = surface_params(*S, E);
    for (size_t i = 0; i < params.size(); ++i) f[encode(params[i], S->p())] = values.empty() ? cd(1, 0) : values[i];
    return f;
}

} // namespace fflab
