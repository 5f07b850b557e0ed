#include "fflab/combinatorics/energy.hpp"

#include <cmath>
#include <unordered_map>

#include "fflab/fourier/transform.hpp"

namespace fflab {

namespace {

std::uint64_t energy_loop(const PointSet& A, const PointSet& B) {
    const auto& F = A.field();
    int d = A.dim();
    std::uint64_t count = 0;
    for (const auto& a : A.points())
        for (const auto& b : B.points())
            for (const auto& c : A.points())
                for (const auto& dd : B.points()) {
                    bool eq = true;
                    for (int k = 0; k < d && eq; ++k) eq = F.add(a[k], b[k]) == F.add(c[k], dd[k]);
                    count += eq;
                }
    return count;
}

std::uint64_t energy_sums(const PointSet& A, const PointSet& B) {
    const auto& F = A.field();
    int p = F.p();
    std::uint64_t N = checked_size(p, A.dim());
    std::vector<std::uint32_t> r;
    std::unordered_map<std::uint64_t, std::uint32_t> rm;
    bool dense = N <= (1u << 24);
    if (dense) r.assign(N, 0);
    for (const auto& a : A.points())
        for (const auto& b : B.points()) {
            std::uint64_t s = encode(F.vadd(a, b), p);
            if (dense) ++r[s];
            else ++rm[s];
        }
    std::uint64_t total = 0;
    if (dense)
        for (auto v : r) total += std::uint64_t(v) * v;
    else
        for (auto& [k, v] : rm) total += std::uint64_t(v) * v;
    return total;
}

std::uint64_t energy_fourier(const PointSet& A, const PointSet& B) {
    FFunction a = fourier_transform(A.indicator());
    FFunction b = fourier_transform(B.indicator());
    double s = 0;
    for (std::uint64_t i = 0; i < a.size(); ++i) s += std::norm(a[i]) * std::norm(b[i]);
    return std::uint64_t(std::llround(s / double(a.size())));
}

}  // namespace

std::uint64_t additive_energy(const PointSet& A, const PointSet& B, EnergyMethod m) {
    if (A.dim() != B.dim() || !(A.field() == B.field())) throw ConfigError("energy: sets live in different spaces");
    switch (m) {
    case EnergyMethod::quadruple_loop: return energy_loop(A, B);
    case EnergyMethod::sum_count: return energy_sums(A, B);
    case EnergyMethod::fourier: return energy_fourier(A, B);
    }
    return 0;
}

static void require_h3(const PointSet& E) {
    if (E.dim() != 3) throw NotOnSurface("expected points of F_p^3");
    const auto& F = E.field();
    for (const auto& x : E.points())
        if (F.mul(x[0], x[1]) != x[2]) throw NotOnSurface("point is not on x3 = x1 x2");
}

std::uint64_t energy_star(const PointSet& E) {
    require_h3(E);
    const auto& F = E.field();
    auto bm = E.bitmap();
    int p = F.p();
    std::uint64_t count = 0;
    for (const auto& b : E.points())
        for (const auto& d : E.points()) {
            if (b[0] == d[0] || b[1] == d[1]) continue;
            for (const auto& a : E.points()) {
                // c = a - d + b
                FFVector c = F.vadd(F.vsub(a, d), b);
                count += bm[encode(c, p)];
            }
        }
    return count;
}

VHProfile vh_profile(const PointSet& E) {
    require_h3(E);
    int p = E.field().p();
    VHProfile v{std::vector<int>(p, 0), std::vector<int>(p, 0), 0};
    for (const auto& x : E.points()) {
        ++v.vertical[x[0]];
        ++v.horizontal[x[1]];
    }
    for (int j = 0; j < p; ++j) v.max_line = std::max({v.max_line, v.vertical[j], v.horizontal[j]});
    return v;
}

L52Result energy_bound_l52(const PointSet& E) {
    auto prof = vh_profile(E);
    std::uint64_t lam = additive_energy(E);
    double bound = std::pow(double(E.size()), 2.5);
    for (int v : prof.vertical) bound += std::pow(double(v), 3);
    for (int v : prof.horizontal) bound += std::pow(double(v), 3);
    return {lam, bound, bound > 0 ? double(lam) / bound : 0.0};
}

} // namespace fflab
