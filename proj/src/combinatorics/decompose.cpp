#include "fflab/combinatorics/decompose.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace fflab {

namespace {

struct Best {
    int count = 0;
    int sub = -1;
    FFVector rep;
};

Best best_coset(const std::vector<FFVector>& pts, const std::vector<Subspace>& linear) {
    Best b;
    for (size_t i = 0; i < linear.size(); ++i) {
        std::map<FFVector, int> buckets;
        for (const auto& x : pts) ++buckets[linear[i].reduce(x)];
        for (const auto& [rep, c] : buckets)
            if (c > b.count) b = {c, int(i), rep};
    }
    return b;
}

}  // namespace

int max_coset_count(const PointSet& E, const std::vector<Subspace>& linear) {
    return best_coset(E.points(), linear).count;
}

Decomposition greedy_decompose(const PointSet& E, int c, double rho, bool isotropic_only,
                               const std::optional<QuadraticSpace>& Q) {
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho must lie in (0, 1)");
    const auto& F = E.field();
    int m = E.dim();
    std::vector<Subspace> linear;
    if (isotropic_only) {
        if (!Q) throw ConfigError("isotropic decomposition needs a quadratic form");
        linear = Q->max_isotropic();
    } else {
        if (c <= 0 || c >= m) throw ConfigError("subspace dimension must satisfy 0 < c < ambient");
        linear = enumerate_subspaces(F, m, c);
    }
    double threshold = std::pow(double(E.size()), rho);
    Decomposition out{{}, {}, PointSet(F, m)};
    std::vector<FFVector> rest = E.points();
    while (!rest.empty() && !linear.empty()) {
        Best b = best_coset(rest, linear);
        if (b.count == 0 || double(b.count) < threshold) break;
        const Subspace& V = linear[b.sub];
        std::vector<FFVector> piece, keep;
        for (auto& x : rest) (V.reduce(x) == b.rep ? piece : keep).push_back(std::move(x));
        out.pieces.emplace_back(F, m, std::move(piece));
        out.containers.push_back(V.shifted(b.rep));
        rest = std::move(keep);
    }
    out.uniform = PointSet(F, m, std::move(rest));
    return out;
}

bool VHPlane::contains(const PrimeField& F, const FFVector& x) const {
    int rhs = F.add(F.mul(a, x[2]), b);
    return (type == 1 ? x[1] : x[0]) == rhs;
}

std::vector<VHPlane> all_vh_planes(const PrimeField& F) {
    std::vector<VHPlane> out;
    for (int type = 1; type <= 2; ++type)
        for (int a = 0; a < F.p(); ++a)
            for (int b = 0; b < F.p(); ++b) out.push_back({type, a, b});
    return out;
}

PlanarCover planar_entropy_cover(const PointSet& E, int budget) {
    if (E.dim() != 3) throw ConfigError("VH planes live in F_p^3");
    const auto& F = E.field();
    auto planes = all_vh_planes(F);
    std::vector<FFVector> rest = E.points();
    PlanarCover out{{}, PointSet(F, 3)};
    for (int k = 0; k < budget && !rest.empty(); ++k) {
        int best = -1, cnt = 0;
        for (size_t i = 0; i < planes.size(); ++i) {
            int c = 0;
            for (const auto& x : rest) c += planes[i].contains(F, x);
            if (c > cnt) {
                cnt = c;
                best = int(i);
            }
        }
        if (best < 0) break;
        std::vector<FFVector> keep;
        for (auto& x : rest)
            if (!planes[best].contains(F, x)) keep.push_back(std::move(x));
        rest = std::move(keep);
        out.planes.push_back(planes[best]);
    }
    out.residual = PointSet(F, 3, std::move(rest));
    return out;
}

PlanarCover greedy_full_cover(const PointSet& E) {
    return planar_entropy_cover(E, int(E.size()));
}

int min_vh_cover(const PointSet& E) {
    if (E.size() > 30) throw SizeOverflow("exact planar cover is limited to 30 points");
    const auto& F = E.field();
    auto planes = all_vh_planes(F);
    int n = int(E.size());
    std::vector<std::uint32_t> masks;
    for (const auto& P : planes) {
        std::uint32_t mk = 0;
        for (int i = 0; i < n; ++i)
            if (P.contains(F, E[i])) mk |= 1u << i;
        if (mk) masks.push_back(mk);
    }
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    int best = n;
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t covered, int used) {
        if (covered == full) {
            best = std::min(best, used);
            return;
        }
        if (used + 1 >= best) return;
        int first = 0;
        while (covered >> first & 1u) ++first;
        for (auto mk : masks)
            if (mk >> first & 1u) rec(covered | mk, used + 1);
    };
    rec(0, 0);
    return best;
}

double planar_entropy_greedy(const PointSet& E) {
    if (E.empty()) return 0.0;
    auto c = greedy_full_cover(E);
    return std::log(double(c.planes.size())) / std::log(double(E.field().p()));
}

} // namespace fflab
