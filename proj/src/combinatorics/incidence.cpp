#include "fflab/combinatorics/incidence.hpp"

#include <cmath>

#include "fflab/combinatorics/energy.hpp"

namespace fflab {

bool Hyperplane::contains(const PrimeField& F, const FFVector& y) const { return F.dot(normal, y) == offset; }

Hyperplane make_hyperplane(const PrimeField& F, FFVector normal, int offset) {
    offset = F.reduce(offset);
    for (int v : normal)
        if (v != 0) {
            int s = F.inv(v);
            normal = F.vscale(s, normal);
            offset = F.mul(s, offset);
            break;
        }
    return {std::move(normal), offset};
}

std::uint64_t HyperplaneFamily::total() const {
    std::uint64_t t = 0;
    for (const auto& [h, m] : items) t += m;
    return t;
}

int HyperplaneFamily::max_multiplicity() const {
    int c = 0;
    for (const auto& [h, m] : items) c = std::max(c, m);
    return c;
}

Hyperplane surface_hyperplane(const QuadraticSpace& Q, const FFVector& x) {
    return make_hyperplane(Q.field(), matvec(Q.field(), Q.matrix(), x), Q.Q(x));
}

std::uint64_t incidence_count(const PointSet& P, const HyperplaneFamily& L) {
    std::uint64_t n = 0;
    for (const auto& [h, m] : L.items)
        for (const auto& x : P.points())
            if (h.contains(P.field(), x)) n += m;
    return n;
}

DoubleCount doublecount(const PointSet& P, const HyperplaneFamily& L) {
    const auto& F = P.field();
    std::vector<const Hyperplane*> D;
    for (const auto& [h, m] : L.items) D.push_back(&h);
    // For each point, the distinct hyperplanes through it.
    std::map<std::pair<size_t, size_t>, int> pair_count;
    for (const auto& x : P.points()) {
        std::vector<size_t> through;
        for (size_t i = 0; i < D.size(); ++i)
            if (D[i]->contains(F, x)) through.push_back(i);
        for (size_t a = 0; a < through.size(); ++a)
            for (size_t b = a + 1; b < through.size(); ++b) ++pair_count[{through[a], through[b]}];
    }
    int C1 = 0;
    for (const auto& [k, v] : pair_count) C1 = std::max(C1, v);
    int C2 = L.max_multiplicity();
    std::uint64_t I = incidence_count(P, L);
    double bound = std::sqrt(double(C1)) * std::sqrt(double(P.size())) * double(L.total()) + double(C2) * P.size();
    return {I, C1, C2, bound};
}

EnergyIncidence energy_to_incidence(const Surface& S, const std::vector<FFVector>& A,
                                    const std::vector<FFVector>& B) {
    const auto& F = S.field();
    int m = S.param_dim();
    PointSet As = lift_to_surface(S, A), Bs = lift_to_surface(S, B);
    EnergyIncidence r{FFVector(m, 0), {}, {}, {}, PointSet(F, m), 0, 0, 0.0};
    r.energy = additive_energy(As, Bs, EnergyMethod::sum_count);
    if (As.empty() || Bs.empty()) return r;
    // b maximizing #{(a, d) : a - d + b in A}
    std::uint64_t best = 0;
    FFVector bstar = Bs[0];
    for (const auto& b : Bs.points()) {
        std::uint64_t c = 0;
        for (const auto& a : As.points())
            for (const auto& d : Bs.points()) c += As.contains(F.vadd(F.vsub(a, d), b));
        if (c > best) {
            best = c;
            bstar = b;
        }
    }
    r.b = FFVector(bstar.begin(), bstar.end() - 1);
    FFVector t = F.vscale(F.neg(1), r.b);
    r.A_shift = galilean(S.form(), t, As.points().empty() ? A : surface_params(S, As));
    r.B_shift = galilean(S.form(), t, surface_params(S, Bs));
    for (const auto& d : r.B_shift) r.L.add(surface_hyperplane(S.form(), d));
    r.P = PointSet(F, m, r.A_shift);
    r.incidences = incidence_count(r.P, r.L);
    double den = double(r.L.total()) * double(r.incidences);
    r.ratio = den > 0 ? double(r.energy) / den : 0.0;
    return r;
}

std::vector<Hyperplane> all_lines_f2(const PrimeField& F) {
    std::vector<Hyperplane> out;
    int p = F.p();
    for (int c = 0; c < p; ++c) {
        out.push_back(make_hyperplane(F, {0, 1}, c));
        for (int s = 0; s < p; ++s) out.push_back(make_hyperplane(F, {1, s}, c));
    }
    return out;
}

} // namespace fflab
