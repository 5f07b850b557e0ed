#include "fflab/qforms/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace fflab {

Subspace::Subspace(const PrimeField& F, int ambient, const std::vector<FFVector>& generators,
                   std::optional<FFVector> translate)
    : F_(F), m_(ambient) {
    Mat G = Mat::from_rows(generators, ambient);
    Mat R = rref(F, G, &pivots_);
    basis_ = Mat(int(pivots_.size()), ambient);
    for (int i = 0; i < basis_.rows; ++i)
        for (int j = 0; j < ambient; ++j) basis_(i, j) = R(i, j);
    if (translate) translate_ = reduce(*translate);
}

Subspace Subspace::full(const PrimeField& F, int m) {
    std::vector<FFVector> gens;
    for (int i = 0; i < m; ++i) {
        FFVector e(m, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return Subspace(F, m, gens);
}

std::vector<FFVector> Subspace::basis_vectors() const {
    std::vector<FFVector> v;
    for (int i = 0; i < basis_.rows; ++i) v.push_back(basis_.row(i));
    return v;
}

Subspace Subspace::linear_part() const { return Subspace(F_, m_, basis_vectors()); }

Subspace Subspace::shifted(const FFVector& t) const {
    FFVector base = translate_ ? F_.vadd(*translate_, t) : t;
    return Subspace(F_, m_, basis_vectors(), base);
}

FFVector Subspace::reduce(const FFVector& x) const {
    FFVector r = x;
    for (int i = 0; i < basis_.rows; ++i) {
        int c = r[pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < m_; ++j) r[j] = F_.sub(r[j], F_.mul(c, basis_(i, j)));
    }
    return r;
}

bool Subspace::contains(const FFVector& x) const {
    FFVector r = translate_ ? reduce(F_.vsub(x, *translate_)) : reduce(x);
    return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

std::uint64_t Subspace::size() const { return checked_size(F_.p(), dim(), "|subspace|"); }

std::vector<FFVector> Subspace::elements() const {
    std::uint64_t n = size();
    std::vector<FFVector> out;
    out.reserve(n);
    FFVector coef(dim());
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        decode_into(idx, F_.p(), coef);
        FFVector v = translate_ ? *translate_ : FFVector(m_, 0);
        for (int i = 0; i < dim(); ++i) {
            if (coef[i] == 0) continue;
            for (int j = 0; j < m_; ++j) v[j] = F_.add(v[j], F_.mul(coef[i], basis_(i, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (basis_.a != o.basis_.a) return basis_.a < o.basis_.a;
    return translate_ < o.translate_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // x in a and b: x = sum s_i a_i = sum t_j b_j; solve [A^T | -B^T](s,t) = 0.
    const auto& F = a.field();
    int m = a.ambient(), ka = a.dim(), kb = b.dim();
    Mat M(m, ka + kb);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < ka; ++i) M(j, i) = a.basis()(i, j);
        for (int i = 0; i < kb; ++i) M(j, ka + i) = F.neg(b.basis()(i, j));
    }
    std::vector<FFVector> gens;
    for (const auto& s : nullspace(F, M)) {
        FFVector x(m, 0);
        for (int i = 0; i < ka; ++i)
            for (int j = 0; j < m; ++j) x[j] = F.add(x[j], F.mul(s[i], a.basis()(i, j)));
        gens.push_back(x);
    }
    return Subspace(F, m, gens);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
    auto g = a.basis_vectors();
    auto h = b.basis_vectors();
    g.insert(g.end(), h.begin(), h.end());
    return Subspace(a.field(), a.ambient(), g);
}

bool complementary(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() == a.ambient() && span_sum(a, b).dim() == a.ambient();
}

std::uint64_t gaussian_binomial(int p, int m, int k) {
    if (k < 0 || k > m) return 0;
    long double num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (std::pow((long double)p, m - i) - 1);
        den *= (std::pow((long double)p, i + 1) - 1);
    }
    long double r = num / den;
    return r > 9.2e18L ? UINT64_MAX : std::uint64_t(r + 0.5L);
}

std::vector<Subspace> enumerate_subspaces(const PrimeField& F, int m, int k) {
    if (gaussian_binomial(F.p(), m, k) > kSizeGuard)
        throw SizeOverflow("number of " + std::to_string(k) + "-dim subspaces of F_" +
                           std::to_string(F.p()) + "^" + std::to_string(m) + " exceeds 2^31");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(F, m));
        return out;
    }
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // Free slots: row i, column c > piv[i], c not a pivot.
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < k; ++i)
            for (int c = piv[i] + 1; c < m; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.push_back({i, c});
        std::uint64_t n = checked_size(F.p(), int(slots.size()), "subspace free entries");
        FFVector vals(slots.size());
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            decode_into(idx, F.p(), vals);
            std::vector<FFVector> rows(k, FFVector(m, 0));
            for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            for (size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = vals[s];
            out.emplace_back(F, m, rows);
        }
        int i = k - 1;
        while (i >= 0 && piv[i] == m - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> all_cosets(const std::vector<Subspace>& linear) {
    std::vector<Subspace> out;
    for (const auto& V : linear) {
        const auto& F = V.field();
        std::set<FFVector> reps;
        std::uint64_t n = checked_size(F.p(), V.ambient());
        for (std::uint64_t i = 0; i < n; ++i) reps.insert(V.reduce(decode(i, F.p(), V.ambient())));
        for (const auto& r : reps) out.push_back(V.shifted(r));
    }
    return out;
}

} // namespace fflab
