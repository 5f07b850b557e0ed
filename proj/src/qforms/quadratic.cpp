#include "fflab/qforms/quadratic.hpp"

#include <algorithm>
#include <string>

namespace fflab {

QuadraticSpace::QuadraticSpace(const PrimeField& F, Mat A)
    : F_(F), A_(std::move(A)), cache_(std::make_shared<Cache>()) {
    if (!is_symmetric(A_)) throw ConfigError("quadratic form matrix must be symmetric");
    rank_ = fflab::rank(F_, A_);
}

QuadraticSpace QuadraticSpace::sum_of_squares(const PrimeField& F, int m) {
    return QuadraticSpace(F, Mat::identity(m));
}

QuadraticSpace QuadraticSpace::hyperbolic(const PrimeField& F, int m) {
    if (m % 2 != 0) throw ConfigError("hyperbolic form needs even dimension");
    int n = m / 2;
    Mat A(m, m);
    for (int i = 0; i < n; ++i) A(i, n + i) = A(n + i, i) = F.half();
    return QuadraticSpace(F, A);
}

QuadraticSpace QuadraticSpace::diagonal(const PrimeField& F, const std::vector<int>& d) {
    return QuadraticSpace(F, Mat::diagonal(d));
}

int QuadraticSpace::bilinear(const FFVector& x, const FFVector& y) const {
    long long s = 0;
    int m = dim();
    for (int i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < m; ++j) row += (long long)A_(i, j) * y[j];
        s += x[i] * (row % F_.p());
    }
    return int(s % F_.p());
}

bool QuadraticSpace::totally_isotropic(const Subspace& W) const {
    auto b = W.basis_vectors();
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i; j < b.size(); ++j)
            if (bilinear(b[i], b[j]) != 0) return false;
    return true;
}

int QuadraticSpace::witt_index() const {
    if (!nondegenerate())
        throw DegenerateForm("rank " + std::to_string(rank_) + " < dimension " + std::to_string(dim()));
    std::call_once(cache_->witt_once, [this] { cache_->witt = witt_index_nondegenerate_part(); });
    return cache_->witt;
}

int QuadraticSpace::witt_index_nondegenerate_part() const {
    auto D = diagonalize(*this);
    std::vector<int> nz;
    for (int i = 0; i < dim(); ++i)
        if (D.D.matrix()(i, i) != 0) nz.push_back(D.D.matrix()(i, i));
    return witt_from_diagonal(F_, nz);
}

const std::vector<Subspace>& QuadraticSpace::max_isotropic() const {
    int w = witt_index();
    std::call_once(cache_->iso_once, [this, w] {
        if (w == 0) return;
        for (auto& V : enumerate_subspaces(F_, dim(), w))
            if (totally_isotropic(V)) cache_->iso.push_back(std::move(V));
    });
    return cache_->iso;
}

Diagonalization diagonalize(const QuadraticSpace& Q) {
    const auto& F = Q.field();
    int m = Q.dim();
    Mat A = Q.matrix();
    Mat M = Mat::identity(m);
    // Congruence by an elementary change of basis e_j <- e_j + c e_k.
    auto add_col = [&](int j, int k, int c) {
        for (int i = 0; i < m; ++i) A(i, j) = F.add(A(i, j), F.mul(c, A(i, k)));
        for (int i = 0; i < m; ++i) A(j, i) = F.add(A(j, i), F.mul(c, A(k, i)));
        for (int i = 0; i < m; ++i) M(i, j) = F.add(M(i, j), F.mul(c, M(i, k)));
    };
    auto swap_idx = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(A(i, a), A(i, b));
        for (int i = 0; i < m; ++i) std::swap(A(a, i), A(b, i));
        for (int i = 0; i < m; ++i) std::swap(M(i, a), M(i, b));
    };
    for (int k = 0; k < m; ++k) {
        if (A(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < m && piv < 0; ++i)
                if (A(i, i) != 0) piv = i;
            if (piv >= 0) {
                swap_idx(k, piv);
            } else {
                // All remaining diagonal entries vanish: x_i x_j = ((x_i+x_j)^2 - (x_i-x_j)^2)/4.
                int pi = -1, pj = -1;
                for (int i = k; i < m && pi < 0; ++i)
                    for (int j = i + 1; j < m; ++j)
                        if (A(i, j) != 0) { pi = i; pj = j; break; }
                if (pi < 0) break;
                add_col(pi, pj, 1);
                if (pi != k) swap_idx(k, pi);
            }
        }
        int s = F.inv(A(k, k));
        for (int j = k + 1; j < m; ++j)
            if (A(k, j) != 0) add_col(j, k, F.neg(F.mul(A(k, j), s)));
    }
    Mat D = mul(F, mul(F, transpose(M), Q.matrix()), M);
    return {M, QuadraticSpace(F, D)};
}

int witt_from_diagonal(const PrimeField& F, const std::vector<int>& diag) {
    int m = int(diag.size());
    if (m == 0) return 0;
    if (m % 2 == 1) return (m - 1) / 2;
    int n = m / 2, det = 1;
    for (int v : diag) det = F.mul(det, v);
    bool sq = F.is_square(det);
    bool even = (long long)n * (F.p() - 1) / 2 % 2 == 0;
    return (sq == even) ? n : n - 1;
}

int witt_index(const QuadraticSpace& Q) { return Q.witt_index(); }

int witt_index_exhaustive(const QuadraticSpace& Q) {
    if (!Q.nondegenerate()) throw DegenerateForm("exhaustive Witt oracle needs a non-degenerate form");
    for (int k = Q.dim() / 2; k >= 1; --k)
        for (const auto& V : enumerate_subspaces(Q.field(), Q.dim(), k))
            if (Q.totally_isotropic(V)) return k;
    return 0;
}

std::vector<Subspace> enumerate_max_isotropic(const QuadraticSpace& Q) {
    checked_size(Q.field().p(), Q.dim(), "p^m for isotropic enumeration");
    return Q.max_isotropic();
}

IsotropicComplement complementary_isotropic(const QuadraticSpace& Q, const Subspace& W) {
    const auto& F = Q.field();
    int m = Q.dim();
    if (!Q.nondegenerate() || m % 2 != 0)
        throw NotMaximalIsotropic("form must be non-degenerate of even dimension");
    int n = m / 2;
    if (W.is_affine() || W.dim() != n || !Q.totally_isotropic(W))
        throw NotMaximalIsotropic("W must be a totally isotropic linear subspace of dimension " +
                                  std::to_string(n));
    auto w = W.basis_vectors();
    Mat WA = mul(F, W.basis(), Q.matrix());
    std::vector<FFVector> u;
    for (int j = 0; j < n; ++j) {
        FFVector e(n, 0);
        e[j] = 1;
        auto sol = solve(F, WA, e);
        if (!sol) throw NotMaximalIsotropic("pairing system has no solution");
        u.push_back(*sol);
    }
    // v_j = u_j - sum_k (u_j o u_k / 2) w_k makes span(v) totally isotropic.
    std::vector<FFVector> v;
    for (int j = 0; j < n; ++j) {
        FFVector vj = u[j];
        for (int k = 0; k < n; ++k) {
            int c = F.mul(Q.bilinear(u[j], u[k]), F.half());
            vj = F.vsub(vj, F.vscale(c, w[k]));
        }
        v.push_back(vj);
    }
    return {Subspace(F, m, v), w, v};
}

Subspace orthogonal_complement(const QuadraticSpace& Q, const Subspace& W) {
    if (!Q.nondegenerate()) throw DegenerateForm("orthogonal complement needs a non-degenerate form");
    const auto& F = Q.field();
    if (W.dim() == 0) return Subspace::full(F, Q.dim());
    Mat WA = mul(F, W.basis(), Q.matrix());
    return Subspace(F, Q.dim(), nullspace(F, WA));
}

cd expoc_indicator(const QuadraticSpace& Q, const Subspace& W, const FFVector& x) {
    CharacterTable chi(Q.field().p());
    cd s = 0;
    auto elems = W.elements();
    for (const auto& w : elems) s += chi(Q.bilinear(x, w));
    return s / double(elems.size());
}

std::vector<FFVector> galilean(const QuadraticSpace& Q, const FFVector& t, const std::vector<FFVector>& E) {
    std::vector<FFVector> out;
    out.reserve(E.size());
    for (const auto& x : E) out.push_back(Q.field().vadd(x, t));
    return out;
}

FFVector galilean_ambient(const QuadraticSpace& Q, const FFVector& t, const FFVector& x) {
    const auto& F = Q.field();
    int m = Q.dim();
    FFVector xi(x.begin(), x.begin() + m);
    FFVector y = F.vadd(xi, t);
    // Q(xi+t) = Q(xi) + 2 xi o t + Q(t), written from the ambient last coordinate.
    int s = F.add(x[m], F.add(F.mul(2, Q.bilinear(xi, t)), Q.Q(t)));
    y.push_back(s);
    return y;
}

QuadraticSpace restrict_form(const QuadraticSpace& Q, const Subspace& V) {
    const auto& F = Q.field();
    const Mat& B = V.basis();
    return QuadraticSpace(F, mul(F, mul(F, B, Q.matrix()), transpose(B)));
}

SubsurfaceClass classify_subsurface(const QuadraticSpace& Q, const Subspace& V) {
    auto R = restrict_form(Q, V);
    if (R.rank() == 0) throw FullyDegenerate("restriction of Q to V vanishes identically");
    return {R.rank(), R.degenerate_dim(), R.witt_index_nondegenerate_part()};
}

std::vector<SubsurfaceClass> subsurface_table(int d, bool plus_type) {
    // rows: (rank offset k, r = d-k) -> allowed Witt indices written as (d - c)/2
    std::vector<std::pair<int, std::vector<int>>> rows;
    if (d % 2 == 1) {
        if (plus_type)
            rows = {{3, {3, 5}}, {4, {5}}, {5, {5, 7}}, {6, {7}}, {7, {9}}};
        else
            rows = {{3, {3, 5}}, {4, {5}}, {5, {7}}, {6, {}}, {7, {}}};
    } else {
        rows = {{3, {4}}, {4, {4, 6}}, {5, {6}}, {6, {8}}, {7, {}}};
    }
    std::vector<SubsurfaceClass> out;
    for (const auto& [k, ws] : rows) {
        int r = d - k;
        if (r < std::max(1, d - 7)) continue;
        for (int c : ws) {
            int w = (d - c) / 2;
            if (w < 0 || 2 * w > r) continue;
            out.push_back({r, d - 3 - r, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool subsurface_allowed(int d, bool plus_type, const SubsurfaceClass& c) {
    auto t = subsurface_table(d, plus_type);
    return std::find(t.begin(), t.end(), c) != t.end();
}

} // namespace fflab
