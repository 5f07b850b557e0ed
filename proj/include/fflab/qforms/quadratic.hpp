#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "fflab/qforms/subspace.hpp"

namespace fflab {

// Q(x) = x^T A x with bilinear form x o y = x^T A y.
class QuadraticSpace {
public:
    QuadraticSpace(const PrimeField& F, Mat A);

    static QuadraticSpace sum_of_squares(const PrimeField& F, int m);
    // x1.x2 on F^{2n}: A = [[0, I/2], [I/2, 0]].
    static QuadraticSpace hyperbolic(const PrimeField& F, int m);
    static QuadraticSpace diagonal(const PrimeField& F, const std::vector<int>& d);

    const PrimeField& field() const { return F_; }
    const Mat& matrix() const { return A_; }
    int dim() const { return A_.rows; }
    int rank() const { return rank_; }
    int degenerate_dim() const { return dim() - rank_; }
    bool nondegenerate() const { return rank_ == dim(); }

    int Q(const FFVector& x) const { return bilinear(x, x); }
    int bilinear(const FFVector& x, const FFVector& y) const;
    bool totally_isotropic(const Subspace& W) const;

    // Cached; DegenerateForm if rank < dim.
    int witt_index() const;
    // Witt index of the non-degenerate part (any rank).
    int witt_index_nondegenerate_part() const;
    // Cached inventory of all maximal totally isotropic subspaces.
    const std::vector<Subspace>& max_isotropic() const;

private:
    struct Cache {
        std::once_flag witt_once, iso_once;
        int witt = -1;
        std::vector<Subspace> iso;
    };
    PrimeField F_;
    Mat A_;
    int rank_;
    std::shared_ptr<Cache> cache_;
};

struct Diagonalization {
    Mat M;             // invertible, M^T A M = D
    QuadraticSpace D;  // diagonal
};

Diagonalization diagonalize(const QuadraticSpace& Q);

// Witt index from a non-degenerate diagonal of length m (m odd: (m-1)/2).
int witt_from_diagonal(const PrimeField& F, const std::vector<int>& diag);
int witt_index(const QuadraticSpace& Q);
// Exponential oracle: largest k with a totally isotropic k-dim subspace.
int witt_index_exhaustive(const QuadraticSpace& Q);

std::vector<Subspace> enumerate_max_isotropic(const QuadraticSpace& Q);

struct IsotropicComplement {
    Subspace V;
    std::vector<FFVector> w_basis;  // w_i o v_j = delta_ij
    std::vector<FFVector> v_basis;
};
IsotropicComplement complementary_isotropic(const QuadraticSpace& Q, const Subspace& W);

Subspace orthogonal_complement(const QuadraticSpace& Q, const Subspace& W);
// |W|^{-1} sum_{w in W} e(x o w)
cd expoc_indicator(const QuadraticSpace& Q, const Subspace& W, const FFVector& x);

// xi -> xi + t on the parameter domain of {(xi, Q(xi))}.
std::vector<FFVector> galilean(const QuadraticSpace& Q, const FFVector& t, const std::vector<FFVector>& E);
// The same map on ambient points (xi, s) of the surface.
FFVector galilean_ambient(const QuadraticSpace& Q, const FFVector& t, const FFVector& x);

QuadraticSpace restrict_form(const QuadraticSpace& Q, const Subspace& V);

struct SubsurfaceClass {
    int r, s, w;
    bool operator==(const SubsurfaceClass&) const = default;
    auto operator<=>(const SubsurfaceClass&) const = default;
};
// (rank, degenerate dim, Witt index of the non-degenerate part) of Q restricted to V.
SubsurfaceClass classify_subsurface(const QuadraticSpace& Q, const Subspace& V);
// Allowed triples for a (d-3)-dim V in F^{d-1}; plus_type = ambient Witt index (d-1)/2 (d odd).
std::vector<SubsurfaceClass> subsurface_table(int d, bool plus_type);
bool subsurface_allowed(int d, bool plus_type, const SubsurfaceClass& c);

} // namespace fflab
