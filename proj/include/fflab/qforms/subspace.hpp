#pragma once

#include <optional>
#include <vector>

#include "fflab/qforms/matrix.hpp"

namespace fflab {

// Linear or affine subspace of F_p^m. The basis is kept in reduced row echelon
// form and the translate is reduced against it, so equal sets compare equal.
class Subspace {
public:
    Subspace(const PrimeField& F, int ambient, const std::vector<FFVector>& generators,
             std::optional<FFVector> translate = std::nullopt);

    static Subspace zero(const PrimeField& F, int m) { return Subspace(F, m, {}); }
    static Subspace full(const PrimeField& F, int m);

    const PrimeField& field() const { return F_; }
    int ambient() const { return m_; }
    int dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<FFVector> basis_vectors() const;
    bool is_affine() const { return translate_.has_value(); }
    const std::optional<FFVector>& translate() const { return translate_; }
    Subspace linear_part() const;
    Subspace shifted(const FFVector& t) const;

    // Canonical coset representative of x modulo the linear part.
    FFVector reduce(const FFVector& x) const;
    bool contains(const FFVector& x) const;
    // p^dim points, in the order of coefficient vectors (little-endian).
    std::vector<FFVector> elements() const;
    std::uint64_t size() const;

    bool operator==(const Subspace& o) const {
        return m_ == o.m_ && basis_ == o.basis_ && translate_ == o.translate_;
    }
    bool operator<(const Subspace& o) const;

private:
    PrimeField F_;
    int m_;
    Mat basis_;
    std::vector<int> pivots_;
    std::optional<FFVector> translate_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace span_sum(const Subspace& a, const Subspace& b);
bool complementary(const Subspace& a, const Subspace& b);

// All k-dimensional linear subspaces of F_p^m, in canonical order.
std::vector<Subspace> enumerate_subspaces(const PrimeField& F, int m, int k);
// Number of k-dim subspaces (Gaussian binomial), saturating at 2^63.
std::uint64_t gaussian_binomial(int p, int m, int k);
// Every coset of every subspace in `linear`.
std::vector<Subspace> all_cosets(const std::vector<Subspace>& linear);

} // namespace fflab
