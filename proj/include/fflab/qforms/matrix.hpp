#pragma once

#include <optional>
#include <vector>

#include "fflab/ff/field.hpp"

namespace fflab {

// Dense row-major matrix over F_p.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    int& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    int operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
    FFVector row(int i) const { return FFVector(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }
    FFVector col(int j) const;
    bool operator==(const Mat& o) const = default;
    auto operator<=>(const Mat& o) const = default;

    static Mat identity(int n);
    static Mat from_rows(const std::vector<FFVector>& rows, int cols);
    static Mat diagonal(const std::vector<int>& d);
};

Mat transpose(const Mat& A);
Mat mul(const PrimeField& F, const Mat& A, const Mat& B);
FFVector matvec(const PrimeField& F, const Mat& A, const FFVector& x);

// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
Mat rref(const PrimeField& F, const Mat& A, std::vector<int>* pivots = nullptr);
int rank(const PrimeField& F, const Mat& A);
int det(const PrimeField& F, const Mat& A);
std::optional<Mat> inverse(const PrimeField& F, const Mat& A);
// Basis of {x : A x = 0}.
std::vector<FFVector> nullspace(const PrimeField& F, const Mat& A);
// Some x with A x = b, if any.
std::optional<FFVector> solve(const PrimeField& F, const Mat& A, const FFVector& b);

bool is_symmetric(const Mat& A);

} // namespace fflab
