#include "fflab/qforms/matrix.hpp"

namespace fflab {

FFVector Mat::col(int j) const {
    FFVector v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Mat Mat::from_rows(const std::vector<FFVector>& rows, int cols) {
    Mat M(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) M(int(i), j) = rows[i][j];
    return M;
}

Mat Mat::diagonal(const std::vector<int>& d) {
    Mat M(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) M(int(i), int(i)) = d[i];
    return M;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

Mat mul(const PrimeField& F, const Mat& A, const Mat& B) {
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            long long s = 0;
            for (int k = 0; k < A.cols; ++k) s += (long long)A(i, k) * B(k, j);
            C(i, j) = int(s % F.p());
        }
    return C;
}

FFVector matvec(const PrimeField& F, const Mat& A, const FFVector& x) {
    FFVector y(A.rows);
    for (int i = 0; i < A.rows; ++i) {
        long long s = 0;
        for (int k = 0; k < A.cols; ++k) s += (long long)A(i, k) * x[k];
        y[i] = int(s % F.p());
    }
    return y;
}

Mat rref(const PrimeField& F, const Mat& A, std::vector<int>* pivots) {
    Mat R = A;
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < R.cols && r < R.rows; ++c) {
        int piv = -1;
        for (int i = r; i < R.rows; ++i)
            if (R(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < R.cols; ++j) std::swap(R(r, j), R(piv, j));
        int s = F.inv(R(r, c));
        for (int j = 0; j < R.cols; ++j) R(r, j) = F.mul(R(r, j), s);
        for (int i = 0; i < R.rows; ++i) {
            if (i == r || R(i, c) == 0) continue;
            int f = R(i, c);
            for (int j = 0; j < R.cols; ++j) R(i, j) = F.sub(R(i, j), F.mul(f, R(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return R;
}

int rank(const PrimeField& F, const Mat& A) {
    std::vector<int> piv;
    rref(F, A, &piv);
    return int(piv.size());
}

int det(const PrimeField& F, const Mat& A) {
    Mat R = A;
    int n = R.rows, d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (R(i, c) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(R(c, j), R(piv, j));
            d = F.neg(d);
        }
        d = F.mul(d, R(c, c));
        int s = F.inv(R(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (R(i, c) == 0) continue;
            int f = F.mul(R(i, c), s);
            for (int j = c; j < n; ++j) R(i, j) = F.sub(R(i, j), F.mul(f, R(c, j)));
        }
    }
    return d;
}

std::optional<Mat> inverse(const PrimeField& F, const Mat& A) {
    int n = A.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv;
    Mat R = rref(F, aug, &piv);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
    return inv;
}

std::vector<FFVector> nullspace(const PrimeField& F, const Mat& A) {
    std::vector<int> piv;
    Mat R = rref(F, A, &piv);
    std::vector<bool> is_piv(A.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<FFVector> basis;
    for (int f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        FFVector v(A.cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R(int(i), f));
        basis.push_back(v);
    }
    return basis;
}

std::optional<FFVector> solve(const PrimeField& F, const Mat& A, const FFVector& b) {
    Mat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    std::vector<int> piv;
    Mat R = rref(F, aug, &piv);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    FFVector x(A.cols, 0);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R(int(i), A.cols);
    return x;
}

bool is_symmetric(const Mat& A) {
    if (A.rows != A.cols) return false;
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (A(i, j) != A(j, i)) return false;
    return true;
}

} // namespace fflab
