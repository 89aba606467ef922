#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hml/error.hpp"

namespace hml {

template <class T>
using Mat = std::vector<std::vector<T>>;
using RatMatrix = Mat<mpq_class>;

// field plumbing: specialize for each scalar type
template <class T>
struct FieldOps;

template <>
struct FieldOps<mpq_class> {
    static mpq_class zero(const mpq_class&) { return 0; }
    static mpq_class one(const mpq_class&) { return 1; }
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static mpq_class inv(const mpq_class& x) {
        if (x == 0) throw NotInvertible("rational zero");
        return 1 / x;
    }
    static mpq_class from_mpq(const mpq_class&, const mpq_class& q) { return q; }
};

// reduced row echelon form in place; returns pivot columns
template <class T>
std::vector<int> rref(Mat<T>& A) {
    using F = FieldOps<T>;
    std::vector<int> piv;
    if (A.empty()) return piv;
    const int rows = static_cast<int>(A.size()), cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!F::is_zero(A[i][c])) { p = i; break; }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        T s = F::inv(A[r][c]);
        for (int j = c; j < cols; ++j)
            if (!F::is_zero(A[r][j])) A[r][j] *= s;
        for (int i = 0; i < rows; ++i) {
            if (i == r || F::is_zero(A[i][c])) continue;
            T f = A[i][c];
            for (int j = c; j < cols; ++j)
                if (!F::is_zero(A[r][j])) A[i][j] -= f * A[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    A.resize(r);
    return piv;
}

template <class T>
int rank(Mat<T> A) {
    return static_cast<int>(rref(A).size());
}

// basis of the right kernel {x : A x = 0}
template <class T>
std::vector<std::vector<T>> kernel(Mat<T> A, int cols, const T& like) {
    using F = FieldOps<T>;
    auto piv = rref(A);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<T>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(cols, F::zero(like));
        v[f] = F::one(like);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

// unique solution of M x = b; false if inconsistent or underdetermined
template <class T>
bool solve(const Mat<T>& M, const std::vector<T>& b, std::vector<T>& x) {
    using F = FieldOps<T>;
    const int rows = static_cast<int>(M.size());
    if (rows == 0) return false;
    const int cols = static_cast<int>(M[0].size());
    Mat<T> A(M);
    for (int i = 0; i < rows; ++i) A[i].push_back(b[i]);
    auto piv = rref(A);
    if (!piv.empty() && piv.back() == cols) return false;
    if (static_cast<int>(piv.size()) != cols) return false;
    x.assign(cols, F::zero(b[0]));
    for (int r = 0; r < cols; ++r) x[piv[r]] = A[r][cols];
    return true;
}

inline bool solve_rational(const RatMatrix& M, const std::vector<mpq_class>& b, std::vector<mpq_class>& x) {
    return solve(M, b, x);
}

template <class T>
Mat<T> matmul(const Mat<T>& A, const Mat<T>& B) {
    using F = FieldOps<T>;
    const size_t n = A.size(), k = B.size(), m = k ? B[0].size() : 0;
    Mat<T> C(n, std::vector<T>(m, F::zero(A[0][0])));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (F::is_zero(A[i][t])) continue;
            for (size_t j = 0; j < m; ++j)
                if (!F::is_zero(B[t][j])) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

template <class T>
Mat<T> transpose(const Mat<T>& A) {
    if (A.empty()) return {};
    Mat<T> B(A[0].size(), std::vector<T>(A.size(), A[0][0]));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[0].size(); ++j) B[j][i] = A[i][j];
    return B;
}

template <class T>
Mat<T> identity(int n, const T& like) {
    using F = FieldOps<T>;
    Mat<T> I(n, std::vector<T>(n, F::zero(like)));
    for (int i = 0; i < n; ++i) I[i][i] = F::one(like);
    return I;
}

// throws SingularMatrix
template <class T>
Mat<T> inverse(const Mat<T>& M) {
    const int n = static_cast<int>(M.size());
    Mat<T> A(M);
    auto I = identity(n, M[0][0]);
    for (int i = 0; i < n; ++i) A[i].insert(A[i].end(), I[i].begin(), I[i].end());
    auto piv = rref(A);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw SingularMatrix();
    Mat<T> R(n);
    for (int i = 0; i < n; ++i) R[i].assign(A[i].begin() + n, A[i].end());
    return R;
}

// Berkowitz: division-free characteristic polynomial det(x - A), low degree first, monic
template <class T>
std::vector<T> charpoly(const Mat<T>& A) {
    using F = FieldOps<T>;
    const int n = static_cast<int>(A.size());
    if (n == 0) return {};
    const T z = F::zero(A[0][0]), o = F::one(A[0][0]);
    // vect holds coefficients high degree first
    std::vector<T> vect{o, -A[0][0]};
    for (int r = 1; r < n; ++r) {
        // A = [[M, R^T? ...]] partition with leading r x r block M, column C, row R, corner a
        std::vector<T> C(r, z), R(r, z);
        for (int i = 0; i < r; ++i) {
            C[i] = A[i][r];
            R[i] = A[r][i];
        }
        const T& a = A[r][r];
        // Toeplitz column: 1, -a, -R C, -R M C, ...
        std::vector<T> col(r + 2, z);
        col[0] = o;
        col[1] = -a;
        std::vector<T> v = C;
        for (int k = 2; k < r + 2; ++k) {
            T s = z;
            for (int i = 0; i < r; ++i) s += R[i] * v[i];
            col[k] = -s;
            if (k + 1 < r + 2) {
                std::vector<T> w(r, z);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (!F::is_zero(A[i][j]) && !F::is_zero(v[j])) w[i] += A[i][j] * v[j];
                v = std::move(w);
            }
        }
        std::vector<T> nv(r + 2, z);
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= i && j < static_cast<int>(vect.size()); ++j) nv[i] += col[i - j] * vect[j];
        vect = std::move(nv);
    }
    return std::vector<T>(vect.rbegin(), vect.rend());
}

} // namespace hml
