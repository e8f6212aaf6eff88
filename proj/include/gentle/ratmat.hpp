#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "gentle/core.hpp"

namespace gentle {

// Exact rational scalar on int64 with 128-bit intermediates. The systems
// solved here are tiny 0/±1 incidence systems, so values stay small; any
// genuine overflow throws rather than silently wrapping.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw OverflowError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }

    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim) throw OverflowError("rational overflow");
        Rat r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        if (r.den == 0) throw OverflowError("rational with zero denominator");
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw OverflowError("division by zero rational");
        return from128(static_cast<__int128>(a.num) * b.den,
                       static_cast<__int128>(a.den) * b.num);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num = -r.num;
        return r;
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
};

// Dense row-major rational matrix; shapes are small enough that dense exact
// elimination is the simplest correct choice.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const Rat& at(int r, int c) const {
        return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    bool is_zero() const {
        for (const Rat& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw PreconditionError("ShapeMismatch in matrix product");
        Mat z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const Rat& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    const Rat& w = y.at(k, j);
                    if (!w.is_zero()) z.at(i, j) = z.at(i, j) + v * w;
                }
            }
        return z;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

namespace linalg {

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

// Columns form a basis of the right kernel.
inline Mat nullspace(Mat m) {
    const int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    Mat basis(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return basis;
}

// Solve A X = B where the columns of A are linearly independent; throws if
// the system is inconsistent.
inline Mat solve(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw PreconditionError("ShapeMismatch in solve");
    Mat aug(A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
    }
    std::vector<int> pivots = rref(aug);
    Mat X(A.cols, B.cols);
    size_t pr = 0;
    for (int c : pivots) {
        if (c >= A.cols) throw CheckError("inconsistent linear system in solve");
        for (int j = 0; j < B.cols; ++j) X.at(c, j) = aug.at(static_cast<int>(pr), A.cols + j);
        ++pr;
    }
    // verify (columns of A independent => unique solution when consistent)
    if (!(A * X == B)) throw CheckError("solve produced no exact solution");
    return X;
}

}  // namespace linalg

}  // namespace gentle
