#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "extweyl/checked.hpp"
#include "extweyl/errors.hpp"

namespace extweyl {

/// Exact rational scalar used wherever eigenvalue signs, ranks or solves must
/// be exact. Element matrices stay in checked 64-bit integers.
using Rat = boost::multiprecision::cpp_rational;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

inline Mat identity_matrix(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (a.empty() || a[0].size() != k) throw ContextError("matrix dimension mismatch");
    Mat c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const Int ail = a[i][l];
            if (ail == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] = checked_add(c[i][j], checked_mul(ail, b[l][j]));
        }
    return c;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
    if (a.empty() || a[0].size() != v.size()) throw ContextError("matrix/vector dimension mismatch");
    Vec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] = checked_add(r[i], checked_mul(a[i][j], v[j]));
    return r;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMat to_rational(const Mat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i].reserve(a[i].size());
        for (Int x : a[i]) r[i].emplace_back(x);
    }
    return r;
}

/// Rank over the rationals by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(RatMat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rational_rank(const Mat& m) { return rational_rank(to_rational(m)); }

/// Solves a*x = b exactly; requires a square and nonsingular.
inline RatVec rational_solve(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n) throw ContextError("solve dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Exact inverse of an integer matrix, provided the inverse is again integral
/// (true for every form-preserving lattice automorphism we construct).
inline Mat integer_inverse(const Mat& m) {
    const std::size_t n = m.size();
    RatMat a = to_rational(m);
    RatMat inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw NotAnElementError("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = inv[i][j] / a[i][i];
            if (denominator(v) != 1) throw NotAnElementError("inverse is not integral");
            boost::multiprecision::cpp_int num = numerator(v);
            if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
                throw OverflowError();
            out[i][j] = static_cast<Int>(num);
        }
    return out;
}

/// Row Hermite normal form of an integer generator matrix.
/// Returns the rank and, when the lattice has full column rank, the absolute
/// determinant of the HNF basis (the index of the lattice in Z^cols).
struct LatticeShape {
    std::size_t rank = 0;
    std::optional<boost::multiprecision::cpp_int> index; // set iff rank == cols
};

inline LatticeShape lattice_shape(std::vector<Vec> rows, std::size_t cols) {
    using Big = boost::multiprecision::cpp_int;
    std::vector<std::vector<Big>> m;
    m.reserve(rows.size());
    for (const Vec& r : rows) {
        if (r.size() != cols) throw ContextError("lattice generator length mismatch");
        m.emplace_back(r.begin(), r.end());
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        // Euclidean reduction in this column below the current rank row.
        while (true) {
            std::size_t piv = m.size();
            Big best = 0;
            for (std::size_t i = rank; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                Big a = abs(m[i][col]);
                if (piv == m.size() || a < best) { piv = i; best = a; }
            }
            if (piv == m.size()) break;
            std::swap(m[piv], m[rank]);
            bool cleared = true;
            for (std::size_t i = rank + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                Big q = m[i][col] / m[rank][col];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[rank][j];
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) { ++rank; break; }
        }
    }
    LatticeShape shape;
    shape.rank = rank;
    if (rank == cols) {
        Big det = 1;
        for (std::size_t i = 0; i < cols; ++i) det *= m[i][i];
        shape.index = abs(det);
    }
    return shape;
}

} // namespace extweyl
