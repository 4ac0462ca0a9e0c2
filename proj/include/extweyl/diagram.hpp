#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "extweyl/checked.hpp"
#include "extweyl/errors.hpp"
#include "extweyl/linalg.hpp"

namespace extweyl {

/// Arm-length tuple (p_1, ..., p_r) of a star diagram with a doubled center.
/// Vertex basis ordering is fixed everywhere: index 0 is the center root,
/// index 1 is the starred center root, then the arms in order, within an arm
/// from the vertex adjacent to the center outward.
struct DiagramSpec {
    std::vector<int> arms;

    void validate() const {
        for (int p : arms)
            if (p <= 0) throw ValidationError("arm lengths must be positive");
    }

    std::size_t rank() const {
        std::size_t n = 2;
        for (int p : arms) n += static_cast<std::size_t>(p);
        return n;
    }

    /// Basis index of arm vertex (i, j); both arguments 1-based.
    std::size_t arm_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > arms.size() || j < 1 || j > static_cast<std::size_t>(arms[i - 1]))
            throw ValidationError("arm vertex out of range");
        std::size_t idx = 2;
        for (std::size_t k = 0; k + 1 < i; ++k) idx += static_cast<std::size_t>(arms[k]);
        return idx + (j - 1);
    }

    bool operator==(const DiagramSpec& other) const = default;
};

inline constexpr std::size_t kCenterIndex = 0;
inline constexpr std::size_t kStarIndex = 1;

struct SignatureTriple {
    int plus = 0;
    int minus = 0;
    int zero = 0;
    bool operator==(const SignatureTriple&) const = default;
};

enum class WeylType { Domestic, Tubular, Wild };

inline std::string to_string(WeylType t) {
    switch (t) {
        case WeylType::Domestic: return "domestic";
        case WeylType::Tubular: return "tubular";
        case WeylType::Wild: return "wild";
    }
    return "?";
}

/// Gram matrix of the bilinear form in the fixed basis ordering: diagonal 2,
/// the center pair valued 2, single edges -1, everything else 0.
inline Mat build_gram(const DiagramSpec& spec) {
    spec.validate();
    const std::size_t n = spec.rank();
    Mat g(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
    g[kCenterIndex][kStarIndex] = g[kStarIndex][kCenterIndex] = 2;
    for (std::size_t i = 1; i <= spec.arms.size(); ++i) {
        const std::size_t first = spec.arm_index(i, 1);
        g[kCenterIndex][first] = g[first][kCenterIndex] = -1;
        g[kStarIndex][first] = g[first][kStarIndex] = -1;
        for (std::size_t j = 1; j < static_cast<std::size_t>(spec.arms[i - 1]); ++j) {
            const std::size_t u = spec.arm_index(i, j);
            const std::size_t v = spec.arm_index(i, j + 1);
            g[u][v] = g[v][u] = -1;
        }
    }
    return g;
}

/// Exact inertia of a symmetric integer matrix by rational symmetric
/// congruence reduction. A row/column addition handles zero diagonal pivots;
/// no floating point is involved.
inline SignatureTriple inertia(const Mat& gram) {
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw ValidationError("matrix not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw ValidationError("matrix not symmetric");
    }
    RatMat a = to_rational(gram);
    SignatureTriple sig;
    auto swap_sym = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        std::swap(a[x], a[y]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][x], a[r][y]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = n;
        for (std::size_t k = i; k < n; ++k)
            if (a[k][k] != 0) { piv = k; break; }
        if (piv == n) {
            // Whole remaining diagonal vanishes; look for an off-diagonal entry.
            std::size_t r = n, c = n;
            for (std::size_t k = i; k < n && r == n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (a[k][l] != 0) { r = k; c = l; break; }
            if (r == n) {
                sig.zero += static_cast<int>(n - i);
                break;
            }
            // Congruence row_r += row_c, col_r += col_c makes a[r][r] = 2*a[r][c] != 0.
            for (std::size_t j = 0; j < n; ++j) a[r][j] += a[c][j];
            for (std::size_t j = 0; j < n; ++j) a[j][r] += a[j][c];
            piv = r;
        }
        swap_sym(piv, i);
        for (std::size_t k = i + 1; k < n; ++k) {
            if (a[k][i] == 0) continue;
            Rat f = a[k][i] / a[i][i];
            for (std::size_t j = 0; j < n; ++j) a[k][j] -= f * a[i][j];
            for (std::size_t j = 0; j < n; ++j) a[j][k] -= f * a[j][i];
        }
        if (a[i][i] > 0) ++sig.plus;
        else ++sig.minus;
    }
    return sig;
}

inline WeylType type_of(const SignatureTriple& sig) {
    if (sig.minus == 0 && sig.zero == 1) return WeylType::Domestic;
    if (sig.minus == 0 && sig.zero == 2) return WeylType::Tubular;
    if (sig.minus == 1 && sig.zero == 1) return WeylType::Wild;
    throw ValidationError("signature does not belong to an extended space");
}

inline WeylType classify(const DiagramSpec& spec) { return type_of(inertia(build_gram(spec))); }

/// The radical generator a = alpha_star - alpha_center, defined for domestic
/// and wild types (the tubular radical is two-dimensional).
inline Vec radical_vector(const DiagramSpec& spec) {
    if (classify(spec) == WeylType::Tubular)
        throw UnsupportedTypeError("tubular radical has dimension 2");
    Vec a(spec.rank(), 0);
    a[kCenterIndex] = -1;
    a[kStarIndex] = 1;
    return a;
}

} // namespace extweyl
