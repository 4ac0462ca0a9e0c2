#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "extweyl/checked.hpp"
#include "extweyl/errors.hpp"
#include "extweyl/space.hpp"

namespace extweyl {

/// A height-bounded enumeration of the projected root system. For domestic
/// diagrams the closure reaches a fixpoint and `complete` is set; for wild
/// diagrams the set is infinite and only the slice below the bound is
/// produced. Roots are stored in lexicographic order.
struct RootSetSlice {
    std::vector<Vec> roots;
    Int height_bound = 0;
    bool complete = false;

    bool contains(const Vec& v) const {
        return std::binary_search(roots.begin(), roots.end(), v);
    }
};

inline Int height(const Vec& v) {
    Int h = 0;
    for (Int c : v) h = checked_add(h, c < 0 ? checked_neg(c) : c);
    return h;
}

/// Sign dichotomy of Coxeter roots: all coefficients >= 0 or all <= 0.
/// Returns +1 / -1 for nonzero vectors, 0 for the zero vector, throws for
/// mixed signs.
inline int root_sign(const Vec& v) {
    bool pos = false, neg = false;
    for (Int c : v) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) throw NotARootError("mixed-sign coefficient vector");
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

/// BFS closure of the projected simple roots under projected simple
/// reflections, skipping images whose height exceeds the bound.
inline RootSetSlice enumerate_projected(const Space& space, Int height_bound) {
    space.require_non_tubular();
    if (height_bound < 1) throw ValidationError("height bound must be at least 1");
    const std::size_t nb = space.proj_dim();
    std::set<Vec> seen;
    std::vector<Vec> frontier;
    for (std::size_t i = 0; i < nb; ++i) {
        Vec e = space.proj_basis_vector(i);
        if (seen.insert(e).second) frontier.push_back(e);
    }
    bool truncated = false;
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier) {
            for (std::size_t i = 0; i < nb; ++i) {
                Vec image = space.proj_reflect(space.proj_basis_vector(i), v);
                if (height(image) > height_bound) {
                    truncated = true;
                    continue;
                }
                if (seen.insert(image).second) next.push_back(image);
            }
        }
        frontier = std::move(next);
    }
    RootSetSlice slice;
    slice.roots.assign(seen.begin(), seen.end());
    slice.height_bound = height_bound;
    slice.complete = !truncated;
    return slice;
}

/// Canonical representative (positive projected root, integer shift) of the
/// reflection in a full root: root = +-(lift(proj_root, 0) + k*a).
struct Reflection {
    Vec proj_root; // positive projected root
    Int k = 0;

    bool operator==(const Reflection&) const = default;
    auto operator<=>(const Reflection&) const = default;
};

inline Reflection canonical_reflection(const Space& space, const Vec& root) {
    if (space.bilinear(root, root) != 2) throw NotARootError("root must have norm 2");
    Vec proj = space.project(root);
    const int sign = root_sign(proj); // throws on mixed signs
    if (sign == 0) throw NotARootError("root projects into the radical");
    Vec r = root;
    if (sign < 0)
        for (Int& c : r) c = checked_neg(c);
    Reflection refl;
    refl.k = r[kStarIndex];
    refl.proj_root = space.project(r);
    return refl;
}

/// Full-space root vector lift(proj_root, k) of a canonical reflection.
inline Vec reflection_root(const Space& space, const Reflection& r) {
    return space.lift(r.proj_root, r.k);
}

/// Arm coefficients of a positive root with center coefficient one are all
/// zero or a prefix of ones followed by zeros, per arm.
inline bool coefficient_profile_check(const Space& space, const Vec& proj_root) {
    space.check_proj_dim(proj_root);
    if (root_sign(proj_root) < 0 || proj_root[0] != 1)
        throw ValidationError("root must be positive with center coefficient 1");
    const DiagramSpec& spec = space.spec();
    std::size_t idx = 1;
    for (int p : spec.arms) {
        bool zero_seen = false;
        for (int j = 0; j < p; ++j, ++idx) {
            const Int c = proj_root[idx];
            if (c != 0 && c != 1) return false;
            if (c == 0) zero_seen = true;
            if (c == 1 && zero_seen) return false;
        }
    }
    return true;
}

/// Word in the arm simple reflections (as projected basis indices, applied
/// left to right) mapping a root in (alpha_1 + arm lattice) to alpha_1.
/// Follows the arm-stripping construction: for each arm carrying a prefix of
/// ones, reflect inward starting at the vertex adjacent to the center.
inline std::vector<std::size_t> strip_to_alpha1(const Space& space, const Vec& proj_root) {
    space.check_proj_dim(proj_root);
    if (root_sign(proj_root) < 0 || proj_root[0] != 1)
        throw ValidationError("root must lie in alpha_1 + arm lattice");
    if (!coefficient_profile_check(space, proj_root))
        throw NotARootError("arm coefficients violate the prefix profile");
    const DiagramSpec& spec = space.spec();
    std::vector<std::size_t> word;
    Vec current = proj_root;
    std::size_t arm_base = 1;
    for (int p : spec.arms) {
        std::size_t ones = 0;
        while (ones < static_cast<std::size_t>(p) && current[arm_base + ones] == 1) ++ones;
        for (std::size_t j = ones; j-- > 0;) {
            const std::size_t idx = arm_base + j;
            word.push_back(idx);
            current = space.proj_reflect(space.proj_basis_vector(idx), current);
        }
        arm_base += static_cast<std::size_t>(p);
    }
    // Replay already happened in `current`; verify the construction.
    if (current != space.proj_basis_vector(0))
        throw NotARootError("stripping did not reach the center root");
    return word;
}

} // namespace extweyl
