#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "extweyl/checked.hpp"
#include "extweyl/errors.hpp"
#include "extweyl/linalg.hpp"
#include "extweyl/rootsys.hpp"
#include "extweyl/space.hpp"

namespace extweyl {

/// Group elements are exact integer matrices acting on V in the fixed basis;
/// matrix equality is element equality. The normal-form pair is a derived
/// view, never the canonical representation.
using GroupElement = Mat;

inline GroupElement group_identity(const Space& space) { return identity_matrix(space.dim()); }

inline bool preserves_form(const Space& space, const GroupElement& m) {
    if (m.size() != space.dim()) return false;
    return mat_mul(mat_transpose(m), mat_mul(space.gram(), m)) == space.gram();
}

inline bool fixes_radical(const Space& space, const GroupElement& m) {
    if (m.size() != space.dim()) return false;
    return mat_vec(m, space.radical()) == space.radical();
}

inline void require_element(const Space& space, const GroupElement& m) {
    if (!preserves_form(space, m)) throw NotAnElementError("matrix does not preserve the form");
    if (!fixes_radical(space, m)) throw NotAnElementError("matrix does not fix the radical");
}

inline GroupElement multiply(const GroupElement& x, const GroupElement& y) { return mat_mul(x, y); }

inline GroupElement inverse(const GroupElement& x) { return integer_inverse(x); }

inline Vec act(const GroupElement& x, const Vec& v) { return mat_vec(x, v); }

/// Matrix of the simple reflection in basis vector `index`.
inline GroupElement simple_reflection(const Space& space, std::size_t index) {
    const Vec alpha = space.basis_vector(index);
    GroupElement m(space.dim(), Vec(space.dim()));
    for (std::size_t j = 0; j < space.dim(); ++j) {
        Vec col = space.reflect(alpha, space.basis_vector(j));
        for (std::size_t i = 0; i < space.dim(); ++i) m[i][j] = col[i];
    }
    return m;
}

/// Matrix of s_{alpha + k a} for a canonical reflection.
inline GroupElement reflection_element(const Space& space, const Reflection& r) {
    const Vec root = reflection_root(space, r);
    GroupElement m(space.dim(), Vec(space.dim()));
    for (std::size_t j = 0; j < space.dim(); ++j) {
        Vec col = space.reflect(root, space.basis_vector(j));
        for (std::size_t i = 0; i < space.dim(); ++i) m[i][j] = col[i];
    }
    return m;
}

/// w s_alpha w^{-1} = s_{w(alpha)}, computed on the root vector.
inline Reflection conjugate_reflection(const Space& space, const GroupElement& w, const Reflection& r) {
    return canonical_reflection(space, act(w, reflection_root(space, r)));
}

/// Translation E(a (x) beta): x -> x - (beta, x) a. These form the kernel of
/// the projection onto the projected Coxeter group.
inline GroupElement eichler(const Space& space, const Vec& beta) {
    space.check_proj_dim(beta);
    const Vec beta_lift = space.lift(beta, 0);
    const Vec& a = space.radical();
    GroupElement m(space.dim(), Vec(space.dim()));
    for (std::size_t j = 0; j < space.dim(); ++j) {
        const Int c = space.bilinear(beta_lift, space.basis_vector(j));
        for (std::size_t i = 0; i < space.dim(); ++i)
            m[i][j] = checked_sub(i == j ? 1 : 0, checked_mul(c, a[i]));
    }
    return m;
}

/// Matrix of the action on the projected space (columns are projections of
/// the images of the projected basis vectors).
inline Mat projected_matrix(const Space& space, const GroupElement& w) {
    Mat p(space.proj_dim(), Vec(space.proj_dim()));
    for (std::size_t j = 0; j < space.proj_dim(); ++j) {
        Vec col = space.project(act(w, space.basis_vector(space.full_index(j))));
        for (std::size_t i = 0; i < space.proj_dim(); ++i) p[i][j] = col[i];
    }
    return p;
}

/// The unique form-preserving lift of a projected-group matrix that has zero
/// translation vector: it maps span of the unstarred basis to itself and
/// fixes the radical.
inline GroupElement embed(const Space& space, const Mat& projected) {
    if (projected.size() != space.proj_dim()) throw ContextError("projected matrix has wrong dimension");
    GroupElement m(space.dim(), Vec(space.dim()));
    auto set_col = [&](std::size_t j, const Vec& col) {
        for (std::size_t i = 0; i < space.dim(); ++i) m[i][j] = col[i];
    };
    for (std::size_t pj = 0; pj < space.proj_dim(); ++pj) {
        Vec pcol(space.proj_dim());
        for (std::size_t i = 0; i < space.proj_dim(); ++i) pcol[i] = projected[i][pj];
        set_col(space.full_index(pj), space.lift(pcol, 0));
    }
    // alpha_star = alpha_center + a, and the embedding fixes a.
    Vec star_col(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        star_col[i] = checked_add(m[i][kCenterIndex], space.radical()[i]);
    set_col(kStarIndex, star_col);
    return m;
}

struct NormalForm {
    Mat projected;   // matrix on the projected space
    Vec translation; // TR(w) in projected-basis coordinates
};

/// Translation vector of w, recovered from the difference between w and the
/// zero-translation lift of its projected matrix via the nondegenerate
/// projected form.
inline Vec translation_vector(const Space& space, const GroupElement& w) {
    space.require_non_tubular();
    require_element(space, w);
    const Mat proj = projected_matrix(space, w);
    const GroupElement lifted = embed(space, proj);
    // w(e_j) = lifted(e_j) - (TR(w), e_j) a; read off the pairing from the
    // starred coordinate of the difference (a has starred coordinate 1).
    RatVec pairings(space.proj_dim());
    for (std::size_t pj = 0; pj < space.proj_dim(); ++pj) {
        const std::size_t j = space.full_index(pj);
        pairings[pj] = Rat(checked_sub(lifted[kStarIndex][j], w[kStarIndex][j]));
    }
    RatVec coords = rational_solve(to_rational(space.proj_gram()), pairings);
    Vec tr(space.proj_dim());
    for (std::size_t i = 0; i < space.proj_dim(); ++i) {
        if (denominator(coords[i]) != 1)
            throw NotAnElementError("translation vector is not a lattice point");
        boost::multiprecision::cpp_int num = numerator(coords[i]);
        if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
            throw OverflowError();
        tr[i] = static_cast<Int>(num);
    }
    return tr;
}

inline NormalForm normal_form(const Space& space, const GroupElement& w) {
    NormalForm nf;
    nf.projected = projected_matrix(space, w);
    nf.translation = translation_vector(space, w);
    // The decomposition is verified, not assumed.
    if (multiply(embed(space, nf.projected), eichler(space, nf.translation)) != w)
        throw NotAnElementError("matrix does not factor through the semidirect structure");
    return nf;
}

inline GroupElement from_normal_form(const Space& space, const NormalForm& nf) {
    GroupElement lifted = embed(space, nf.projected);
    require_element(space, lifted);
    return multiply(lifted, eichler(space, nf.translation));
}

/// Basis indices of the arm vertices in diagram order; the identity ordering
/// for Coxeter transformations.
inline std::vector<std::size_t> standard_ordering(const Space& space) {
    std::vector<std::size_t> ord;
    for (std::size_t i = 2; i < space.dim(); ++i) ord.push_back(i);
    return ord;
}

inline void validate_ordering(const Space& space, const std::vector<std::size_t>& ordering) {
    std::vector<std::size_t> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != standard_ordering(space))
        throw ValidationError("ordering must be a permutation of the arm vertices");
}

/// Product of the arm simple reflections in the given order, followed by the
/// center and starred-center reflections.
inline GroupElement coxeter_transformation(const Space& space, const std::vector<std::size_t>& ordering) {
    validate_ordering(space, ordering);
    GroupElement c = group_identity(space);
    for (std::size_t idx : ordering) c = multiply(c, simple_reflection(space, idx));
    c = multiply(c, simple_reflection(space, kCenterIndex));
    c = multiply(c, simple_reflection(space, kStarIndex));
    return c;
}

/// Rank of (w - id) over the rationals.
inline std::size_t mov_dimension(const GroupElement& w) {
    Mat d = w;
    for (std::size_t i = 0; i < d.size(); ++i) d[i][i] = checked_sub(d[i][i], 1);
    return rational_rank(d);
}

/// Conjugating witness x with x^{-1} c x = d for the Coxeter transformations
/// of two orderings. Found by breadth-first search in the group generated by
/// the non-initial arm reflections (a direct product of small symmetric
/// groups); the witness is verified by multiplication before returning.
inline GroupElement coxeter_conjugator(const Space& space,
                                       const std::vector<std::size_t>& ordering_c,
                                       const std::vector<std::size_t>& ordering_d) {
    const GroupElement c = coxeter_transformation(space, ordering_c);
    const GroupElement d = coxeter_transformation(space, ordering_d);
    // Generators: s_{ij} for j >= 2 within each arm.
    std::vector<GroupElement> gens;
    const DiagramSpec& spec = space.spec();
    for (std::size_t i = 1; i <= spec.arms.size(); ++i)
        for (std::size_t j = 2; j <= static_cast<std::size_t>(spec.arms[i - 1]); ++j)
            gens.push_back(simple_reflection(space, spec.arm_index(i, j)));
    auto satisfies = [&](const GroupElement& x) {
        return multiply(multiply(inverse(x), c), x) == d;
    };
    std::set<Mat> seen;
    std::vector<GroupElement> frontier{group_identity(space)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        for (const GroupElement& x : frontier)
            if (satisfies(x)) return x;
        std::vector<GroupElement> next;
        for (const GroupElement& x : frontier)
            for (const GroupElement& g : gens) {
                GroupElement y = multiply(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    throw Error("no conjugator found in the arm subgroup"); // unreachable for valid orderings
}

/// TR(xy) = y_bar^{-1} TR(x) + TR(y), evaluated on the projected space.
inline bool translation_cocycle_check(const Space& space, const GroupElement& x, const GroupElement& y) {
    const Vec tr_xy = translation_vector(space, multiply(x, y));
    const Vec tr_x = translation_vector(space, x);
    const Vec tr_y = translation_vector(space, y);
    const Mat ybar_inv = integer_inverse(projected_matrix(space, y));
    Vec expected = mat_vec(ybar_inv, tr_x);
    for (std::size_t i = 0; i < expected.size(); ++i)
        expected[i] = checked_add(expected[i], tr_y[i]);
    return tr_xy == expected;
}

/// Recognizes a reflection matrix and returns its canonical representative.
inline std::optional<Reflection> as_reflection(const Space& space, const GroupElement& w) {
    if (w.size() != space.dim()) return std::nullopt;
    if (mov_dimension(w) != 1) return std::nullopt;
    // The moved line is spanned by the root; find a nonzero column of w - id
    // and scale it to a primitive norm-2 vector.
    Vec root;
    for (std::size_t j = 0; j < space.dim() && root.empty(); ++j) {
        Vec col(space.dim());
        bool nonzero = false;
        for (std::size_t i = 0; i < space.dim(); ++i) {
            col[i] = checked_sub(w[i][j], i == j ? 1 : 0);
            if (col[i] != 0) nonzero = true;
        }
        if (nonzero) root = std::move(col);
    }
    if (root.empty()) return std::nullopt;
    Int g = 0;
    for (Int c : root) g = std::gcd(g, c);
    for (Int& c : root) c /= g;
    if (space.bilinear(root, root) != 2) return std::nullopt;
    Reflection r;
    try {
        r = canonical_reflection(space, root);
    } catch (const NotARootError&) {
        return std::nullopt;
    }
    if (reflection_element(space, r) != w) return std::nullopt;
    return r;
}

} // namespace extweyl
