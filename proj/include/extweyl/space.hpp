#pragma once

#include <cstddef>
#include <vector>

#include "extweyl/checked.hpp"
#include "extweyl/diagram.hpp"
#include "extweyl/errors.hpp"

namespace extweyl {

/// Exact arithmetic context for one diagram: the Gram matrix on the full
/// basis B, the Gram matrix of the projected basis (B with the starred root
/// removed), and the radical generator a. All vectors are coordinate tuples
/// in the fixed basis orderings of DiagramSpec.
class Space {
public:
    explicit Space(DiagramSpec spec)
        : spec_(std::move(spec)), gram_(build_gram(spec_)), n_(spec_.rank()),
          type_(type_of(inertia(gram_))) {
        // Projected Gram: delete the starred row/column. Valid because the
        // starred root is congruent to the center root modulo the radical.
        proj_gram_.assign(n_ - 1, Vec(n_ - 1, 0));
        for (std::size_t i = 0; i < n_ - 1; ++i)
            for (std::size_t j = 0; j < n_ - 1; ++j)
                proj_gram_[i][j] = gram_[full_index(i)][full_index(j)];
        radical_.assign(n_, 0);
        radical_[kCenterIndex] = -1;
        radical_[kStarIndex] = 1;
    }

    const DiagramSpec& spec() const { return spec_; }
    const Mat& gram() const { return gram_; }
    const Mat& proj_gram() const { return proj_gram_; }
    std::size_t dim() const { return n_; }
    std::size_t proj_dim() const { return n_ - 1; }
    WeylType type() const { return type_; }
    const Vec& radical() const { return radical_; }

    void require_non_tubular() const {
        if (type_ == WeylType::Tubular) throw UnsupportedTypeError();
    }

    /// Full basis index corresponding to projected index (0 = center, then arms).
    std::size_t full_index(std::size_t proj) const { return proj == 0 ? 0 : proj + 1; }

    void check_dim(const Vec& v) const {
        if (v.size() != n_) throw ContextError("vector has wrong dimension for this diagram");
    }

    void check_proj_dim(const Vec& v) const {
        if (v.size() != n_ - 1) throw ContextError("projected vector has wrong dimension");
    }

    Int bilinear(const Vec& u, const Vec& v) const {
        check_dim(u);
        check_dim(v);
        return form(gram_, u, v);
    }

    Int proj_bilinear(const Vec& u, const Vec& v) const {
        check_proj_dim(u);
        check_proj_dim(v);
        return form(proj_gram_, u, v);
    }

    /// s_alpha(v) = v - (alpha, v) alpha for a norm-2 root alpha.
    Vec reflect(const Vec& alpha, const Vec& v) const {
        if (bilinear(alpha, alpha) != 2) throw NotARootError("reflecting vector must have norm 2");
        const Int c = bilinear(alpha, v);
        Vec r = v;
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = checked_sub(r[i], checked_mul(c, alpha[i]));
        return r;
    }

    Vec proj_reflect(const Vec& alpha, const Vec& v) const {
        if (proj_bilinear(alpha, alpha) != 2) throw NotARootError("reflecting vector must have norm 2");
        const Int c = proj_bilinear(alpha, v);
        Vec r = v;
        for (std::size_t i = 0; i < n_ - 1; ++i)
            r[i] = checked_sub(r[i], checked_mul(c, alpha[i]));
        return r;
    }

    /// Coordinates modulo the radical: the starred coefficient folds into the
    /// center coefficient.
    Vec project(const Vec& v) const {
        check_dim(v);
        Vec r(n_ - 1);
        r[0] = checked_add(v[kCenterIndex], v[kStarIndex]);
        for (std::size_t i = 1; i < n_ - 1; ++i) r[i] = v[i + 1];
        return r;
    }

    /// The representative with zero starred coefficient, shifted by k copies
    /// of the radical generator; project(lift(v, k)) == v for all k.
    Vec lift(const Vec& v, Int k) const {
        check_proj_dim(v);
        Vec r(n_, 0);
        r[kCenterIndex] = checked_sub(v[0], k);
        r[kStarIndex] = k;
        for (std::size_t i = 1; i < n_ - 1; ++i) r[i + 1] = v[i];
        return r;
    }

    Vec basis_vector(std::size_t i) const {
        if (i >= n_) throw ValidationError("basis index out of range");
        Vec e(n_, 0);
        e[i] = 1;
        return e;
    }

    Vec proj_basis_vector(std::size_t i) const {
        if (i >= n_ - 1) throw ValidationError("projected basis index out of range");
        Vec e(n_ - 1, 0);
        e[i] = 1;
        return e;
    }

private:
    static Int form(const Mat& g, const Vec& u, const Vec& v) {
        Int total = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            Int row = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                row = checked_add(row, checked_mul(g[i][j], v[j]));
            total = checked_add(total, checked_mul(u[i], row));
        }
        return total;
    }

    DiagramSpec spec_;
    Mat gram_;
    std::size_t n_;
    WeylType type_;
    Mat proj_gram_;
    Vec radical_;
};

} // namespace extweyl
