#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extweyl/group.hpp"
#include "extweyl/hurwitz.hpp"
#include "extweyl/rootsys.hpp"
#include "extweyl/space.hpp"

namespace extweyl {

struct LengthBounds {
    Int lower = 0;
    std::optional<Int> upper;
    bool exact = false;
};

namespace detail {

/// Candidate reflection set: positive enumerated projected roots crossed
/// with the translation range.
inline std::vector<Reflection> reflection_candidates(const Space& space, const RootSetSlice& slice,
                                                     Int k_bound) {
    std::vector<Reflection> cand;
    for (const Vec& root : slice.roots) {
        if (root_sign(root) <= 0) continue;
        for (Int k = -k_bound; k <= k_bound; ++k) cand.push_back(Reflection{root, k});
    }
    return cand;
}

/// Depth-limited factorization search: w as a product of exactly `depth`
/// candidate reflections. The moved-space rank is a lower bound for the
/// reflection length, which prunes the tree.
inline bool factor_search(const Space& space, const GroupElement& w, std::size_t depth,
                          const std::vector<Reflection>& cand, std::vector<Reflection>& out) {
    if (depth == 0) return w == group_identity(space);
    if (mov_dimension(w) > depth) return false;
    for (const Reflection& t : cand) {
        // w = t * rest, reflections are involutions.
        GroupElement rest = multiply(reflection_element(space, t), w);
        out.push_back(t);
        if (factor_search(space, rest, depth - 1, cand, out)) return true;
        out.pop_back();
    }
    return false;
}

inline std::optional<std::vector<Reflection>> factor_exact(const Space& space, const GroupElement& w,
                                                           std::size_t depth,
                                                           const std::vector<Reflection>& cand) {
    std::vector<Reflection> out;
    if (factor_search(space, w, depth, cand, out)) return out;
    return std::nullopt;
}

} // namespace detail

/// Sound two-sided bounds for the reflection length: the moved-space rank
/// from below, the shortest factorization found by iterative deepening from
/// above. The lower bound can be strictly smaller than the true length.
inline LengthBounds reflection_length_bounds(const Space& space, const GroupElement& w, Int k_bound,
                                             std::size_t depth_cap, Int height_bound = 10) {
    space.require_non_tubular();
    require_element(space, w);
    LengthBounds bounds;
    bounds.lower = static_cast<Int>(mov_dimension(w));
    const RootSetSlice slice = enumerate_projected(space, height_bound);
    const auto cand = detail::reflection_candidates(space, slice, k_bound);
    for (std::size_t depth = static_cast<std::size_t>(bounds.lower); depth <= depth_cap; ++depth) {
        if (detail::factor_exact(space, w, depth, cand)) {
            bounds.upper = static_cast<Int>(depth);
            break;
        }
    }
    bounds.exact = bounds.upper && *bounds.upper == bounds.lower;
    return bounds;
}

struct BelowBudgets {
    Int k_bound = 4;
    Int height_bound = 10;
};

/// Divisibility witness: a reduced reflection factorization of c whose first
/// prefix_length entries multiply to the tested element.
struct BelowWitness {
    Factorization factorization;
    std::size_t prefix_length = 0;
};

/// Searches for a witness that w lies below the Coxeter transformation c in
/// absolute order, using that the reflection length of c equals the rank.
inline std::optional<BelowWitness> below(const Space& space, const GroupElement& w,
                                         const GroupElement& c, const BelowBudgets& budgets = {}) {
    space.require_non_tubular();
    require_element(space, w);
    const std::size_t total = space.dim();
    const RootSetSlice slice = enumerate_projected(space, budgets.height_bound);
    const auto cand = detail::reflection_candidates(space, slice, budgets.k_bound);
    const GroupElement quotient = multiply(integer_inverse(w), c);
    for (std::size_t len_w = mov_dimension(w); len_w <= total; ++len_w) {
        auto head = detail::factor_exact(space, w, len_w, cand);
        if (!head) continue;
        auto tail = detail::factor_exact(space, quotient, total - len_w, cand);
        if (!tail) continue;
        std::vector<Reflection> tuple = *head;
        tuple.insert(tuple.end(), tail->begin(), tail->end());
        Factorization fact = make_factorization(space, std::move(tuple));
        if (fact.product != c) throw Error("below witness failed replay");
        return BelowWitness{std::move(fact), len_w};
    }
    return std::nullopt;
}

struct IntervalElement {
    GroupElement element;
    Factorization witness;        // reduced factorization of c
    std::size_t prefix_length = 0; // element = product of this prefix of the witness
};

struct IntervalSlice {
    std::vector<IntervalElement> elements;
    std::vector<std::pair<std::size_t, std::size_t>> covers; // indices into elements
    std::size_t move_budget = 0;
    Int k_bound = 0;
    bool complete = true; // orbit-ball enumeration did not hit its node cap
};

/// Prefix products of the orbit ball of the standard factorization, filtered
/// by the translation bound, with cover relations certified by reflection
/// quotients.
inline IntervalSlice interval_slice(const Space& space, const std::vector<std::size_t>& ordering,
                                    std::size_t move_budget, Int k_bound,
                                    std::size_t node_cap = 200'000) {
    space.require_non_tubular();
    const Factorization standard = standard_factorization(space, ordering);
    OrbitBall ball = orbit_ball(space, standard, move_budget, node_cap);

    IntervalSlice slice;
    slice.move_budget = move_budget;
    slice.k_bound = k_bound;
    slice.complete = ball.complete;

    std::map<Mat, std::pair<Factorization, std::size_t>> seen; // element -> (witness, prefix len)
    for (const Factorization& f : ball.elements) {
        bool within = true;
        for (const Reflection& t : f.tuple)
            if (t.k > k_bound || t.k < -k_bound) { within = false; break; }
        if (!within) continue;
        GroupElement prefix = group_identity(space);
        for (std::size_t len = 0; len <= f.length(); ++len) {
            if (len > 0) prefix = multiply(prefix, reflection_element(space, f.tuple[len - 1]));
            seen.emplace(prefix, std::make_pair(f, len));
        }
    }
    for (auto& [mat, data] : seen)
        slice.elements.push_back(IntervalElement{mat, data.first, data.second});
    std::sort(slice.elements.begin(), slice.elements.end(),
              [](const IntervalElement& a, const IntervalElement& b) {
                  return std::tie(a.prefix_length, a.element) < std::tie(b.prefix_length, b.element);
              });
    for (std::size_t i = 0; i < slice.elements.size(); ++i)
        for (std::size_t j = 0; j < slice.elements.size(); ++j) {
            if (slice.elements[j].prefix_length != slice.elements[i].prefix_length + 1) continue;
            GroupElement q = multiply(integer_inverse(slice.elements[i].element),
                                      slice.elements[j].element);
            if (as_reflection(space, q)) slice.covers.emplace_back(i, j);
        }
    return slice;
}

enum class GenerationStatus { Generates, DoesNotGenerate, Unknown };

struct GenerationCertificate {
    GenerationStatus status = GenerationStatus::Unknown;
    std::size_t projected_order = 0;        // size of the closure of the projected entries
    std::size_t lattice_rank = 0;           // rank of the conjugated translation lattice
    std::optional<Int> lattice_index;       // index in the projected root lattice when full rank
};

namespace detail {

inline Mat proj_reflection_matrix(const Space& space, const Vec& proj_root) {
    const std::size_t nb = space.proj_dim();
    Mat m(nb, Vec(nb));
    for (std::size_t j = 0; j < nb; ++j) {
        Vec col = space.proj_reflect(proj_root, space.proj_basis_vector(j));
        for (std::size_t i = 0; i < nb; ++i) m[i][j] = col[i];
    }
    return m;
}

/// BFS closure of a matrix group; empty optional when the cap is hit.
inline std::optional<std::set<Mat>> matrix_closure(const std::vector<Mat>& gens, std::size_t n,
                                                   std::size_t cap) {
    std::set<Mat> seen{identity_matrix(n)};
    std::vector<Mat> frontier{identity_matrix(n)};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& x : frontier)
            for (const Mat& g : gens) {
                Mat y = mat_mul(x, g);
                if (seen.size() >= cap && !seen.count(y)) return std::nullopt;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

} // namespace detail

/// Certificate that the entries of a factorization generate the whole group:
/// the projected entries must generate the projected Coxeter group, and the
/// lattice spanned by all conjugates of the entries' translation vectors
/// must be the full projected root lattice. Both checks are exact; the wild
/// case returns Unknown when the projected closure does not stabilize.
inline GenerationCertificate generates(const Space& space, const Factorization& f,
                                       std::size_t closure_cap = 2'000'000) {
    space.require_non_tubular();
    GenerationCertificate cert;
    std::vector<Mat> entry_gens;
    for (const Reflection& t : f.tuple)
        entry_gens.push_back(detail::proj_reflection_matrix(space, t.proj_root));
    auto closure = detail::matrix_closure(entry_gens, space.proj_dim(), closure_cap);
    if (!closure) {
        cert.status = GenerationStatus::Unknown;
        return cert;
    }
    cert.projected_order = closure->size();

    if (space.type() == WeylType::Domestic) {
        std::vector<Mat> simple_gens;
        for (std::size_t i = 0; i < space.proj_dim(); ++i)
            simple_gens.push_back(detail::proj_reflection_matrix(space, space.proj_basis_vector(i)));
        auto full = detail::matrix_closure(simple_gens, space.proj_dim(), closure_cap);
        if (!full) {
            cert.status = GenerationStatus::Unknown;
            return cert;
        }
        if (closure->size() != full->size()) {
            cert.status = GenerationStatus::DoesNotGenerate;
            return cert;
        }
    } else {
        // Wild projected groups are infinite; a stabilized closure is finite
        // and therefore proper.
        cert.status = GenerationStatus::DoesNotGenerate;
        return cert;
    }

    // Translation saturation: conjugates of the k * alpha translation vectors.
    std::vector<Vec> lattice_gens;
    for (const Reflection& t : f.tuple) {
        if (t.k == 0) continue;
        Vec tr(t.proj_root.size());
        for (std::size_t i = 0; i < tr.size(); ++i) tr[i] = checked_mul(t.k, t.proj_root[i]);
        for (const Mat& g : *closure) lattice_gens.push_back(mat_vec(g, tr));
    }
    LatticeShape shape = lattice_shape(lattice_gens, space.proj_dim());
    cert.lattice_rank = shape.rank;
    if (shape.index) {
        if (*shape.index > std::numeric_limits<Int>::max()) throw OverflowError();
        cert.lattice_index = static_cast<Int>(*shape.index);
    }
    cert.status = (shape.index && *shape.index == 1) ? GenerationStatus::Generates
                                                     : GenerationStatus::DoesNotGenerate;
    return cert;
}

namespace detail {

inline std::string normal_form_label(const Space& space, const GroupElement& w) {
    const NormalForm nf = normal_form(space, w);
    std::ostringstream os;
    os << "w=[";
    for (std::size_t i = 0; i < nf.projected.size(); ++i) {
        if (i) os << ";";
        for (std::size_t j = 0; j < nf.projected[i].size(); ++j) {
            if (j) os << ",";
            os << nf.projected[i][j];
        }
    }
    os << "] t=(";
    for (std::size_t i = 0; i < nf.translation.size(); ++i) {
        if (i) os << ",";
        os << nf.translation[i];
    }
    os << ")";
    return os.str();
}

} // namespace detail

/// DOT digraph of the cover relations, nodes in deterministic slice order.
inline std::string export_poset_dot(const Space& space, const IntervalSlice& slice) {
    std::ostringstream os;
    os << "digraph interval {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < slice.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << detail::normal_form_label(space, slice.elements[i].element)
           << "\"];\n";
    for (const auto& [lo, hi] : slice.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace extweyl
