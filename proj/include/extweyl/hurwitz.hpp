#pragma once

#include <algorithm>
#include <cstring>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "extweyl/group.hpp"
#include "extweyl/rootsys.hpp"
#include "extweyl/space.hpp"

namespace extweyl {

/// Ordered tuple of reflections with cached product. The product is fixed by
/// every braid move.
struct Factorization {
    std::vector<Reflection> tuple;
    GroupElement product;

    std::size_t length() const { return tuple.size(); }
    bool operator==(const Factorization& other) const { return tuple == other.tuple; }
};

struct BraidWord {
    std::vector<int> letters; // signed 1-based generator indices

    BraidWord inverse() const {
        BraidWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }
};

inline Factorization make_factorization(const Space& space, std::vector<Reflection> tuple) {
    Factorization f;
    f.product = group_identity(space);
    for (const Reflection& t : tuple)
        f.product = multiply(f.product, reflection_element(space, t));
    f.tuple = std::move(tuple);
    return f;
}

/// One Hurwitz move. Positive index i swaps positions i, i+1 and conjugates
/// the left entry past the right one; negative index is the inverse move.
inline Factorization apply_move(const Space& space, const Factorization& f, int letter) {
    const int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || static_cast<std::size_t>(idx) >= f.length())
        throw ValidationError("braid letter out of range");
    const std::size_t i = static_cast<std::size_t>(idx - 1);
    Factorization g = f;
    if (letter > 0) {
        // (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^{-1} t_i t_{i+1}); reflections
        // are involutions, so the conjugate is s_{t_{i+1}(root_i)}.
        const Vec image = space.reflect(reflection_root(space, f.tuple[i + 1]),
                                        reflection_root(space, f.tuple[i]));
        g.tuple[i] = f.tuple[i + 1];
        g.tuple[i + 1] = canonical_reflection(space, image);
    } else {
        const Vec image = space.reflect(reflection_root(space, f.tuple[i]),
                                        reflection_root(space, f.tuple[i + 1]));
        g.tuple[i] = canonical_reflection(space, image);
        g.tuple[i + 1] = f.tuple[i];
    }
    return g;
}

inline Factorization apply_braid(const Space& space, Factorization f, const BraidWord& word) {
    for (int letter : word.letters) f = apply_move(space, f, letter);
    return f;
}

/// The defining tuple of a Coxeter transformation: the arm simples in the
/// given order, then (alpha_1, 0) and (alpha_1, 1).
inline Factorization standard_factorization(const Space& space, const std::vector<std::size_t>& ordering) {
    space.require_non_tubular();
    validate_ordering(space, ordering);
    std::vector<Reflection> tuple;
    for (std::size_t idx : ordering)
        tuple.push_back(canonical_reflection(space, space.basis_vector(idx)));
    Reflection center{space.proj_basis_vector(0), 0};
    Reflection star{space.proj_basis_vector(0), 1};
    tuple.push_back(center);
    tuple.push_back(star);
    return make_factorization(space, std::move(tuple));
}

/// Seeded uniformly random walk in the move graph; returns the endpoint and
/// the word used.
inline std::pair<Factorization, BraidWord> random_walk(const Space& space, const Factorization& f,
                                                       std::size_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int max_idx = static_cast<int>(f.length()) - 1;
    if (max_idx < 1 && steps > 0) throw ValidationError("factorization too short for moves");
    std::uniform_int_distribution<int> dist(1, 2 * max_idx);
    BraidWord word;
    Factorization current = f;
    for (std::size_t s = 0; s < steps; ++s) {
        int raw = dist(rng);
        int letter = raw <= max_idx ? raw : -(raw - max_idx);
        word.letters.push_back(letter);
        current = apply_move(space, current, letter);
    }
    return {std::move(current), std::move(word)};
}

namespace detail {

inline std::string tuple_key(const Factorization& f) {
    std::string key;
    key.reserve(f.tuple.size() * (f.tuple.empty() ? 1 : f.tuple[0].proj_root.size() + 1) * sizeof(Int));
    auto put = [&key](Int v) {
        char buf[sizeof(Int)];
        std::memcpy(buf, &v, sizeof(Int));
        key.append(buf, sizeof(Int));
    };
    for (const Reflection& t : f.tuple) {
        for (Int c : t.proj_root) put(c);
        put(t.k);
    }
    return key;
}

/// Search-ordering heuristic: translation magnitude plus projected mismatch
/// against the target tuple. Guides expansion only; correctness comes from
/// replay verification.
inline Int potential(const Factorization& f, const Factorization& target) {
    Int p = 0;
    for (std::size_t i = 0; i < f.tuple.size(); ++i) {
        Int dk = f.tuple[i].k - target.tuple[i].k;
        p = checked_add(p, dk < 0 ? -dk : dk);
        if (f.tuple[i].proj_root != target.tuple[i].proj_root) p = checked_add(p, 1);
    }
    return p;
}

struct SearchNode {
    Factorization fact;
    std::string parent_key; // empty for roots
    int move = 0;           // move that produced this node from the parent
};

struct QueueEntry {
    Int priority;
    std::uint64_t order;
    std::string key;
    bool operator>(const QueueEntry& other) const {
        return std::tie(priority, order) > std::tie(other.priority, other.order);
    }
};

} // namespace detail

struct ConnectResult {
    std::optional<BraidWord> word; // set on success
    std::size_t nodes = 0;         // nodes expanded
};

/// Bidirectional guided search for a braid word carrying f to g. Both tuples
/// must have the same length and product. The returned word is verified by
/// replay before being reported. Exhausting the node budget is a result, not
/// an error.
inline ConnectResult connect(const Space& space, const Factorization& f, const Factorization& g,
                             std::size_t budget) {
    if (f.length() != g.length()) throw ValidationError("factorization lengths differ");
    if (f.product != g.product) throw ValidationError("factorization products differ");

    using detail::QueueEntry;
    using detail::SearchNode;
    using Side = std::unordered_map<std::string, SearchNode>;
    Side sides[2];
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> open[2];
    const Factorization* targets[2] = {&g, &f};
    std::uint64_t order = 0;

    const std::string f_key = detail::tuple_key(f);
    const std::string g_key = detail::tuple_key(g);
    sides[0].emplace(f_key, SearchNode{f, "", 0});
    sides[1].emplace(g_key, SearchNode{g, "", 0});
    open[0].push({detail::potential(f, g), order++, f_key});
    open[1].push({detail::potential(g, f), order++, g_key});

    auto word_to_root = [&](int side, std::string key) {
        std::vector<int> letters;
        while (true) {
            const SearchNode& node = sides[side].at(key);
            if (node.parent_key.empty()) break;
            letters.push_back(node.move);
            key = node.parent_key;
        }
        std::reverse(letters.begin(), letters.end());
        BraidWord w;
        w.letters = std::move(letters);
        return w;
    };

    auto finish = [&](const std::string& meet, std::size_t nodes) {
        // f --word0--> meet, g --word1--> meet.
        BraidWord w = word_to_root(0, meet);
        BraidWord back = word_to_root(1, meet).inverse();
        w.letters.insert(w.letters.end(), back.letters.begin(), back.letters.end());
        if (!(apply_braid(space, f, w) == g)) throw Error("connect produced an unverifiable word");
        ConnectResult res;
        res.word = std::move(w);
        res.nodes = nodes;
        return res;
    };

    if (sides[1].count(f_key)) return finish(f_key, 0);

    std::size_t expanded = 0;
    const int max_letter = static_cast<int>(f.length()) - 1;
    while (expanded < budget && (!open[0].empty() || !open[1].empty())) {
        const int side = (open[1].empty() || (!open[0].empty() && open[0].size() <= open[1].size())) ? 0 : 1;
        QueueEntry entry = open[side].top();
        open[side].pop();
        const Factorization current = sides[side].at(entry.key).fact;
        ++expanded;
        for (int letter = -max_letter; letter <= max_letter; ++letter) {
            if (letter == 0) continue;
            Factorization next = apply_move(space, current, letter);
            std::string key = detail::tuple_key(next);
            if (sides[side].count(key)) continue;
            sides[side].emplace(key, SearchNode{next, entry.key, letter});
            if (sides[1 - side].count(key)) return finish(key, expanded);
            open[side].push({detail::potential(next, *targets[side]), order++, std::move(key)});
        }
    }
    ConnectResult res;
    res.nodes = expanded;
    return res;
}

/// All length-2 factorizations of s_1 s_{1*} whose first entry has |k| within
/// the bound: the pairs ((alpha_1, k), (alpha_1, k+1)).
inline std::vector<Factorization> dihedral_factorizations(const Space& space, Int k_bound) {
    space.require_non_tubular();
    if (k_bound < 0) throw ValidationError("k bound must be nonnegative");
    std::vector<Factorization> out;
    const Vec alpha1 = space.proj_basis_vector(0);
    for (Int k = -k_bound; k <= k_bound; ++k) {
        std::vector<Reflection> tuple{{alpha1, k}, {alpha1, k + 1}};
        out.push_back(make_factorization(space, std::move(tuple)));
    }
    return out;
}

struct OrbitBall {
    std::vector<Factorization> elements; // canonically sorted
    bool complete = true;
    std::size_t count = 0;
};

/// All factorizations reachable within the move budget, deterministically
/// ordered by canonical tuple key.
inline OrbitBall orbit_ball(const Space& space, const Factorization& f, std::size_t move_budget,
                            std::size_t node_cap = 1'000'000) {
    std::map<std::string, Factorization> seen;
    std::vector<Factorization> frontier{f};
    seen.emplace(detail::tuple_key(f), f);
    const int max_letter = static_cast<int>(f.length()) - 1;
    OrbitBall ball;
    for (std::size_t depth = 0; depth < move_budget && !frontier.empty(); ++depth) {
        std::vector<Factorization> next;
        for (const Factorization& cur : frontier) {
            for (int letter = -max_letter; letter <= max_letter; ++letter) {
                if (letter == 0) continue;
                Factorization img = apply_move(space, cur, letter);
                std::string key = detail::tuple_key(img);
                if (seen.count(key)) continue;
                if (seen.size() >= node_cap) {
                    ball.complete = false;
                    goto done;
                }
                next.push_back(img);
                seen.emplace(std::move(key), std::move(img));
            }
        }
        frontier = std::move(next);
    }
done:
    ball.count = seen.size();
    ball.elements.reserve(seen.size());
    for (auto& [key, fact] : seen) ball.elements.push_back(std::move(fact));
    return ball;
}

} // namespace extweyl
