// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance (counts, budgets, time limits) is pinned in this file.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "extweyl/absorder.hpp"
#include "extweyl/diagram.hpp"
#include "extweyl/group.hpp"
#include "extweyl/hurwitz.hpp"
#include "extweyl/rootsys.hpp"
#include "extweyl/space.hpp"

using namespace extweyl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, double seconds, double limit) {
    const bool in_time = seconds < limit;
    if (!ok || !in_time) ++g_failures;
    std::printf("criterion %2d %s %-38s %.2fs (limit %.0fs)%s\n", number,
                ok && in_time ? "PASS" : "FAIL", name.c_str(), seconds, limit,
                ok && !in_time ? " [overtime]" : "");
    std::fflush(stdout);
}

template <typename F>
void run(int number, const std::string& name, double limit, F body) {
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report(number, name, ok, seconds, limit);
}

WeylType combinatorial_rule(const std::vector<int>& arms) {
    const std::size_t r = arms.size();
    if (r <= 2) return WeylType::Domestic;
    if (r >= 5) return WeylType::Wild;
    if (r == 4) {
        for (int p : arms)
            if (p != 1) return WeylType::Wild;
        return WeylType::Tubular;
    }
    long num = 0, den = 1;
    for (int p : arms) den *= (p + 1);
    for (int p : arms) num += den / (p + 1);
    if (num > den) return WeylType::Domestic;
    if (num == den) return WeylType::Tubular;
    return WeylType::Wild;
}

bool criterion_classification() {
    std::set<std::vector<int>> tubular_multisets;
    std::set<Int> tubular_plus;
    bool ok = true;
    std::vector<std::vector<int>> grid{{}};
    for (int r = 1; r <= 4; ++r) {
        std::vector<int> arms(static_cast<std::size_t>(r), 1);
        while (true) {
            grid.push_back(arms);
            int i = r - 1;
            while (i >= 0 && arms[static_cast<std::size_t>(i)] == 6) --i;
            if (i < 0) break;
            ++arms[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j) arms[static_cast<std::size_t>(j)] = 1;
        }
    }
    grid.push_back({1, 1, 1, 1, 1});
    for (const auto& arms : grid) {
        const DiagramSpec spec{arms};
        const SignatureTriple sig = inertia(build_gram(spec));
        const WeylType type = type_of(sig);
        if (type != combinatorial_rule(arms)) ok = false;
        if (type == WeylType::Tubular) {
            std::vector<int> sorted = arms;
            std::sort(sorted.begin(), sorted.end());
            tubular_multisets.insert(sorted);
            tubular_plus.insert(sig.plus);
            if (sig.zero != 2) ok = false;
        } else if (type == WeylType::Domestic) {
            if (sig != SignatureTriple{static_cast<int>(spec.rank()) - 1, 0, 1}) ok = false;
        } else {
            if (sig.minus != 1 || sig.zero != 1) ok = false;
        }
    }
    const std::set<std::vector<int>> expected{{1, 1, 1, 1}, {2, 2, 2}, {1, 3, 3}, {1, 2, 5}};
    ok = ok && tubular_multisets == expected;
    ok = ok && tubular_plus == std::set<Int>{4, 6, 7, 8};
    return ok;
}

bool criterion_root_counts() {
    const std::map<std::vector<int>, std::size_t> expected{
        {{1}, 6}, {{1, 1}, 12}, {{1, 1, 1}, 24}};
    for (const auto& [arms, count] : expected) {
        const Space space{DiagramSpec{arms}};
        const RootSetSlice slice = enumerate_projected(space, 10);
        if (!slice.complete || slice.roots.size() != count) return false;
    }
    return true;
}

GroupElement random_word_product(const Space& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(0, 20);
    std::uniform_int_distribution<std::size_t> pick(0, space.dim() - 1);
    GroupElement w = group_identity(space);
    const std::size_t count = len(rng);
    for (std::size_t i = 0; i < count; ++i)
        w = multiply(w, simple_reflection(space, pick(rng)));
    return w;
}

bool criterion_normal_form() {
    for (const auto& arms : std::vector<std::vector<int>>{{1, 1}, {2, 2, 3}}) {
        const Space space{DiagramSpec{arms}};
        std::mt19937_64 rng(0xACCE5501);
        for (int trial = 0; trial < 5000; ++trial) {
            const GroupElement x = random_word_product(space, rng);
            const GroupElement y = random_word_product(space, rng);
            if (from_normal_form(space, normal_form(space, x)) != x) return false;
            if (from_normal_form(space, normal_form(space, y)) != y) return false;
            if (!translation_cocycle_check(space, x, y)) return false;
        }
    }
    return true;
}

bool criterion_reflection_normal_form() {
    const Space space{DiagramSpec{{1, 1}}};
    const RootSetSlice slice = enumerate_projected(space, 10);
    std::vector<Vec> positive;
    for (const Vec& root : slice.roots)
        if (root_sign(root) > 0) positive.push_back(root);
    std::mt19937_64 rng(0xACCE5502);
    std::uniform_int_distribution<std::size_t> pick(0, positive.size() - 1);
    std::uniform_int_distribution<Int> kdist(-10, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec& alpha = positive[pick(rng)];
        const Int k = kdist(rng);
        const NormalForm nf =
            normal_form(space, reflection_element(space, Reflection{alpha, k}));
        if (nf.projected != detail::proj_reflection_matrix(space, alpha)) return false;
        Vec expected(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) expected[i] = k * alpha[i];
        if (nf.translation != expected) return false;
    }
    return true;
}

bool roundtrip_batch(const Space& space, std::size_t walks, std::size_t steps, std::size_t budget,
                     std::uint64_t seed, double* median_seconds) {
    const Factorization standard = standard_factorization(space, standard_ordering(space));
    std::vector<double> times;
    for (std::size_t w = 0; w < walks; ++w) {
        const auto [endpoint, word] = random_walk(space, standard, steps, seed + w);
        const auto start = Clock::now();
        const ConnectResult res = connect(space, endpoint, standard, budget);
        times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        if (!res.word) return false;
        if (!(apply_braid(space, endpoint, *res.word) == standard)) return false;
    }
    std::sort(times.begin(), times.end());
    if (median_seconds) *median_seconds = times.empty() ? 0.0 : times[times.size() / 2];
    return true;
}

bool criterion_hurwitz_transitivity() {
    double median = 0.0;
    const Space small{DiagramSpec{{1}}};
    if (!roundtrip_batch(small, 500, 30, 1'000'000, 0xACCE5503, &median)) return false;
    if (median >= 2.0) return false;
    const Space mid{DiagramSpec{{1, 1}}};
    return roundtrip_batch(mid, 100, 20, 1'000'000, 0xACCE5504, nullptr);
}

bool criterion_dihedral_orbit() {
    const Space space{DiagramSpec{{1}}};
    const auto fams = dihedral_factorizations(space, 8);
    if (fams.size() != 17) return false;
    const Vec alpha1 = space.proj_basis_vector(0);
    const Factorization standard = make_factorization(space, {{alpha1, 0}, {alpha1, 1}});
    for (const Factorization& f : fams) {
        const ConnectResult res = connect(space, f, standard, 100'000);
        if (!res.word) return false;
        if (!(apply_braid(space, f, *res.word) == standard)) return false;
    }
    return true;
}

bool criterion_coxeter_length() {
    const Space space{DiagramSpec{{1}}};
    const GroupElement c = coxeter_transformation(space, standard_ordering(space));
    const RootSetSlice slice = enumerate_projected(space, 10);
    const auto cand = detail::reflection_candidates(space, slice, 4);
    for (const Reflection& t1 : cand)
        for (const Reflection& t2 : cand)
            if (multiply(reflection_element(space, t1), reflection_element(space, t2)) == c)
                return false;
    const Factorization standard = standard_factorization(space, standard_ordering(space));
    return standard.length() == 3 && standard.product == c;
}

bool criterion_coxeter_conjugacy() {
    const Space space{DiagramSpec{{2, 2}}};
    // Per-arm orderings: each arm's two simples in either order, arms in
    // sequence.
    const std::vector<std::vector<std::size_t>> orderings{
        {2, 3, 4, 5}, {3, 2, 4, 5}, {2, 3, 5, 4}, {3, 2, 5, 4}};
    for (const auto& ord_c : orderings)
        for (const auto& ord_d : orderings) {
            const GroupElement x = coxeter_conjugator(space, ord_c, ord_d);
            const GroupElement c = coxeter_transformation(space, ord_c);
            const GroupElement d = coxeter_transformation(space, ord_d);
            if (multiply(multiply(inverse(x), c), x) != d) return false;
        }
    return true;
}

bool criterion_arm_stripping() {
    const Space space{DiagramSpec{{1, 2}}};
    const RootSetSlice slice = enumerate_projected(space, 12);
    if (!slice.complete) return false;
    bool saw_any = false;
    for (const Vec& root : slice.roots) {
        if (root_sign(root) <= 0 || root[0] != 1) continue;
        saw_any = true;
        if (!coefficient_profile_check(space, root)) return false;
        Vec current = root;
        for (std::size_t idx : strip_to_alpha1(space, root))
            current = space.proj_reflect(space.proj_basis_vector(idx), current);
        if (current != space.proj_basis_vector(0)) return false;
    }
    return saw_any;
}

bool criterion_generation() {
    const Space space{DiagramSpec{{1}}};
    const Factorization standard = standard_factorization(space, standard_ordering(space));
    const OrbitBall ball = orbit_ball(space, standard, 6);
    if (!ball.complete || ball.elements.empty()) return false;
    for (const Factorization& f : ball.elements) {
        const GenerationCertificate cert = generates(space, f);
        if (cert.status != GenerationStatus::Generates) return false;
        if (!cert.lattice_index || *cert.lattice_index != 1) return false;
    }
    return true;
}

bool criterion_projected_factorizations() {
    const Space space{DiagramSpec{{1, 1}}};
    const RootSetSlice slice = enumerate_projected(space, 10);
    std::vector<Mat> refl;
    for (const Vec& root : slice.roots)
        if (root_sign(root) > 0) refl.push_back(detail::proj_reflection_matrix(space, root));
    if (refl.size() != 6) return false; // transpositions of S4

    Mat cbar = identity_matrix(space.proj_dim());
    for (std::size_t i = 0; i < space.proj_dim(); ++i)
        cbar = mat_mul(cbar, detail::proj_reflection_matrix(space, space.proj_basis_vector(i)));

    std::set<std::vector<Mat>> reduced;
    for (const Mat& a : refl)
        for (const Mat& b : refl)
            for (const Mat& c : refl)
                if (mat_mul(mat_mul(a, b), c) == cbar) reduced.insert({a, b, c});
    if (reduced.size() != 16) return false;

    // Hurwitz closure from one factorization must reach all 16.
    std::set<std::vector<Mat>> orbit{*reduced.begin()};
    std::vector<std::vector<Mat>> frontier{*reduced.begin()};
    while (!frontier.empty()) {
        std::vector<std::vector<Mat>> next;
        for (const auto& t : frontier)
            for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                std::vector<Mat> fwd = t;
                fwd[i] = t[i + 1];
                fwd[i + 1] = mat_mul(mat_mul(t[i + 1], t[i]), t[i + 1]);
                std::vector<Mat> bwd = t;
                bwd[i] = mat_mul(mat_mul(t[i], t[i + 1]), t[i]);
                bwd[i + 1] = t[i];
                for (auto& img : {fwd, bwd})
                    if (orbit.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return orbit == reduced;
}

} // namespace

int main() {
    run(1, "classification grid", 5.0, criterion_classification);
    run(2, "projected root counts", 1.0, criterion_root_counts);
    run(3, "normal-form round trip and cocycle", 30.0, criterion_normal_form);
    run(4, "reflection normal form", 5.0, criterion_reflection_normal_form);
    run(5, "Hurwitz round trips", 1200.0, criterion_hurwitz_transitivity);
    run(6, "dihedral pair orbit", 10.0, criterion_dihedral_orbit);
    run(7, "Coxeter reflection length", 10.0, criterion_coxeter_length);
    run(8, "Coxeter conjugacy witnesses", 5.0, criterion_coxeter_conjugacy);
    run(9, "arm stripping", 2.0, criterion_arm_stripping);
    run(10, "generation certificates", 30.0, criterion_generation);
    run(11, "projected factorization count", 5.0, criterion_projected_factorizations);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
