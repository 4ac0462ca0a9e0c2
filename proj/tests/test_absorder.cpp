#include <doctest.h>

#include "extweyl/absorder.hpp"

using namespace extweyl;

TEST_CASE("reflection length bounds") {
    const Space space{DiagramSpec{{1}}};
    SUBCASE("identity") {
        const LengthBounds b = reflection_length_bounds(space, group_identity(space), 2, 4);
        CHECK(b.lower == 0);
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == 0);
        CHECK(b.exact);
    }
    SUBCASE("single reflection") {
        const GroupElement s =
            reflection_element(space, Reflection{space.proj_basis_vector(0), 3});
        const LengthBounds b = reflection_length_bounds(space, s, 4, 4);
        CHECK(b.lower == 1);
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == 1);
        CHECK(b.exact);
    }
    SUBCASE("the Coxeter transformation has length equal to the rank") {
        const GroupElement c = coxeter_transformation(space, standard_ordering(space));
        const LengthBounds b = reflection_length_bounds(space, c, 2, 4);
        CHECK(b.lower == 2); // moved-space rank undercounts here
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == 3);
        CHECK_FALSE(b.exact);
    }
    SUBCASE("tiny depth cap leaves the upper bound open") {
        const GroupElement c = coxeter_transformation(space, standard_ordering(space));
        const LengthBounds b = reflection_length_bounds(space, c, 2, 1);
        CHECK_FALSE(b.upper.has_value());
        CHECK_FALSE(b.exact);
    }
}

TEST_CASE("absolute-order divisibility witnesses") {
    const Space space{DiagramSpec{{1}}};
    const GroupElement c = coxeter_transformation(space, standard_ordering(space));
    SUBCASE("identity divides c") {
        const auto w = below(space, group_identity(space), c);
        REQUIRE(w.has_value());
        CHECK(w->prefix_length == 0);
        CHECK(w->factorization.product == c);
        CHECK(w->factorization.length() == space.dim());
    }
    SUBCASE("c divides itself") {
        const auto w = below(space, c, c);
        REQUIRE(w.has_value());
        CHECK(w->prefix_length == space.dim());
    }
    SUBCASE("a shifted reflection divides c") {
        const GroupElement s =
            reflection_element(space, Reflection{space.proj_basis_vector(0), 5});
        const auto w = below(space, s, c, BelowBudgets{6, 10});
        REQUIRE(w.has_value());
        CHECK(w->prefix_length == 1);
        GroupElement prefix = group_identity(space);
        for (std::size_t i = 0; i < w->prefix_length; ++i)
            prefix = multiply(prefix, reflection_element(space, w->factorization.tuple[i]));
        CHECK(prefix == s);
    }
}

TEST_CASE("interval slices") {
    const Space space{DiagramSpec{{1}}};
    const auto ordering = standard_ordering(space);
    SUBCASE("move budget zero is the standard chain") {
        const IntervalSlice slice = interval_slice(space, ordering, 0, 4);
        CHECK(slice.complete);
        CHECK(slice.elements.size() == 4); // identity and three prefixes
        CHECK(slice.elements.front().element == group_identity(space));
        CHECK(slice.elements.back().element ==
              coxeter_transformation(space, ordering));
        // The chain has exactly one cover per level.
        CHECK(slice.covers.size() == 3);
        for (const auto& [lo, hi] : slice.covers) {
            CHECK(slice.elements[hi].prefix_length == slice.elements[lo].prefix_length + 1);
            const GroupElement q = multiply(integer_inverse(slice.elements[lo].element),
                                            slice.elements[hi].element);
            CHECK(as_reflection(space, q).has_value());
        }
    }
    SUBCASE("larger budgets only add elements") {
        std::size_t prev = 0;
        for (std::size_t budget : {0u, 1u, 2u}) {
            const IntervalSlice slice = interval_slice(space, ordering, budget, 6);
            CHECK(slice.elements.size() >= prev);
            prev = slice.elements.size();
        }
    }
    SUBCASE("k filter drops shifted tuples") {
        const IntervalSlice tight = interval_slice(space, ordering, 2, 1);
        const IntervalSlice loose = interval_slice(space, ordering, 2, 6);
        CHECK(tight.elements.size() <= loose.elements.size());
        for (const IntervalElement& e : tight.elements)
            for (const Reflection& t : e.witness.tuple) {
                CHECK(t.k <= 1);
                CHECK(t.k >= -1);
            }
    }
}

TEST_CASE("generation certificates") {
    const Space space{DiagramSpec{{1}}};
    SUBCASE("the standard factorization generates") {
        const Factorization f = standard_factorization(space, standard_ordering(space));
        const GenerationCertificate cert = generates(space, f);
        CHECK(cert.status == GenerationStatus::Generates);
        CHECK(cert.projected_order == 6); // projected group is A2
        CHECK(cert.lattice_rank == space.proj_dim());
        REQUIRE(cert.lattice_index.has_value());
        CHECK(*cert.lattice_index == 1);
    }
    SUBCASE("all-zero translations do not generate") {
        const Vec alpha1 = space.proj_basis_vector(0);
        const Vec arm = space.proj_basis_vector(1);
        const Factorization f =
            make_factorization(space, {{arm, 0}, {alpha1, 0}, {alpha1, 0}});
        const GenerationCertificate cert = generates(space, f);
        CHECK(cert.status == GenerationStatus::DoesNotGenerate);
        CHECK(cert.lattice_rank == 0);
    }
    SUBCASE("missing projected directions do not generate") {
        const Vec alpha1 = space.proj_basis_vector(0);
        const Factorization f = make_factorization(space, {{alpha1, 0}, {alpha1, 1}});
        const GenerationCertificate cert = generates(space, f);
        CHECK(cert.status == GenerationStatus::DoesNotGenerate);
        CHECK(cert.projected_order == 2);
    }
    SUBCASE("orbit neighbors of the standard factorization still generate") {
        const Factorization f = standard_factorization(space, standard_ordering(space));
        const OrbitBall ball = orbit_ball(space, f, 2);
        REQUIRE(ball.complete);
        for (const Factorization& g : ball.elements)
            CHECK(generates(space, g).status == GenerationStatus::Generates);
    }
}

TEST_CASE("poset export") {
    const Space space{DiagramSpec{{1}}};
    const IntervalSlice slice = interval_slice(space, standard_ordering(space), 0, 4);
    const std::string dot = export_poset_dot(space, slice);
    CHECK(dot.find("digraph interval {") == 0);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    // One node line per element, one edge line per cover.
    std::size_t nodes = 0, edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes == slice.elements.size());
    CHECK(edges == slice.covers.size());
}
