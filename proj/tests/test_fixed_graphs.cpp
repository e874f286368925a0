#include <doctest.h>

#include "gwloc/fixed_graphs.hpp"
#include "oracles.hpp"

#include <set>
#include <sstream>

using gwloc::FixedGraph;
using gwloc::GraphEdge;
using gwloc::GraphVertex;

TEST_CASE("spot counts") {
    const auto lines = gwloc::enumerate_graphs(4, 1, 0);
    CHECK(lines.size() == 10);
    for (const auto& g : lines) CHECK(g.aut_order() == 1);

    const auto conics = gwloc::enumerate_graphs(4, 2, 0);
    CHECK(conics.size() == 60);
    int single_edge = 0, symmetric_paths = 0;
    for (const auto& g : conics) {
        if (g.edges().size() == 1) ++single_edge;
        if (g.aut_order() == 2) ++symmetric_paths;
    }
    CHECK(single_edge == 10);
    CHECK(symmetric_paths == 20);  // 5 centers x 4 equal end labels

    const auto p1 = gwloc::enumerate_graphs(1, 1, 0);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].vertices()[0].label != p1[0].vertices()[1].label);
}

TEST_CASE("orbit-stabilizer against labeled brute force") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int k = 0; k <= 2; ++k) {
                std::uint64_t labeled = 0;
                for (const auto& g : gwloc::enumerate_graphs(n, d, k))
                    labeled += oracle::factorial(static_cast<int>(g.vertices().size())) / g.aut_order();
                INFO("n=" << n << " d=" << d << " k=" << k);
                CHECK(labeled == oracle::labeled_decorated_trees(n, d, k));
            }
}

TEST_CASE("every graph is valid, canonical, and carries its true automorphism order") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            for (int k = 0; k <= 2; ++k) {
                std::set<std::string> forms;
                std::string previous;
                for (const auto& g : gwloc::enumerate_graphs(n, d, k)) {
                    INFO("n=" << n << " d=" << d << " k=" << k);
                    CHECK(g.invariant_violations(n, d, k).empty());
                    CHECK(g.aut_order() == oracle::brute_force_automorphisms(g));
                    CHECK(g.aut_order() == gwloc::automorphism_order(g));
                    const std::string form = gwloc::canonical_form(g);
                    CHECK(form > previous);  // strictly increasing: sorted and duplicate-free
                    previous = form;
                    forms.insert(form);
                }
            }
}

TEST_CASE("counts are monotone in n and d") {
    for (int k = 0; k <= 1; ++k)
        for (int n = 1; n <= 4; ++n)
            for (int d = 1; d <= 3; ++d) {
                const auto here = gwloc::enumerate_graphs(n, d, k).size();
                CHECK(here <= gwloc::enumerate_graphs(n + 1, d, k).size());
                CHECK(here <= gwloc::enumerate_graphs(n, d + 1, k).size());
            }
}

TEST_CASE("enumeration is deterministic") {
    std::ostringstream a, b;
    gwloc::write_graph_dump(a, 3, 3, 1);
    gwloc::write_graph_dump(b, 3, 3, 1);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
}

TEST_CASE("canonical form identifies isomorphic inputs") {
    SUBCASE("path 0-1-0 under vertex reordering") {
        const FixedGraph x({{0, {}}, {1, {}}, {0, {}}}, {{0, 1, 1}, {1, 2, 1}}, 2);
        const FixedGraph y({{1, {}}, {0, {}}, {0, {}}}, {{1, 0, 1}, {0, 2, 1}}, 2);
        CHECK(gwloc::canonical_form(x) == gwloc::canonical_form(y));
        CHECK(gwloc::automorphism_order(x) == 2);
    }
    SUBCASE("different labels differ") {
        const FixedGraph x({{0, {}}, {1, {}}}, {{0, 1, 1}}, 1);
        const FixedGraph y({{0, {}}, {2, {}}}, {{0, 1, 1}}, 1);
        CHECK(gwloc::canonical_form(x) != gwloc::canonical_form(y));
    }
    SUBCASE("reflection of a path") {
        const FixedGraph x({{0, {}}, {1, {}}, {2, {}}}, {{0, 1, 1}, {1, 2, 1}}, 1);
        const FixedGraph y({{2, {}}, {1, {}}, {0, {}}}, {{0, 1, 1}, {1, 2, 1}}, 1);
        CHECK(gwloc::canonical_form(x) == gwloc::canonical_form(y));
    }
    SUBCASE("marks break symmetry") {
        const FixedGraph x({{0, {1}}, {1, {}}, {0, {}}}, {{0, 1, 1}, {1, 2, 1}}, 1);
        const FixedGraph y({{0, {}}, {1, {}}, {0, {1}}}, {{0, 1, 1}, {1, 2, 1}}, 1);
        CHECK(gwloc::canonical_form(x) == gwloc::canonical_form(y));
        CHECK(gwloc::automorphism_order(x) == 1);
        const FixedGraph z({{0, {}}, {1, {1}}, {0, {}}}, {{0, 1, 1}, {1, 2, 1}}, 2);
        CHECK(gwloc::canonical_form(x) != gwloc::canonical_form(z));
    }
    SUBCASE("edge degrees matter") {
        const FixedGraph x({{0, {}}, {1, {}}, {0, {}}}, {{0, 1, 1}, {1, 2, 2}}, 1);
        const FixedGraph y({{0, {}}, {1, {}}, {0, {}}}, {{0, 1, 2}, {1, 2, 1}}, 1);
        const FixedGraph z({{0, {}}, {1, {}}, {0, {}}}, {{0, 1, 2}, {1, 2, 2}}, 2);
        CHECK(gwloc::canonical_form(x) == gwloc::canonical_form(y));
        CHECK(gwloc::canonical_form(x) != gwloc::canonical_form(z));
    }
}

TEST_CASE("invariant violations are reported") {
    const FixedGraph same_label({{0, {}}, {0, {}}}, {{0, 1, 1}}, 1);
    CHECK(!same_label.invariant_violations(2, 1, 0).empty());
    const FixedGraph wrong_degree({{0, {}}, {1, {}}}, {{0, 1, 2}}, 1);
    CHECK(!wrong_degree.invariant_violations(2, 1, 0).empty());
    const FixedGraph missing_mark({{0, {2}}, {1, {}}}, {{0, 1, 1}}, 1);
    CHECK(!missing_mark.invariant_violations(2, 1, 2).empty());
    const FixedGraph disconnected({{0, {}}, {1, {}}, {2, {}}}, {{0, 1, 1}, {0, 1, 1}}, 1);
    CHECK(!disconnected.invariant_violations(2, 2, 0).empty());
}
