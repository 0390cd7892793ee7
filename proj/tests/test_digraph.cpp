#include <doctest.h>

#include <sstream>

#include "intervalk/digraph.hpp"
#include "oracles.hpp"

using namespace intervalk;

namespace {

// Weight of the closed walk through `vertices` (each consecutive pair must be an arc).
std::optional<Weight> walk_weight(const WeightedDigraph& g, const std::vector<std::size_t>& vertices) {
    Weight total = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto a = g.arc_between(vertices[i], vertices[(i + 1) % vertices.size()]);
        if (!a) {
            return std::nullopt;
        }
        total += a->weight;
    }
    return total;
}

} // namespace

TEST_CASE("build_gpk on one element") {
    const Poset p = poset_from_relations({"a"}, {});
    const WeightedDigraph g = build_gpk(p, 3);
    CHECK(g.scale() == 3);
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.arcs().size() == 2);
    auto down = g.arc_between(g.right(0), g.left(0));
    auto up = g.arc_between(g.left(0), g.right(0));
    REQUIRE(down);
    REQUIRE(up);
    CHECK(down->kind == ArcKind::MinusOne);
    CHECK(down->weight == -3);
    CHECK(up->kind == ArcKind::PlusK);
    CHECK(up->weight == 9);
}

TEST_CASE("build_gpk on 2+2 contains the four-arc cycle of weight -2") {
    const Poset p = make_two_plus_two();
    const std::size_t a = p.index_of("a"), b = p.index_of("b"), x = p.index_of("x"), y = p.index_of("y");
    for (int k = 1; k <= 5; ++k) {
        const WeightedDigraph g = build_gpk(p, k);
        CHECK(g.scale() == 9);
        CHECK(walk_weight(g, {g.left(x), g.right(a), g.left(y), g.right(b)}) == std::optional<Weight>(-2));
    }
}

TEST_CASE("build_gpk on 3+1 contains the displayed chain cycle") {
    // r_x -0-> l_a3 -eps-> r_a2 -1-> l_a2 -eps-> r_a1 -0-> l_x -k-> r_x
    const Poset p = make_chain_plus_one(3);
    const WeightedDigraph g = build_gpk(p, 1);
    const std::size_t a1 = p.index_of("a1"), a2 = p.index_of("a2"), a3 = p.index_of("a3"), x = p.index_of("x");
    const std::vector<std::size_t> cycle{g.right(x), g.left(a3), g.right(a2), g.left(a2), g.right(a1), g.left(x)};
    CHECK(walk_weight(g, cycle) == std::optional<Weight>(-2));
}

TEST_CASE("displayed (k+2)+1 cycle has weight -(k+1) for general k") {
    for (int k = 1; k <= 5; ++k) {
        const Poset p = make_chain_plus_one(k + 2);
        const WeightedDigraph g = build_gpk(p, k);
        const std::size_t x = p.index_of("x");
        std::vector<std::size_t> cycle{g.right(x)};
        for (int i = k + 2; i >= 2; --i) {
            const std::size_t top = p.index_of("a" + std::to_string(i));
            const std::size_t below = p.index_of("a" + std::to_string(i - 1));
            cycle.push_back(g.left(top));
            cycle.push_back(g.right(below));
        }
        cycle.push_back(g.left(x));
        CHECK(cycle.size() == static_cast<std::size_t>(2 * k + 4));
        CHECK(walk_weight(g, cycle) == std::optional<Weight>(-(k + 1)));
    }
}

TEST_CASE("build_gmn coincides with build_gpk for m = 1") {
    const Poset p = random_poset(7, 11, 2);
    for (int k = 1; k <= 3; ++k) {
        CHECK(build_gmn(p, 1, k).arcs() == build_gpk(p, k).arcs());
    }
    const Poset p22 = make_two_plus_two();
    const WeightedDigraph g = build_gmn(p22, 2, 5);
    const std::size_t a = p22.index_of("a"), b = p22.index_of("b"), x = p22.index_of("x"), y = p22.index_of("y");
    CHECK(walk_weight(g, {g.left(x), g.right(a), g.left(y), g.right(b)}) == std::optional<Weight>(-2));
    CHECK(g.arc_between(g.right(a), g.left(a))->weight == -2 * 9);
    CHECK(g.arc_between(g.left(a), g.right(a))->weight == 5 * 9);
}

TEST_CASE("build errors") {
    const Poset p = make_chain(2);
    CHECK_THROWS_AS(build_gpk(p, 0), Error);
    CHECK_THROWS_AS(build_gmn(p, 0, 2), Error);
    CHECK_THROWS_AS(build_gmn(p, 3, 2), Error);
    CHECK_THROWS_AS(build_gpk(p, 1, 4), Error); // scale must exceed 2|X|
}

TEST_CASE("property: arc structure matches the construction") {
    for (int n = 0; n <= 4; ++n) {
        for (const Poset& p : enumerate_posets(n)) {
            const WeightedDigraph g = build_gpk(p, 2);
            CHECK(g.vertex_count() == 2 * p.size());
            CHECK(g.arcs().size() == expected_arc_count(p));
            CHECK(g.scale() == 2 * static_cast<Weight>(n) + 1);
            for (const Arc& a : g.arcs()) {
                const VertexId from = g.vertex(a.from);
                const VertexId to = g.vertex(a.to);
                switch (a.kind) {
                case ArcKind::EpsNeg:
                    CHECK(a.weight == -1);
                    CHECK(from.side == Side::Left);
                    CHECK(to.side == Side::Right);
                    CHECK(p.less(to.element, from.element));
                    break;
                case ArcKind::PlusK:
                    CHECK(a.weight == 2 * g.scale());
                    CHECK(from.side == Side::Left);
                    CHECK(to.side == Side::Right);
                    CHECK(from.element == to.element);
                    break;
                case ArcKind::Zero:
                    CHECK(a.weight == 0);
                    CHECK(from.side == Side::Right);
                    CHECK(to.side == Side::Left);
                    CHECK(p.incomparable(from.element, to.element));
                    CHECK(g.arc_between(g.right(to.element), g.left(from.element)));
                    break;
                case ArcKind::MinusOne:
                    CHECK(a.weight == -g.scale());
                    CHECK(from.side == Side::Right);
                    CHECK(to.side == Side::Left);
                    CHECK(from.element == to.element);
                    break;
                }
            }
        }
    }
}

TEST_CASE("property: doubling the scale preserves every cycle's sign") {
    for (int n = 0; n <= 3; ++n) {
        for (const Poset& p : enumerate_posets(n)) {
            for (int k = 1; k <= 2; ++k) {
                const WeightedDigraph g1 = build_gpk(p, k);
                const WeightedDigraph g2 = build_gpk(p, k, 2 * g1.scale());
                testing::for_each_simple_cycle(g1, [&](const std::vector<Arc>& arcs) {
                    std::vector<std::size_t> vs;
                    for (const Arc& a : arcs) {
                        vs.push_back(a.from);
                    }
                    const Weight w1 = testing::cycle_weight(arcs);
                    const auto w2 = walk_weight(g2, vs);
                    REQUIRE(w2);
                    CHECK((w1 < 0) == (*w2 < 0));
                });
            }
        }
    }
}

TEST_CASE("write_digraph emits one line per arc") {
    const Poset p = make_chain(2);
    const WeightedDigraph g = build_gpk(p, 1);
    std::ostringstream out;
    write_digraph(out, g, p);
    const std::string text = out.str();
    CHECK(text.find("l:a2 r:a1 -1 eps-neg") != std::string::npos);
    CHECK(text.find("r:a1 l:a1 -5 minus-one") != std::string::npos);
    CHECK(text.find("l:a1 r:a1 5 plus-k") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(g.arcs().size()) + 1);
}
