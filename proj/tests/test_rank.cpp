#include <stdexcept>
#include <string>
#include <vector>

#include "divgraph/rank.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace divgraph;

namespace {

Multigraph cycle(int n) {
    std::vector<std::string> names;
    std::vector<Multigraph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
        edges.push_back({i, (i + 1) % n});
    }
    return Multigraph(std::move(names), std::move(edges));
}

Multigraph theta() {
    return Multigraph({"v0", "v1"}, {{"v0", "v1"}, {"v0", "v1"}, {"v0", "v1"}});
}

Multigraph rose(int g) {
    std::vector<Multigraph::Edge> edges(g, {0, 0});
    return Multigraph({"v"}, std::move(edges));
}

Divisor make(std::vector<long long> c) {
    Divisor d(static_cast<int>(c.size()));
    for (size_t i = 0; i < c.size(); ++i) d[static_cast<int>(i)] = c[i];
    return d;
}

// Effective divisors of one degree in witness enumeration order: divisors
// read as nondecreasing vertex-index tuples, compared lexicographically.
void effective_in_order(int n, int degree, int min_vertex, Divisor& acc,
                        std::vector<Divisor>& out) {
    if (degree == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = min_vertex; v < n; ++v) {
        acc[v] += 1;
        effective_in_order(n, degree - 1, v, acc, out);
        acc[v] -= 1;
    }
}

std::vector<Divisor> effective_in_order(int n, int degree) {
    std::vector<Divisor> out;
    Divisor acc(n);
    effective_in_order(n, degree, 0, acc, out);
    return out;
}

Divisor named_to_divisor(const std::vector<std::pair<std::string, Integer>>& entries,
                         const Multigraph& g) {
    Divisor d(g.vertex_count());
    for (const auto& [name, c] : entries) d[g.vertex_index(name)] += c;
    return d;
}

}  // namespace

TEST_SUITE_BEGIN("rank");

TEST_CASE("worked examples on the triangle") {
    Multigraph g = cycle(3);

    CHECK(rank_plain(g, make({0, 0, 0})).rank == 0);
    CHECK(rank_plain(g, make({-1, 0, 0})).rank == -1);
    CHECK(rank_plain(g, make({1, 0, 0})).rank == 0);
    CHECK(rank_plain(g, make({1, 1, 0})).rank == 1);
    CHECK(rank_plain(g, make({1, 1, 1})).rank == 2);

    SUBCASE("the witness is the first failing divisor in enumeration order") {
        RankResult r = rank_plain(g, make({1, 0, 0}));
        REQUIRE(r.witness.has_value());
        CHECK(named_to_divisor(*r.witness, g) == make({0, 1, 0}));
    }

    SUBCASE("rank -1 comes with the empty witness") {
        RankResult r = rank_plain(g, make({-2, 1, 0}));
        CHECK(r.rank == -1);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->empty());
    }

    SUBCASE("witnesses can be turned off") {
        CHECK(!rank_plain(g, make({1, 0, 0}), false).witness.has_value());
    }
}

TEST_CASE("worked examples on the theta graph") {
    Multigraph g = theta();
    CHECK(rank_plain(g, make({1, 0})).rank == 0);
    // Only two of the three degree-1 classes carry an effective divisor, so
    // 2 v0 cannot dominate v1.
    RankResult r = rank_plain(g, make({2, 0}));
    CHECK(r.rank == 0);
    CHECK(named_to_divisor(*r.witness, g) == make({0, 1}));
    // The canonical divisor of the loopless theta has rank g - 1 = 1.
    WeightedGraph w{g};
    CHECK(canonical_divisor(w) == make({1, 1}));
    CHECK(rank_plain(g, make({1, 1})).rank == 1);
}

TEST_CASE("rank agrees with the enumeration oracle across the sweep") {
    sweep::Rng rng(301);
    for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
        Multigraph g = sweep::to_multigraph(shape);
        for (int trial = 0; trial < 6; ++trial) {
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -2, 3);
            CHECK(rank_plain(g, d, false).rank == oracle::rank(g, d));
        }
    }
}

TEST_CASE("witnesses are least failing divisors") {
    sweep::Rng rng(302);
    for (const auto& shape : sweep::connected_graph_classes(3, 3)) {
        Multigraph g = sweep::to_multigraph(shape);
        for (int trial = 0; trial < 4; ++trial) {
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -1, 2);
            RankResult r = rank_plain(g, d);
            if (r.rank < 0) continue;
            REQUIRE(r.witness.has_value());
            Divisor w = named_to_divisor(*r.witness, g);
            CHECK(w.is_effective());
            CHECK(w.degree() == r.rank + 1);
            CHECK(rank_plain(g, d - w, false).rank == -1);
            // Nothing earlier in enumeration order fails.
            for (const Divisor& e : effective_in_order(g.vertex_count(),
                                                       static_cast<int>(r.rank) + 1)) {
                if (e == w) break;
                CHECK(rank_plain(g, d - e, false).rank >= 0);
            }
        }
    }
}

TEST_CASE("rank engine details") {
    Multigraph g = cycle(4);

    SUBCASE("least_failing throws when every divisor of that degree passes") {
        RankEngine eng(g);
        CHECK_THROWS_AS(eng.least_failing(make({1, 1, 1, 1}), 1), std::invalid_argument);
    }

    SUBCASE("restricted supports can only raise the rank") {
        sweep::Rng rng(303);
        for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
            Multigraph h = sweep::to_multigraph(shape);
            if (h.vertex_count() < 2) continue;
            RankEngine full(h);
            RankEngine part(h, {0});
            for (int trial = 0; trial < 4; ++trial) {
                Divisor d = sweep::random_divisor(rng, h.vertex_count(), -1, 2);
                CHECK(part.rank(d) >= full.rank(d));
            }
        }
    }

    SUBCASE("a two-vertex support on the 4-cycle already determines ranks") {
        RankEngine restricted(g, {0, 1});
        RankEngine full(g);
        CHECK(restricted.rank(make({2, 0, 0, 0})) == 1);
        CHECK(full.rank(make({2, 0, 0, 0})) == 1);
    }

    SUBCASE("a one-point support overshoots on the 4-cycle") {
        RankEngine one(g, {0});
        CHECK(one.rank(make({2, 0, 0, 0})) == 2);
    }

    SUBCASE("support indices validate") {
        CHECK_THROWS_AS(RankEngine(g, {4}), std::invalid_argument);
        CHECK_THROWS_AS(RankEngine(g, {-1}), std::invalid_argument);
    }

    SUBCASE("reduce and has_effective are exposed") {
        RankEngine eng(g);
        CHECK(eng.reduce(make({0, 0, 0, 2})) == eng.reduce(make({1, 0, 1, 0})));
        CHECK(eng.has_effective(make({-1, 1, 1, 0})));
        CHECK(!eng.has_effective(make({-1, 0, 0, 0})));
    }
}

TEST_CASE("rose ranks follow the half-degree formula") {
    for (long long g = 1; g <= 4; ++g) {
        for (long long d = 0; d <= 2 * g; ++d) CHECK(rose_rank(g, d) == d / 2);
        CHECK(rose_rank(g, -1) == -1);
        CHECK(rose_rank(g, -7) == -1);
        CHECK_THROWS_AS(rose_rank(g, 2 * g + 1), std::invalid_argument);
    }
    CHECK_THROWS_AS(rose_rank(0, 0), std::invalid_argument);

    SUBCASE("the sharp rank of an actual rose matches") {
        for (int g = 1; g <= 2; ++g) {
            Multigraph r = rose(g);
            for (long long d = 0; d <= 2 * g; ++d) {
                Divisor dv(1);
                dv[0] = d;
                CHECK(rank_sharp(r, dv, false).rank == rose_rank(g, d));
            }
        }
    }

    SUBCASE("the weighted rank of a heavy point matches") {
        for (int g = 1; g <= 2; ++g) {
            WeightedGraph w(Multigraph({"v"}, std::vector<Multigraph::Edge>{}), {g});
            for (long long d = 0; d <= 2 * g; ++d) {
                Divisor dv(1);
                dv[0] = d;
                CHECK(rank_weighted(w, dv, false).rank == rose_rank(g, d));
            }
        }
    }
}

TEST_CASE("sharp rank never exceeds the plain rank") {
    sweep::Rng rng(304);
    for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
        if (!shape.has_loop()) continue;
        Multigraph g = sweep::to_multigraph(shape);
        for (int trial = 0; trial < 4; ++trial) {
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -1, 3);
            CHECK(rank_plain(g, d, false).rank >= rank_sharp(g, d, false).rank);
        }
    }
}

TEST_CASE("weighted rank with zero weights is the sharp rank") {
    sweep::Rng rng(305);
    for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
        Multigraph g = sweep::to_multigraph(shape);
        WeightedGraph w{g};
        for (int trial = 0; trial < 3; ++trial) {
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -1, 3);
            CHECK(rank_weighted(w, d, false).rank == rank_sharp(g, d, false).rank);
        }
    }
}

TEST_CASE("sharp rank witnesses live on the loop-split model") {
    RankResult r = rank_sharp(rose(1), make({0}));
    CHECK(r.rank == 0);
    // Witness of rank 0 at degree 1 names the loop midpoint, the first
    // failing point of the split model.
    r = rank_sharp(rose(1), make({1}));
    CHECK(r.rank == 0);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness->size() == 1);
    CHECK((*r.witness)[0].first == "v#loop0#mid");
}

TEST_CASE("canonical divisors") {
    SUBCASE("coefficients are valence plus twice the weight minus two") {
        WeightedGraph w(theta(), {1, 0});
        CHECK(canonical_divisor(w) == make({3, 1}));
    }

    SUBCASE("degree is twice the genus minus two across the sweep") {
        auto weights_for = [](int n) { return sweep::weight_vectors(n, 2); };
        for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
            Multigraph g = sweep::to_multigraph(shape);
            for (const auto& wv : weights_for(g.vertex_count())) {
                WeightedGraph w(g, wv);
                CHECK(canonical_divisor(w).degree() == 2 * weighted_genus(w) - 2);
            }
        }
    }

    SUBCASE("the canonical rank is genus minus one") {
        for (const auto& shape : sweep::connected_graph_classes(3, 3)) {
            Multigraph g = sweep::to_multigraph(shape);
            for (const auto& wv : sweep::weight_vectors(g.vertex_count(), 1)) {
                WeightedGraph w(g, wv);
                CHECK(rank_weighted(w, canonical_divisor(w), false).rank ==
                      weighted_genus(w) - 1);
                CHECK(rank_weighted(w, Divisor(g.vertex_count()), false).rank == 0);
            }
        }
    }
}

TEST_CASE("degree identity for ranks") {
    sweep::Rng rng(306);
    for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
        Multigraph g = sweep::to_multigraph(shape);
        for (const auto& wv : sweep::weight_vectors(g.vertex_count(), 1)) {
            WeightedGraph w(g, wv);
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -2, 3);
            RiemannRochReport rep = riemann_roch_check(w, d);
            CHECK(rep.holds);
            CHECK(rep.degree == d.degree());
            CHECK(rep.genus == weighted_genus(w));
            CHECK(Integer(rep.rank_d) - rep.rank_residual == rep.degree - rep.genus + 1);
        }
    }
}

TEST_CASE("ranks survive refinement") {
    sweep::Rng rng(307);

    SUBCASE("extra vertices on loop edges keep the sharp rank") {
        int samples = 0;
        for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
            if (!shape.has_loop()) continue;
            Multigraph g = sweep::to_multigraph(shape);
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -1, 2);
            long long sharp = rank_sharp(g, d, false).rank;
            for (int n = 1; n <= 3; ++n) {
                std::vector<int> counts(g.edge_count(), 0);
                for (int e = 0; e < g.edge_count(); ++e)
                    if (g.is_loop(e)) counts[e] = n;
                auto [h, map] = subdivide(g, counts);
                CHECK(rank_plain(h, pullback(map, d), false).rank == sharp);
            }
            if (++samples == 10) break;
        }
        CHECK(samples == 10);
    }

    SUBCASE("uniform subdivision keeps the plain rank of loopless graphs") {
        int samples = 0;
        for (const auto& shape : sweep::connected_graph_classes(3, 4, false)) {
            Multigraph g = sweep::to_multigraph(shape);
            Divisor d = sweep::random_divisor(rng, g.vertex_count(), -1, 2);
            long long plain = rank_plain(g, d, false).rank;
            for (int n = 1; n <= 2; ++n) {
                auto [h, map] = subdivide_uniform(g, n);
                CHECK(rank_plain(h, pullback(map, d), false).rank == plain);
            }
            if (++samples == 10) break;
        }
        CHECK(samples == 10);
    }
}

TEST_CASE("ranks across a cut vertex") {
    sweep::Rng rng(308);
    auto shapes = sweep::connected_graph_classes(3, 3);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto& s1 = shapes[rng.next(0, static_cast<long long>(shapes.size()) - 1)];
        const auto& s2 = shapes[rng.next(0, static_cast<long long>(shapes.size()) - 1)];
        Multigraph h1 = sweep::to_multigraph(s1);
        Multigraph h2 = sweep::to_multigraph(s2);
        int at = static_cast<int>(rng.next(0, h1.vertex_count() - 1));
        sweep::Wedge w = sweep::wedge_at(h1, at, h2);

        Divisor d1 = sweep::random_divisor(rng, h1.vertex_count(), -1, 2);
        Divisor d2 = sweep::random_divisor(rng, h2.vertex_count(), -1, 2);
        long long r1 = rank_plain(h1, d1, false).rank;
        long long r2 = rank_plain(h2, d2, false).rank;
        Divisor glued = pullback(w.into1, d1) + pullback(w.into2, d2);
        long long rg = rank_plain(w.graph, glued, false).rank;
        CHECK(rg >= std::min(r1, r2));
        CHECK(r1 >= rank_plain(w.graph, pullback(w.into1, d1), false).rank);
        CHECK(r2 >= rank_plain(w.graph, pullback(w.into2, d2), false).rank);
        ++checked;
    }
    CHECK(checked == 12);
}

TEST_SUITE_END();
