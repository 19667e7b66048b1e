#include <string>
#include <vector>

#include "divgraph/jacobian.hpp"
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

Multigraph banana(int k) {
    std::vector<Multigraph::Edge> edges(k, {0, 1});
    return Multigraph({"a", "b"}, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("jacobian");

TEST_CASE("cycles have cyclic groups") {
    for (int n = 2; n <= 8; ++n) {
        JacobianStructure j = jacobian(cycle(n));
        CHECK(j.invariant_factors == std::vector<Integer>{n});
        CHECK(j.order == n);
        CHECK(spanning_tree_count(cycle(n)) == n);
    }
}

TEST_CASE("parallel edges multiply the order") {
    for (int k = 1; k <= 5; ++k) {
        JacobianStructure j = jacobian(banana(k));
        CHECK(j.order == k);
        if (k == 1) {
            CHECK(j.invariant_factors.empty());
        } else {
            CHECK(j.invariant_factors == std::vector<Integer>{k});
        }
    }
}

TEST_CASE("trees are trivial") {
    Multigraph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    JacobianStructure j = jacobian(path);
    CHECK(j.invariant_factors.empty());
    CHECK(j.order == 1);
    CHECK(spanning_tree_count(path) == 1);
}

TEST_CASE("complete graph on four vertices") {
    Multigraph k4({"a", "b", "c", "d"},
                  {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    JacobianStructure j = jacobian(k4);
    CHECK(j.order == 16);
    CHECK(j.invariant_factors == std::vector<Integer>{4, 4});
    CHECK(spanning_tree_count(k4) == 16);
    CHECK(oracle::spanning_trees(k4) == 16);
}

TEST_CASE("loops never change the group") {
    Multigraph plain = cycle(3);
    Multigraph loopy({"v0", "v1", "v2"},
                     {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}, {"v0", "v0"}, {"v2", "v2"}});
    CHECK(jacobian(plain).invariant_factors == jacobian(loopy).invariant_factors);
    CHECK(spanning_tree_count(plain) == spanning_tree_count(loopy));
}

TEST_CASE("gluing at a vertex multiplies the orders") {
    Multigraph t = cycle(3);
    sweep::Wedge w = sweep::wedge_at(t, 0, banana(3));
    CHECK(jacobian(w.graph).order == jacobian(t).order * jacobian(banana(3)).order);
}

TEST_CASE("order always matches the spanning tree count and its oracle") {
    for (const auto& shape : sweep::connected_graph_classes(3, 5)) {
        Multigraph g = sweep::to_multigraph(shape);
        JacobianStructure j = jacobian(g);  // throws if the internal cross-check fails
        Integer trees = oracle::spanning_trees(g);
        CHECK(j.order == trees);
        CHECK(spanning_tree_count(g) == trees);
        Integer product = 1;
        for (const auto& f : j.invariant_factors) {
            CHECK(f > 1);
            product *= f;
        }
        CHECK(product == j.order);
        for (size_t i = 0; i + 1 < j.invariant_factors.size(); ++i)
            CHECK(j.invariant_factors[i + 1] % j.invariant_factors[i] == 0);
    }
}

TEST_CASE("single vertex graphs") {
    Multigraph dot({"v"}, std::vector<Multigraph::Edge>{});
    CHECK(jacobian(dot).order == 1);
    CHECK(spanning_tree_count(dot) == 1);
    Multigraph rose({"v"}, {{"v", "v"}, {"v", "v"}});
    CHECK(jacobian(rose).order == 1);
}

TEST_CASE("disconnected graphs are rejected") {
    Multigraph split({"a", "b"}, std::vector<Multigraph::Edge>{});
    CHECK_THROWS_AS(jacobian(split), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_count(split), std::invalid_argument);
}

TEST_SUITE_END();
