#include "divgraph/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

#include "divgraph/snf.hpp"

namespace divgraph {

namespace {

// Laplacian with the lexicographically smallest vertex name removed.
IntMatrix reduced_laplacian(const Multigraph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("jacobian requires a connected graph");
    }
    const int n = g.vertex_count();
    int drop = 0;
    for (int v = 1; v < n; ++v) {
        if (g.vertex_name(v) < g.vertex_name(drop)) {
            drop = v;
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
        if (v != drop) keep.push_back(v);
    }
    IntMatrix m(keep.size(), std::vector<Integer>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        for (size_t j = 0; j < keep.size(); ++j) {
            m[i][j] = -intersection_product(g, keep[i], keep[j]);
        }
    }
    return m;
}

}  // namespace

Integer spanning_tree_count(const Multigraph& g) {
    return determinant(reduced_laplacian(g));
}

JacobianStructure jacobian(const Multigraph& g) {
    IntMatrix m = reduced_laplacian(g);
    std::vector<Integer> diag = smith_invariants(std::move(m));
    JacobianStructure out;
    out.order = 1;
    for (const Integer& d : diag) {
        out.order *= d;
        if (d > 1) {
            out.invariant_factors.push_back(d);
        }
    }
    if (out.order != spanning_tree_count(g)) {
        throw std::logic_error("jacobian order disagrees with the spanning tree count");
    }
    return out;
}

}  // namespace divgraph
