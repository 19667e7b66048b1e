#pragma once

#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"

namespace divgraph {

/// Degree-0 divisor class group of a connected multigraph, as a product of
/// cyclic groups Z/f with the factors dividing each other in order.
struct JacobianStructure {
    std::vector<Integer> invariant_factors;  // each > 1, f_i divides f_{i+1}
    Integer order;                           // = number of spanning trees
};

JacobianStructure jacobian(const Multigraph& g);

/// Matrix-tree count via a fraction-free determinant of the reduced
/// Laplacian.  Loop-edges never enter the Laplacian.
Integer spanning_tree_count(const Multigraph& g);

}  // namespace divgraph
