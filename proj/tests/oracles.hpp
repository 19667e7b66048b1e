#pragma once

// Brute-force reference implementations used to validate the production
// algorithms.  Everything here follows the defining formulas directly, at
// exponential cost, and is only usable on very small instances.

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"

namespace oracle {

// Definition check: every coefficient off q is nonnegative and no nonempty
// subset of V minus q can fire without sending one of its own vertices
// negative.  Enumerates all 2^(n-1) subsets.
bool is_q_reduced(const divgraph::Multigraph& g, const divgraph::Divisor& d, int q);

// Whether the complete linear system of d is nonempty: enumerates every
// effective divisor of matching degree and tests d - f for membership in
// the principal lattice by solving an integer linear system.
bool has_effective(const divgraph::Multigraph& g, const divgraph::Divisor& d);

// The rank by its definition: the largest k such that every effective
// divisor of degree k can be subtracted while keeping the linear system
// nonempty; -1 when the system of d itself is empty.
long long rank(const divgraph::Multigraph& g, const divgraph::Divisor& d);

// Spanning trees counted by scanning all (n-1)-subsets of the non-loop
// edges for acyclic spanning subgraphs.
divgraph::Integer spanning_trees(const divgraph::Multigraph& g);

}  // namespace oracle
