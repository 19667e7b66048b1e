#pragma once

#include <vector>

#include "divgraph/divisor.hpp"

namespace divgraph {

/// Row-major rectangular integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form: nonnegative, each dividing the next,
/// one entry per min(rows, cols).
std::vector<Integer> smith_invariants(IntMatrix m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(IntMatrix m);

/// Whether m x = rhs has an integer solution x.
bool integer_solvable(IntMatrix m, std::vector<Integer> rhs);

}  // namespace divgraph
