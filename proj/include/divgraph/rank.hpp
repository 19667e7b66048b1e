#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"

namespace divgraph {

/// Rank of a divisor plus, on request, the first failing effective divisor
/// of degree rank+1 in enumeration order (nondecreasing vertex-index
/// tuples, lexicographically).  The witness lives on the graph the
/// enumeration ran on -- the loop-split model for sharp/weighted ranks --
/// and is reported as (vertex name, coefficient) pairs; a rank of -1 has
/// the empty (zero) witness.
struct RankResult {
    long long rank = -1;
    std::optional<std::vector<std::pair<std::string, Integer>>> witness;
};

/// Rank computations on a fixed connected graph, with results memoized on
/// q-reduced forms (q = vertex 0) across calls.  An optional support
/// restricts the vertices from which failing effective divisors may draw;
/// the default is all of them.
class RankEngine {
public:
    explicit RankEngine(const Multigraph& g, std::vector<int> support = {});

    const Multigraph& graph() const;
    const std::vector<int>& support() const;

    long long rank(const Divisor& d);
    Divisor reduce(const Divisor& d) const;
    bool has_effective(const Divisor& d) const;

    /// Least failing effective divisor of the given degree, in enumeration
    /// order; throws std::invalid_argument if none exists at that degree.
    Divisor least_failing(const Divisor& d, long long degree);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

RankResult rank_plain(const Multigraph& g, const Divisor& d, bool with_witness = true);

/// Rank on the model with every loop split into a 2-cycle (hat graph).
RankResult rank_sharp(const Multigraph& g, const Divisor& d, bool with_witness = true);

/// Loop-split rank on the virtual graph (weight(v) extra loops at v).
RankResult rank_weighted(const WeightedGraph& g, const Divisor& d, bool with_witness = true);

/// K(v) = valence(v) + 2 weight(v) - 2; degree 2g - 2.
Divisor canonical_divisor(const WeightedGraph& g);

struct RiemannRochReport {
    long long rank_d = -1;
    long long rank_residual = -1;  // rank of K - D
    Integer degree;                // of D
    long long genus = 0;           // weighted genus
    bool holds = false;            // rank_d - rank_residual == degree - genus + 1
};

RiemannRochReport riemann_roch_check(const WeightedGraph& g, const Divisor& d);

/// Weighted rank of d times the vertex on a single vertex of weight g:
/// -1 for d < 0, floor(d/2) for 0 <= d <= 2g.  Requires g >= 1.
long long rose_rank(long long g, long long d);

}  // namespace divgraph
