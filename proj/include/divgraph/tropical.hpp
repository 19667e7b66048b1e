#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"

namespace divgraph {

using Rational = boost::multiprecision::cpp_rational;

/// Weighted graph with a positive rational length per edge.
class TropicalCurve {
public:
    TropicalCurve(WeightedGraph base, std::vector<Rational> lengths);

    const WeightedGraph& base() const { return base_; }
    const Multigraph& graph() const { return base_.graph(); }
    const std::vector<Rational>& lengths() const { return lengths_; }
    const Rational& length(int e) const;

private:
    WeightedGraph base_;
    std::vector<Rational> lengths_;
};

/// Metric graph allowing length-0 edges, but only on loops (the degenerate
/// loops carry the vertex weights of the corresponding tropical curve).
class PseudoMetricGraph {
public:
    PseudoMetricGraph(Multigraph graph, std::vector<Rational> lengths);

    const Multigraph& graph() const { return graph_; }
    const std::vector<Rational>& lengths() const { return lengths_; }
    const Rational& length(int e) const;

private:
    Multigraph graph_;
    std::vector<Rational> lengths_;
};

/// Weight w(v) becomes w(v) zero-length loops at v, appended after the
/// original edges in vertex order; edge indices of the curve are preserved.
PseudoMetricGraph to_pseudo_metric(const TropicalCurve& c);

/// Inverse: zero-length loops turn back into vertex weights.  Exact inverse
/// of to_pseudo_metric; on other inputs the zero loops are absorbed in
/// vertex order wherever they sit.
TropicalCurve from_pseudo_metric(const PseudoMetricGraph& p);

/// A vertex of the curve, or a point in the interior of an edge at a given
/// distance from the edge's first declared endpoint.
struct TropicalPoint {
    int vertex = -1;
    int edge = -1;
    Rational position;

    static TropicalPoint at_vertex(int v);
    static TropicalPoint on_edge(int e, Rational position);
    bool is_vertex() const { return vertex >= 0; }

    friend bool operator==(const TropicalPoint& a, const TropicalPoint& b);
    friend bool operator<(const TropicalPoint& a, const TropicalPoint& b);
};

/// Finitely supported integer divisor on the points of a curve; entries are
/// kept sorted with nonzero coefficients.
class TropicalDivisor {
public:
    TropicalDivisor() = default;

    void add(const TropicalPoint& p, const Integer& coefficient);
    const std::vector<std::pair<TropicalPoint, Integer>>& entries() const { return entries_; }

    Integer degree() const;
    bool is_effective() const;

    TropicalDivisor& operator+=(const TropicalDivisor& o);
    TropicalDivisor& operator-=(const TropicalDivisor& o);
    friend TropicalDivisor operator+(TropicalDivisor a, const TropicalDivisor& b) { return a += b; }
    friend TropicalDivisor operator-(TropicalDivisor a, const TropicalDivisor& b) { return a -= b; }
    friend bool operator==(const TropicalDivisor& a, const TropicalDivisor& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<TropicalPoint, Integer>> entries_;
};

/// Throws std::invalid_argument unless the point/divisor fits the curve
/// (edge indices in range, positions strictly inside their edge).
void validate_point(const TropicalCurve& c, const TropicalPoint& p);
void validate_divisor(const TropicalCurve& c, const TropicalDivisor& d);

/// K(v) = valence(v) + 2 weight(v) - 2 on the curve's vertices.
TropicalDivisor tropical_canonical(const TropicalCurve& c);

/// Zero-weight curve with weight(v) loops of the given length(s) appended
/// at v.  Original vertex and edge indices are preserved, so divisors on
/// the curve remain valid on the model.
TropicalCurve epsilon_model(const TropicalCurve& c, const Rational& epsilon);
/// Heterogeneous variant: one positive length per virtual loop, in order.
TropicalCurve epsilon_model(const TropicalCurve& c, const std::vector<Rational>& loop_lengths);

/// Lengths (and divisor positions) scaled by a positive rational factor.
TropicalCurve scale_curve(const TropicalCurve& c, const Rational& factor);
TropicalDivisor scale_divisor_positions(const TropicalDivisor& d, const Rational& factor);

/// Integer chip-firing model of a zero-weight curve: divisor support points
/// become vertices, lengths are scaled to integers by `scale`, edges are cut
/// into unit segments, and `support` lists a rank-determining vertex set
/// (the pre-subdivision vertices plus one interior point per loop).
struct DiscreteModel {
    Multigraph graph;
    Divisor divisor;
    std::vector<int> support;
    Integer scale;
};

DiscreteModel discretize(const TropicalCurve& c, const TropicalDivisor& d,
                         long long granularity, long long max_vertices);

struct TropicalRankOptions {
    Rational epsilon = 1;                  // virtual loop length
    std::vector<Rational> loop_epsilons;   // per-loop override when nonempty
    long long granularity = 1;             // extra uniform refinement of the model
    long long max_vertices = 10000;        // discretized model budget
};

long long tropical_rank(const TropicalCurve& c, const TropicalDivisor& d,
                        const TropicalRankOptions& options = {});

struct TropicalRiemannRochReport {
    long long rank_d = -1;
    long long rank_residual = -1;
    Integer degree;
    long long genus = 0;
    bool holds = false;
};

TropicalRiemannRochReport tropical_riemann_roch_check(const TropicalCurve& c,
                                                      const TropicalDivisor& d,
                                                      const TropicalRankOptions& options = {});

}  // namespace divgraph
