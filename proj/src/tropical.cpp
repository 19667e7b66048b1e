#include "divgraph/tropical.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "divgraph/rank.hpp"

namespace divgraph {

TropicalCurve::TropicalCurve(WeightedGraph base, std::vector<Rational> lengths)
    : base_(std::move(base)), lengths_(std::move(lengths)) {
    if (static_cast<int>(lengths_.size()) != base_.graph().edge_count()) {
        throw std::invalid_argument("need one length per edge");
    }
    for (const Rational& l : lengths_) {
        if (l <= 0) {
            throw std::invalid_argument("edge lengths must be positive");
        }
    }
}

const Rational& TropicalCurve::length(int e) const {
    graph().edge(e);  // bounds check
    return lengths_[e];
}

PseudoMetricGraph::PseudoMetricGraph(Multigraph graph, std::vector<Rational> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
    if (static_cast<int>(lengths_.size()) != graph_.edge_count()) {
        throw std::invalid_argument("need one length per edge");
    }
    for (int e = 0; e < graph_.edge_count(); ++e) {
        if (lengths_[e] < 0) {
            throw std::invalid_argument("edge lengths must be nonnegative");
        }
        if (lengths_[e] == 0 && !graph_.is_loop(e)) {
            throw std::invalid_argument("only loop-edges may have length zero");
        }
    }
}

const Rational& PseudoMetricGraph::length(int e) const {
    graph_.edge(e);  // bounds check
    return lengths_[e];
}

PseudoMetricGraph to_pseudo_metric(const TropicalCurve& c) {
    std::vector<Multigraph::Edge> edges = c.graph().edges();
    std::vector<Rational> lengths = c.lengths();
    for (int v = 0; v < c.graph().vertex_count(); ++v) {
        for (int i = 0; i < c.base().weight(v); ++i) {
            edges.push_back({v, v});
            lengths.push_back(0);
        }
    }
    return PseudoMetricGraph(Multigraph(c.graph().vertex_names(), std::move(edges)),
                             std::move(lengths));
}

TropicalCurve from_pseudo_metric(const PseudoMetricGraph& p) {
    std::vector<int> weights(p.graph().vertex_count(), 0);
    std::vector<Multigraph::Edge> edges;
    std::vector<Rational> lengths;
    for (int e = 0; e < p.graph().edge_count(); ++e) {
        if (p.length(e) == 0) {
            weights[p.graph().edge(e).u] += 1;
        } else {
            edges.push_back(p.graph().edge(e));
            lengths.push_back(p.length(e));
        }
    }
    return TropicalCurve(
        WeightedGraph(Multigraph(p.graph().vertex_names(), std::move(edges)),
                      std::move(weights)),
        std::move(lengths));
}

TropicalPoint TropicalPoint::at_vertex(int v) {
    TropicalPoint p;
    p.vertex = v;
    return p;
}

TropicalPoint TropicalPoint::on_edge(int e, Rational position) {
    TropicalPoint p;
    p.edge = e;
    p.position = std::move(position);
    return p;
}

bool operator==(const TropicalPoint& a, const TropicalPoint& b) {
    return a.vertex == b.vertex && a.edge == b.edge && a.position == b.position;
}

bool operator<(const TropicalPoint& a, const TropicalPoint& b) {
    if (a.is_vertex() != b.is_vertex()) {
        return a.is_vertex();
    }
    if (a.is_vertex()) {
        return a.vertex < b.vertex;
    }
    if (a.edge != b.edge) {
        return a.edge < b.edge;
    }
    return a.position < b.position;
}

void TropicalDivisor::add(const TropicalPoint& p, const Integer& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const auto& entry, const TropicalPoint& q) {
                                   return entry.first < q;
                               });
    if (it != entries_.end() && it->first == p) {
        it->second += coefficient;
        if (it->second == 0) {
            entries_.erase(it);
        }
    } else {
        entries_.insert(it, {p, coefficient});
    }
}

Integer TropicalDivisor::degree() const {
    Integer d = 0;
    for (const auto& [p, c] : entries_) {
        (void)p;
        d += c;
    }
    return d;
}

bool TropicalDivisor::is_effective() const {
    for (const auto& [p, c] : entries_) {
        (void)p;
        if (c < 0) return false;
    }
    return true;
}

TropicalDivisor& TropicalDivisor::operator+=(const TropicalDivisor& o) {
    for (const auto& [p, c] : o.entries_) {
        add(p, c);
    }
    return *this;
}

TropicalDivisor& TropicalDivisor::operator-=(const TropicalDivisor& o) {
    for (const auto& [p, c] : o.entries_) {
        add(p, Integer(-c));
    }
    return *this;
}

void validate_point(const TropicalCurve& c, const TropicalPoint& p) {
    if (p.is_vertex()) {
        if (p.edge >= 0) {
            throw std::invalid_argument("a point is a vertex or an edge point, not both");
        }
        c.graph().vertex_name(p.vertex);  // bounds check
        return;
    }
    if (p.edge < 0) {
        throw std::invalid_argument("a point needs a vertex or an edge");
    }
    const Rational& len = c.length(p.edge);
    if (p.position <= 0 || p.position >= len) {
        throw std::invalid_argument("edge point position must lie strictly inside the edge");
    }
}

void validate_divisor(const TropicalCurve& c, const TropicalDivisor& d) {
    for (const auto& [p, coeff] : d.entries()) {
        (void)coeff;
        validate_point(c, p);
    }
}

TropicalDivisor tropical_canonical(const TropicalCurve& c) {
    TropicalDivisor k;
    for (int v = 0; v < c.graph().vertex_count(); ++v) {
        Integer coeff = Integer(c.graph().valence(v)) + 2 * Integer(c.base().weight(v)) - 2;
        k.add(TropicalPoint::at_vertex(v), coeff);
    }
    return k;
}

TropicalCurve epsilon_model(const TropicalCurve& c, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw std::invalid_argument("virtual loop lengths must be positive");
    }
    return epsilon_model(
        c, std::vector<Rational>(static_cast<size_t>(c.base().total_weight()), epsilon));
}

TropicalCurve epsilon_model(const TropicalCurve& c, const std::vector<Rational>& loop_lengths) {
    if (static_cast<long long>(loop_lengths.size()) != c.base().total_weight()) {
        throw std::invalid_argument("need one loop length per unit of weight");
    }
    std::vector<Multigraph::Edge> edges = c.graph().edges();
    std::vector<Rational> lengths = c.lengths();
    size_t next = 0;
    for (int v = 0; v < c.graph().vertex_count(); ++v) {
        for (int i = 0; i < c.base().weight(v); ++i) {
            if (loop_lengths[next] <= 0) {
                throw std::invalid_argument("virtual loop lengths must be positive");
            }
            edges.push_back({v, v});
            lengths.push_back(loop_lengths[next++]);
        }
    }
    return TropicalCurve(
        WeightedGraph(Multigraph(c.graph().vertex_names(), std::move(edges))),
        std::move(lengths));
}

TropicalCurve scale_curve(const TropicalCurve& c, const Rational& factor) {
    if (factor <= 0) {
        throw std::invalid_argument("scaling factor must be positive");
    }
    std::vector<Rational> lengths = c.lengths();
    for (Rational& l : lengths) {
        l *= factor;
    }
    return TropicalCurve(c.base(), std::move(lengths));
}

TropicalDivisor scale_divisor_positions(const TropicalDivisor& d, const Rational& factor) {
    if (factor <= 0) {
        throw std::invalid_argument("scaling factor must be positive");
    }
    TropicalDivisor out;
    for (const auto& [p, c] : d.entries()) {
        if (p.is_vertex()) {
            out.add(p, c);
        } else {
            out.add(TropicalPoint::on_edge(p.edge, Rational(p.position * factor)), c);
        }
    }
    return out;
}

DiscreteModel discretize(const TropicalCurve& c, const TropicalDivisor& d,
                         long long granularity, long long max_vertices) {
    if (c.base().total_weight() != 0) {
        throw std::invalid_argument("discretize needs a zero-weight curve; expand weights first");
    }
    if (granularity < 1) {
        throw std::invalid_argument("granularity must be at least 1");
    }
    if (max_vertices < 1) {
        throw std::invalid_argument("the vertex budget must be positive");
    }
    validate_divisor(c, d);

    // Interior support points become vertices, cutting each edge into
    // segments; vertex coefficients ride along.
    const Multigraph& g = c.graph();
    std::vector<std::vector<std::pair<Rational, Integer>>> interior(g.edge_count());
    std::vector<Integer> coeffs(g.vertex_count(), Integer(0));
    for (const auto& [p, coeff] : d.entries()) {
        if (p.is_vertex()) {
            coeffs[p.vertex] = coeff;
        } else {
            interior[p.edge].push_back({p.position, coeff});
        }
    }

    std::vector<std::string> names = g.vertex_names();
    std::vector<Multigraph::Edge> edges;
    std::vector<Rational> seg_lengths;
    for (int e = 0; e < g.edge_count(); ++e) {
        // TropicalDivisor entries are sorted, so positions already ascend.
        int prev = g.edge(e).u;
        Rational prev_pos = 0;
        for (size_t j = 0; j < interior[e].size(); ++j) {
            int mid = static_cast<int>(names.size());
            names.push_back(std::to_string(e) + "#pt" + std::to_string(j));
            coeffs.push_back(interior[e][j].second);
            edges.push_back({prev, mid});
            seg_lengths.push_back(Rational(interior[e][j].first - prev_pos));
            prev = mid;
            prev_pos = interior[e][j].first;
        }
        edges.push_back({prev, g.edge(e).v});
        seg_lengths.push_back(Rational(c.length(e) - prev_pos));
    }
    Multigraph cut(std::move(names), std::move(edges));
    Divisor divisor_cut{std::vector<Integer>(coeffs)};

    Integer unit = 1;
    for (const Rational& l : seg_lengths) {
        unit = boost::multiprecision::lcm(unit, Integer(boost::multiprecision::denominator(l)));
    }
    unit *= granularity;

    auto segment_units = [&](const Integer& scale) {
        std::vector<Integer> m(seg_lengths.size());
        for (size_t e = 0; e < seg_lengths.size(); ++e) {
            m[e] = Integer(boost::multiprecision::numerator(seg_lengths[e]) * scale /
                           boost::multiprecision::denominator(seg_lengths[e]));
        }
        return m;
    };

    std::vector<Integer> units = segment_units(unit);
    // A loop that would collapse to a single unit segment must stay a
    // cycle, or plain rank would ignore it; doubling the scale is free
    // because tropical rank is invariant under homothety.
    for (size_t e = 0; e < units.size(); ++e) {
        if (cut.is_loop(static_cast<int>(e)) && units[e] == 1) {
            unit *= 2;
            units = segment_units(unit);
            break;
        }
    }

    Integer total_vertices = cut.vertex_count();
    for (const Integer& m : units) {
        total_vertices += m - 1;
    }
    if (total_vertices > max_vertices) {
        throw std::invalid_argument(
            "discretized model needs " + total_vertices.str() +
            " vertices, over the budget of " + std::to_string(max_vertices));
    }

    std::vector<int> counts(units.size());
    for (size_t e = 0; e < units.size(); ++e) {
        if (units[e] - 1 > INT_MAX) {
            throw std::invalid_argument("discretized model is too large");
        }
        counts[e] = units[e].convert_to<int>() - 1;
    }

    DerivedGraph sub = subdivide(cut, counts);
    DiscreteModel out{sub.graph, pullback(sub.map, divisor_cut), sub.map.image(),
                      std::move(unit)};
    for (int e = 0; e < cut.edge_count(); ++e) {
        if (cut.is_loop(e)) {
            out.support.push_back(out.graph.vertex_index(std::to_string(e) + "#sub0"));
        }
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

long long tropical_rank(const TropicalCurve& c, const TropicalDivisor& d,
                        const TropicalRankOptions& options) {
    validate_divisor(c, d);
    TropicalCurve model = options.loop_epsilons.empty()
                              ? epsilon_model(c, options.epsilon)
                              : epsilon_model(c, options.loop_epsilons);
    DiscreteModel dm = discretize(model, d, options.granularity, options.max_vertices);
    RankEngine engine(dm.graph, dm.support);
    return engine.rank(dm.divisor);
}

TropicalRiemannRochReport tropical_riemann_roch_check(const TropicalCurve& c,
                                                      const TropicalDivisor& d,
                                                      const TropicalRankOptions& options) {
    TropicalDivisor k = tropical_canonical(c);
    TropicalRiemannRochReport report;
    report.rank_d = tropical_rank(c, d, options);
    report.rank_residual = tropical_rank(c, k - d, options);
    report.degree = d.degree();
    report.genus = weighted_genus(c.base());
    report.holds =
        Integer(report.rank_d) - report.rank_residual == report.degree - report.genus + 1;
    return report;
}

}  // namespace divgraph
