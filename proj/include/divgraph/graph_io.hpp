#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"
#include "divgraph/tropical.hpp"

namespace divgraph {

/// Input error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parsed graph file: vertices with optional weights, edges with optional
/// rational lengths.
///
///   # comment lines start with '#'
///   vertex <id> [weight <n>]
///   edge <u> <v> [length <p>/<q>]
///
/// Vertex ids are arbitrary nonempty tokens; edges may come in any order
/// but must reference declared vertices.  Disconnected graphs are rejected
/// with the unreachable vertices named.
struct GraphDocument {
    WeightedGraph graph;
    std::vector<std::optional<Rational>> lengths;  // one slot per edge

    bool has_all_lengths() const;
    bool has_any_length() const;

    /// Requires a length on every edge.
    TropicalCurve tropical_curve() const;
    /// Requires a length on every edge and all weights zero.
    PseudoMetricGraph pseudo_metric() const;
};

GraphDocument parse_graph_text(std::string_view text);
GraphDocument load_graph_file(const std::string& path);

std::string serialize_graph(const WeightedGraph& g,
                            const std::vector<std::optional<Rational>>& lengths = {});
std::string serialize_curve(const TropicalCurve& c);
std::string serialize_pseudo_metric(const PseudoMetricGraph& p);

/// "p/q", or just "p" for integers.
std::string format_rational(const Rational& r);

/// Divisors as "<id>:<coeff>,..." with "0" for the zero divisor.
Divisor parse_divisor(std::string_view text, const Multigraph& g);
std::string format_divisor(const Divisor& d, const Multigraph& g);

/// Tropical divisors additionally accept edge points "<edge>@<pos>:<coeff>".
TropicalDivisor parse_tropical_divisor(std::string_view text, const TropicalCurve& c);
std::string format_tropical_divisor(const TropicalDivisor& d, const TropicalCurve& c);

}  // namespace divgraph
