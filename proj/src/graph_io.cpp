#include "divgraph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace divgraph {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize_line(std::string_view line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) {
            out.push_back({std::string(line.substr(start, i - start)), lineno,
                           static_cast<int>(start) + 1});
        }
    }
    return out;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s[0] == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, int line, int column) {
    if (!is_integer_literal(s)) {
        throw ParseError("expected an integer, got '" + std::string(s) + "'", line, column);
    }
    return Integer(std::string(s));
}

Rational parse_rational(std::string_view s, int line, int column) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, line, column));
    }
    Integer num = parse_integer(s.substr(0, slash), line, column);
    std::string_view den_text = s.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-') {
        throw ParseError("expected a positive denominator in '" + std::string(s) + "'",
                         line, column);
    }
    Integer den{std::string(den_text)};
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(s) + "'", line, column);
    }
    return Rational(num, den);
}

int parse_weight(const Token& t) {
    Integer w = parse_integer(t.text, t.line, t.column);
    if (w < 0) {
        throw ParseError("weights must be nonnegative", t.line, t.column);
    }
    if (w > 1000000) {
        throw ParseError("weight is implausibly large", t.line, t.column);
    }
    return w.convert_to<int>();
}

}  // namespace

bool GraphDocument::has_all_lengths() const {
    return std::all_of(lengths.begin(), lengths.end(),
                       [](const auto& l) { return l.has_value(); });
}

bool GraphDocument::has_any_length() const {
    return std::any_of(lengths.begin(), lengths.end(),
                       [](const auto& l) { return l.has_value(); });
}

TropicalCurve GraphDocument::tropical_curve() const {
    if (!has_all_lengths()) {
        throw std::invalid_argument("tropical data needs a length on every edge");
    }
    std::vector<Rational> ls;
    ls.reserve(lengths.size());
    for (const auto& l : lengths) {
        ls.push_back(*l);
    }
    return TropicalCurve(graph, std::move(ls));
}

PseudoMetricGraph GraphDocument::pseudo_metric() const {
    if (!has_all_lengths()) {
        throw std::invalid_argument("metric data needs a length on every edge");
    }
    if (graph.total_weight() != 0) {
        throw std::invalid_argument("a pseudo-metric graph carries no vertex weights");
    }
    std::vector<Rational> ls;
    ls.reserve(lengths.size());
    for (const auto& l : lengths) {
        ls.push_back(*l);
    }
    return PseudoMetricGraph(graph.graph(), std::move(ls));
}

GraphDocument parse_graph_text(std::string_view text) {
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> vertex_lines;
    std::unordered_map<std::string, int> index;
    struct PendingEdge {
        Token u, v;
        std::optional<Rational> length;
    };
    std::vector<PendingEdge> pending;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::vector<Token> tokens = tokenize_line(line, lineno);
        if (tokens.empty() || tokens[0].text[0] == '#') {
            continue;
        }
        const Token& head = tokens[0];
        if (head.text == "vertex") {
            if (tokens.size() != 2 && tokens.size() != 4) {
                throw ParseError("expected: vertex <id> [weight <n>]", head.line, head.column);
            }
            const std::string& id = tokens[1].text;
            if (index.count(id)) {
                throw ParseError("duplicate vertex id '" + id + "'", tokens[1].line,
                                 tokens[1].column);
            }
            int w = 0;
            if (tokens.size() == 4) {
                if (tokens[2].text != "weight") {
                    throw ParseError("expected 'weight', got '" + tokens[2].text + "'",
                                     tokens[2].line, tokens[2].column);
                }
                w = parse_weight(tokens[3]);
            }
            index.emplace(id, static_cast<int>(names.size()));
            names.push_back(id);
            weights.push_back(w);
            vertex_lines.push_back(head.line);
        } else if (head.text == "edge") {
            if (tokens.size() != 3 && tokens.size() != 5) {
                throw ParseError("expected: edge <u> <v> [length <p>/<q>]", head.line,
                                 head.column);
            }
            PendingEdge e{tokens[1], tokens[2], std::nullopt};
            if (tokens.size() == 5) {
                if (tokens[3].text != "length") {
                    throw ParseError("expected 'length', got '" + tokens[3].text + "'",
                                     tokens[3].line, tokens[3].column);
                }
                Rational l = parse_rational(tokens[4].text, tokens[4].line, tokens[4].column);
                if (l < 0) {
                    throw ParseError("edge lengths cannot be negative", tokens[4].line,
                                     tokens[4].column);
                }
                e.length = l;
            }
            pending.push_back(std::move(e));
        } else {
            throw ParseError("unknown directive '" + head.text + "'", head.line, head.column);
        }
    }

    if (names.empty()) {
        throw ParseError("the file declares no vertices", lineno, 1);
    }

    std::vector<Multigraph::Edge> edges;
    std::vector<std::optional<Rational>> lengths;
    for (const PendingEdge& e : pending) {
        auto iu = index.find(e.u.text);
        if (iu == index.end()) {
            throw ParseError("edge endpoint '" + e.u.text + "' is not a declared vertex",
                             e.u.line, e.u.column);
        }
        auto iv = index.find(e.v.text);
        if (iv == index.end()) {
            throw ParseError("edge endpoint '" + e.v.text + "' is not a declared vertex",
                             e.v.line, e.v.column);
        }
        edges.push_back({iu->second, iv->second});
        lengths.push_back(e.length);
    }

    Multigraph g(names, std::move(edges));
    if (!g.is_connected()) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> queue = {0};
        seen[0] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (const auto& [w, m] : g.neighbors(queue[head])) {
                (void)m;
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::string missing;
        int first_missing = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!seen[v]) {
                if (first_missing < 0) first_missing = v;
                if (!missing.empty()) missing += ", ";
                missing += g.vertex_name(v);
            }
        }
        throw ParseError("graph is disconnected; unreachable from '" + g.vertex_name(0) +
                             "': " + missing,
                         vertex_lines[first_missing], 1);
    }
    return GraphDocument{WeightedGraph(std::move(g), std::move(weights)), std::move(lengths)};
}

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

std::string format_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string serialize_graph(const WeightedGraph& g,
                            const std::vector<std::optional<Rational>>& lengths) {
    if (!lengths.empty() && static_cast<int>(lengths.size()) != g.graph().edge_count()) {
        throw std::invalid_argument("need one length slot per edge");
    }
    std::string out;
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
        out += "vertex " + g.graph().vertex_name(v);
        if (g.weight(v) > 0) {
            out += " weight " + std::to_string(g.weight(v));
        }
        out += "\n";
    }
    for (int e = 0; e < g.graph().edge_count(); ++e) {
        const auto& edge = g.graph().edge(e);
        out += "edge " + g.graph().vertex_name(edge.u) + " " + g.graph().vertex_name(edge.v);
        if (!lengths.empty() && lengths[e].has_value()) {
            out += " length " + format_rational(*lengths[e]);
        }
        out += "\n";
    }
    return out;
}

std::string serialize_curve(const TropicalCurve& c) {
    std::vector<std::optional<Rational>> lengths(c.lengths().begin(), c.lengths().end());
    return serialize_graph(c.base(), lengths);
}

std::string serialize_pseudo_metric(const PseudoMetricGraph& p) {
    std::vector<std::optional<Rational>> lengths(p.lengths().begin(), p.lengths().end());
    return serialize_graph(WeightedGraph(p.graph()), lengths);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Splits "a:b,c:d" into (lhs, rhs) pairs, trimming around separators.
std::vector<std::pair<std::string_view, std::string_view>> split_entries(
    std::string_view text) {
    std::vector<std::pair<std::string_view, std::string_view>> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view item = text.substr(
            pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        item = trim(item);
        if (item.empty()) {
            throw std::invalid_argument("empty divisor entry");
        }
        size_t colon = item.rfind(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("divisor entry '" + std::string(item) +
                                        "' needs the form <point>:<coefficient>");
        }
        out.push_back({trim(item.substr(0, colon)), trim(item.substr(colon + 1))});
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

Integer parse_coefficient(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("expected an integer coefficient, got '" +
                                    std::string(s) + "'");
    }
    return Integer(std::string(s));
}

Rational parse_plain_rational(std::string_view s) {
    size_t slash = s.find('/');
    auto check_int = [&](std::string_view part) {
        if (!is_integer_literal(part)) {
            throw std::invalid_argument("expected a rational number, got '" + std::string(s) +
                                        "'");
        }
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(Integer(std::string(s)));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d{std::string(den)};
    if (d <= 0) {
        throw std::invalid_argument("expected a positive denominator in '" + std::string(s) +
                                    "'");
    }
    return Rational(Integer(std::string(num)), d);
}

}  // namespace

Divisor parse_divisor(std::string_view text, const Multigraph& g) {
    Divisor d(g.vertex_count());
    text = trim(text);
    if (text == "0") {
        return d;
    }
    for (const auto& [point, coeff] : split_entries(text)) {
        int v = g.find_vertex(point);
        if (v < 0) {
            throw std::invalid_argument("unknown vertex '" + std::string(point) +
                                        "' in divisor");
        }
        d[v] += parse_coefficient(coeff);
    }
    return d;
}

std::string format_divisor(const Divisor& d, const Multigraph& g) {
    if (d.size() != g.vertex_count()) {
        throw std::invalid_argument("divisor does not match the graph's vertex count");
    }
    std::string out;
    for (int v = 0; v < d.size(); ++v) {
        if (d[v] == 0) continue;
        if (!out.empty()) out += ",";
        out += g.vertex_name(v) + ":" + d[v].str();
    }
    return out.empty() ? "0" : out;
}

TropicalDivisor parse_tropical_divisor(std::string_view text, const TropicalCurve& c) {
    TropicalDivisor d;
    text = trim(text);
    if (text == "0") {
        return d;
    }
    for (const auto& [point, coeff] : split_entries(text)) {
        size_t at = point.find('@');
        TropicalPoint p;
        if (at == std::string_view::npos) {
            int v = c.graph().find_vertex(point);
            if (v < 0) {
                throw std::invalid_argument("unknown vertex '" + std::string(point) +
                                            "' in divisor");
            }
            p = TropicalPoint::at_vertex(v);
        } else {
            std::string_view edge_text = trim(point.substr(0, at));
            if (!is_integer_literal(edge_text) || edge_text[0] == '-') {
                throw std::invalid_argument("expected an edge index before '@' in '" +
                                            std::string(point) + "'");
            }
            Integer e{std::string(edge_text)};
            if (e >= c.graph().edge_count()) {
                throw std::invalid_argument("edge index " + e.str() + " out of range");
            }
            p = TropicalPoint::on_edge(e.convert_to<int>(),
                                       parse_plain_rational(trim(point.substr(at + 1))));
        }
        validate_point(c, p);
        d.add(p, parse_coefficient(coeff));
    }
    return d;
}

std::string format_tropical_divisor(const TropicalDivisor& d, const TropicalCurve& c) {
    std::string out;
    for (const auto& [p, coeff] : d.entries()) {
        if (!out.empty()) out += ",";
        if (p.is_vertex()) {
            out += c.graph().vertex_name(p.vertex);
        } else {
            out += std::to_string(p.edge) + "@" + format_rational(p.position);
        }
        out += ":" + coeff.str();
    }
    return out.empty() ? "0" : out;
}

}  // namespace divgraph
