#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "divgraph/graph_io.hpp"
#include "doctest.h"
#include "sweep.hpp"

using namespace divgraph;

namespace {

Rational frac(long long p, long long q) { return Rational(Integer(p), Integer(q)); }

// Captures the position a ParseError carries alongside its message.
template <class Fn>
ParseError capture(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError("unreachable", 0, 0);
}

}  // namespace

TEST_SUITE_BEGIN("graph io");

TEST_CASE("parsing well-formed files") {
    GraphDocument doc = parse_graph_text(
        "# alpha\n"
        "vertex a weight 2\n"
        "vertex b\n"
        "\n"
        "edge a b\n"
        "edge a b length 3/4\n"
        "edge b b length 0\n");
    const Multigraph& g = doc.graph.graph();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(doc.graph.weight(0) == 2);
    CHECK(doc.graph.weight(1) == 0);
    CHECK(!doc.lengths[0].has_value());
    CHECK(*doc.lengths[1] == frac(3, 4));
    CHECK(*doc.lengths[2] == 0);
    CHECK(doc.has_any_length());
    CHECK(!doc.has_all_lengths());

    SUBCASE("vertex ids may contain the comment character") {
        GraphDocument d2 = parse_graph_text("vertex a#b\nvertex c\nedge a#b c\n");
        CHECK(d2.graph.graph().vertex_index("a#b") == 0);
    }

    SUBCASE("edges may precede their vertices") {
        GraphDocument d2 = parse_graph_text("edge x y\nvertex x\nvertex y\n");
        CHECK(d2.graph.graph().edge_count() == 1);
    }

    SUBCASE("integer lengths need no slash") {
        GraphDocument d2 = parse_graph_text("vertex a\nedge a a length 2\n");
        CHECK(*d2.lengths[0] == 2);
    }
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("unknown directive") {
        ParseError e = capture([] { parse_graph_text("vertex a\nnode b\n"); });
        CHECK(std::string(e.what()) == "unknown directive 'node'");
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }

    SUBCASE("undeclared endpoint points at the token") {
        ParseError e = capture([] { parse_graph_text("vertex a\nedge a b\n"); });
        CHECK(std::string(e.what()) == "edge endpoint 'b' is not a declared vertex");
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }

    SUBCASE("duplicate vertex") {
        ParseError e = capture([] { parse_graph_text("vertex a\nvertex a\n"); });
        CHECK(std::string(e.what()) == "duplicate vertex id 'a'");
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }

    SUBCASE("arity problems") {
        CHECK_THROWS_AS(parse_graph_text("vertex\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a weight\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a length\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a size 2\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a mass 2\n"), ParseError);
    }

    SUBCASE("weight validation") {
        CHECK_THROWS_AS(parse_graph_text("vertex a weight -1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a weight x\n"), ParseError);
        ParseError e = capture([] { parse_graph_text("vertex a weight 1000001\n"); });
        CHECK(std::string(e.what()) == "weight is implausibly large");
        CHECK_NOTHROW(parse_graph_text("vertex a weight 1000000\n"));
    }

    SUBCASE("length validation") {
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a length 1/0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a length 1/-2\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a length -1/2\n"), ParseError);
        CHECK_THROWS_AS(parse_graph_text("vertex a\nedge a a length q\n"), ParseError);
    }

    SUBCASE("empty input") {
        ParseError e = capture([] { parse_graph_text("# nothing here\n"); });
        CHECK(std::string(e.what()) == "the file declares no vertices");
    }

    SUBCASE("disconnected graphs name the unreachable vertices") {
        ParseError e = capture([] {
            parse_graph_text("vertex a\nvertex b\nvertex c\nedge b c\n");
        });
        CHECK(std::string(e.what()) == "graph is disconnected; unreachable from 'a': b, c");
        CHECK(e.line() == 2);
    }
}

TEST_CASE("loading from disk") {
    std::string path = "io_roundtrip_tmp.g";
    {
        std::ofstream out(path);
        out << "vertex v\nedge v v length 1/2\n";
    }
    GraphDocument doc = load_graph_file(path);
    CHECK(doc.graph.graph().loop_edge_count() == 1);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_graph_file(path), std::invalid_argument);
}

TEST_CASE("document views") {
    SUBCASE("tropical curves need every length") {
        GraphDocument doc = parse_graph_text("vertex a\nedge a a\n");
        CHECK_THROWS_AS(doc.tropical_curve(), std::invalid_argument);
        GraphDocument ok = parse_graph_text("vertex a\nedge a a length 1\n");
        CHECK(ok.tropical_curve().length(0) == 1);
    }

    SUBCASE("zero lengths are tropical poison but valid pseudo-metric data") {
        GraphDocument doc = parse_graph_text("vertex a\nedge a a length 0\n");
        CHECK_THROWS_AS(doc.tropical_curve(), std::invalid_argument);
        PseudoMetricGraph p = doc.pseudo_metric();
        CHECK(p.length(0) == 0);
    }

    SUBCASE("pseudo-metric graphs refuse weights") {
        GraphDocument doc = parse_graph_text("vertex a weight 1\nedge a a length 1\n");
        CHECK_THROWS_AS(doc.pseudo_metric(), std::invalid_argument);
    }
}

TEST_CASE("serialization round-trips") {
    SUBCASE("weighted graphs") {
        sweep::Rng rng(501);
        for (const auto& shape : sweep::connected_graph_classes(3, 4)) {
            Multigraph g = sweep::to_multigraph(shape);
            std::vector<int> w(g.vertex_count());
            for (auto& x : w) x = static_cast<int>(rng.next(0, 2));
            WeightedGraph wg(g, w);
            std::string text = serialize_graph(wg);
            CHECK(text == serialize_graph(wg));  // deterministic
            GraphDocument doc = parse_graph_text(text);
            CHECK(doc.graph.graph().vertex_names() == g.vertex_names());
            CHECK(doc.graph.weights() == w);
            REQUIRE(doc.graph.graph().edge_count() == g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e) {
                CHECK(doc.graph.graph().edge(e).u == g.edge(e).u);
                CHECK(doc.graph.graph().edge(e).v == g.edge(e).v);
            }
        }
    }

    SUBCASE("curves keep exact lengths") {
        Multigraph g({"a", "b"}, {{"a", "b"}, {"b", "b"}});
        TropicalCurve c(WeightedGraph(g, {0, 3}), {frac(22, 7), frac(1, 1000000007)});
        GraphDocument doc = parse_graph_text(serialize_curve(c));
        TropicalCurve back = doc.tropical_curve();
        CHECK(back.lengths() == c.lengths());
        CHECK(back.base().weights() == c.base().weights());
    }

    SUBCASE("pseudo-metric graphs keep zero loops") {
        Multigraph g({"a"}, {{"a", "a"}, {"a", "a"}});
        PseudoMetricGraph p(g, {0, frac(5, 2)});
        GraphDocument doc = parse_graph_text(serialize_pseudo_metric(p));
        PseudoMetricGraph back = doc.pseudo_metric();
        CHECK(back.lengths() == p.lengths());
    }

    SUBCASE("derived names with marks survive") {
        Multigraph g({"v"}, {{"v", "v"}});
        auto [h, map] = hat(g);
        std::string text = serialize_graph(WeightedGraph(h));
        GraphDocument doc = parse_graph_text(text);
        CHECK(doc.graph.graph().vertex_index("v#loop0#mid") == 1);
    }
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(frac(1, 2)) == "1/2");
    CHECK(format_rational(frac(4, 2)) == "2");
    CHECK(format_rational(Rational(-3)) == "-3");
    CHECK(format_rational(frac(-5, 2)) == "-5/2");
    CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("divisor text") {
    Multigraph g({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}});

    SUBCASE("entries accumulate and order does not matter") {
        Divisor d = parse_divisor("v1:2, v0:-1 ,v1:3", g);
        CHECK(d[0] == -1);
        CHECK(d[1] == 5);
        CHECK(d[2] == 0);
    }

    SUBCASE("zero spelled as 0") {
        CHECK(parse_divisor("0", g).is_zero());
        CHECK(format_divisor(Divisor(3), g) == "0");
    }

    SUBCASE("huge coefficients are exact") {
        Divisor d = parse_divisor("v0:1000000000000000000000000000001", g);
        CHECK(d[0] == Integer("1000000000000000000000000000001"));
        CHECK(format_divisor(d, g) == "v0:1000000000000000000000000000001");
    }

    SUBCASE("formatting skips zero entries") {
        Divisor d(3);
        d[0] = 1;
        d[2] = -2;
        CHECK(format_divisor(d, g) == "v0:1,v2:-2");
        CHECK(parse_divisor(format_divisor(d, g), g) == d);
    }

    SUBCASE("rejects malformed entries") {
        CHECK_THROWS_AS(parse_divisor("v0", g), std::invalid_argument);
        CHECK_THROWS_AS(parse_divisor("v9:1", g), std::invalid_argument);
        CHECK_THROWS_AS(parse_divisor("v0:x", g), std::invalid_argument);
        CHECK_THROWS_AS(parse_divisor("v0:1,,v1:1", g), std::invalid_argument);
        CHECK_THROWS_AS(parse_divisor("", g), std::invalid_argument);
        CHECK_THROWS_AS(format_divisor(Divisor(2), g), std::invalid_argument);
    }
}

TEST_CASE("tropical divisor text") {
    Multigraph g({"v0", "v1"}, {{"v0", "v1"}, {"v0", "v1"}});
    TropicalCurve c(WeightedGraph(g), {frac(1, 2), frac(3, 2)});

    SUBCASE("parses points and positions") {
        TropicalDivisor d = parse_tropical_divisor("v1:2,0@1/4:1", c);
        REQUIRE(d.entries().size() == 2);
        CHECK(d.entries()[0].first.vertex == 1);
        CHECK(d.entries()[1].first.edge == 0);
        CHECK(d.entries()[1].first.position == frac(1, 4));
        CHECK(d.degree() == 3);
    }

    SUBCASE("round-trips through formatting") {
        TropicalDivisor d;
        d.add(TropicalPoint::at_vertex(0), -1);
        d.add(TropicalPoint::on_edge(1, frac(5, 4)), 2);
        std::string text = format_tropical_divisor(d, c);
        CHECK(text == "v0:-1,1@5/4:2");
        CHECK(parse_tropical_divisor(text, c) == d);
        CHECK(format_tropical_divisor(TropicalDivisor{}, c) == "0");
        CHECK(parse_tropical_divisor("0", c).entries().empty());
    }

    SUBCASE("validates against the curve") {
        CHECK_THROWS_AS(parse_tropical_divisor("v7:1", c), std::invalid_argument);
        CHECK_THROWS_AS(parse_tropical_divisor("2@1/4:1", c), std::invalid_argument);
        CHECK_THROWS_AS(parse_tropical_divisor("0@3/4:1", c), std::invalid_argument);
        CHECK_THROWS_AS(parse_tropical_divisor("0@0:1", c), std::invalid_argument);
        CHECK_THROWS_AS(parse_tropical_divisor("0@-1/4:1", c), std::invalid_argument);
        CHECK_THROWS_AS(parse_tropical_divisor("x@1/4:1", c), std::invalid_argument);
    }
}

TEST_SUITE_END();
