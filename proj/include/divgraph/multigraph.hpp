#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace divgraph {

/// Finite multigraph with string-named vertices and indexed edges.
///
/// Vertices keep their declaration order; vertex ids are arbitrary nonempty
/// strings, unique within a graph.  Edges are unordered pairs of vertex
/// indices but remember the order in which their endpoints were declared
/// (this orientation anchors subdivision paths and metric positions).
/// Loops and parallel edges are allowed.  Instances are immutable; derived
/// constructions (hat, subdivision, ...) return new graphs together with a
/// VertexMap locating the old vertices.
class Multigraph {
public:
    struct Edge {
        int u;  // first declared endpoint
        int v;  // second declared endpoint
    };

    Multigraph(std::vector<std::string> vertex_names,
               const std::vector<std::pair<std::string, std::string>>& edges);
    Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const;

    /// Index of a named vertex; throws std::invalid_argument if unknown.
    int vertex_index(std::string_view name) const;
    /// As vertex_index, but returns -1 instead of throwing.
    int find_vertex(std::string_view name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const;
    bool is_loop(int e) const;

    /// Number of edge endpoints at v; a loop contributes 2.
    int valence(int v) const;
    /// Number of loop-edges based at v.
    int loop_count(int v) const;
    /// Total number of loop-edges in the graph.
    int loop_edge_count() const { return total_loops_; }

    /// Number of edges joining v and w (v != w), or loop_count(v) if v == w.
    int multiplicity(int v, int w) const;

    /// Non-loop neighbours of v as (vertex, edge multiplicity), ascending.
    const std::vector<std::pair<int, int>>& neighbors(int v) const;

    bool is_connected() const { return connected_; }

private:
    void build();
    void check_vertex(int v) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<int> valence_;
    std::vector<int> loops_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    int total_loops_ = 0;
    bool connected_ = false;
};

/// Injective map from the vertices of a source graph into a target graph.
class VertexMap {
public:
    VertexMap(std::vector<int> image, int target_count);

    int source_count() const { return static_cast<int>(image_.size()); }
    int target_count() const { return target_count_; }
    int operator[](int v) const;
    const std::vector<int>& image() const { return image_; }

private:
    std::vector<int> image_;
    int target_count_;
};

struct DerivedGraph {
    Multigraph graph;
    VertexMap map;  // locates the source vertices inside `graph`
};

/// (v.w): edge multiplicity for v != w, -valence(v) + 2 loop_count(v) for v == w.
int intersection_product(const Multigraph& g, int v, int w);

/// First Betti number E - V + 1; requires a connected graph.
int genus(const Multigraph& g);

/// Copy of g with all loop-edges removed (vertex set unchanged).
Multigraph without_loops(const Multigraph& g);

/// Replaces every loop at v by a 2-cycle through a fresh vertex
/// "v#loop{j}#mid" (j = 0-based ordinal of the loop at v, in edge order).
DerivedGraph hat(const Multigraph& g);

/// Inserts counts[e] >= 0 fresh vertices "{e}#sub{i}" in the interior of
/// edge e, ordered from the edge's first declared endpoint.
DerivedGraph subdivide(const Multigraph& g, const std::vector<int>& counts);
DerivedGraph subdivide_uniform(const Multigraph& g, int n);

/// Branches of g at v: one graph per connected component of g minus v
/// (with v and its incident edges restored) plus one one-vertex graph per
/// loop at v.  Empty result when v is not a cut vertex in this sense
/// (fewer than two branches).  Branch vertices keep their names in g.
std::vector<Multigraph> decompose_at_cut_vertex(const Multigraph& g, int v);

/// Locates sub's vertices inside super by name; throws if any is missing.
VertexMap inclusion_map(const Multigraph& sub, const Multigraph& super);

/// Multigraph with a nonnegative integer weight per vertex.
class WeightedGraph {
public:
    WeightedGraph(Multigraph graph, std::vector<int> weights);
    /// All-zero weights.
    explicit WeightedGraph(Multigraph graph);

    const Multigraph& graph() const { return graph_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int v) const;
    long long total_weight() const;

private:
    Multigraph graph_;
    std::vector<int> weights_;
};

/// genus(graph) + total weight; requires a connected graph.
long long weighted_genus(const WeightedGraph& g);

/// Plain graph with weight(v) fresh loops appended at each v, in vertex
/// order.  The map is the identity on the original vertices.
DerivedGraph virtual_graph(const WeightedGraph& g);

}  // namespace divgraph
