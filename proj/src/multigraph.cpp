#include "divgraph/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace divgraph {

namespace {

std::vector<Multigraph::Edge> resolve_edges(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        index.emplace(names[i], i);
    }
    std::vector<Multigraph::Edge> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) {
            throw std::invalid_argument("edge endpoint is not a declared vertex: " + a);
        }
        if (ib == index.end()) {
            throw std::invalid_argument("edge endpoint is not a declared vertex: " + b);
        }
        out.push_back({ia->second, ib->second});
    }
    return out;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertex_names,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertex_names)), edges_(resolve_edges(names_, edges)) {
    build();
}

Multigraph::Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
    build();
}

void Multigraph::build() {
    if (names_.empty()) {
        throw std::invalid_argument("a multigraph needs at least one vertex");
    }
    const int n = vertex_count();
    for (int i = 0; i < n; ++i) {
        if (names_[i].empty()) {
            throw std::invalid_argument("vertex ids must be nonempty");
        }
        if (!index_.emplace(names_[i], i).second) {
            throw std::invalid_argument("duplicate vertex id: " + names_[i]);
        }
    }
    valence_.assign(n, 0);
    loops_.assign(n, 0);
    std::vector<std::map<int, int>> mult(n);
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw std::invalid_argument("edge endpoint index out of range");
        }
        valence_[e.u] += 1;
        valence_[e.v] += 1;
        if (e.u == e.v) {
            loops_[e.u] += 1;
            total_loops_ += 1;
        } else {
            mult[e.u][e.v] += 1;
            mult[e.v][e.u] += 1;
        }
    }
    adj_.resize(n);
    for (int v = 0; v < n; ++v) {
        adj_[v].assign(mult[v].begin(), mult[v].end());
    }

    // BFS from vertex 0 over non-loop adjacency.
    std::vector<char> seen(n, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const auto& [w, m] : adj_[queue[head]]) {
            (void)m;
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    connected_ = static_cast<int>(queue.size()) == n;
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::invalid_argument("vertex index out of range");
    }
}

const std::string& Multigraph::vertex_name(int v) const {
    check_vertex(v);
    return names_[v];
}

int Multigraph::vertex_index(std::string_view name) const {
    int v = find_vertex(name);
    if (v < 0) {
        throw std::invalid_argument("unknown vertex: " + std::string(name));
    }
    return v;
}

int Multigraph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

const Multigraph::Edge& Multigraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) {
        throw std::invalid_argument("edge index out of range");
    }
    return edges_[e];
}

bool Multigraph::is_loop(int e) const {
    const Edge& ed = edge(e);
    return ed.u == ed.v;
}

int Multigraph::valence(int v) const {
    check_vertex(v);
    return valence_[v];
}

int Multigraph::loop_count(int v) const {
    check_vertex(v);
    return loops_[v];
}

int Multigraph::multiplicity(int v, int w) const {
    check_vertex(v);
    check_vertex(w);
    if (v == w) {
        return loops_[v];
    }
    for (const auto& [x, m] : adj_[v]) {
        if (x == w) {
            return m;
        }
    }
    return 0;
}

const std::vector<std::pair<int, int>>& Multigraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexMap::VertexMap(std::vector<int> image, int target_count)
    : image_(std::move(image)), target_count_(target_count) {
    std::vector<char> hit(target_count_ > 0 ? target_count_ : 0, 0);
    for (int t : image_) {
        if (t < 0 || t >= target_count_) {
            throw std::invalid_argument("vertex map image out of range");
        }
        if (hit[t]) {
            throw std::invalid_argument("vertex map is not injective");
        }
        hit[t] = 1;
    }
}

int VertexMap::operator[](int v) const {
    if (v < 0 || v >= source_count()) {
        throw std::invalid_argument("vertex map source index out of range");
    }
    return image_[v];
}

int intersection_product(const Multigraph& g, int v, int w) {
    if (v == w) {
        return -g.valence(v) + 2 * g.loop_count(v);
    }
    return g.multiplicity(v, w);
}

int genus(const Multigraph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("genus requires a connected graph");
    }
    return g.edge_count() - g.vertex_count() + 1;
}

Multigraph without_loops(const Multigraph& g) {
    std::vector<Multigraph::Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.u != e.v) {
            edges.push_back(e);
        }
    }
    return Multigraph(g.vertex_names(), std::move(edges));
}

DerivedGraph hat(const Multigraph& g) {
    std::vector<std::string> names = g.vertex_names();
    std::vector<Multigraph::Edge> edges;
    std::vector<int> loop_ordinal(g.vertex_count(), 0);
    edges.reserve(g.edge_count() + g.loop_edge_count());
    for (const auto& e : g.edges()) {
        if (e.u != e.v) {
            edges.push_back(e);
            continue;
        }
        int mid = static_cast<int>(names.size());
        names.push_back(g.vertex_name(e.u) + "#loop" +
                        std::to_string(loop_ordinal[e.u]++) + "#mid");
        edges.push_back({e.u, mid});
        edges.push_back({mid, e.u});
    }
    std::vector<int> image(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        image[v] = v;
    }
    int total = static_cast<int>(names.size());
    return {Multigraph(std::move(names), std::move(edges)), VertexMap(std::move(image), total)};
}

DerivedGraph subdivide(const Multigraph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.edge_count()) {
        throw std::invalid_argument("need one subdivision count per edge");
    }
    std::vector<std::string> names = g.vertex_names();
    std::vector<Multigraph::Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        int k = counts[e];
        if (k < 0) {
            throw std::invalid_argument("subdivision counts must be nonnegative");
        }
        int prev = g.edge(e).u;
        for (int i = 0; i < k; ++i) {
            int mid = static_cast<int>(names.size());
            names.push_back(std::to_string(e) + "#sub" + std::to_string(i));
            edges.push_back({prev, mid});
            prev = mid;
        }
        edges.push_back({prev, g.edge(e).v});
    }
    std::vector<int> image(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        image[v] = v;
    }
    int total = static_cast<int>(names.size());
    return {Multigraph(std::move(names), std::move(edges)), VertexMap(std::move(image), total)};
}

DerivedGraph subdivide_uniform(const Multigraph& g, int n) {
    if (n < 0) {
        throw std::invalid_argument("subdivision counts must be nonnegative");
    }
    return subdivide(g, std::vector<int>(g.edge_count(), n));
}

std::vector<Multigraph> decompose_at_cut_vertex(const Multigraph& g, int v) {
    const int n = g.vertex_count();
    g.vertex_name(v);  // bounds check

    // Components of g minus v, in order of first appearance.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (s == v || comp[s] >= 0) {
            continue;
        }
        std::vector<int> queue = {s};
        comp[s] = ncomp;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (const auto& [w, m] : g.neighbors(queue[head])) {
                (void)m;
                if (w != v && comp[w] < 0) {
                    comp[w] = ncomp;
                    queue.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    std::vector<Multigraph> branches;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::string> names;
        std::vector<int> newindex(n, -1);
        for (int w = 0; w < n; ++w) {
            if (w == v || comp[w] == c) {
                newindex[w] = static_cast<int>(names.size());
                names.push_back(g.vertex_name(w));
            }
        }
        std::vector<Multigraph::Edge> edges;
        for (const auto& e : g.edges()) {
            if (e.u == e.v) {
                continue;  // loops at v become their own branches; loops elsewhere stay
            }
            if (newindex[e.u] >= 0 && newindex[e.v] >= 0) {
                edges.push_back({newindex[e.u], newindex[e.v]});
            }
        }
        // Loops at vertices inside the component.
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.is_loop(e) && g.edge(e).u != v && comp[g.edge(e).u] == c) {
                int w = newindex[g.edge(e).u];
                edges.push_back({w, w});
            }
        }
        branches.emplace_back(std::move(names), std::move(edges));
    }
    for (int i = 0; i < g.loop_count(v); ++i) {
        branches.emplace_back(std::vector<std::string>{g.vertex_name(v)},
                              std::vector<Multigraph::Edge>{{0, 0}});
    }
    if (branches.size() < 2) {
        return {};
    }
    return branches;
}

VertexMap inclusion_map(const Multigraph& sub, const Multigraph& super) {
    std::vector<int> image(sub.vertex_count());
    for (int v = 0; v < sub.vertex_count(); ++v) {
        image[v] = super.vertex_index(sub.vertex_name(v));
    }
    return VertexMap(std::move(image), super.vertex_count());
}

WeightedGraph::WeightedGraph(Multigraph graph, std::vector<int> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != graph_.vertex_count()) {
        throw std::invalid_argument("need one weight per vertex");
    }
    for (int w : weights_) {
        if (w < 0) {
            throw std::invalid_argument("vertex weights must be nonnegative");
        }
    }
}

WeightedGraph::WeightedGraph(Multigraph graph) : graph_(std::move(graph)) {
    weights_.assign(graph_.vertex_count(), 0);
}

int WeightedGraph::weight(int v) const {
    graph_.vertex_name(v);  // bounds check
    return weights_[v];
}

long long WeightedGraph::total_weight() const {
    long long total = 0;
    for (int w : weights_) {
        total += w;
    }
    return total;
}

long long weighted_genus(const WeightedGraph& g) {
    return static_cast<long long>(genus(g.graph())) + g.total_weight();
}

DerivedGraph virtual_graph(const WeightedGraph& g) {
    std::vector<Multigraph::Edge> edges = g.graph().edges();
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
        for (int i = 0; i < g.weight(v); ++i) {
            edges.push_back({v, v});
        }
    }
    std::vector<int> image(g.graph().vertex_count());
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
        image[v] = v;
    }
    return {Multigraph(g.graph().vertex_names(), std::move(edges)),
            VertexMap(std::move(image), g.graph().vertex_count())};
}

}  // namespace divgraph
