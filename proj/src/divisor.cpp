#include "divgraph/divisor.hpp"

#include <stdexcept>
#include <utility>

#include "chips.hpp"
#include "divgraph/snf.hpp"

namespace divgraph {

Divisor::Divisor(int vertex_count) {
    if (vertex_count <= 0) {
        throw std::invalid_argument("divisor needs a positive vertex count");
    }
    c_.assign(vertex_count, Integer(0));
}

Divisor::Divisor(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) {
        throw std::invalid_argument("divisor needs a positive vertex count");
    }
}

const Integer& Divisor::operator[](int v) const {
    if (v < 0 || v >= size()) {
        throw std::invalid_argument("divisor index out of range");
    }
    return c_[v];
}

Integer& Divisor::operator[](int v) {
    if (v < 0 || v >= size()) {
        throw std::invalid_argument("divisor index out of range");
    }
    return c_[v];
}

Integer Divisor::degree() const {
    Integer d = 0;
    for (const Integer& x : c_) d += x;
    return d;
}

bool Divisor::is_effective() const {
    for (const Integer& x : c_) {
        if (x < 0) return false;
    }
    return true;
}

bool Divisor::is_zero() const {
    for (const Integer& x : c_) {
        if (x != 0) return false;
    }
    return true;
}

namespace {
void check_same_size(const Divisor& a, const Divisor& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("divisors live on different vertex sets");
    }
}

void check_graph_divisor(const Multigraph& g, const Divisor& d) {
    if (d.size() != g.vertex_count()) {
        throw std::invalid_argument("divisor does not match the graph's vertex count");
    }
}
}  // namespace

Divisor& Divisor::operator+=(const Divisor& o) {
    check_same_size(*this, o);
    for (int v = 0; v < size(); ++v) c_[v] += o.c_[v];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    check_same_size(*this, o);
    for (int v = 0; v < size(); ++v) c_[v] -= o.c_[v];
    return *this;
}

Divisor& Divisor::operator*=(const Integer& k) {
    for (Integer& x : c_) x *= k;
    return *this;
}

Divisor Divisor::operator-() const {
    Divisor out(*this);
    for (Integer& x : out.c_) x = -x;
    return out;
}

Divisor principal_generator(const Multigraph& g, int v) {
    Divisor t(g.vertex_count());
    t[v] = intersection_product(g, v, v);
    for (const auto& [w, m] : g.neighbors(v)) {
        t[w] = m;
    }
    return t;
}

Divisor principal_of_set(const Multigraph& g, const std::vector<int>& firing_set) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : firing_set) {
        g.vertex_name(v);  // bounds check
        if (in[v]) {
            throw std::invalid_argument("firing set has a repeated vertex");
        }
        in[v] = 1;
    }
    Divisor t(g.vertex_count());
    for (int v : firing_set) {
        t += principal_generator(g, v);
    }
    return t;
}

Divisor divisor_of_function(const Multigraph& g, const std::vector<Integer>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count()) {
        throw std::invalid_argument("function needs one value per vertex");
    }
    Divisor d(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        d[e.u] += f[e.u] - f[e.v];
        d[e.v] += f[e.v] - f[e.u];
    }
    return d;
}

Divisor pullback(const VertexMap& map, const Divisor& d) {
    if (d.size() != map.source_count()) {
        throw std::invalid_argument("divisor does not match the map's source");
    }
    Divisor out(map.target_count());
    for (int v = 0; v < d.size(); ++v) {
        out[map[v]] = d[v];
    }
    return out;
}

Reducer::Reducer(const Multigraph& g, int q)
    : graph_(std::make_shared<Multigraph>(g)),
      core_(std::make_shared<detail::ReducerCore>(g, q)) {}

int Reducer::base_vertex() const {
    return core_->q;
}

Divisor Reducer::reduce(Divisor d) const {
    check_graph_divisor(*graph_, d);
    if (detail::fits_checked(d)) {
        try {
            auto v = detail::to_checked(d);
            core_->reduce(v);
            return detail::from_checked(v);
        } catch (const detail::OverflowSignal&) {
            // fall through to the wide scalar
        }
    }
    auto v = detail::to_wide(d);
    core_->reduce(v);
    return Divisor(std::move(v));
}

bool Reducer::is_reduced(const Divisor& d) const {
    check_graph_divisor(*graph_, d);
    if (detail::fits_checked(d)) {
        return core_->is_reduced(detail::to_checked(d));
    }
    return core_->is_reduced(detail::to_wide(d));
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, int q) {
    return Reducer(g, q).reduce(d);
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, int q) {
    return Reducer(g, q).is_reduced(d);
}

bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b,
                   EquivMethod method) {
    check_graph_divisor(g, a);
    check_graph_divisor(g, b);
    if (!g.is_connected()) {
        throw std::invalid_argument("linear equivalence requires a connected graph");
    }
    if (a.degree() != b.degree()) {
        return false;
    }
    if (method == EquivMethod::QReduced) {
        Reducer r(g, 0);
        return r.reduce(a) == r.reduce(b);
    }
    // Lattice route: a - b must be an integer combination of the firing
    // divisors T_v, v != v0.  Dropping the v0 row loses nothing once the
    // degrees agree, because every column and the target sum to zero.
    const int n = g.vertex_count();
    if (n == 1) {
        return true;
    }
    IntMatrix m(n - 1, std::vector<Integer>(n - 1));
    std::vector<Integer> rhs(n - 1);
    Divisor diff = a - b;
    for (int row = 1; row < n; ++row) {
        for (int col = 1; col < n; ++col) {
            m[row - 1][col - 1] = intersection_product(g, col, row);
        }
        rhs[row - 1] = diff[row];
    }
    return integer_solvable(std::move(m), std::move(rhs));
}

bool has_effective_representative(const Multigraph& g, const Divisor& d) {
    check_graph_divisor(g, d);
    if (!g.is_connected()) {
        throw std::invalid_argument("linear systems require a connected graph");
    }
    if (d.degree() < 0) {
        return false;
    }
    if (d.is_effective()) {
        return true;
    }
    Reducer r(g, 0);
    return r.reduce(d)[0] >= 0;
}

}  // namespace divgraph
