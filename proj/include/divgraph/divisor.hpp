#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <vector>

#include "divgraph/multigraph.hpp"

namespace divgraph {

using Integer = boost::multiprecision::cpp_int;

/// Element of the free abelian group on the vertices of a fixed graph,
/// stored as one integer coefficient per vertex index.
class Divisor {
public:
    explicit Divisor(int vertex_count);
    explicit Divisor(std::vector<Integer> coefficients);

    int size() const { return static_cast<int>(c_.size()); }
    const Integer& operator[](int v) const;
    Integer& operator[](int v);
    const std::vector<Integer>& coefficients() const { return c_; }

    Integer degree() const;
    bool is_effective() const;
    bool is_zero() const;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor& operator*=(const Integer& k);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(Divisor a, const Integer& k) { return a *= k; }
    friend Divisor operator*(const Integer& k, Divisor a) { return a *= k; }
    Divisor operator-() const;
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
    /// Lexicographic; makes Divisor usable as an ordered map key.
    friend bool operator<(const Divisor& a, const Divisor& b) { return a.c_ < b.c_; }

private:
    std::vector<Integer> c_;
};

/// T_v, the divisor of firing v once: deg-0, (v.w) at each w.
Divisor principal_generator(const Multigraph& g, int v);

/// T_Z = sum of T_v over the set Z; rejects repeated vertices.
Divisor principal_of_set(const Multigraph& g, const std::vector<int>& firing_set);

/// Divisor of an integer function: div(f)(v) = sum over edges vw of f(v)-f(w).
/// Loops contribute nothing.  T_v = -div(indicator of v).
Divisor divisor_of_function(const Multigraph& g, const std::vector<Integer>& f);

/// Divisor on the map's target supported on the image: (map[v]) gets d(v).
Divisor pullback(const VertexMap& map, const Divisor& d);

namespace detail {
struct ReducerCore;
}

/// q-reduction machine for a fixed connected graph and base vertex.
/// Loop-edges are ignored throughout (they never move chips).
class Reducer {
public:
    Reducer(const Multigraph& g, int q);

    const Multigraph& graph() const { return *graph_; }
    int base_vertex() const;

    /// The unique q-reduced divisor linearly equivalent to d.
    Divisor reduce(Divisor d) const;
    /// Whether d is q-reduced: nonnegative off q and no subset of V minus q
    /// can fire without going negative.
    bool is_reduced(const Divisor& d) const;

private:
    std::shared_ptr<const Multigraph> graph_;
    std::shared_ptr<const detail::ReducerCore> core_;
};

Divisor q_reduce(const Multigraph& g, const Divisor& d, int q);
bool is_q_reduced(const Multigraph& g, const Divisor& d, int q);

/// QReduced compares reduced forms at the first vertex; Lattice solves an
/// integer linear system over the principal lattice (Smith normal form).
enum class EquivMethod { QReduced, Lattice };

bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b,
                   EquivMethod method = EquivMethod::QReduced);

/// Whether the complete linear system |d| is nonempty.
bool has_effective_representative(const Multigraph& g, const Divisor& d);

}  // namespace divgraph
