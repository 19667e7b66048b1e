#pragma once

// Internal chip-firing machinery.  The reduction algorithm is templated on
// its coefficient scalar: Checked64 (int64 with overflow traps) for the hot
// path, boost cpp_int as the always-correct fallback.  Callers catch
// OverflowSignal and retry with the wide scalar, so observable results are
// exact for all inputs.

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/multigraph.hpp"

namespace divgraph::detail {

struct OverflowSignal {};

struct Checked64 {
    long long v = 0;

    Checked64() = default;
    Checked64(long long x) : v(x) {}
    Checked64(int x) : v(x) {}

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        Checked64 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        Checked64 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        Checked64 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (b.v == 0 || (a.v == LLONG_MIN && b.v == -1)) throw OverflowSignal{};
        return Checked64(a.v / b.v);
    }
    Checked64& operator+=(Checked64 b) { return *this = *this + b; }
    Checked64& operator-=(Checked64 b) { return *this = *this - b; }
    Checked64 operator-() const { return Checked64(0) - *this; }

    friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
    friend bool operator!=(Checked64 a, Checked64 b) { return a.v != b.v; }
    friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
    friend bool operator<=(Checked64 a, Checked64 b) { return a.v <= b.v; }
    friend bool operator>(Checked64 a, Checked64 b) { return a.v > b.v; }
    friend bool operator>=(Checked64 a, Checked64 b) { return a.v >= b.v; }
};

// a >= 0, b > 0
template <class I>
inline I ceil_div(const I& a, const I& b) {
    return (a + b - I(1)) / b;
}

// Precomputed structure for q-reduction on a fixed connected graph.
// Distances and adjacency are taken in the graph with loops removed.
struct ReducerCore {
    int n = 0;
    int q = 0;
    int maxdist = 0;
    std::vector<int> dist;
    std::vector<std::vector<int>> layers;                  // vertices at each distance
    std::vector<std::vector<std::pair<int, int>>> adj;     // loopless (neighbor, multiplicity)
    std::vector<std::vector<std::pair<int, int>>> down;    // neighbors one layer closer to q
    std::vector<long long> cross_down;                     // total multiplicity towards q

    ReducerCore(const Multigraph& g, int base) {
        n = g.vertex_count();
        q = base;
        if (q < 0 || q >= n) {
            throw std::invalid_argument("base vertex index out of range");
        }
        if (!g.is_connected()) {
            throw std::invalid_argument("divisor reduction requires a connected graph");
        }
        adj.resize(n);
        for (int v = 0; v < n; ++v) {
            adj[v] = g.neighbors(v);
        }
        dist.assign(n, -1);
        dist[q] = 0;
        std::vector<int> queue = {q};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (const auto& [w, m] : adj[u]) {
                (void)m;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        maxdist = 0;
        for (int v = 0; v < n; ++v) {
            maxdist = std::max(maxdist, dist[v]);
        }
        layers.assign(maxdist + 1, {});
        for (int v = 0; v < n; ++v) {
            layers[dist[v]].push_back(v);
        }
        down.resize(n);
        cross_down.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (const auto& [w, m] : adj[v]) {
                if (dist[w] == dist[v] - 1) {
                    down[v].push_back({w, m});
                    cross_down[v] += m;
                }
            }
        }
    }

    // Phase 1: make every vertex except q nonnegative by firing the balls
    // around q of radius k-1, outermost debt first.  Only edges between
    // layers k-1 and k cross a ball boundary, so one pass per layer with a
    // bulk multiplicity settles all debt into q.
    template <class I>
    void clear_debt(std::vector<I>& d) const {
        for (int k = maxdist; k >= 1; --k) {
            I t(0);
            for (int v : layers[k]) {
                if (d[v] < I(0)) {
                    I need = ceil_div(I(-d[v]), I(cross_down[v]));
                    if (need > t) t = need;
                }
            }
            if (t == I(0)) continue;
            for (int v : layers[k]) {
                for (const auto& [w, m] : down[v]) {
                    I moved = t * I(m);
                    d[v] += moved;
                    d[w] -= moved;
                }
            }
        }
    }

    // Dhar burning from q.  Returns true when the fire consumed the whole
    // graph, i.e. no subset avoiding q can fire within d.  Otherwise fills
    // `unburnt` and `threat` (edge multiplicity from each unburnt vertex
    // into the burnt region).
    template <class I>
    bool burn(const std::vector<I>& d, std::vector<char>& burnt,
              std::vector<int>& unburnt, std::vector<long long>& threat) const {
        burnt.assign(n, 0);
        threat.assign(n, 0);
        burnt[q] = 1;
        std::vector<int> queue = {q};
        int burned = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (const auto& [w, m] : adj[u]) {
                if (burnt[w]) continue;
                threat[w] += m;
                if (I(threat[w]) > d[w]) {
                    burnt[w] = 1;
                    ++burned;
                    queue.push_back(w);
                }
            }
        }
        if (burned == n) return true;
        unburnt.clear();
        for (int v = 0; v < n; ++v) {
            if (!burnt[v]) unburnt.push_back(v);
        }
        return false;
    }

    // Phase 2: repeatedly fire the maximal unburnable set, with the largest
    // bulk multiplicity that keeps it nonnegative.
    template <class I>
    void settle(std::vector<I>& d) const {
        std::vector<char> burnt;
        std::vector<int> unburnt;
        std::vector<long long> threat;
        while (!burn(d, burnt, unburnt, threat)) {
            I t(0);
            bool first = true;
            for (int v : unburnt) {
                if (threat[v] == 0) continue;
                I cap = d[v] / I(threat[v]);
                if (first || cap < t) {
                    t = cap;
                    first = false;
                }
            }
            // Every unburnt vertex with burnt neighbours survived the fire,
            // so d[v] >= threat[v] and t >= 1.
            for (int v : unburnt) {
                if (threat[v] == 0) continue;
                for (const auto& [w, m] : adj[v]) {
                    if (!burnt[w]) continue;
                    I moved = t * I(m);
                    d[v] -= moved;
                    d[w] += moved;
                }
            }
        }
    }

    template <class I>
    void reduce(std::vector<I>& d) const {
        clear_debt(d);
        settle(d);
    }

    template <class I>
    bool is_reduced(const std::vector<I>& d) const {
        for (int v = 0; v < n; ++v) {
            if (v != q && d[v] < I(0)) return false;
        }
        std::vector<char> burnt;
        std::vector<int> unburnt;
        std::vector<long long> threat;
        return burn(d, burnt, unburnt, threat);
    }
};

// Divisor <-> scalar vector bridges.  A coefficient outside the int64 gate
// routes the whole computation to the cpp_int instantiation.
inline bool fits_checked(const Divisor& d) {
    static const Integer kGate = Integer(1) << 62;
    for (int v = 0; v < d.size(); ++v) {
        if (d[v] >= kGate || d[v] <= -kGate) return false;
    }
    return true;
}

inline std::vector<Checked64> to_checked(const Divisor& d) {
    std::vector<Checked64> out(d.size());
    for (int v = 0; v < d.size(); ++v) {
        out[v] = Checked64(d[v].convert_to<long long>());
    }
    return out;
}

inline std::vector<Integer> to_wide(const Divisor& d) {
    return d.coefficients();
}

inline Divisor from_checked(const std::vector<Checked64>& d) {
    std::vector<Integer> out(d.size());
    for (size_t v = 0; v < d.size(); ++v) {
        out[v] = d[v].v;
    }
    return Divisor(std::move(out));
}

}  // namespace divgraph::detail
