#include "divgraph/rank.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "chips.hpp"

namespace divgraph {

namespace {

using detail::Checked64;
using detail::OverflowSignal;
using detail::ReducerCore;

struct VectorHash {
    size_t operator()(const std::vector<Checked64>& v) const {
        // FNV-1a over the raw words; reduced forms are tiny vectors.
        size_t h = 1469598103934665603ull;
        for (const Checked64& x : v) {
            h ^= static_cast<size_t>(x.v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Memo table selection: hashed for the int64 path, ordered for cpp_int.
template <class I>
struct MemoTable {
    using type = std::map<std::vector<I>, long long>;
};
template <>
struct MemoTable<Checked64> {
    using type = std::unordered_map<std::vector<Checked64>, long long, VectorHash>;
};

// Rank by the degree recursion r(D) = -1 if |D| is empty, else
// 1 + min over the support of r(D - v), evaluated on q-reduced forms so
// equivalent divisors share one memo entry.  A q-reduced form stays
// q-reduced when a coefficient is lowered without going negative off q,
// so children re-reduce only when they dip below zero.
template <class I>
struct SearchState {
    const ReducerCore& core;
    const std::vector<int>& support;
    typename MemoTable<I>::type rank_memo;
    std::map<std::tuple<std::vector<I>, long long, int>, bool> fail_memo;

    SearchState(const ReducerCore& c, const std::vector<int>& s) : core(c), support(s) {}

    void make_child(const std::vector<I>& red, int v, std::vector<I>& out) const {
        out = red;
        out[v] -= I(1);
        if (v != core.q && out[v] < I(0)) {
            core.reduce(out);
        }
    }

    long long rank_of(const std::vector<I>& red) {
        auto it = rank_memo.find(red);
        if (it != rank_memo.end()) {
            return it->second;
        }
        long long result;
        if (red[core.q] < I(0)) {
            result = -1;
        } else {
            long long best = LLONG_MAX;
            std::vector<I> child;
            for (int v : support) {
                make_child(red, v, child);
                long long r = rank_of(child);
                if (r < best) best = r;
                if (best == -1) break;
            }
            result = best == LLONG_MAX ? 0 : best + 1;
        }
        rank_memo.emplace(red, result);
        return result;
    }

    // Whether some effective divisor of the given degree, drawn from
    // support vertices with index >= min_idx, empties |red - E|.
    bool can_fail(const std::vector<I>& red, long long budget, int min_idx) {
        if (budget == 0) {
            return red[core.q] < I(0);
        }
        auto key = std::make_tuple(red, budget, min_idx);
        auto it = fail_memo.find(key);
        if (it != fail_memo.end()) {
            return it->second;
        }
        bool found = false;
        std::vector<I> child;
        for (int v : support) {
            if (v < min_idx) continue;
            make_child(red, v, child);
            if (can_fail(child, budget - 1, v)) {
                found = true;
                break;
            }
        }
        fail_memo.emplace(std::move(key), found);
        return found;
    }
};

std::vector<Checked64> to_scalar(const Divisor& d, const Checked64&) {
    return detail::to_checked(d);
}
std::vector<Integer> to_scalar(const Divisor& d, const Integer&) {
    return detail::to_wide(d);
}

}  // namespace

struct RankEngine::Impl {
    Multigraph graph;
    std::vector<int> support;
    ReducerCore core;
    SearchState<Checked64> fast;
    SearchState<Integer> wide;
    bool use_wide = false;

    Impl(const Multigraph& g, std::vector<int> sup)
        : graph(g),
          support(normalize(std::move(sup), g.vertex_count())),
          core(graph, 0),
          fast(core, support),
          wide(core, support) {}

    static std::vector<int> normalize(std::vector<int> sup, int n) {
        if (sup.empty()) {
            sup.resize(n);
            for (int v = 0; v < n; ++v) sup[v] = v;
            return sup;
        }
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        if (sup.front() < 0 || sup.back() >= n) {
            throw std::invalid_argument("support vertex index out of range");
        }
        return sup;
    }

    void check(const Divisor& d) const {
        if (d.size() != graph.vertex_count()) {
            throw std::invalid_argument("divisor does not match the graph's vertex count");
        }
    }

    template <class Fn>
    auto run(const Divisor& d, Fn&& fn) {
        if (!use_wide && detail::fits_checked(d)) {
            try {
                return fn(fast, to_scalar(d, Checked64()));
            } catch (const OverflowSignal&) {
                use_wide = true;  // completed fast entries stay valid but unused
            }
        }
        return fn(wide, to_scalar(d, Integer()));
    }

    long long rank(const Divisor& d) {
        check(d);
        if (d.degree() < 0) {
            return -1;
        }
        return run(d, [&](auto& state, auto vec) {
            state.core.reduce(vec);
            return state.rank_of(vec);
        });
    }

    Divisor least_failing(const Divisor& d, long long degree) {
        check(d);
        if (degree < 0) {
            throw std::invalid_argument("failing divisors have nonnegative degree");
        }
        std::vector<Integer> out(graph.vertex_count(), Integer(0));
        bool ok = run(d, [&](auto& state, auto vec) {
            std::fill(out.begin(), out.end(), Integer(0));
            state.core.reduce(vec);
            if (!state.can_fail(vec, degree, 0)) {
                return false;
            }
            int from = 0;
            auto cur = vec;
            decltype(vec) child;
            for (long long step = 0; step < degree; ++step) {
                bool advanced = false;
                for (int v : state.support) {
                    if (v < from) continue;
                    state.make_child(cur, v, child);
                    if (state.can_fail(child, degree - step - 1, v)) {
                        out[v] += 1;
                        cur = child;
                        from = v;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) {
                    throw std::logic_error("failing witness search lost its trail");
                }
            }
            return true;
        });
        if (!ok) {
            throw std::invalid_argument("every effective divisor of that degree leaves the system nonempty");
        }
        return Divisor(std::move(out));
    }

    Divisor reduce(const Divisor& d) const {
        check(d);
        if (detail::fits_checked(d)) {
            try {
                auto vec = detail::to_checked(d);
                core.reduce(vec);
                return detail::from_checked(vec);
            } catch (const OverflowSignal&) {
            }
        }
        auto vec = detail::to_wide(d);
        core.reduce(vec);
        return Divisor(std::move(vec));
    }
};

RankEngine::RankEngine(const Multigraph& g, std::vector<int> support)
    : impl_(std::make_shared<Impl>(g, std::move(support))) {}

const Multigraph& RankEngine::graph() const { return impl_->graph; }
const std::vector<int>& RankEngine::support() const { return impl_->support; }

long long RankEngine::rank(const Divisor& d) { return impl_->rank(d); }

Divisor RankEngine::reduce(const Divisor& d) const { return impl_->reduce(d); }

bool RankEngine::has_effective(const Divisor& d) const {
    impl_->check(d);
    if (d.degree() < 0) return false;
    return impl_->reduce(d)[0] >= 0;
}

Divisor RankEngine::least_failing(const Divisor& d, long long degree) {
    return impl_->least_failing(d, degree);
}

namespace {

std::vector<std::pair<std::string, Integer>> named_coefficients(const Multigraph& g,
                                                                const Divisor& d) {
    std::vector<std::pair<std::string, Integer>> out;
    for (int v = 0; v < d.size(); ++v) {
        if (d[v] != 0) {
            out.emplace_back(g.vertex_name(v), d[v]);
        }
    }
    return out;
}

RankResult rank_on(const Multigraph& g, const Divisor& d, bool with_witness) {
    RankEngine engine(g);
    RankResult out;
    out.rank = engine.rank(d);
    if (with_witness) {
        out.witness = named_coefficients(g, engine.least_failing(d, out.rank + 1));
    }
    return out;
}

}  // namespace

RankResult rank_plain(const Multigraph& g, const Divisor& d, bool with_witness) {
    return rank_on(g, d, with_witness);
}

RankResult rank_sharp(const Multigraph& g, const Divisor& d, bool with_witness) {
    DerivedGraph h = hat(g);
    return rank_on(h.graph, pullback(h.map, d), with_witness);
}

RankResult rank_weighted(const WeightedGraph& g, const Divisor& d, bool with_witness) {
    DerivedGraph v = virtual_graph(g);
    return rank_sharp(v.graph, pullback(v.map, d), with_witness);
}

Divisor canonical_divisor(const WeightedGraph& g) {
    const Multigraph& base = g.graph();
    Divisor k(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); ++v) {
        k[v] = Integer(base.valence(v)) + 2 * Integer(g.weight(v)) - 2;
    }
    return k;
}

RiemannRochReport riemann_roch_check(const WeightedGraph& g, const Divisor& d) {
    DerivedGraph virt = virtual_graph(g);
    DerivedGraph h = hat(virt.graph);
    RankEngine engine(h.graph);
    Divisor k = canonical_divisor(g);

    RiemannRochReport report;
    report.rank_d = engine.rank(pullback(h.map, d));
    report.rank_residual = engine.rank(pullback(h.map, k - d));
    report.degree = d.degree();
    report.genus = weighted_genus(g);
    report.holds =
        Integer(report.rank_d) - report.rank_residual == report.degree - report.genus + 1;
    return report;
}

long long rose_rank(long long g, long long d) {
    if (g < 1) {
        throw std::invalid_argument("the rose formula needs at least one loop");
    }
    if (d > 2 * g) {
        throw std::invalid_argument("the rose formula covers degrees up to 2g");
    }
    return d < 0 ? -1 : d / 2;
}

}  // namespace divgraph
