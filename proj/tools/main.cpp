#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divgraph/divisor.hpp"
#include "divgraph/graph_io.hpp"
#include "divgraph/jacobian.hpp"
#include "divgraph/multigraph.hpp"
#include "divgraph/rank.hpp"
#include "divgraph/snf.hpp"
#include "divgraph/tropical.hpp"

namespace {

using nlohmann::json;
namespace dg = divgraph;

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

std::string paren(long long x) {
    return x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x);
}

std::string format_named(const std::vector<std::pair<std::string, dg::Integer>>& entries) {
    std::string out;
    for (const auto& [name, coeff] : entries) {
        if (!out.empty()) out += ",";
        out += name + ":" + coeff.str();
    }
    return out.empty() ? "0" : out;
}

// Weights of g carried onto a derived graph; inserted vertices get 0.
dg::WeightedGraph carry_weights(const dg::WeightedGraph& g, const dg::DerivedGraph& derived) {
    std::vector<int> weights(derived.graph.vertex_count(), 0);
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
        weights[derived.map[v]] = g.weight(v);
    }
    return dg::WeightedGraph(derived.graph, std::move(weights));
}

struct RankArgs {
    std::string graph_path, divisor;
    bool json_out = false, plain = false, sharp = false, witness = false;
};

int run_rank(const RankArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::Divisor d = dg::parse_divisor(a.divisor, doc.graph.graph());
    dg::RankResult result;
    std::string mode;
    if (a.plain) {
        mode = "plain";
        result = dg::rank_plain(doc.graph.graph(), d, a.witness);
    } else if (a.sharp) {
        mode = "sharp";
        result = dg::rank_sharp(doc.graph.graph(), d, a.witness);
    } else {
        mode = "weighted";
        result = dg::rank_weighted(doc.graph, d, a.witness);
    }
    if (a.json_out) {
        json j{{"rank", result.rank}, {"mode", mode}};
        if (result.witness) {
            j["witness"] = format_named(*result.witness);
        }
        emit(j);
    } else {
        std::cout << "rank = " << result.rank << "\n";
        if (result.witness) {
            std::cout << "witness = " << format_named(*result.witness) << "\n";
        }
    }
    return 0;
}

struct ReduceArgs {
    std::string graph_path, divisor, base;
    bool json_out = false;
};

int run_reduce(const ReduceArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    const dg::Multigraph& g = doc.graph.graph();
    int q = a.base.empty() ? 0 : g.vertex_index(a.base);
    dg::Divisor reduced = dg::q_reduce(g, dg::parse_divisor(a.divisor, g), q);
    std::string text = dg::format_divisor(reduced, g);
    if (a.json_out) {
        emit(json{{"q", g.vertex_name(q)}, {"reduced", text}});
    } else {
        std::cout << "q = " << g.vertex_name(q) << "\n";
        std::cout << "reduced = " << text << "\n";
    }
    return 0;
}

struct EquivArgs {
    std::string graph_path, first, second;
    bool json_out = false, lattice = false;
};

int run_equiv(const EquivArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    const dg::Multigraph& g = doc.graph.graph();
    bool eq = dg::is_equivalent(g, dg::parse_divisor(a.first, g), dg::parse_divisor(a.second, g),
                                a.lattice ? dg::EquivMethod::Lattice : dg::EquivMethod::QReduced);
    if (a.json_out) {
        emit(json{{"equivalent", eq}, {"method", a.lattice ? "lattice" : "qreduced"}});
    } else {
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    }
    return eq ? 0 : 1;
}

struct GraphOnlyArgs {
    std::string graph_path;
    bool json_out = false;
};

int run_jacobian(const GraphOnlyArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::JacobianStructure jac = dg::jacobian(doc.graph.graph());
    std::string group;
    for (const dg::Integer& f : jac.invariant_factors) {
        if (!group.empty()) group += " x ";
        group += "Z/" + f.str();
    }
    if (group.empty()) group = "trivial";
    if (a.json_out) {
        json factors = json::array();
        for (const dg::Integer& f : jac.invariant_factors) {
            factors.push_back(f.str());
        }
        emit(json{{"invariant_factors", factors}, {"order", jac.order.str()}});
    } else {
        std::cout << group << " (order " << jac.order.str() << ")\n";
    }
    return 0;
}

int run_canonical(const GraphOnlyArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::Divisor k = dg::canonical_divisor(doc.graph);
    std::string text = dg::format_divisor(k, doc.graph.graph());
    if (a.json_out) {
        emit(json{{"canonical", text}, {"degree", k.degree().str()}});
    } else {
        std::cout << "canonical = " << text << "\n";
        std::cout << "degree = " << k.degree().str() << "\n";
    }
    return 0;
}

struct DivisorArgs {
    std::string graph_path, divisor;
    bool json_out = false;
};

int run_rr_check(const DivisorArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::Divisor d = dg::parse_divisor(a.divisor, doc.graph.graph());
    dg::RiemannRochReport r = dg::riemann_roch_check(doc.graph, d);
    if (a.json_out) {
        emit(json{{"rank_d", r.rank_d},
                  {"rank_residual", r.rank_residual},
                  {"degree", r.degree.str()},
                  {"genus", r.genus},
                  {"holds", r.holds}});
    } else {
        std::cout << "r(D) = " << r.rank_d << "\n";
        std::cout << "r(K - D) = " << r.rank_residual << "\n";
        std::cout << "deg D = " << r.degree.str() << "\n";
        std::cout << "genus = " << r.genus << "\n";
        std::cout << "identity: " << paren(r.rank_d) << " - " << paren(r.rank_residual)
                  << " = " << r.degree.str() << " - " << r.genus << " + 1\n";
        std::cout << "Riemann-Roch: " << (r.holds ? "OK" : "VIOLATED") << "\n";
    }
    return r.holds ? 0 : 1;
}

struct SubdivideArgs {
    std::string graph_path;
    int uniform = -1;
    std::vector<int> counts;
    bool json_out = false;
};

int run_subdivide(const SubdivideArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    if ((a.uniform < 0) == a.counts.empty()) {
        throw std::invalid_argument("pick exactly one of -n or --counts");
    }
    dg::DerivedGraph sub = a.counts.empty()
                               ? dg::subdivide_uniform(doc.graph.graph(), a.uniform)
                               : dg::subdivide(doc.graph.graph(), a.counts);
    std::string text = dg::serialize_graph(carry_weights(doc.graph, sub));
    if (a.json_out) {
        emit(json{{"graph", text}});
    } else {
        std::cout << text;
    }
    return 0;
}

int run_hat(const GraphOnlyArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::DerivedGraph h = dg::hat(doc.graph.graph());
    std::string text = dg::serialize_graph(carry_weights(doc.graph, h));
    if (a.json_out) {
        emit(json{{"graph", text}});
    } else {
        std::cout << text;
    }
    return 0;
}

int run_virtual(const GraphOnlyArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::DerivedGraph v = dg::virtual_graph(doc.graph);
    std::string text = dg::serialize_graph(dg::WeightedGraph(v.graph));
    if (a.json_out) {
        emit(json{{"graph", text}});
    } else {
        std::cout << text;
    }
    return 0;
}

struct TropicalArgs {
    std::string graph_path, divisor;
    long long budget = 10000;
    long long granularity = 1;
    bool json_out = false;
};

int run_tropical_rank(const TropicalArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::TropicalCurve curve = doc.tropical_curve();
    dg::TropicalDivisor d = dg::parse_tropical_divisor(a.divisor, curve);
    dg::TropicalCurve model = dg::epsilon_model(curve, 1);
    dg::DiscreteModel dm = dg::discretize(model, d, a.granularity, a.budget);
    dg::RankEngine engine(dm.graph, dm.support);
    long long rank = engine.rank(dm.divisor);
    if (a.json_out) {
        emit(json{{"rank", rank},
                  {"model_vertices", dm.graph.vertex_count()},
                  {"model_edges", dm.graph.edge_count()},
                  {"scale", dm.scale.str()}});
    } else {
        std::cout << "model: " << dm.graph.vertex_count() << " vertices, "
                  << dm.graph.edge_count() << " edges, scale = " << dm.scale.str() << "\n";
        std::cout << "rank = " << rank << "\n";
    }
    return 0;
}

int run_tropical_rr_check(const TropicalArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    dg::TropicalCurve curve = doc.tropical_curve();
    dg::TropicalDivisor d = dg::parse_tropical_divisor(a.divisor, curve);
    dg::TropicalRankOptions opts;
    opts.granularity = a.granularity;
    opts.max_vertices = a.budget;
    dg::TropicalRiemannRochReport r = dg::tropical_riemann_roch_check(curve, d, opts);
    if (a.json_out) {
        emit(json{{"rank_d", r.rank_d},
                  {"rank_residual", r.rank_residual},
                  {"degree", r.degree.str()},
                  {"genus", r.genus},
                  {"holds", r.holds}});
    } else {
        std::cout << "r(D) = " << r.rank_d << "\n";
        std::cout << "r(K - D) = " << r.rank_residual << "\n";
        std::cout << "deg D = " << r.degree.str() << "\n";
        std::cout << "genus = " << r.genus << "\n";
        std::cout << "identity: " << paren(r.rank_d) << " - " << paren(r.rank_residual)
                  << " = " << r.degree.str() << " - " << r.genus << " + 1\n";
        std::cout << "Riemann-Roch: " << (r.holds ? "OK" : "VIOLATED") << "\n";
    }
    return r.holds ? 0 : 1;
}

struct PseudoArgs {
    std::string graph_path;
    std::string direction = "auto";
    bool json_out = false;
};

int run_pseudo(const PseudoArgs& a) {
    dg::GraphDocument doc = dg::load_graph_file(a.graph_path);
    std::string direction = a.direction;
    if (direction == "auto") {
        if (doc.graph.total_weight() > 0) {
            direction = "to-pseudo";
        } else {
            bool zero_loop = false;
            for (const auto& l : doc.lengths) {
                if (l.has_value() && *l == 0) zero_loop = true;
            }
            direction = zero_loop ? "to-tropical" : "to-pseudo";
        }
    }
    std::string text;
    if (direction == "to-pseudo") {
        text = dg::serialize_pseudo_metric(dg::to_pseudo_metric(doc.tropical_curve()));
    } else {
        text = dg::serialize_curve(dg::from_pseudo_metric(doc.pseudo_metric()));
    }
    if (a.json_out) {
        emit(json{{"direction", direction}, {"graph", text}});
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor theory on vertex-weighted multigraphs and tropical curves"};
    app.require_subcommand(1);

    auto add_common = [](CLI::App* sub, std::string& path, bool& json_out) {
        sub->add_option("-g,--graph", path, "graph file")->required();
        sub->add_flag("--json", json_out, "machine-readable output");
    };

    RankArgs rank_args;
    auto* rank_cmd = app.add_subcommand("rank", "divisor rank (weighted by default)");
    add_common(rank_cmd, rank_args.graph_path, rank_args.json_out);
    rank_cmd->add_option("-D,--divisor", rank_args.divisor, "divisor, e.g. \"v0:2,v1:-1\"")
        ->required();
    auto* plain_flag = rank_cmd->add_flag("--plain", rank_args.plain, "rank on the bare graph");
    auto* sharp_flag =
        rank_cmd->add_flag("--sharp", rank_args.sharp, "rank with loops split into 2-cycles");
    plain_flag->excludes(sharp_flag);
    sharp_flag->excludes(plain_flag);
    rank_cmd->add_flag("--witness", rank_args.witness,
                       "report the least failing effective divisor");

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "q-reduced form of a divisor");
    add_common(reduce_cmd, reduce_args.graph_path, reduce_args.json_out);
    reduce_cmd->add_option("-D,--divisor", reduce_args.divisor, "divisor")->required();
    reduce_cmd->add_option("-q,--base", reduce_args.base,
                           "base vertex (default: first declared)");

    EquivArgs equiv_args;
    auto* equiv_cmd = app.add_subcommand("equiv", "linear equivalence of two divisors");
    add_common(equiv_cmd, equiv_args.graph_path, equiv_args.json_out);
    equiv_cmd->add_option("-D,--first", equiv_args.first, "first divisor")->required();
    equiv_cmd->add_option("-E,--second", equiv_args.second, "second divisor")->required();
    equiv_cmd->add_flag("--lattice", equiv_args.lattice,
                        "decide via the principal lattice (Smith normal form)");

    GraphOnlyArgs jacobian_args;
    auto* jacobian_cmd = app.add_subcommand("jacobian", "degree-0 divisor class group");
    add_common(jacobian_cmd, jacobian_args.graph_path, jacobian_args.json_out);

    GraphOnlyArgs canonical_args;
    auto* canonical_cmd = app.add_subcommand("canonical", "canonical divisor");
    add_common(canonical_cmd, canonical_args.graph_path, canonical_args.json_out);

    DivisorArgs rr_args;
    auto* rr_cmd = app.add_subcommand("rr-check", "verify the Riemann-Roch identity");
    add_common(rr_cmd, rr_args.graph_path, rr_args.json_out);
    rr_cmd->add_option("-D,--divisor", rr_args.divisor, "divisor")->required();

    SubdivideArgs subdivide_args;
    auto* subdivide_cmd = app.add_subcommand("subdivide", "insert vertices inside edges");
    add_common(subdivide_cmd, subdivide_args.graph_path, subdivide_args.json_out);
    subdivide_cmd->add_option("-n", subdivide_args.uniform, "vertices inserted per edge");
    subdivide_cmd->add_option("--counts", subdivide_args.counts, "per-edge counts, e.g. 1,0,2")
        ->delimiter(',');

    GraphOnlyArgs hat_args;
    auto* hat_cmd = app.add_subcommand("hat", "split every loop into a 2-cycle");
    add_common(hat_cmd, hat_args.graph_path, hat_args.json_out);

    GraphOnlyArgs virtual_args;
    auto* virtual_cmd = app.add_subcommand("virtual", "turn vertex weights into loops");
    add_common(virtual_cmd, virtual_args.graph_path, virtual_args.json_out);

    TropicalArgs tr_args;
    auto* tr_cmd = app.add_subcommand("tropical-rank", "rank on a weighted tropical curve");
    add_common(tr_cmd, tr_args.graph_path, tr_args.json_out);
    tr_cmd->add_option("-D,--divisor", tr_args.divisor,
                       "tropical divisor, e.g. \"v0:1,2@1/3:1\"")
        ->required();
    tr_cmd->add_option("--budget", tr_args.budget, "discretized model vertex budget");
    tr_cmd->add_option("--granularity", tr_args.granularity, "extra model refinement factor");

    TropicalArgs trr_args;
    auto* trr_cmd =
        app.add_subcommand("tropical-rr-check", "verify tropical Riemann-Roch");
    add_common(trr_cmd, trr_args.graph_path, trr_args.json_out);
    trr_cmd->add_option("-D,--divisor", trr_args.divisor, "tropical divisor")->required();
    trr_cmd->add_option("--budget", trr_args.budget, "discretized model vertex budget");
    trr_cmd->add_option("--granularity", trr_args.granularity, "extra model refinement factor");

    PseudoArgs pseudo_args;
    auto* pseudo_cmd =
        app.add_subcommand("pseudo", "convert between curves and pseudo-metric graphs");
    add_common(pseudo_cmd, pseudo_args.graph_path, pseudo_args.json_out);
    pseudo_cmd->add_option("--direction", pseudo_args.direction, "auto|to-pseudo|to-tropical")
        ->check(CLI::IsMember({"auto", "to-pseudo", "to-tropical"}));

    std::string active_path;
    int rc = 0;
    rank_cmd->callback([&] { active_path = rank_args.graph_path; rc = run_rank(rank_args); });
    reduce_cmd->callback(
        [&] { active_path = reduce_args.graph_path; rc = run_reduce(reduce_args); });
    equiv_cmd->callback([&] { active_path = equiv_args.graph_path; rc = run_equiv(equiv_args); });
    jacobian_cmd->callback(
        [&] { active_path = jacobian_args.graph_path; rc = run_jacobian(jacobian_args); });
    canonical_cmd->callback(
        [&] { active_path = canonical_args.graph_path; rc = run_canonical(canonical_args); });
    rr_cmd->callback([&] { active_path = rr_args.graph_path; rc = run_rr_check(rr_args); });
    subdivide_cmd->callback(
        [&] { active_path = subdivide_args.graph_path; rc = run_subdivide(subdivide_args); });
    hat_cmd->callback([&] { active_path = hat_args.graph_path; rc = run_hat(hat_args); });
    virtual_cmd->callback(
        [&] { active_path = virtual_args.graph_path; rc = run_virtual(virtual_args); });
    tr_cmd->callback([&] { active_path = tr_args.graph_path; rc = run_tropical_rank(tr_args); });
    trr_cmd->callback(
        [&] { active_path = trr_args.graph_path; rc = run_tropical_rr_check(trr_args); });
    pseudo_cmd->callback(
        [&] { active_path = pseudo_args.graph_path; rc = run_pseudo(pseudo_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dg::ParseError& e) {
        std::cerr << active_path << ":" << e.line() << ":" << e.column() << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
