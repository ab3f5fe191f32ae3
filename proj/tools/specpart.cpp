// specpart: spectral bounds, exact solvers, and design certificates for
// clique partitions of small graphs.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specpart/bounds.hpp"
#include "specpart/cliques.hpp"
#include "specpart/closed_forms.hpp"
#include "specpart/designs.hpp"
#include "specpart/graph.hpp"
#include "specpart/json_io.hpp"
#include "specpart/partition.hpp"
#include "specpart/spectral.hpp"

using nlohmann::json;
using namespace specpart;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGuard = 4;
constexpr int kExitTimeout = 5;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("expected an integer, got '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

Design make_design(const std::string& kind, const std::vector<int>& params) {
    if (params.size() != 1) throw ParseError("design spec '" + kind + "' takes one parameter");
    if (kind == "affine") return affine_plane(params[0]);
    if (kind == "projective") return projective_plane(params[0]);
    if (kind == "pairs") return trivial_pair_design(params[0]);
    if (kind == "sts") return bose_sts(params[0]);
    throw ParseError("unknown design spec '" + kind + "' (affine, projective, pairs, sts)");
}

Graph make_family_impl(const std::string& name, const std::vector<std::string>& raw_params) {
    auto numeric = [](auto begin, auto end) {
        std::vector<int> params;
        for (auto it = begin; it != end; ++it)
            for (const auto& piece : split(*it, ','))
                if (!piece.empty()) params.push_back(parse_int(piece));
        return params;
    };
    if (name == "block-graph") {
        if (raw_params.empty()) throw ParseError("family 'block-graph' needs a design spec");
        Design d = make_design(raw_params[0],
                               numeric(raw_params.begin() + 1, raw_params.end()));
        return block_graph(d).first;
    }
    std::vector<int> params = numeric(raw_params.begin(), raw_params.end());
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ParseError("family '" + name + "' takes " + std::to_string(count) +
                             " parameter(s)");
    };
    if (name == "complete") {
        need(1);
        return gen_complete(params[0]);
    }
    if (name == "multipartite") {
        if (params.empty()) throw ParseError("family 'multipartite' needs part sizes");
        return gen_complete_multipartite(params);
    }
    if (name == "cycle") {
        need(1);
        return gen_cycle(params[0]);
    }
    if (name == "cycle-complement") {
        need(1);
        return complement(gen_cycle(params[0]));
    }
    if (name == "triangular") {
        need(1);
        return gen_triangular(params[0]);
    }
    if (name == "friendship") {
        need(1);
        return gen_friendship(params[0]);
    }
    throw ParseError("unknown family '" + name +
                     "' (complete, multipartite, cycle, cycle-complement, triangular, "
                     "friendship, block-graph)");
}

// Families: complete:n, multipartite:a1,a2,..., cycle:n, cycle-complement:n,
// triangular:v, friendship:v, block-graph:<design>:<param>. Out-of-range
// parameters are usage errors here, not precondition failures.
Graph make_family(const std::string& name, const std::vector<std::string>& raw_params,
                  std::string* description = nullptr) {
    if (description) {
        std::string d = name;
        for (const auto& p : raw_params) d += ":" + p;
        *description = d;
    }
    try {
        return make_family_impl(name, raw_params);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Graph graph_from_family_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.empty() || parts[0].empty()) throw ParseError("empty family spec");
    std::string name = parts[0];
    std::vector<std::string> params(parts.begin() + 1, parts.end());
    return make_family(name, params);
}

Graph load_input(const std::string& path, const std::string& family) {
    if (!family.empty() && !path.empty())
        throw ParseError("give either an input file or --family, not both");
    if (!family.empty()) return graph_from_family_spec(family);
    if (path.empty()) throw ParseError("missing input: give a file path or --family");
    if (path == "-") return read_edge_list(std::cin);
    return load_edge_list(path);
}

int resolve_workers(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("SPECPART_WORKERS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string graph_summary_line(const Graph& g) {
    DegreeProfile p = degree_profile(g);
    std::ostringstream out;
    out << "n=" << g.order() << " m=" << g.edge_count() << " min_degree=" << p.min_degree
        << " max_degree=" << p.max_degree << " regular=" << (p.is_regular ? "yes" : "no")
        << " connected=" << (p.is_connected ? "yes" : "no");
    return out.str();
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    std::string description;
    Graph g = make_family(args.family, args.params, &description);
    if (args.out_path.empty()) {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(args.out_path);
        if (!out) throw ParseError("cannot write '" + args.out_path + "'");
        write_edge_list(out, g);
    }
    std::cerr << description << ": " << graph_summary_line(g) << "\n";
    return 0;
}

// --- bounds ------------------------------------------------------------------

struct BoundsArgs {
    std::string input;
    std::string family;
    int t = 0;
    bool all = false;
    bool force = false;
    int workers = 0;
    std::string format = "text";
};

void render_dashboard_text(const Dashboard& dash) {
    std::cout << "graph: n=" << dash.graph.n << " m=" << dash.graph.m
              << " min_degree=" << dash.graph.min_degree
              << " max_degree=" << dash.graph.max_degree
              << " regular=" << (dash.graph.regular ? "yes" : "no")
              << " connected=" << (dash.graph.connected ? "yes" : "no");
    if (dash.graph.omega) std::cout << " omega=" << *dash.graph.omega;
    std::cout << "\n";
    std::printf("%-16s %-8s %-4s %-6s %-12s %-12s %s\n", "name", "quantity", "t", "omega", "raw",
                "strengthened", "diagnosis");
    for (const auto& entry : dash.entries) {
        if (!entry.report) {
            std::printf("%-16s error: %s\n", entry.name.c_str(), entry.error.c_str());
            continue;
        }
        const BoundReport& r = *entry.report;
        std::string t_str = r.t ? std::to_string(*r.t) : "-";
        std::string o_str = r.omega ? std::to_string(*r.omega) : "-";
        std::printf("%-16s %-8s %-4s %-6s %-12s %-12lld %s\n", r.name.c_str(),
                    r.quantity.c_str(), t_str.c_str(), o_str.c_str(), fmt6(r.raw).c_str(),
                    r.strengthened, to_string(r.diagnosis).c_str());
    }
    if (!dash.exact.empty()) {
        std::cout << "exact:";
        for (const auto& [quantity, value] : dash.exact) std::cout << ' ' << quantity << '=' << value;
        std::cout << "\n";
    }
}

void render_dashboard_csv(const Dashboard& dash) {
    std::cout << "name,quantity,t,omega,raw,strengthened,direction,equality_diagnosis,error\n";
    for (const auto& entry : dash.entries) {
        if (!entry.report) {
            std::cout << entry.name << ",,,,,,,,\"" << entry.error << "\"\n";
            continue;
        }
        const BoundReport& r = *entry.report;
        std::cout << r.name << ',' << r.quantity << ',' << (r.t ? std::to_string(*r.t) : "")
                  << ',' << (r.omega ? std::to_string(*r.omega) : "") << ',' << fmt6(r.raw)
                  << ',' << r.strengthened << ',' << (r.lower ? "lower" : "upper") << ','
                  << to_string(r.diagnosis) << ",\n";
    }
}

int cmd_bounds(const BoundsArgs& args) {
    Graph g = load_input(args.input, args.family);
    SolveOptions opts;
    opts.workers = resolve_workers(args.workers);
    opts.force = args.force;
    std::optional<int> t;
    if (args.t > 0) t = args.t;
    Dashboard dash = bound_dashboard(g, t, opts);
    if (args.all && dash.graph.omega && *dash.graph.omega >= 2) {
        for (int tt = 2; tt <= *dash.graph.omega; ++tt) {
            auto add = [&](const std::string& name, auto&& compute) {
                DashboardEntry entry;
                entry.name = name;
                try {
                    entry.report = compute();
                } catch (const Error& e) {
                    entry.error = e.what();
                    dash.all_ok = false;
                }
                dash.entries.push_back(std::move(entry));
            };
            add("cp_t_spectral", [&] { return cp_t_lower_bound(g, tt); });
            add("pi_t_spectral", [&] { return pi_t_lower_bound(g, tt); });
            if (tt > 2) add("kt_spectral", [&] { return kt_upper_bound(g, tt); });
        }
    }
    if (args.format == "json") {
        std::cout << dashboard_to_json(dash).dump() << "\n";
    } else if (args.format == "csv") {
        render_dashboard_csv(dash);
    } else {
        render_dashboard_text(dash);
    }
    return dash.all_ok ? 0 : kExitPrecondition;
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
    std::string quantity;
    std::string input;
    std::string family;
    int t = 0;
    bool exclude_trivial = false;
    bool force = false;
    double timeout = 60.0;
    int workers = 0;
    std::string format = "text";
};

int cmd_solve(const SolveArgs& args) {
    bool needs_t = args.quantity == "cp-t" || args.quantity == "pi-t" || args.quantity == "kt";
    if (needs_t && args.t <= 0)
        throw ParseError("quantity '" + args.quantity + "' needs --t");
    Graph g = load_input(args.input, args.family);
    SolveOptions opts;
    opts.workers = resolve_workers(args.workers);
    opts.exclude_trivial = args.exclude_trivial;
    opts.force = args.force;
    opts.timeout_seconds = args.timeout;

    SolveResult res;
    if (args.quantity == "cp")
        res = solve_cp(g, opts);
    else if (args.quantity == "cp-t")
        res = solve_cp_t(g, args.t, opts);
    else if (args.quantity == "pi")
        res = solve_pi(g, opts);
    else if (args.quantity == "pi-t")
        res = solve_pi_t(g, args.t, opts);
    else if (args.quantity == "kt")
        res = solve_kt(g, args.t, opts);
    else
        throw ParseError("unknown quantity '" + args.quantity + "' (cp, cp-t, pi, pi-t, kt)");

    if (args.format == "json") {
        json j;
        j["quantity"] = args.quantity;
        if (needs_t) j["t"] = args.t;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["optimum"] = res.optimum;
        json witness;
        witness["n"] = g.order();
        witness["cliques"] = res.witness;
        j["witness"] = witness;
        std::cout << j.dump() << "\n";
        std::cerr << "nodes=" << res.nodes_explored << " time=" << res.elapsed_seconds << "s\n";
    } else {
        std::cout << "quantity=" << args.quantity;
        if (needs_t) std::cout << " t=" << args.t;
        std::cout << " optimum=" << res.optimum << "\n";
        std::cout << "witness (" << res.witness.size() << " cliques):\n";
        for (const auto& c : res.witness) {
            std::cout << " ";
            for (int u : c) std::cout << ' ' << u;
            std::cout << "\n";
        }
        std::cout << "nodes=" << res.nodes_explored << " time=" << res.elapsed_seconds << "s\n";
    }
    return 0;
}

// --- decompose ---------------------------------------------------------------

struct DecomposeArgs {
    std::string input;
    std::string family;
    int t = 0;
    std::string format = "text";
};

int cmd_decompose(const DecomposeArgs& args) {
    if (args.t <= 0) throw ParseError("decompose needs --t");
    Graph g = load_input(args.input, args.family);
    auto decomposition = find_kt_decomposition(g, args.t);
    if (args.format == "json") {
        json j;
        j["exists"] = decomposition.has_value();
        if (decomposition) j["partition"] = partition_to_json(*decomposition);
        std::cout << j.dump() << "\n";
    } else if (decomposition) {
        std::cout << "decomposition into " << decomposition->cliques.size() << " cliques of size "
                  << args.t << ":\n";
        for (const auto& c : decomposition->cliques) {
            std::cout << " ";
            for (int u : c) std::cout << ' ' << u;
            std::cout << "\n";
        }
    } else {
        std::cout << "none\n";
    }
    return 0;
}

// --- certify -----------------------------------------------------------------

struct CertifyArgs {
    std::string input;
    std::string family;
    int t = 0;
    std::string bound;
    std::string cert_out;
    int workers = 0;
    std::string format = "text";
};

BoundKind parse_bound_kind(const std::string& s) {
    if (s == "size" || s == "thm31") return BoundKind::SizeBound;
    if (s == "total" || s == "thm41") return BoundKind::TotalSizeBound;
    if (s == "packing" || s == "prop42") return BoundKind::PackingBound;
    throw ParseError("unknown bound '" + s + "' (size, total, packing)");
}

int cmd_certify(const CertifyArgs& args) {
    if (args.t <= 0) throw ParseError("certify needs --t");
    BoundKind kind = parse_bound_kind(args.bound);
    Graph g = load_input(args.input, args.family);
    SolveOptions opts;
    opts.workers = resolve_workers(args.workers);
    BoundReport report = classify_equality(g, args.t, kind, opts);

    if (!args.cert_out.empty() &&
        report.diagnosis == EqualityDiagnosis::AttainedWithCertificate) {
        std::ofstream out(args.cert_out);
        if (!out) throw ParseError("cannot write '" + args.cert_out + "'");
        if (report.certificate_design)
            out << design_to_json(*report.certificate_design).dump() << "\n";
        else if (report.certificate_partition)
            out << partition_to_json(*report.certificate_partition).dump() << "\n";
    }

    if (args.format == "json") {
        std::cout << report_to_json(report).dump() << "\n";
    } else {
        std::cout << "bound=" << report.name << " quantity=" << report.quantity
                  << " t=" << args.t << " raw=" << fmt6(report.raw)
                  << " strengthened=" << report.strengthened << "\n";
        std::cout << "diagnosis: " << to_string(report.diagnosis) << "\n";
        if (report.certificate_design) {
            DesignParams dp = validate_design(*report.certificate_design);
            std::cout << "certificate: 2-(" << dp.v << "," << dp.k << ",1) design with " << dp.b
                      << " blocks\n";
        } else if (report.certificate_partition) {
            std::cout << "certificate: decomposition into "
                      << report.certificate_partition->cliques.size() << " cliques\n";
        }
        if (!args.cert_out.empty() &&
            report.diagnosis == EqualityDiagnosis::AttainedWithCertificate)
            std::cout << "certificate written to " << args.cert_out << "\n";
    }
    return 0;
}

// --- table1 ------------------------------------------------------------------

struct TableArgs {
    std::string p_range = "2:5";
    std::string a_range = "2:5";
    std::string s_range = "2:6";
    std::string tv_range = "4:8";
    std::string fv_range = "2:8";
    int cp_max_edges = 30;
    int workers = 0;
    std::string format = "text";
};

std::pair<int, int> parse_range(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw ParseError("range must be 'lo:hi', got '" + s + "'");
    int lo = parse_int(parts[0]), hi = parse_int(parts[1]);
    if (lo > hi) throw ParseError("empty range '" + s + "'");
    return {lo, hi};
}

struct TableRow {
    std::string family;
    int n = 0;
    int m = 0;
    double cp_spectral = 0.0;
    double cp_via_pi = 0.0;
    double hoffman_q = 0.0;
    double hoffman_lambda = 0.0;
    std::optional<long long> cp;
    double residual = 0.0;
};

TableRow table_row(const std::string& label, const Graph& g,
                   const closed_forms::FamilyBounds& expected, int cp_max_edges,
                   const SolveOptions& opts) {
    TableRow row;
    row.family = label;
    row.n = g.order();
    row.m = g.edge_count();
    row.cp_spectral = cp_lower_bound(g).raw;
    row.cp_via_pi = cp_via_pi_bound(g).raw;
    row.hoffman_q = hoffman_q_bound(g).raw;
    row.hoffman_lambda = hoffman_lambda_bound(g).raw;
    row.residual = std::max({std::abs(row.cp_spectral - expected.cp_spectral),
                             std::abs(row.cp_via_pi - expected.cp_via_pi),
                             std::abs(row.hoffman_q - expected.hoffman_q),
                             std::abs(row.hoffman_lambda - expected.hoffman_lambda)});
    if (g.edge_count() <= cp_max_edges) row.cp = solve_cp(g, opts).optimum;
    return row;
}

int cmd_table1(const TableArgs& args) {
    auto [p_lo, p_hi] = parse_range(args.p_range);
    auto [a_lo, a_hi] = parse_range(args.a_range);
    auto [s_lo, s_hi] = parse_range(args.s_range);
    auto [tv_lo, tv_hi] = parse_range(args.tv_range);
    auto [fv_lo, fv_hi] = parse_range(args.fv_range);
    SolveOptions opts;
    opts.workers = resolve_workers(args.workers);
    opts.force = true;  // --cp-max-edges is the effective guard here

    std::vector<TableRow> rows;
    for (int p = p_lo; p <= p_hi; ++p)
        for (int a = a_lo; a <= a_hi; ++a)
            rows.push_back(table_row("multipartite:" + std::to_string(p) + "x" + std::to_string(a),
                                     gen_complete_multipartite(std::vector<int>(p, a)),
                                     closed_forms::multipartite(p, a), args.cp_max_edges, opts));
    for (int s = s_lo; s <= s_hi; ++s)
        rows.push_back(table_row("cycle-complement:" + std::to_string(2 * s + 1),
                                 complement(gen_cycle(2 * s + 1)),
                                 closed_forms::cycle_complement(s), args.cp_max_edges, opts));
    for (int v = tv_lo; v <= tv_hi; ++v)
        rows.push_back(table_row("triangular:" + std::to_string(v), gen_triangular(v),
                                 closed_forms::triangular(v), args.cp_max_edges, opts));
    for (int v = fv_lo; v <= fv_hi; ++v)
        rows.push_back(table_row("friendship:" + std::to_string(v), gen_friendship(v),
                                 closed_forms::friendship(v), args.cp_max_edges, opts));

    if (args.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j;
            j["family"] = r.family;
            j["n"] = r.n;
            j["m"] = r.m;
            j["cp_spectral"] = r.cp_spectral;
            j["cp_via_pi"] = r.cp_via_pi;
            j["hoffman_q"] = r.hoffman_q;
            j["hoffman_lambda"] = r.hoffman_lambda;
            if (r.cp)
                j["cp"] = *r.cp;
            else
                j["cp"] = nullptr;
            j["residual"] = r.residual;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
    } else if (args.format == "csv") {
        std::cout << "family,n,m,cp_spectral,cp_via_pi,hoffman_q,hoffman_lambda,cp,residual\n";
        for (const auto& r : rows) {
            std::cout << r.family << ',' << r.n << ',' << r.m << ',' << fmt6(r.cp_spectral)
                      << ',' << fmt6(r.cp_via_pi) << ',' << fmt6(r.hoffman_q) << ','
                      << fmt6(r.hoffman_lambda) << ','
                      << (r.cp ? std::to_string(*r.cp) : std::string("skipped")) << ','
                      << fmt6(r.residual) << "\n";
        }
    } else {
        std::printf("%-24s %-4s %-4s %-12s %-12s %-12s %-12s %-8s %s\n", "family", "n", "m",
                    "cp_spectral", "cp_via_pi", "hoffman_q", "hoffman_lam", "cp", "residual");
        for (const auto& r : rows) {
            std::printf("%-24s %-4d %-4d %-12s %-12s %-12s %-12s %-8s %.2e\n", r.family.c_str(),
                        r.n, r.m, fmt6(r.cp_spectral).c_str(), fmt6(r.cp_via_pi).c_str(),
                        fmt6(r.hoffman_q).c_str(), fmt6(r.hoffman_lambda).c_str(),
                        r.cp ? std::to_string(*r.cp).c_str() : "skipped", r.residual);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral bounds and exact solvers for clique partitions"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a named graph family as an edge list");
    gen->add_option("family", gen_args.family, "family name")->required();
    gen->add_option("params", gen_args.params, "family parameters");
    gen->add_option("-o,--out", gen_args.out_path, "output file (default stdout)");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "evaluate the spectral bounds on a graph");
    bounds->add_option("input", bounds_args.input, "edge-list file, or - for stdin");
    bounds->add_option("--family", bounds_args.family, "inline family spec, e.g. triangular:5");
    bounds->add_option("--t", bounds_args.t, "also evaluate the size-limited bounds at this t");
    bounds->add_flag("--all", bounds_args.all, "evaluate size-limited bounds for every t up to the clique number");
    bounds->add_flag("--force", bounds_args.force, "bypass the exact-solver edge guard");
    bounds->add_option("--workers", bounds_args.workers, "worker threads (default: machine parallelism)");
    bounds->add_option("--format", bounds_args.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute an exact clique-partition quantity");
    solve->add_option("quantity", solve_args.quantity, "cp, cp-t, pi, pi-t, or kt")->required();
    solve->add_option("input", solve_args.input, "edge-list file, or - for stdin");
    solve->add_option("--family", solve_args.family, "inline family spec");
    solve->add_option("--t", solve_args.t, "clique size limit (required for cp-t, pi-t, kt)");
    solve->add_flag("--exclude-trivial", solve_args.exclude_trivial,
                    "reject the one-clique partition of a complete graph");
    solve->add_flag("--force", solve_args.force, "bypass the edge guard");
    solve->add_option("--timeout", solve_args.timeout, "seconds before giving up (0 = none)");
    solve->add_option("--workers", solve_args.workers, "worker threads");
    solve->add_option("--format", solve_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    DecomposeArgs dec_args;
    auto* dec = app.add_subcommand("decompose", "find a partition into cliques of one size");
    dec->add_option("input", dec_args.input, "edge-list file, or - for stdin");
    dec->add_option("--family", dec_args.family, "inline family spec");
    dec->add_option("--t", dec_args.t, "clique size")->required();
    dec->add_option("--format", dec_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CertifyArgs cert_args;
    auto* cert = app.add_subcommand("certify", "diagnose the equality case of a bound");
    cert->add_option("input", cert_args.input, "edge-list file, or - for stdin");
    cert->add_option("--family", cert_args.family, "inline family spec");
    cert->add_option("--t", cert_args.t, "clique size")->required();
    cert->add_option("--bound", cert_args.bound, "size, total, or packing")->required();
    cert->add_option("--cert-out", cert_args.cert_out, "write the certificate JSON here");
    cert->add_option("--workers", cert_args.workers, "worker threads");
    cert->add_option("--format", cert_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    TableArgs table_args;
    auto* table = app.add_subcommand("table1", "bounds table across the graph families");
    table->add_option("--p-range", table_args.p_range, "multipartite part counts, lo:hi");
    table->add_option("--a-range", table_args.a_range, "multipartite part sizes, lo:hi");
    table->add_option("--s-range", table_args.s_range, "cycle-complement parameter, lo:hi");
    table->add_option("--tv-range", table_args.tv_range, "triangular parameter, lo:hi");
    table->add_option("--fv-range", table_args.fv_range, "friendship parameter, lo:hi");
    table->add_option("--cp-max-edges", table_args.cp_max_edges,
                      "solve cp exactly only when m is at most this (default 30)");
    table->add_option("--workers", table_args.workers, "worker threads");
    table->add_option("--format", table_args.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (bounds->parsed()) return cmd_bounds(bounds_args);
        if (solve->parsed()) return cmd_solve(solve_args);
        if (dec->parsed()) return cmd_decompose(dec_args);
        if (cert->parsed()) return cmd_certify(cert_args);
        if (table->parsed()) return cmd_table1(table_args);
    } catch (const TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const SearchLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
