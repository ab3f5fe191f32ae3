#include "specpart/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "specpart/cliques.hpp"
#include "specpart/spectral.hpp"

namespace specpart {

std::string to_string(EqualityDiagnosis d) {
    switch (d) {
        case EqualityDiagnosis::AttainedWithCertificate: return "attained-with-certificate";
        case EqualityDiagnosis::NotAttained: return "not-attained";
        case EqualityDiagnosis::Undecided: return "undecided";
    }
    return "undecided";
}

namespace {

long long strengthen_lower(double raw) { return static_cast<long long>(std::ceil(raw - kEigTol)); }
long long strengthen_upper(double raw) { return static_cast<long long>(std::floor(raw + kEigTol)); }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require_connected(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("bound needs n >= 1");
    if (!degree_profile(g).is_connected)
        throw PreconditionError("bound requires a connected graph");
}

BoundReport make_report(std::string name, std::string quantity, double raw, bool lower) {
    BoundReport r;
    r.name = std::move(name);
    r.quantity = std::move(quantity);
    r.raw = raw;
    r.lower = lower;
    r.strengthened = lower ? strengthen_lower(raw) : strengthen_upper(raw);
    return r;
}

// Node budget for certification decomposition searches when the caller
// leaves max_nodes unset; keeps classify_equality terminating.
constexpr long long kCertifySearchNodes = 50'000'000;

}  // namespace

BoundReport hoffman_q_bound(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("bound needs n >= 1");
    if (degree_profile(g).has_isolated_vertex)
        throw PreconditionError("bound requires a graph with no isolated vertices");
    int q = count_not_minus_one(g);
    double raw = (-1.0 + std::sqrt(8.0 * q + 1.0)) / 2.0;
    return make_report("hoffman_q", "cp", raw, true);
}

BoundReport hoffman_lambda_bound(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("bound needs n >= 1");
    if (g.edge_count() == 0) throw PreconditionError("bound requires at least one edge");
    return make_report("hoffman_lambda", "cp", -lambda_min(g), true);
}

BoundReport cp_t_lower_bound(const Graph& g, int t) {
    if (t < 2) throw PreconditionError("bound needs t >= 2");
    require_connected(g);
    DegreeProfile p = degree_profile(g);
    double raw = spectral_radius(g) - t + 1 + static_cast<double>(ceil_div(p.min_degree, t - 1));
    BoundReport r = make_report("cp_t_spectral", "cp_t", raw, true);
    r.t = t;
    return r;
}

BoundReport cp_lower_bound(const Graph& g) {
    require_connected(g);
    if (g.edge_count() == 0) throw PreconditionError("bound requires at least one edge");
    int omega = clique_number(g);
    BoundReport r = cp_t_lower_bound(g, omega);
    r.name = "cp_spectral";
    r.quantity = "cp";
    r.t.reset();
    r.omega = omega;
    return r;
}

BoundReport pi_t_lower_bound(const Graph& g, int t) {
    if (t < 2) throw PreconditionError("bound needs t >= 2");
    require_connected(g);
    DegreeProfile p = degree_profile(g);
    double raw = spectral_radius(g) +
                 static_cast<double>(g.order() - t + 1) *
                     static_cast<double>(ceil_div(p.min_degree, t - 1));
    BoundReport r = make_report("pi_t_spectral", "pi_t", raw, true);
    r.t = t;
    return r;
}

BoundReport pi_lower_bound(const Graph& g) {
    require_connected(g);
    if (g.edge_count() == 0) throw PreconditionError("bound requires at least one edge");
    int omega = clique_number(g);
    BoundReport r = pi_t_lower_bound(g, omega);
    r.name = "pi_spectral";
    r.quantity = "pi";
    r.t.reset();
    r.omega = omega;
    return r;
}

BoundReport cp_via_pi_bound(const Graph& g) {
    require_connected(g);
    if (g.edge_count() == 0) throw PreconditionError("bound requires at least one edge");
    int omega = clique_number(g);
    BoundReport pi = pi_t_lower_bound(g, omega);
    BoundReport r = make_report("cp_via_pi", "cp", pi.raw / omega, true);
    r.omega = omega;
    return r;
}

BoundReport kt_upper_bound(const Graph& g, int t) {
    if (t <= 2) throw PreconditionError("bound needs t > 2");
    require_connected(g);
    DegreeProfile p = degree_profile(g);
    double raw = (2.0 * g.edge_count() - spectral_radius(g) -
                  static_cast<double>(g.order() - t + 1) *
                      static_cast<double>(ceil_div(p.min_degree, t - 1))) /
                 (static_cast<double>(t) * (t - 2));
    BoundReport r = make_report("kt_spectral", "kt", raw, false);
    r.t = t;
    return r;
}

long long cp3_upper_limit(int n) { return static_cast<long long>(n) * n / 4; }
double pi_upper_limit(int n) { return static_cast<double>(n) * n / 2.0; }

namespace {

// Grouped spectrum must equal the expected integer eigenvalue pattern, with
// zero-multiplicity entries dropped.
bool spectrum_matches(const Spectrum& s, std::vector<std::pair<double, int>> expected) {
    std::erase_if(expected, [](const auto& e) { return e.second == 0; });
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (s.grouped.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (std::abs(s.grouped[i].first - expected[i].first) > kGroupTol) return false;
        if (s.grouped[i].second != expected[i].second) return false;
    }
    return true;
}

SolveOptions certify_search_options(const SolveOptions& opts) {
    SolveOptions inner = opts;
    if (inner.max_nodes == 0) inner.max_nodes = kCertifySearchNodes;
    return inner;
}

BoundReport classify_size_bound(const Graph& g, int t, const SolveOptions& opts) {
    BoundReport r = cp_t_lower_bound(g, t);
    r.diagnosis = EqualityDiagnosis::NotAttained;
    if (g.edge_count() == 0) return r;

    DegreeProfile profile = degree_profile(g);
    if (!profile.is_regular) return r;
    int delta = profile.min_degree;
    if (delta % (t - 1) != 0) return r;
    int k = delta / (t - 1);
    if (k == 1) {
        // Degenerate extremal case: one clique covering everything, so the
        // graph must be K_t itself. The design shrinks to a single point and
        // has no pair structure to materialize.
        if (g.order() == t && g.edge_count() == t * (t - 1) / 2) {
            r.diagnosis = EqualityDiagnosis::AttainedWithCertificate;
            Clique everything(t);
            for (int u = 0; u < t; ++u) everything[u] = u;
            r.certificate_partition = make_clique_partition(g, {everything});
        }
        return r;
    }
    long long n = g.order();
    if ((k * n) % t != 0) return r;
    long long v = k * n / t;
    // Counting identity of the block correspondence; it also forces every
    // clique pair of a decomposition to meet, so the clique graph is
    // complete automatically.
    if (v - 1 != static_cast<long long>(t) * (k - 1)) return r;

    Spectrum s = sym_eigenvalues(SymMatrix::adjacency(g));
    std::vector<std::pair<double, int>> expected = {
        {static_cast<double>(delta), 1},
        {static_cast<double>(t - 1 - k), static_cast<int>(v - 1)},
        {static_cast<double>(-k), static_cast<int>(n - v)}};
    if (!spectrum_matches(s, std::move(expected))) return r;

    std::optional<CliquePartition> decomposition;
    try {
        decomposition = find_kt_decomposition(g, t, certify_search_options(opts));
    } catch (const SearchLimitError&) {
        r.diagnosis = EqualityDiagnosis::Undecided;
        return r;
    }
    if (!decomposition) return r;

    Design certificate = decomposition_to_design(g, *decomposition);
    if (static_cast<long long>(decomposition->cliques.size()) != v ||
        r.strengthened != v || std::abs(r.raw - static_cast<double>(v)) > kGroupTol)
        return r;
    if (g.edge_count() <= kSolveEdgeGuard) {
        SolveResult exact = solve_cp_t(g, t, opts);
        if (exact.optimum != v)
            throw Error("certificate contradicts the exact solver; this cannot happen");
    }
    r.diagnosis = EqualityDiagnosis::AttainedWithCertificate;
    r.certificate_design = std::move(certificate);
    r.certificate_partition = std::move(*decomposition);
    return r;
}

BoundReport classify_decomposition_bound(const Graph& g, int t, BoundKind kind,
                                         const SolveOptions& opts) {
    BoundReport r = kind == BoundKind::PackingBound ? kt_upper_bound(g, t)
                                                    : pi_t_lower_bound(g, t);
    r.diagnosis = EqualityDiagnosis::NotAttained;
    if (!degree_profile(g).is_regular) return r;
    std::optional<CliquePartition> decomposition;
    try {
        decomposition = find_kt_decomposition(g, t, certify_search_options(opts));
    } catch (const SearchLimitError&) {
        r.diagnosis = EqualityDiagnosis::Undecided;
        return r;
    }
    if (!decomposition) return r;
    r.diagnosis = EqualityDiagnosis::AttainedWithCertificate;
    r.certificate_partition = std::move(*decomposition);
    return r;
}

}  // namespace

BoundReport classify_equality(const Graph& g, int t, BoundKind kind, const SolveOptions& opts) {
    switch (kind) {
        case BoundKind::SizeBound: return classify_size_bound(g, t, opts);
        case BoundKind::TotalSizeBound:
        case BoundKind::PackingBound: return classify_decomposition_bound(g, t, kind, opts);
    }
    throw PreconditionError("unknown bound kind");
}

namespace {

void fill_diagnosis(DashboardEntry& entry,
                    const std::vector<std::pair<std::string, SolveResult>>& witnesses,
                    const Graph& g) {
    if (!entry.report) return;
    BoundReport& r = *entry.report;
    for (const auto& [quantity, solved] : witnesses) {
        if (quantity != r.quantity) continue;
        double exact = static_cast<double>(solved.optimum);
        if (std::abs(r.raw - exact) <= kGroupTol * std::max(1.0, std::abs(exact))) {
            r.diagnosis = EqualityDiagnosis::AttainedWithCertificate;
            if (r.quantity == "kt")
                r.certificate_packing = solved.witness;
            else
                r.certificate_partition = make_clique_partition(g, solved.witness);
        } else {
            r.diagnosis = EqualityDiagnosis::NotAttained;
        }
        return;
    }
}

}  // namespace

Dashboard bound_dashboard(const Graph& g, std::optional<int> t, const SolveOptions& opts) {
    Dashboard dash;
    DegreeProfile profile = degree_profile(g);
    dash.graph.n = g.order();
    dash.graph.m = g.edge_count();
    dash.graph.min_degree = profile.min_degree;
    dash.graph.max_degree = profile.max_degree;
    dash.graph.regular = profile.is_regular;
    dash.graph.connected = profile.is_connected;
    if (g.order() >= 1 && g.edge_count() >= 1) dash.graph.omega = clique_number(g);

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

    add("hoffman_q", [&] { return hoffman_q_bound(g); });
    add("hoffman_lambda", [&] { return hoffman_lambda_bound(g); });
    add("cp_spectral", [&] { return cp_lower_bound(g); });
    add("pi_spectral", [&] { return pi_lower_bound(g); });
    add("cp_via_pi", [&] { return cp_via_pi_bound(g); });
    if (t) {
        add("cp_t_spectral", [&] { return cp_t_lower_bound(g, *t); });
        add("pi_t_spectral", [&] { return pi_t_lower_bound(g, *t); });
        if (*t > 2) add("kt_spectral", [&] { return kt_upper_bound(g, *t); });
    }

    std::vector<std::pair<std::string, SolveResult>> witnesses;
    bool solvable = g.edge_count() <= kSolveEdgeGuard || opts.force;
    if (solvable && g.edge_count() > 0) {
        try {
            witnesses.emplace_back("cp", solve_cp(g, opts));
            witnesses.emplace_back("pi", solve_pi(g, opts));
            if (t) {
                witnesses.emplace_back("cp_t", solve_cp_t(g, *t, opts));
                witnesses.emplace_back("pi_t", solve_pi_t(g, *t, opts));
                if (*t > 2) witnesses.emplace_back("kt", solve_kt(g, *t, opts));
            }
        } catch (const Error&) {
            // Exact values are best-effort decoration; bounds stand alone.
        }
    }
    for (const auto& [quantity, solved] : witnesses)
        dash.exact.emplace_back(quantity, solved.optimum);
    for (auto& entry : dash.entries) fill_diagnosis(entry, witnesses, g);
    return dash;
}

}  // namespace specpart
