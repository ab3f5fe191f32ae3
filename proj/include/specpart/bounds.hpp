#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specpart/designs.hpp"
#include "specpart/graph.hpp"
#include "specpart/partition.hpp"

namespace specpart {

enum class EqualityDiagnosis { AttainedWithCertificate, NotAttained, Undecided };

std::string to_string(EqualityDiagnosis d);

/// One evaluated bound: its raw real value, the integer-strengthened value
/// (ceiling for lower bounds, floor for upper bounds, with a small slack so
/// numerically-integer values round as intended), and the equality-case
/// diagnosis with an optional certificate.
struct BoundReport {
    std::string name;
    std::string quantity;  // "cp", "cp_t", "pi", "pi_t", "kt"
    std::optional<int> t;
    std::optional<int> omega;
    double raw = 0.0;
    long long strengthened = 0;
    bool lower = true;
    EqualityDiagnosis diagnosis = EqualityDiagnosis::Undecided;
    std::optional<Design> certificate_design;
    std::optional<CliquePartition> certificate_partition;
    std::optional<std::vector<Clique>> certificate_packing;
};

// cp >= (-1 + sqrt(8q+1))/2 where q counts eigenvalues different from -1.
// Needs a graph without isolated vertices.
BoundReport hoffman_q_bound(const Graph& g);

// cp >= -lambda_min.
BoundReport hoffman_lambda_bound(const Graph& g);

// cp_t >= rho - t + 1 + ceil(delta/(t-1)) on connected graphs.
BoundReport cp_t_lower_bound(const Graph& g, int t);

// The same bound at t = clique number, bounding cp.
BoundReport cp_lower_bound(const Graph& g);

// pi_t >= rho + (n - t + 1) * ceil(delta/(t-1)) on connected graphs.
BoundReport pi_t_lower_bound(const Graph& g, int t);

// The same bound at t = clique number, bounding pi.
BoundReport pi_lower_bound(const Graph& g);

// cp >= pi bound / omega, combining the total-size bound with
// pi <= omega * cp.
BoundReport cp_via_pi_bound(const Graph& g);

// k_t <= (2m - rho - (n-t+1) ceil(delta/(t-1))) / (t(t-2)) for t > 2.
BoundReport kt_upper_bound(const Graph& g, int t);

// Which equality characterization to certify.
enum class BoundKind {
    SizeBound,       // cp_t bound; equality iff block graph of a Steiner 2-design
    TotalSizeBound,  // pi_t bound; equality iff regular with a K_t-decomposition
    PackingBound,    // k_t bound; same characterization as the total-size bound
};

// Structural equality test. For the size bound: checks regularity, the
// divisibility and counting identities, and the three-eigenvalue pattern,
// then searches for a K_t-decomposition and converts it to a design
// certificate; a found certificate proves equality. For the other bounds:
// regularity plus decomposition existence, the decomposition itself being
// the certificate. Undecided is returned only when the decomposition search
// exhausts its node budget.
BoundReport classify_equality(const Graph& g, int t, BoundKind kind,
                              const SolveOptions& opts = {});

// Assertion limits used against solver outputs: every graph satisfies
// cp_3 <= floor(n^2/4) and pi <= n^2/2.
long long cp3_upper_limit(int n);
double pi_upper_limit(int n);

struct GraphSummary {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool regular = false;
    bool connected = false;
    std::optional<int> omega;
};

struct DashboardEntry {
    std::string name;
    std::optional<BoundReport> report;
    std::string error;  // set when the bound's precondition failed
};

struct Dashboard {
    GraphSummary graph;
    std::vector<DashboardEntry> entries;
    std::vector<std::pair<std::string, long long>> exact;  // quantity -> solved value
    bool all_ok = true;
};

// Evaluates every applicable bound, sharing the spectral work, and adds
// exact solver values when the instance is inside the edge guard. Bounds
// whose preconditions fail are reported as error entries instead of
// aborting the whole dashboard.
Dashboard bound_dashboard(const Graph& g, std::optional<int> t = std::nullopt,
                          const SolveOptions& opts = {});

}  // namespace specpart
