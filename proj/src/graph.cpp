#include "specpart/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace specpart {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) {
        throw PreconditionError("vertex " + std::to_string(u) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    std::size_t n = static_cast<std::size_t>(n_);
    if (!adj_[u * n + v]) {
        adj_[u * n + v] = 1;
        adj_[v * n + u] = 1;
        ++m_;
    }
}

int Graph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int v = 0; v < n_; ++v) d += adj_[static_cast<std::size_t>(u) * n_ + v];
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph from_edge_list(const std::vector<std::pair<int, int>>& edges, int n) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    int n = g.order();
    if (n == 0) {
        p.is_regular = true;
        p.is_connected = true;
        return p;
    }
    p.min_degree = n;
    p.max_degree = 0;
    for (int u = 0; u < n; ++u) {
        int d = g.degree(u);
        p.min_degree = std::min(p.min_degree, d);
        p.max_degree = std::max(p.max_degree, d);
    }
    p.is_regular = p.min_degree == p.max_degree;
    p.has_isolated_vertex = p.min_degree == 0;
    p.is_connected = connected_components(g).size() <= 1;
    return p;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps[id].push_back(u);
            for (int v = 0; v < n; ++v) {
                if (g.adjacent(u, v) && label[v] < 0) {
                    label[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;
}

std::optional<SrgParams> strongly_regular_params(const Graph& g) {
    int n = g.order();
    if (n < 2) return std::nullopt;
    DegreeProfile p = degree_profile(g);
    if (!p.is_regular) return std::nullopt;
    int d = p.min_degree;
    if (d == 0 || d == n - 1) return std::nullopt;  // edgeless / complete
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
            int& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    return SrgParams{n, d, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
}

Graph gen_complete(int n) {
    if (n < 1) throw PreconditionError("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw PreconditionError("multipartite graph needs at least one part");
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw PreconditionError("multipartite part sizes must be >= 1");
        n += s;
    }
    std::vector<int> part(n);
    int idx = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part[idx++] = static_cast<int>(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph gen_triangular(int v) {
    if (v < 3) throw PreconditionError("triangular graph needs v >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
    int n = static_cast<int>(pairs.size());
    Graph g(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const auto& [i, j] = pairs[a];
            const auto& [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) g.add_edge(a, b);
        }
    }
    return g;
}

Graph gen_friendship(int v) {
    if (v < 1) throw PreconditionError("friendship graph needs v >= 1");
    Graph g(2 * v + 1);
    for (int i = 0; i < v; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

namespace {

// Strips comments and blank lines; returns the next payload line.
bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line)) throw ParseError("edge list: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list: header must be 'n m' with nonnegative counts");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_payload_line(in, line))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v))
            throw ParseError("edge list: bad edge line '" + line + "'");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("edge list: ") + e.what());
        }
    }
    return g;
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace specpart
