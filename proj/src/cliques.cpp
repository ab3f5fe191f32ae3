#include "specpart/cliques.hpp"

#include <algorithm>

namespace specpart {

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (int u : vertices)
        if (u < 0 || u >= g.order())
            throw PreconditionError("vertex " + std::to_string(u) + " out of range");
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (!g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

namespace {

struct BronKerbosch {
    const Graph& g;
    std::vector<Clique> out;

    void run() {
        int n = g.order();
        std::vector<int> p(n), x;
        for (int v = 0; v < n; ++v) p[v] = v;
        std::vector<int> r;
        expand(r, p, x);
    }

    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // Pivot on the vertex covering most of P; ties go to the smallest
        // vertex so the recursion is deterministic.
        int pivot = -1, best = -1;
        for (const auto* side : {&p, &x}) {
            for (int u : *side) {
                int cnt = 0;
                for (int v : p)
                    if (g.adjacent(u, v)) ++cnt;
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        }
        std::vector<int> candidates;
        for (int v : p)
            if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> pn, xn;
            for (int w : p)
                if (g.adjacent(v, w)) pn.push_back(w);
            for (int w : x)
                if (g.adjacent(v, w)) xn.push_back(w);
            r.push_back(v);
            expand(r, std::move(pn), std::move(xn));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
    BronKerbosch bk{g, {}};
    bk.run();
    for (auto& c : bk.out) std::sort(c.begin(), c.end());
    std::sort(bk.out.begin(), bk.out.end());
    return bk.out;
}

int clique_number(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("clique number needs n >= 1");
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return static_cast<int>(best);
}

namespace {

void extend_cliques(const Graph& g, int t, std::vector<int>& current,
                    const std::vector<int>& candidates, std::vector<Clique>& out) {
    if (current.size() >= 2) out.push_back(current);
    if (static_cast<int>(current.size()) == t) return;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        std::vector<int> next;
        for (std::size_t jdx = idx + 1; jdx < candidates.size(); ++jdx)
            if (g.adjacent(v, candidates[jdx])) next.push_back(candidates[jdx]);
        current.push_back(v);
        extend_cliques(g, t, current, next, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Clique> cliques_up_to(const Graph& g, int t) {
    if (t < 2) throw PreconditionError("cliques_up_to needs t >= 2");
    std::vector<Clique> out;
    int n = g.order();
    std::vector<int> current;
    for (int v = 0; v < n; ++v) {
        std::vector<int> candidates;
        for (int w = v + 1; w < n; ++w)
            if (g.adjacent(v, w)) candidates.push_back(w);
        current.push_back(v);
        extend_cliques(g, t, current, candidates, out);
        current.pop_back();
    }
    return out;  // the DFS above emits in lexicographic order already
}

}  // namespace specpart
