#include "specpart/json_io.hpp"

#include <algorithm>

namespace specpart {

using nlohmann::json;

nlohmann::json partition_to_json(const CliquePartition& p) {
    json j;
    j["n"] = p.host.order();
    j["cliques"] = p.cliques;
    return j;
}

CliquePartition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cliques"))
        throw ParseError("partition JSON needs fields 'n' and 'cliques'");
    int n;
    std::vector<Clique> cliques;
    try {
        n = j.at("n").get<int>();
        cliques = j.at("cliques").get<std::vector<Clique>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("partition JSON: ") + e.what());
    }
    if (n < 0) throw ParseError("partition JSON: negative vertex count");
    Graph host(n);
    for (const auto& c : cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = i + 1; k < c.size(); ++k) {
                try {
                    host.add_edge(c[i], c[k]);
                } catch (const PreconditionError& e) {
                    throw ParseError(std::string("partition JSON: ") + e.what());
                }
            }
    return make_clique_partition(std::move(host), std::move(cliques));
}

nlohmann::json design_to_json(const Design& d) {
    json j;
    j["v"] = d.num_points;
    j["blocks"] = d.blocks;
    return j;
}

Design design_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
        throw ParseError("design JSON needs fields 'v' and 'blocks'");
    Design d;
    try {
        d.num_points = j.at("v").get<int>();
        d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("design JSON: ") + e.what());
    }
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

nlohmann::json report_to_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    j["quantity"] = r.quantity;
    json params = json::object();
    if (r.t) params["t"] = *r.t;
    if (r.omega) params["omega"] = *r.omega;
    j["params"] = params;
    j["raw"] = r.raw;
    j["strengthened"] = r.strengthened;
    j["direction"] = r.lower ? "lower" : "upper";
    j["equality_diagnosis"] = to_string(r.diagnosis);
    if (r.certificate_design) j["certificate_design"] = design_to_json(*r.certificate_design);
    if (r.certificate_partition)
        j["certificate_partition"] = partition_to_json(*r.certificate_partition);
    if (r.certificate_packing) j["certificate_packing"] = *r.certificate_packing;
    return j;
}

nlohmann::json dashboard_to_json(const Dashboard& d) {
    json graph;
    graph["n"] = d.graph.n;
    graph["m"] = d.graph.m;
    graph["min_degree"] = d.graph.min_degree;
    graph["max_degree"] = d.graph.max_degree;
    graph["regular"] = d.graph.regular;
    graph["connected"] = d.graph.connected;
    if (d.graph.omega) graph["omega"] = *d.graph.omega;

    json reports = json::array();
    for (const auto& entry : d.entries) {
        if (entry.report) {
            reports.push_back(report_to_json(*entry.report));
        } else {
            json err;
            err["name"] = entry.name;
            err["error"] = entry.error;
            reports.push_back(err);
        }
    }
    json exact = json::object();
    for (const auto& [quantity, value] : d.exact) exact[quantity] = value;

    json j;
    j["graph"] = graph;
    j["reports"] = reports;
    j["exact"] = exact;
    return j;
}

}  // namespace specpart
