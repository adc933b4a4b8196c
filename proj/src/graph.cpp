#include "synpath/graph.hpp"

#include "json.hpp"

namespace synpath {

std::string_view family_name(Family f) { return f == Family::CompleteN ? "kn" : "knn"; }

Family parse_family(std::string_view name) {
    if (name == "kn") return Family::CompleteN;
    if (name == "knn") return Family::BipartiteNN;
    throw InvalidInput("unknown graph family '" + std::string(name) + "' (expected kn or knn)");
}

GraphSpec GraphSpec::complete(int n) {
    if (n < 1) throw InvalidInput("graph size must be positive");
    return {Family::CompleteN, n};
}

GraphSpec GraphSpec::bipartite(int n) {
    if (n < 1) throw InvalidInput("graph size must be positive");
    return {Family::BipartiteNN, n};
}

std::size_t GraphSpec::edge_count() const {
    auto m = static_cast<std::size_t>(n);
    return family == Family::CompleteN ? m * (m - 1) / 2 : m * m;
}

bool GraphSpec::is_edge(int u, int v) const {
    const int V = vertex_count();
    if (u == v || u < 1 || v < 1 || u > V || v > V) return false;
    if (family == Family::CompleteN) return true;
    return party_of(u) != party_of(v);
}

EdgeSet all_edges(const GraphSpec& spec) {
    EdgeSet out;
    const int V = spec.vertex_count();
    for (int u = 1; u <= V; ++u)
        for (int v = u + 1; v <= V; ++v)
            if (spec.is_edge(u, v)) out.insert({u, v});
    return out;
}

std::vector<std::vector<int>> laplacian(const GraphSpec& spec) {
    const int V = spec.vertex_count();
    std::vector<std::vector<int>> L(static_cast<std::size_t>(V), std::vector<int>(static_cast<std::size_t>(V), 0));
    for (int u = 1; u <= V; ++u) {
        for (int v = 1; v <= V; ++v) {
            if (spec.is_edge(u, v)) {
                L[u - 1][v - 1] = 1;
                L[u - 1][u - 1] -= 1;
            }
        }
    }
    return L;
}

std::string edge_set_json(const EdgeSet& edges) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : edges) j.push_back({e.u, e.v});
    return j.dump();
}

}  // namespace synpath
