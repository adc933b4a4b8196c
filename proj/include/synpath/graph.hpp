#pragma once

#include "synpath/errors.hpp"
#include "synpath/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synpath {

enum class Family { CompleteN, BipartiteNN };

std::string_view family_name(Family f);   // "kn" / "knn"
Family parse_family(std::string_view name);

/// K_N (n vertices) or K_{N,N} (two parties of n vertices each).
/// Vertices are 1-based everywhere outside of raw value vectors.
struct GraphSpec {
    Family family = Family::CompleteN;
    int n = 1;

    static GraphSpec complete(int n);
    static GraphSpec bipartite(int n);

    int vertex_count() const { return family == Family::CompleteN ? n : 2 * n; }
    std::size_t edge_count() const;
    bool is_edge(int u, int v) const;
    // 1 or 2 for bipartite; always 1 for K_N.
    int party_of(int v) const { return family == Family::BipartiteNN && v > n ? 2 : 1; }

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted lexicographically by (u, v).
using EdgeSet = std::set<Edge>;

EdgeSet all_edges(const GraphSpec& spec);

// Dense Laplacian L with dx/dt = L x: off-diagonal 1 on edges, diagonal -degree.
std::vector<std::vector<int>> laplacian(const GraphSpec& spec);

template <class Scalar>
struct BasicConfiguration {
    GraphSpec spec;
    std::vector<Scalar> values;

    BasicConfiguration() = default;
    BasicConfiguration(GraphSpec s, std::vector<Scalar> v) : spec(s), values(std::move(v)) {
        if (static_cast<int>(values.size()) != spec.vertex_count())
            throw InvalidInput("configuration length " + std::to_string(values.size()) +
                               " does not match vertex count " + std::to_string(spec.vertex_count()));
    }

    // 1-based access
    const Scalar& operator()(int v) const { return values[static_cast<std::size_t>(v - 1)]; }

    std::span<const Scalar> party(int p) const {
        std::span<const Scalar> all(values);
        if (spec.family == Family::CompleteN) return all;
        return p == 1 ? all.first(spec.n) : all.last(spec.n);
    }

    Scalar mean() const { return average(std::span<const Scalar>(values)); }
    Scalar party_mean(int p) const { return average(party(p)); }

    bool is_ordered() const {
        if (spec.family == Family::CompleteN) return std::is_sorted(values.begin(), values.end());
        auto p1 = party(1), p2 = party(2);
        return std::is_sorted(p1.begin(), p1.end()) && std::is_sorted(p2.begin(), p2.end());
    }

    bool is_balanced() const { return spec.family == Family::BipartiteNN && party_mean(1) == party_mean(2); }

private:
    static Scalar average(std::span<const Scalar> xs) {
        Scalar sum = 0;
        for (const auto& x : xs) sum += x;
        return sum / static_cast<int>(xs.size());
    }
};

using Configuration = BasicConfiguration<double>;
using ExactConfiguration = BasicConfiguration<Rational>;

template <class Scalar>
EdgeSet sync_subnetwork(const BasicConfiguration<Scalar>& x, const Scalar& eps) {
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    EdgeSet result;
    const int V = x.spec.vertex_count();
    for (int u = 1; u <= V; ++u)
        for (int v = u + 1; v <= V; ++v)
            if (x.spec.is_edge(u, v) && magnitude(Scalar(x(u) - x(v))) <= eps) result.insert({u, v});
    return result;
}

std::string edge_set_json(const EdgeSet& edges);

}  // namespace synpath
