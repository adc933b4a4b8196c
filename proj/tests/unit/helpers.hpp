#pragma once

#include "synpath/graph.hpp"
#include "synpath/sampling.hpp"

#include <string>
#include <vector>

namespace testutil {

inline synpath::ExactConfiguration exact(synpath::GraphSpec spec, std::vector<std::string> vals) {
    std::vector<synpath::Rational> q;
    for (const auto& v : vals) q.push_back(synpath::parse_rational(v));
    return {spec, q};
}

inline synpath::Configuration real(synpath::GraphSpec spec, std::vector<double> vals) { return {spec, vals}; }

// Brute-force oracle for the eps-synchronized edge set.
template <class Scalar>
synpath::EdgeSet brute_sync(const synpath::BasicConfiguration<Scalar>& x, const Scalar& eps) {
    synpath::EdgeSet out;
    const int V = x.spec.vertex_count();
    for (int u = 1; u <= V; ++u)
        for (int v = u + 1; v <= V; ++v) {
            bool edge = x.spec.family == synpath::Family::CompleteN || (u <= x.spec.n) != (v <= x.spec.n);
            Scalar d = x(u) - x(v);
            if (d < 0) d = -d;
            if (edge && d <= eps) out.insert({u, v});
        }
    return out;
}

}  // namespace testutil
