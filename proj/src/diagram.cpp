#include "synpath/diagram.hpp"

#include "synpath/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace synpath {

std::vector<KnSuccessor> successors_kn(const IncreasingCode& phi) {
    validate(phi);
    std::vector<KnSuccessor> out;
    for (int n = 1; n < phi.size(); ++n) {
        if (phi(n) >= phi(n + 1)) continue;
        IncreasingCode next = phi;
        next.phi[n - 1] += 1;
        out.push_back({n, std::move(next)});
    }
    return out;
}

std::vector<KnnSuccessor> successors_knn(const BorderPairCode& code) {
    validate(code);
    std::vector<KnnSuccessor> out;
    for (int n = 1; n <= code.size(); ++n) {
        BorderPairCode lower = code;
        lower.alpha[n - 1] -= 1;
        if (is_valid(lower)) out.push_back({n, -1, std::move(lower)});
        BorderPairCode upper = code;
        upper.omega[n - 1] += 1;
        if (is_valid(upper)) out.push_back({n, +1, std::move(upper)});
    }
    return out;
}

int TransitionDiagram::index_of(const SyncCode& code) const {
    if (!(spec_of(code) == spec)) return -1;
    auto it = index_.find(to_text(code));
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> TransitionDiagram::level_sizes() const {
    std::vector<std::size_t> sizes(spec.edge_count() + 1, 0);
    for (int l : level) sizes[l] += 1;
    return sizes;
}

TransitionDiagram build_diagram(const GraphSpec& spec, std::size_t max_codes) {
    const BigInt count = spec.family == Family::CompleteN ? catalan(spec.n) : narayana_count(spec.n);
    if (count > BigInt(std::to_string(max_codes)))
        throw ResourceLimit("diagram would have " + count.get_str() + " vertices (limit " + std::to_string(max_codes) + ")");

    std::vector<SyncCode> codes;
    if (spec.family == Family::CompleteN)
        for (auto& c : enumerate_phi_n(spec.n)) codes.emplace_back(std::move(c));
    else
        for (auto& c : enumerate_phi_nn(spec.n)) codes.emplace_back(std::move(c));

    struct Keyed {
        int level;
        std::string text;
        SyncCode code;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(codes.size());
    for (auto& c : codes) keyed.push_back({edge_count(c), to_text(c), std::move(c)});
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::tie(a.level, a.text) < std::tie(b.level, b.text); });

    TransitionDiagram d;
    d.spec = spec;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        d.index_[keyed[i].text] = static_cast<int>(i);
        d.level.push_back(keyed[i].level);
        d.vertices.push_back(std::move(keyed[i].code));
    }
    std::vector<int> indegree(d.vertices.size(), 0);
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        const int from = static_cast<int>(i);
        if (auto p = std::get_if<IncreasingCode>(&d.vertices[i])) {
            for (auto& s : successors_kn(*p)) d.arrows.push_back({from, d.index_.at(to_text(s.code)), s.site, 0});
        } else {
            for (auto& s : successors_knn(std::get<BorderPairCode>(d.vertices[i])))
                d.arrows.push_back({from, d.index_.at(to_text(s.code)), s.site, s.sign});
        }
    }
    std::sort(d.arrows.begin(), d.arrows.end(), [](const Arrow& a, const Arrow& b) {
        return std::tie(a.from, a.to, a.site, a.sign) < std::tie(b.from, b.to, b.site, b.sign);
    });
    for (const auto& a : d.arrows) {
        if (d.level[a.to] != d.level[a.from] + 1) throw Error("arrow does not add exactly one edge");
        indegree[a.to] += 1;
    }
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        if (indegree[i] == 0) d.starts.push_back(static_cast<int>(i));
        if (is_complete(d.vertices[i])) d.sink = static_cast<int>(i);
    }
    return d;
}

BigInt count_admissible_paths(const TransitionDiagram& d, const SyncCode& from) {
    const int start = d.index_of(from);
    if (start < 0) throw InvalidInput("code " + to_text(from) + " is not a vertex of the diagram");
    // vertices are sorted by level and arrows climb one level, so a reverse
    // sweep over indices is a reverse topological order
    std::vector<std::vector<int>> out(d.vertices.size());
    for (const auto& a : d.arrows) out[a.from].push_back(a.to);
    std::vector<BigInt> paths(d.vertices.size(), 0);
    for (int v = static_cast<int>(d.vertices.size()) - 1; v >= start; --v) {
        if (v == d.sink) {
            paths[v] = 1;
            continue;
        }
        for (int w : out[v]) paths[v] += paths[w];
    }
    return paths[start];
}

std::vector<StartCode> start_codes_knn(int N) {
    std::vector<StartCode> out;
    const auto low = BorderPairCode::empty_low(N), high = BorderPairCode::empty_high(N);
    for (auto& c : enumerate_phi_nn(N)) {
        bool empty = true;
        for (int n = 0; n < N; ++n) empty = empty && c.omega[n] == c.alpha[n] - 1;
        if (!empty) continue;
        const bool flagged = c == low || c == high;
        out.push_back({std::move(c), !flagged});
    }
    return out;
}

namespace {

std::string arrow_label(const Arrow& a) {
    std::string s = "n=" + std::to_string(a.site);
    if (a.sign) s += a.sign > 0 ? ",q=+1" : ",q=-1";
    return s;
}

}  // namespace

std::string export_dot(const TransitionDiagram& d) {
    std::ostringstream out;
    out << "digraph sync_diagram {\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        out << "  \"" << to_text(d.vertices[i]) << "\";\n";
    for (const auto& a : d.arrows)
        out << "  \"" << to_text(d.vertices[a.from]) << "\" -> \"" << to_text(d.vertices[a.to]) << "\" [label=\""
            << arrow_label(a) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const TransitionDiagram& d) {
    nlohmann::ordered_json j;
    j["spec"] = {{"family", std::string(family_name(d.spec.family))}, {"n", d.spec.n}};
    auto vs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        vs.push_back(nlohmann::ordered_json{{"code", to_text(d.vertices[i])}, {"level", d.level[i]}});
    j["vertices"] = vs;
    auto as = nlohmann::ordered_json::array();
    for (const auto& a : d.arrows)
        as.push_back(nlohmann::ordered_json{{"from", to_text(d.vertices[a.from])},
                                            {"to", to_text(d.vertices[a.to])},
                                            {"site", a.site},
                                            {"sign", a.sign}});
    j["arrows"] = as;
    return j.dump(2) + "\n";
}

}  // namespace synpath
