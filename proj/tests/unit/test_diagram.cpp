#include "doctest.h"

#include "synpath/diagram.hpp"
#include "synpath/distributions.hpp"

#include "json.hpp"

#include <set>
#include <sstream>

using namespace synpath;

TEST_CASE("K_N successors") {
    auto s = successors_kn(IncreasingCode::identity(4));
    REQUIRE(s.size() == 3);
    CHECK(s[0].code.phi == std::vector<int>{2, 2, 3, 4});
    CHECK(s[1].code.phi == std::vector<int>{1, 3, 3, 4});
    CHECK(s[2].code.phi == std::vector<int>{1, 2, 4, 4});
    CHECK(successors_kn(IncreasingCode::complete(4)).empty());
    auto t = successors_kn(IncreasingCode{{2, 2, 4, 4}});
    REQUIRE(t.size() == 1);
    CHECK(t[0].site == 2);
    CHECK(t[0].code.phi == std::vector<int>{2, 3, 4, 4});
}

TEST_CASE("property: K_N successors are exactly the one-edge supersets") {
    for (int N = 1; N <= 6; ++N) {
        auto all = enumerate_phi_n(N);
        for (const auto& phi : all) {
            auto edges = decode_kn(phi);
            std::set<IncreasingCode> want;
            for (const auto& psi : all) {
                auto e2 = decode_kn(psi);
                if (e2.size() == edges.size() + 1 && std::includes(e2.begin(), e2.end(), edges.begin(), edges.end()))
                    want.insert(psi);
            }
            std::set<IncreasingCode> got;
            for (const auto& s : successors_kn(phi)) got.insert(s.code);
            CHECK(got == want);
            int rises = 0;
            for (int n = 1; n < N; ++n) rises += phi(n) < phi(n + 1);
            CHECK(static_cast<int>(got.size()) == rises);
        }
    }
}

TEST_CASE("K_{N,N} successors") {
    auto a = successors_knn(BorderPairCode{{1}, {0}});
    REQUIRE(a.size() == 1);
    CHECK(a[0].sign == +1);
    CHECK(a[0].code == BorderPairCode{{1}, {1}});
    auto b = successors_knn(BorderPairCode{{2}, {1}});
    REQUIRE(b.size() == 1);
    CHECK(b[0].sign == -1);
    CHECK(b[0].code == BorderPairCode{{1}, {1}});
    CHECK(successors_knn(BorderPairCode::complete(3)).empty());
}

TEST_CASE("property: every K_{N,N} arrow adds one edge and one polyomino cell") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& c : enumerate_phi_nn(N)) {
            auto edges = decode_knn(c);
            long a0 = area(to_polyomino(c));
            for (const auto& s : successors_knn(c)) {
                auto e2 = decode_knn(s.code);
                CHECK(e2.size() == edges.size() + 1);
                CHECK(std::includes(e2.begin(), e2.end(), edges.begin(), edges.end()));
                CHECK(area(to_polyomino(s.code)) == a0 + 1);
                // the new edge sits at the site and on the side the sign names
                EdgeSet diff;
                std::set_difference(e2.begin(), e2.end(), edges.begin(), edges.end(), std::inserter(diff, diff.end()));
                REQUIRE(diff.size() == 1);
                CHECK(diff.begin()->u == s.site);
            }
        }
}

TEST_CASE("diagram sizes") {
    auto k4 = build_diagram(GraphSpec::complete(4));
    CHECK(k4.vertices.size() == 14);
    CHECK(k4.vertices[k4.sink] == SyncCode(IncreasingCode::complete(4)));
    CHECK(k4.starts == std::vector<int>{k4.index_of(IncreasingCode::identity(4))});
    auto k22 = build_diagram(GraphSpec::bipartite(2));
    CHECK(k22.vertices.size() == 20);
    CHECK(k22.starts.size() == 6);
    auto k2 = build_diagram(GraphSpec::complete(2));
    CHECK(k2.vertices.size() == 2);
    CHECK(k2.arrows.size() == 1);
    CHECK(k4.index_of(BorderPairCode::complete(2)) == -1);
}

TEST_CASE("admissible path counts") {
    auto k4 = build_diagram(GraphSpec::complete(4));
    CHECK(count_admissible_paths(k4, IncreasingCode::identity(4)) == 16);
    CHECK(count_admissible_paths(k4, IncreasingCode::complete(4)) == 1);
    CHECK(count_admissible_paths(build_diagram(GraphSpec::complete(3)), IncreasingCode::identity(3)) == 2);
    auto k22 = build_diagram(GraphSpec::bipartite(2));
    CHECK(count_admissible_paths(k22, BorderPairCode::complete(2)) == 1);
}

TEST_CASE("property: arrows go one level down, every maximal path has full length") {
    for (int N = 1; N <= 6; ++N) {
        auto d = build_diagram(GraphSpec::complete(N));
        std::vector<int> out(d.vertices.size(), 0), in(d.vertices.size(), 0);
        for (const auto& a : d.arrows) {
            CHECK(d.level[a.to] == d.level[a.from] + 1);
            ++out[a.from];
            ++in[a.to];
        }
        // a vertex without successors is the sink, so maximal paths end at level L
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            if (out[v] == 0) CHECK(static_cast<int>(v) == d.sink);
            if (in[v] == 0) CHECK(d.vertices[v] == SyncCode(IncreasingCode::identity(N)));
        }
        CHECK(d.level[d.sink] == N * (N - 1) / 2);
    }
}

TEST_CASE("level sizes equal the length distribution") {
    for (int N = 1; N <= 8; ++N) {
        auto sizes = build_diagram(GraphSpec::complete(N)).level_sizes();
        auto f = f_kn(N);
        const int L = f.max_length();
        REQUIRE(static_cast<int>(sizes.size()) == L + 1);
        for (int l = 0; l <= L; ++l) CHECK(BigInt(static_cast<unsigned long>(sizes[L - l])) == f.counts[l]);
    }
    for (int N = 1; N <= 5; ++N) {
        auto sizes = build_diagram(GraphSpec::bipartite(N)).level_sizes();
        auto f = f_knn(N);
        const int L = f.max_length();
        REQUIRE(static_cast<int>(sizes.size()) == L + 1);
        for (int l = 0; l <= L; ++l) CHECK(BigInt(static_cast<unsigned long>(sizes[L - l])) == f.counts[l]);
    }
}

TEST_CASE("start codes") {
    auto two = start_codes_knn(2);
    CHECK(two.size() == 6);
    std::set<BorderPairCode> flagged;
    for (const auto& s : two)
        if (!s.balanced_compatible) flagged.insert(s.code);
    CHECK(flagged == std::set<BorderPairCode>{{{1, 1}, {0, 0}}, {{3, 3}, {2, 2}}});
    auto one = start_codes_knn(1);
    CHECK(one.size() == 2);
    for (const auto& s : one) CHECK_FALSE(s.balanced_compatible);
}

TEST_CASE("exports") {
    auto k2 = build_diagram(GraphSpec::complete(2));
    CHECK(export_dot(k2) == "digraph sync_diagram {\n  \"1,2\";\n  \"2,2\";\n  \"1,2\" -> \"2,2\" [label=\"n=1\"];\n}\n");
    auto k4 = build_diagram(GraphSpec::complete(4));
    std::istringstream dot(export_dot(k4));
    int nodes = 0, edges = 0;
    for (std::string line; std::getline(dot, line);) {
        if (line.find("->") != std::string::npos) ++edges;
        else if (line.find('"') != std::string::npos) ++nodes;
    }
    CHECK(nodes == 14);
    CHECK(edges == static_cast<int>(k4.arrows.size()));
    auto j = nlohmann::json::parse(export_json(build_diagram(GraphSpec::bipartite(2))));
    CHECK(j["vertices"].size() == 20);
    CHECK(j["spec"]["family"] == "knn");
    CHECK(export_dot(build_diagram(GraphSpec::bipartite(3))) == export_dot(build_diagram(GraphSpec::bipartite(3))));
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(build_diagram(GraphSpec::complete(12), 1000), ResourceLimit);
    CHECK_THROWS_AS(build_diagram(GraphSpec::bipartite(9)), ResourceLimit);
}
