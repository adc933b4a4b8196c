#include "doctest.h"
#include "helpers.hpp"

#include "synpath/codes.hpp"

#include <set>

using namespace synpath;
using testutil::real;

namespace {

// Catalan numbers by the convolution recurrence, independent of binomials.
std::vector<BigInt> catalan_table(int n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c;
}

// Brute force over all vectors in [1,N]^N.
int count_increasing(int N) {
    std::vector<int> v(N, 1);
    int count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) ok = v[i] >= i + 1 && (i == 0 || v[i] >= v[i - 1]);
        count += ok;
        int k = 0;
        while (k < N && ++v[k] > N) v[k++] = 1;
        if (k == N) break;
    }
    return count;
}

}  // namespace

TEST_CASE("encode_kn examples") {
    CHECK(encode_kn(real(GraphSpec::complete(4), {0, 1, 3, 4}), 1.0).phi == std::vector<int>{2, 2, 4, 4});
    CHECK(encode_kn(real(GraphSpec::complete(4), {0, 10, 20, 30}), 1.0) == IncreasingCode::identity(4));
    CHECK(encode_kn(real(GraphSpec::complete(3), {5, 5, 5}), 1.0) == IncreasingCode::complete(3));
    CHECK_THROWS_AS(encode_kn(real(GraphSpec::complete(3), {0, 2, 1}), 1.0), InvalidInput);
}

TEST_CASE("decode_kn examples") {
    CHECK(decode_kn(IncreasingCode{{2, 2, 4, 4}}) == EdgeSet{{1, 2}, {3, 4}});
    CHECK(decode_kn(IncreasingCode::identity(5)).empty());
    CHECK(decode_kn(IncreasingCode::complete(5)).size() == 10);
    CHECK_THROWS_AS(decode_kn(IncreasingCode{{2, 1}}), InvalidInput);
}

TEST_CASE("encode_knn examples") {
    auto c = encode_knn(real(GraphSpec::bipartite(2), {0, 3, 0.5, 3.5}), 1.0);
    CHECK(c.alpha == std::vector<int>{1, 2});
    CHECK(c.omega == std::vector<int>{1, 2});
    CHECK(encode_knn(real(GraphSpec::bipartite(3), {0, 0.1, 0.2, 5, 6, 7}), 1.0) == BorderPairCode::empty_low(3));
    CHECK(encode_knn(real(GraphSpec::bipartite(3), {5, 6, 7, 0, 0.1, 0.2}), 1.0) == BorderPairCode::empty_high(3));
    CHECK(encode_knn(real(GraphSpec::bipartite(2), {1, 1, 1, 1}), 1.0) == BorderPairCode::complete(2));
    CHECK_THROWS_AS(encode_knn(real(GraphSpec::bipartite(2), {0, 1, 3, 2}), 1.0), InvalidInput);
}

TEST_CASE("decode_knn examples") {
    CHECK(decode_knn(BorderPairCode{{1, 2}, {1, 2}}) == EdgeSet{{1, 3}, {2, 4}});
    CHECK(decode_knn(BorderPairCode::empty_low(3)).empty());
    CHECK(decode_knn(BorderPairCode::complete(3)).size() == 9);
}

TEST_CASE("enumeration sizes") {
    auto cat = catalan_table(12);
    for (int N = 1; N <= 12; ++N) {
        CHECK(BigInt(enumerate_phi_n(N).size()) == cat[N]);
        CHECK(catalan(N) == cat[N]);
    }
    for (int N = 1; N <= 6; ++N) CHECK(static_cast<int>(enumerate_phi_n(N).size()) == count_increasing(N));
    CHECK(enumerate_phi_nn(1).size() == 3);
    CHECK(enumerate_phi_nn(2).size() == 20);
    CHECK(enumerate_phi_nn(3).size() == 175);
    for (int N = 1; N <= 7; ++N) {
        // T(2N+1, N+1) directly from binomials.
        BigInt t = binomial(2 * N + 1, N + 1) * binomial(2 * N + 1, N) / (2 * N + 1);
        CHECK(BigInt(enumerate_phi_nn(N).size()) == t);
        CHECK(narayana_count(N) == t);
    }
}

TEST_CASE("enumerations are sorted and unique") {
    for (int N = 1; N <= 7; ++N) {
        auto v = enumerate_phi_n(N);
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        for (const auto& c : v) CHECK(is_valid(c));
    }
    for (int N = 1; N <= 4; ++N) {
        auto v = enumerate_phi_nn(N);
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        for (const auto& c : v) CHECK(is_valid(c));
    }
    auto one = enumerate_phi_nn(1);
    std::set<BorderPairCode> s(one.begin(), one.end());
    CHECK(s == std::set<BorderPairCode>{{{1}, {0}}, {{2}, {1}}, {{1}, {1}}});
}

TEST_CASE("dyck area") {
    CHECK(dyck_area(IncreasingCode::identity(6)) == 0);
    CHECK(dyck_area(IncreasingCode::complete(6)) == 15);
    CHECK(dyck_area(IncreasingCode{{2, 2, 4, 4}}) == 2);
    for (const auto& c : enumerate_phi_n(6)) CHECK(dyck_area(c) == edge_count(c));
}

TEST_CASE("polyomino borders") {
    auto full = to_polyomino(BorderPairCode::complete(2));
    CHECK(full.lower == std::vector<int>{0, 0, 0});
    CHECK(full.upper == std::vector<int>{3, 3, 3});
    CHECK(area(full) == 9);
    auto p = to_polyomino(BorderPairCode{{1, 2}, {1, 2}});
    CHECK(p.lower == std::vector<int>{0, 0, 1});
    CHECK(p.upper == std::vector<int>{2, 3, 3});
    CHECK(area(p) == 7);
    PolyominoBorders fig{{0, 0, 0, 0, 0, 2, 2, 2, 2, 5, 5, 5, 5, 5}, {1, 1, 1, 3, 3, 3, 5, 5, 6, 6, 6, 6, 7, 7}};
    CHECK(is_parallelogram_polyomino(fig, 7));
}

TEST_CASE("property: to_polyomino is injective and lands on valid borders") {
    for (int N = 1; N <= 5; ++N) {
        std::set<PolyominoBorders> seen;
        for (const auto& c : enumerate_phi_nn(N)) {
            auto b = to_polyomino(c);
            CHECK(is_parallelogram_polyomino(b, N + 1));
            CHECK(area(b) >= N + 1);
            CHECK(area(b) <= (N + 1) * (N + 1));
            CHECK(area(b) == 2 * N + 1 + edge_count(SyncCode(c)));  // one cell per edge above the minimal staircase
            seen.insert(b);
        }
        CHECK(seen.size() == enumerate_phi_nn(N).size());
    }
}

TEST_CASE("property: decode(encode(x)) is the synchronized subnetwork") {
    SplitMix64 rng(2024);
    for (int N = 1; N <= 8; ++N)
        for (int s = 0; s < 1000; ++s) {
            for (auto spec : {GraphSpec::complete(N), GraphSpec::bipartite(N)}) {
                auto x = sample_configuration(spec, rng);
                double eps = 0.02 + 0.3 * rng.uniform();
                EdgeSet got = spec.family == Family::CompleteN ? decode_kn(encode_kn(x, eps)) : decode_knn(encode_knn(x, eps));
                REQUIRE(got == testutil::brute_sync(x, eps));
            }
        }
}

TEST_CASE("text forms roundtrip") {
    for (const auto& c : enumerate_phi_n(5)) CHECK(parse_code(Family::CompleteN, to_text(c)) == SyncCode(c));
    for (const auto& c : enumerate_phi_nn(3)) CHECK(parse_code(Family::BipartiteNN, to_text(c)) == SyncCode(c));
    CHECK(to_text(IncreasingCode{{2, 2, 4, 4}}) == "2,2,4,4");
    CHECK(to_text(BorderPairCode{{1, 2}, {1, 2}}) == "1,2|1,2");
    CHECK_THROWS_AS(parse_code(Family::CompleteN, "1,3,2"), InvalidInput);
    CHECK_THROWS_AS(parse_code(Family::BipartiteNN, "1,2"), InvalidInput);
    CHECK_THROWS_AS(parse_code(Family::CompleteN, "x"), InvalidInput);
}
