#include "doctest.h"
#include "helpers.hpp"

#include "synpath/codes.hpp"
#include "synpath/witness.hpp"

using namespace synpath;

TEST_CASE("forest decomposition") {
    auto id = forest_decomposition(IncreasingCode::identity(5));
    CHECK(id.trees.size() == 5);
    for (const auto& t : id.trees) {
        CHECK(t.height == 0);
        CHECK(t.width() == 1);
    }
    auto f = forest_decomposition(IncreasingCode{{2, 2, 4, 4}});
    REQUIRE(f.trees.size() == 2);
    CHECK(f.trees[0].root == 2);
    CHECK(f.trees[1].root == 4);
    CHECK(f.trees[0].leaves == std::vector<int>{1});
    CHECK(f.trees[1].leaves == std::vector<int>{3});
    CHECK(f.trees[0].height == 1);
    auto c = forest_decomposition(IncreasingCode::complete(5));
    REQUIRE(c.trees.size() == 1);
    CHECK(c.trees[0].height == 1);
    CHECK(c.trees[0].width() == 4);
    CHECK(c.trees[0].leaves == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("property: deeper levels sit strictly below shallower ones") {
    for (int N = 1; N <= 7; ++N)
        for (const auto& phi : enumerate_phi_n(N))
            for (const auto& t : forest_decomposition(phi).trees)
                for (std::size_t l = 1; l < t.levels.size(); ++l) {
                    REQUIRE_FALSE(t.levels[l].empty());
                    CHECK(t.levels[l].back() < t.levels[l - 1].front());
                }
}

TEST_CASE("witness examples") {
    CHECK(witness_kn(IncreasingCode{{2, 2, 4, 4}}, 1).values == testutil::exact(GraphSpec::complete(4), {"0", "1", "3", "4"}).values);
    CHECK(witness_kn(IncreasingCode::identity(4), 1).values ==
          testutil::exact(GraphSpec::complete(4), {"0", "2", "4", "6"}).values);
    CHECK(witness_knn(BorderPairCode{{1, 2}, {1, 2}}, 1).values ==
          testutil::exact(GraphSpec::bipartite(2), {"0", "3", "0", "3"}).values);
    auto low = BorderPairCode::empty_low(3);
    CHECK(encode_knn(witness_knn(low, 1), Rational(1)) == low);
    CHECK_THROWS_AS(witness_kn(IncreasingCode{{2, 1}}, 1), InvalidInput);
    CHECK_THROWS_AS(witness_kn(IncreasingCode::identity(3), 0), InvalidInput);
}

TEST_CASE("property: exhaustive roundtrips") {
    for (const Rational& eps : {Rational(1), Rational(1, 100)}) {
        for (int N = 1; N <= 6; ++N)
            for (const auto& phi : enumerate_phi_n(N)) {
                auto x = witness_kn(phi, eps);
                CHECK(x.is_ordered());
                CHECK(encode_kn(x, eps) == phi);
            }
        for (int N = 1; N <= 4; ++N)
            for (const auto& c : enumerate_phi_nn(N)) {
                auto x = witness_knn(c, eps);
                CHECK(x.is_ordered());
                CHECK(encode_knn(x, eps) == c);
            }
    }
}

TEST_CASE("property: witnesses scale with eps") {
    const Rational c(7, 3);
    for (const auto& phi : enumerate_phi_n(5)) {
        auto a = witness_kn(phi, 1), b = witness_kn(phi, c);
        for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == c * a.values[i]);
    }
    for (const auto& code : enumerate_phi_nn(3)) {
        auto a = witness_knn(code, 1), b = witness_knn(code, c);
        for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == c * a.values[i]);
    }
}

TEST_CASE("double conversion") {
    auto x = to_double(witness(SyncCode(IncreasingCode{{2, 2, 4, 4}}), Rational(1, 2)));
    CHECK(x.values == std::vector<double>{0, 0.5, 1.5, 2});
}
