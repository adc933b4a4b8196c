#include "doctest.h"
#include "helpers.hpp"

#include "synpath/diagram.hpp"
#include "synpath/flow.hpp"
#include "synpath/realizability.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace synpath;
using testutil::exact;

namespace {

IncrementOrder order_of(int N, std::vector<std::pair<int, int>> labels) {
    IncrementOrder o{GraphSpec::complete(N), {}};
    for (auto [n, k] : labels) o.labels.push_back({n, k, 0});
    return o;
}

ExactConfiguration to_exact(const Configuration& x) {
    std::vector<Rational> q;
    for (double v : x.values) q.emplace_back(v);  // doubles are exact rationals
    return {x.spec, q};
}

// Increment order of a double configuration, sorted by value.
std::vector<IncrementLabel> sampled_kn_order(const Configuration& x) {
    std::vector<std::pair<double, IncrementLabel>> v;
    const int N = x.spec.n;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; n + k <= N; ++k) v.push_back({x(n + k) - x(n), {n, k, 0}});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IncrementLabel> out;
    for (auto& p : v) out.push_back(p.second);
    return out;
}

// (arrangement, ordering of |x_{N+m} - x_n| with signs) of a sampled K_{N,N} point.
std::pair<Arrangement, std::vector<IncrementLabel>> sampled_knn_order(const Configuration& x) {
    const int N = x.spec.n;
    Arrangement arr(2 * N);
    std::iota(arr.begin(), arr.end(), 1);
    std::sort(arr.begin(), arr.end(), [&](int a, int b) { return x(a) < x(b); });
    std::vector<std::pair<double, IncrementLabel>> v;
    for (int n = 1; n <= N; ++n)
        for (int m = 1; m <= N; ++m) {
            double d = x(N + m) - x(n);
            v.push_back({std::abs(d), {n, m, d > 0 ? 1 : -1}});
        }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IncrementLabel> out;
    for (auto& p : v) out.push_back(p.second);
    return {arr, out};
}

}  // namespace

TEST_CASE("realizable path counts") {
    const int want[] = {1, 1, 2, 10, 114};
    for (int N = 1; N <= 5; ++N) CHECK(count_realizable_paths_kn(N) == want[N - 1]);
    CHECK_THROWS_AS(count_realizable_paths_kn(10), ResourceLimit);
}

TEST_CASE("Monte Carlo: sampled K_4 orders are exactly the enumerated ones") {
    std::set<std::vector<IncrementLabel>> enumerated, sampled;
    for (const auto& o : enumerate_realizable_orders_kn(4)) enumerated.insert(o.labels);
    CHECK(enumerated.size() == 10);
    SplitMix64 rng(404);
    for (int s = 0; s < 200000; ++s) sampled.insert(sampled_kn_order(sample_configuration(GraphSpec::complete(4), rng)));
    CHECK(sampled == enumerated);
}

TEST_CASE("Monte Carlo: sampled K_5 orders are realizable") {
    std::set<std::vector<IncrementLabel>> enumerated, sampled;
    for (const auto& o : enumerate_realizable_orders_kn(5)) enumerated.insert(o.labels);
    CHECK(enumerated.size() == 114);
    SplitMix64 rng(505);
    for (int s = 0; s < 100000; ++s) sampled.insert(sampled_kn_order(sample_configuration(GraphSpec::complete(5), rng)));
    for (const auto& o : sampled) CHECK(enumerated.count(o));
    CHECK(sampled.size() > 100);
}

TEST_CASE("Monte Carlo: K_{2,2} orderings") {
    std::set<std::pair<Arrangement, std::vector<IncrementLabel>>> enumerated, sampled;
    for (const auto& o : enumerate_realizable_orderings_knn(2, false)) enumerated.insert({o.arrangement, o.order.labels});
    SplitMix64 rng(2222);
    for (int s = 0; s < 300000; ++s) sampled.insert(sampled_knn_order(sample_configuration(GraphSpec::bipartite(2), rng)));
    CHECK(sampled == enumerated);
    CHECK(enumerated.size() == 24);  // the published table lists 20
    CHECK(enumerate_realizable_orderings_knn(1, false).size() == 2);
}

TEST_CASE("balanced K_{2,2} configurations always tie two increments") {
    // balance gives D(1,1) + D(2,2) = 0 = D(1,2) + D(2,1), so no strict order exists
    CHECK(enumerate_realizable_orderings_knn(2, true).empty());
    IncrementOrder o{GraphSpec::bipartite(2), {{2, 1, 1}, {2, 2, 1}, {1, 1, 1}, {1, 2, 1}}};
    CHECK_FALSE(feasible(o, true).feasible);
    CHECK(feasible(o, false).feasible);
}

TEST_CASE("feasibility examples") {
    auto row1 = order_of(4, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}});
    auto f = feasible(row1);
    REQUIRE(f.feasible);
    REQUIRE(f.witness);
    CHECK(certifies(row1, *f.witness));
    CHECK(certifies(row1, exact(GraphSpec::complete(4), {"0", "2", "5", "9"})));
    // D(1,1) + D(2,2) = D(3,1) + D(1,2) = x_4 - x_1
    auto bad = order_of(4, {{1, 1}, {3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}});
    CHECK_FALSE(feasible(bad).feasible);
    CHECK_THROWS_AS(validate(order_of(4, {{1, 1}, {1, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}})), InvalidInput);
    CHECK_THROWS_AS(validate(order_of(4, {{1, 1}, {3, 2}})), InvalidInput);
}

TEST_CASE("path_to_ordering") {
    std::vector<JumpEvent> jumps;
    for (int s : {1, 3, 2, 2, 1, 1}) jumps.push_back({s, 0});
    auto o = path_to_ordering(IncreasingCode::identity(4), jumps);
    std::vector<IncrementLabel> want{{1, 1, 0}, {3, 1, 0}, {2, 1, 0}, {2, 2, 0}, {1, 2, 0}, {1, 3, 0}};
    CHECK(o.labels == want);
    CHECK(path_to_ordering(IncreasingCode::identity(4), {}).labels.empty());
    CHECK(ordering_to_path(o) == jumps);
}

TEST_CASE("property: every realizable order is a certified diagram path") {
    for (int N = 2; N <= 5; ++N) {
        auto d = build_diagram(GraphSpec::complete(N));
        for (const auto& o : enumerate_realizable_orders_kn(N)) {
            auto f = feasible(o);
            REQUIRE(f.feasible);
            CHECK(certifies(o, *f.witness));
            SyncCode cur = IncreasingCode::identity(N);
            for (const auto& e : ordering_to_path(o)) {
                SyncCode next = apply_event(cur, e);
                bool arrow = false;
                for (const auto& a : d.arrows) arrow |= a.from == d.index_of(cur) && a.to == d.index_of(next);
                CHECK(arrow);
                cur = next;
            }
            CHECK(cur == SyncCode(IncreasingCode::complete(N)));
        }
    }
    for (const auto& o : enumerate_realizable_orderings_knn(2, false)) CHECK(certifies(o.order, o.witness));
}

TEST_CASE("property: simulated edge orders are feasible and survive the ruler") {
    SplitMix64 rng(606);
    for (int N = 2; N <= 6; ++N) {
        int done = 0;
        while (done < 500) {
            auto x = sample_configuration(GraphSpec::complete(N), rng);
            SyncSequence seq;
            try {
                seq = switching_times_kn(x, 1e-9);
            } catch (const NotTypical&) {
                continue;
            }
            ++done;
            IncrementOrder o{x.spec, {}};
            for (const auto& e : seq.edge_order()) o.labels.push_back({e.u, e.v - e.u, 0});
            CHECK(feasible(o).feasible);
            auto ex = to_exact(x);
            CHECK(increment_order_kn(ex) == o);
            auto ruler = ruler_from_configuration(ex);
            std::vector<Rational> rq(ruler.begin(), ruler.end());
            ExactConfiguration rx{x.spec, rq};
            CHECK(increment_order_kn(rx) == o);
            if (done % 50 == 0) {
                std::set<BigInt> diffs;
                for (int a = 0; a < N; ++a)
                    for (int b = a + 1; b < N; ++b) diffs.insert(ruler[b] - ruler[a]);
                CHECK(static_cast<int>(diffs.size()) == N * (N - 1) / 2);
            }
        }
    }
}

TEST_CASE("ruler example and ties") {
    auto q = ruler_from_configuration(exact(GraphSpec::complete(4), {"0", "1/10", "35/100", "75/100"}));
    CHECK(q == std::vector<BigInt>{0, 8, 28, 60});
    CHECK_THROWS_AS(ruler_from_configuration(exact(GraphSpec::complete(4), {"0", "1", "5", "6"})), NotTypical);
}

TEST_CASE("Golomb bounds") {
    auto b3 = golomb_bounds(3);
    CHECK(b3.thrall == 2);
    CHECK(b3.lower == 2);
    CHECK(b3.factorial == 6);
    CHECK(golomb_bounds(4).thrall == 12);
    auto b5 = golomb_bounds(5);
    CHECK(b5.lower == 24);
    CHECK(b5.factorial == factorial(10));
    for (int N = 4; N <= 5; ++N) {
        auto b = golomb_bounds(N);
        BigInt g = count_realizable_paths_kn(N);
        CHECK(b.lower < g);
        CHECK(g <= b.thrall);
        CHECK(b.thrall <= b.factorial);
    }
    CHECK(knn_path_upper_bound(2).value == 40);
    CHECK(knn_path_upper_bound(3).value == 46944);
    CHECK(knn_path_upper_bound(1).degenerate);
    CHECK(knn_path_upper_bound(1).value == 0);
    CHECK_THROWS_AS(knn_path_upper_bound(5), ResourceLimit);
}
