#include "doctest.h"
#include "helpers.hpp"

#include "synpath/serialize.hpp"
#include "synpath/verify.hpp"

#include <cmath>

using namespace synpath;

TEST_CASE("rationals") {
    CHECK(parse_rational("0.35") == Rational(7, 20));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("2") == 2);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK(binomial(10, 5) == 252);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("sampler is reproducible and honours its options") {
    SplitMix64 a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SplitMix64 c(7);
    CHECK(c.fork(1).next() != c.fork(2).next());
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto x = sample_configuration(GraphSpec::bipartite(3), rng, {true, 0.3});
        CHECK(x.is_ordered());
        CHECK(std::abs(x.party_mean(1) - x.party_mean(2)) < 1e-12);
        double m = x.mean();
        for (double v : x.values) CHECK(std::abs(v - m) < 0.3);
        double u = rng.uniform();
        CHECK(u >= 0);
        CHECK(u < 1);
    }
}

TEST_CASE("json forms") {
    SyncSequence seq;
    seq.spec = GraphSpec::complete(2);
    seq.codes = {IncreasingCode::identity(2), IncreasingCode::complete(2)};
    seq.events = {SyncEvent{0.123456789012345, 1, 0, {1, 2}, true}};
    auto j = to_json(seq);
    CHECK(j.dump() == R"({"initial_code":"1,2","events":[{"t":0.123456789012,"site":1,"sign":0,"edge":[1,2]}],"final_code":"2,2"})");
    auto x = testutil::exact(GraphSpec::complete(3), {"0", "1/3", "2"});
    CHECK(to_json(x).dump() == R"({"family":"kn","n":3,"values":["0","1/3","2"]})");
    IncrementOrder o{GraphSpec::bipartite(1), {{1, 1, -1}}};
    CHECK(to_json(o).dump() == "[[1,1,-1]]");
    auto parsed = parse_configuration(GraphSpec::complete(3), "0,1/3,2");
    CHECK(parsed.values == x.values);
    CHECK_THROWS_AS(parse_configuration(GraphSpec::complete(3), "0,1"), InvalidInput);
}

TEST_CASE("verify report shape") {
    std::vector<CheckResult> r{{1, "a", CheckStatus::Pass, ""}, {2, "b", CheckStatus::Skip, "x"}};
    auto j = report_json(r, true);
    CHECK(j["passed"] == 1);
    CHECK(j["skipped"] == 1);
    CHECK(all_passed(r));
    r.push_back({3, "c", CheckStatus::Fail, ""});
    CHECK_FALSE(all_passed(r));
    CHECK(criterion_name(14) == "determinism");
    CHECK_THROWS_AS(criterion_name(15), InvalidInput);
}

TEST_CASE("verify names the tampered table") {
    VerifyOptions opts;
    opts.golden_dir = "/nonexistent";
    auto r = run_check(1, opts);
    CHECK(r.status == CheckStatus::Fail);
    CHECK(r.detail.find("golomb.txt") != std::string::npos);
}
