#include "doctest.h"

#include "synpath/exact_lp.hpp"
#include "synpath/sampling.hpp"

using namespace synpath;
using Rel = LinearSystem::Relation;

namespace {

// Fourier-Motzkin oracle: rows a.x >= b, variables free.
bool fm_feasible(std::vector<std::pair<std::vector<Rational>, Rational>> rows, int vars) {
    for (int v = vars - 1; v >= 0; --v) {
        std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, next;
        for (auto& r : rows) {
            if (r.first[v] > 0) pos.push_back(r);
            else if (r.first[v] < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rational cp = -n.first[v], cn = p.first[v];
                std::vector<Rational> a(vars);
                for (int i = 0; i < vars; ++i) a[i] = cp * p.first[i] + cn * n.first[i];
                next.push_back({a, cp * p.second + cn * n.second});
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.second > 0) return false;  // 0 >= b
    return true;
}

}  // namespace

TEST_CASE("simple feasible and infeasible systems") {
    LinearSystem a(2);
    a.add({1, 1}, Rel::LessEqual, 1);
    a.add({1, 0}, Rel::GreaterEqual, Rational(1, 2));
    a.add({0, 1}, Rel::GreaterEqual, Rational(1, 2));
    auto sol = a.solve();
    REQUIRE(sol);
    CHECK((*sol)[0] == Rational(1, 2));
    CHECK((*sol)[1] == Rational(1, 2));

    LinearSystem b(2);
    b.add({1, 1}, Rel::LessEqual, 1);
    b.add({1, 0}, Rel::GreaterEqual, 1);
    b.add({0, 1}, Rel::GreaterEqual, Rational(1, 1000));
    CHECK_FALSE(b.solve());

    LinearSystem c(3, true);
    c.add({1, -1, 0}, Rel::Equal, -5);
    c.add({0, 1, 1}, Rel::LessEqual, 4);
    CHECK_FALSE(c.solve());  // y = x + 5 >= 5 > 4
}

TEST_CASE("free variables may go negative") {
    LinearSystem s(1);
    s.add({1}, Rel::LessEqual, -3);
    auto sol = s.solve();
    REQUIRE(sol);
    CHECK((*sol)[0] <= -3);
    LinearSystem t(1, true);
    t.add({1}, Rel::LessEqual, -3);
    CHECK_FALSE(t.solve());
}

TEST_CASE("property: agrees with Fourier-Motzkin on random small systems") {
    SplitMix64 rng(99);
    auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng.uniform() * (hi - lo + 1)); };
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int vars = small(1, 3), cons = small(1, 6);
        LinearSystem sys(vars);
        std::vector<std::pair<std::vector<Rational>, Rational>> ge;
        for (int r = 0; r < cons; ++r) {
            std::vector<Rational> a(vars);
            for (auto& x : a) x = small(-3, 3);
            Rational b = small(-4, 4);
            int kind = small(0, 4);
            if (kind == 0) {
                sys.add(a, Rel::Equal, b);
                ge.push_back({a, b});
                auto na = a;
                for (auto& x : na) x = -x;
                ge.push_back({na, -b});
            } else if (kind <= 2) {
                sys.add(a, Rel::GreaterEqual, b);
                ge.push_back({a, b});
            } else {
                sys.add(a, Rel::LessEqual, b);
                auto na = a;
                for (auto& x : na) x = -x;
                ge.push_back({na, -b});
            }
        }
        auto sol = sys.solve();
        CHECK(sol.has_value() == fm_feasible(ge, vars));
        if (sol) {
            ++feasible;
            CHECK(sys.satisfied_by(*sol));
        }
    }
    CHECK(feasible > 50);
    CHECK(feasible < 400);
}
