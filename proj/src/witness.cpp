#include "synpath/witness.hpp"

#include "synpath/errors.hpp"

#include <optional>

namespace synpath {

WitnessForest forest_decomposition(const IncreasingCode& phi) {
    validate(phi);
    const int N = phi.size();
    WitnessForest f;
    f.depth.assign(N, 0);
    std::vector<int> root_of(N + 1, 0);
    // phi(k) >= k, so walking downwards every image is resolved first
    for (int k = N; k >= 1; --k) {
        if (phi(k) == k) {
            root_of[k] = k;
        } else {
            root_of[k] = root_of[phi(k)];
            f.depth[k - 1] = f.depth[phi(k) - 1] + 1;
        }
    }
    std::vector<bool> has_preimage(N + 1, false);
    for (int k = 1; k <= N; ++k)
        if (phi(k) != k) has_preimage[phi(k)] = true;
    for (int r = 1; r <= N; ++r) {
        if (phi(r) != r) continue;
        WitnessTree t;
        t.root = r;
        for (int k = 1; k <= N; ++k) {
            if (root_of[k] != r) continue;
            const int d = f.depth[k - 1];
            if (d >= static_cast<int>(t.levels.size())) t.levels.resize(d + 1);
            t.levels[d].push_back(k);
            if (!has_preimage[k]) t.leaves.push_back(k);
            t.height = std::max(t.height, d);
        }
        f.trees.push_back(std::move(t));
    }
    return f;
}

ExactConfiguration witness_kn(const IncreasingCode& phi, const Rational& eps) {
    if (sgn(eps) <= 0) throw InvalidInput("epsilon must be positive");
    const auto forest = forest_decomposition(phi);
    const int N = phi.size();
    // x_v = x_root - depth(v) eps + off(v), 0 <= off < eps. Offsets are
    // handed down the tree: the children of p share [off(p), off(p')) where
    // p' follows p on its level, so every level stays increasing and a child
    // is never more than eps below its parent.
    std::vector<Rational> off(N + 1), x(N);
    Rational root_x;
    for (std::size_t t = 0; t < forest.trees.size(); ++t) {
        const auto& tree = forest.trees[t];
        // roots sit (h + 2) eps apart, h the height of the later tree
        root_x = t == 0 ? Rational(eps * tree.height) : Rational(root_x + eps * (tree.height + 2));
        off[tree.root] = 0;
        for (int l = 1; l <= tree.height; ++l) {
            const auto& parents = tree.levels[l - 1];
            const auto& level = tree.levels[l];
            for (std::size_t i = 0; i < parents.size(); ++i) {
                const int p = parents[i];
                const Rational hi = i + 1 < parents.size() ? off[parents[i + 1]] : eps;
                std::vector<int> kids;
                for (int v : level)
                    if (phi(v) == p) kids.push_back(v);
                for (std::size_t c = 0; c < kids.size(); ++c)
                    off[kids[c]] = off[p] + (hi - off[p]) * static_cast<long>(c) / static_cast<long>(kids.size());
            }
        }
        for (const auto& level : tree.levels)
            for (int v : level) x[v - 1] = root_x - eps * forest.depth[v - 1] + off[v];
    }
    return ExactConfiguration(GraphSpec::complete(N), std::move(x));
}

ExactConfiguration witness_knn(const BorderPairCode& code, const Rational& eps) {
    if (sgn(eps) <= 0) throw InvalidInput("epsilon must be positive");
    validate(code);
    const int N = code.size();
    auto a = [&](int n) { return code.alpha[n - 1]; };
    auto w = [&](int n) { return code.omega[n - 1]; };
    auto nonempty = [&](int n) { return a(n) <= w(n); };
    auto overlap = [&](int n, int m) { return nonempty(n) && nonempty(m) && std::max(a(n), a(m)) <= std::min(w(n), w(m)); };

    // maximal runs I_k with consecutive overlapping neighbourhoods
    std::vector<std::pair<int, int>> blocks;
    for (int n = 1; n <= N;) {
        int m = n;
        while (m < N && overlap(m, m + 1)) ++m;
        blocks.emplace_back(n, m);
        n = m + 1;
    }

    // Inside a block, Delta(n) = max{m : A_n meets A_m} is itself an
    // increasing function. Two first-party points i < j may share a
    // second-party neighbour exactly when j <= Delta(i), i.e. when they are
    // within 2 eps; so the first party is the K_N witness of Delta at 2 eps.
    std::vector<Rational> x(N + 1);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto [first, last] = blocks[k];
        IncreasingCode delta;
        for (int n = first; n <= last; ++n) {
            int best = n;
            for (int m = n; m <= last; ++m)
                if (a(m) <= w(n)) best = m;
            delta.phi.push_back(best - first + 1);
        }
        auto local = witness_kn(delta, 2 * eps);
        const Rational base = k == 0 ? Rational(0) : Rational(x[blocks[k - 1].second] + 3 * eps);
        for (int n = first; n <= last; ++n) x[n] = base + local(n - first + 1) - local(1);
    }

    std::vector<Rational> y(N + 1);
    for (int m = 1; m <= N; ++m) {
        int b = 0, e = 0;  // neighbours of N+m are b..e
        for (int n = 1; n <= N; ++n) {
            if (a(n) <= m) e = n;
            if (w(n) >= m && b == 0) b = n;
        }
        if (b != 0 && b <= e) {
            // |x_n - y| <= eps for b <= n <= e, and strictly more for b-1, e+1
            Rational lo = x[e] - eps, hi = x[b] + eps;
            if (b > 1) lo = std::max(lo, Rational(x[b - 1] + eps));
            if (e < N) hi = std::min(hi, Rational(x[e + 1] - eps));
            y[m] = (lo + hi) / 2;
            continue;
        }
        // unreached: halfway into the 3 eps gap before the first block whose
        // alpha exceeds m, or above everything
        std::optional<Rational> v;
        for (const auto& [first, last] : blocks) {
            if (a(first) > m) {
                v = x[first] - 3 * eps / 2;
                break;
            }
        }
        y[m] = v ? *v : Rational(x[N] + 3 * eps / 2);
    }

    std::vector<Rational> values(x.begin() + 1, x.end());
    values.insert(values.end(), y.begin() + 1, y.end());
    return ExactConfiguration(GraphSpec::bipartite(N), std::move(values));
}

ExactConfiguration witness(const SyncCode& code, const Rational& eps) {
    if (auto p = std::get_if<IncreasingCode>(&code)) return witness_kn(*p, eps);
    return witness_knn(std::get<BorderPairCode>(code), eps);
}

Configuration to_double(const ExactConfiguration& x) {
    std::vector<double> v;
    for (const auto& q : x.values) v.push_back(q.get_d());
    return Configuration(x.spec, std::move(v));
}

}  // namespace synpath
