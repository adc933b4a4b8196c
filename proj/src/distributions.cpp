#include "synpath/distributions.hpp"

#include "synpath/codes.hpp"
#include "synpath/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace synpath {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<Polynomial> carlitz_polynomials(int N) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    std::vector<Polynomial> P{{BigInt(1)}};
    for (int m = 1; m <= N; ++m) {
        Polynomial next(static_cast<std::size_t>(m) * (m - 1) / 2 + 1);
        // the n and m-1-n terms differ only by the shift, so pair them up
        for (int n = 0; 2 * n <= m - 1; ++n) {
            const int k = m - 1 - n;
            Polynomial prod = multiply(P[n], P[k]);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + n] += prod[i];
                if (k != n) next[i + k] += prod[i];
            }
        }
        P.push_back(std::move(next));
    }
    return P;
}

BigInt LengthDistribution::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

LengthDistribution f_kn(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    auto P = carlitz_polynomials(N).back();
    LengthDistribution d{Family::CompleteN, N, {}};
    const int L = N * (N - 1) / 2;
    d.counts.resize(L + 1);
    for (int l = 0; l <= L; ++l) d.counts[l] = P[L - l];
    return d;
}

LengthDistribution f_knn(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    // Sweep n = 1..N over states (alpha(n), omega(n)); each state carries a
    // polynomial in t counting edges so far. Nondecreasing transitions are
    // 2D prefix sums over the previous column.
    const int A = N + 2, W = N + 1;  // alpha in [1, N+1], omega in [0, N]
    const int E = N * N + 1;
    using Grid = std::vector<std::vector<Polynomial>>;
    auto valid = [](int a, int w) { return a <= w + 1; };
    Grid dp(A, std::vector<Polynomial>(W, Polynomial(E)));
    for (int a = 1; a < A; ++a)
        for (int w = 0; w < W; ++w)
            if (valid(a, w)) dp[a][w][w - a + 1] = 1;
    for (int n = 2; n <= N; ++n) {
        Grid S(A, std::vector<Polynomial>(W, Polynomial(E)));
        for (int a = 1; a < A; ++a)
            for (int w = 0; w < W; ++w)
                for (int e = 0; e < E; ++e) {
                    BigInt v = dp[a][w][e];
                    if (a > 1) v += S[a - 1][w][e];
                    if (w > 0) v += S[a][w - 1][e];
                    if (a > 1 && w > 0) v -= S[a - 1][w - 1][e];
                    S[a][w][e] = std::move(v);
                }
        for (int a = 1; a < A; ++a)
            for (int w = 0; w < W; ++w) {
                auto& cell = dp[a][w];
                std::fill(cell.begin(), cell.end(), BigInt(0));
                if (!valid(a, w)) continue;
                const int shift = w - a + 1;
                for (int e = 0; e + shift < E; ++e) cell[e + shift] = S[a][w][e];
            }
    }
    Polynomial edges(E);
    for (int a = 1; a < A; ++a)
        for (int w = 0; w < W; ++w)
            for (int e = 0; e < E; ++e) edges[e] += dp[a][w][e];
    LengthDistribution d{Family::BipartiteNN, N, std::vector<BigInt>(E)};
    // remaining path length = edges still missing
    for (int e = 0; e < E; ++e) d.counts[N * N - e] = edges[e];
    return d;
}

LengthDistribution f_kn_by_enumeration(int N) {
    LengthDistribution d{Family::CompleteN, N, std::vector<BigInt>(N * (N - 1) / 2 + 1)};
    const long L = N * (N - 1) / 2;
    for (const auto& c : enumerate_phi_n(N)) d.counts[L - dyck_area(c)] += 1;
    return d;
}

LengthDistribution f_knn_by_enumeration(int N) {
    LengthDistribution d{Family::BipartiteNN, N, std::vector<BigInt>(N * N + 1)};
    for (const auto& c : enumerate_phi_nn(N)) {
        long a = area(to_polyomino(c));
        d.counts[(N + 1) * (N + 1) - a] += 1;
    }
    return d;
}

std::vector<BigInt> partition_pairs(int count) {
    std::vector<BigInt> p(count, 0);
    if (count == 0) return p;
    p[0] = 1;
    for (int part = 1; part < count; ++part)
        for (int s = part; s < count; ++s) p[s] += p[s - part];
    std::vector<BigInt> pairs(count, 0);
    for (int i = 0; i < count; ++i)
        for (int j = 0; i + j < count; ++j) pairs[i + j] += p[i] * p[j];
    return pairs;
}

bool sloane_prefix_check(int N) {
    auto d = f_knn(N);
    auto ref = partition_pairs(N + 1);
    for (int l = 0; l <= N; ++l)
        if (d.counts[l] != ref[l]) return false;
    return true;
}

Rational cumulative(const LengthDistribution& dist, const Rational& x) {
    if (x < 0 || x > 1) throw InvalidInput("cumulative argument must lie in [0,1]");
    Rational cut = x * dist.max_length();
    BigInt limit;
    mpz_fdiv_q(limit.get_mpz_t(), cut.get_num_mpz_t(), cut.get_den_mpz_t());
    BigInt acc = 0;
    for (int l = 0; l <= dist.max_length() && l <= limit; ++l) acc += dist.counts[l];
    Rational r(acc, dist.total());
    r.canonicalize();
    return r;
}

SummaryStats summary(const LengthDistribution& dist) {
    SummaryStats s;
    BigInt best = -1, weighted = 0;
    for (int l = 0; l <= dist.max_length(); ++l) {
        const auto& f = dist.counts[l];
        weighted += f * l;
        if (f > best) {
            best = f;
            s.argmax.clear();
        }
        if (f == best) s.argmax.push_back(l);
    }
    s.mean = Rational(weighted, dist.total());
    s.mean.canonicalize();
    const int L = std::max(dist.max_length(), 1);
    s.argmax_ratio = Rational(s.argmax.front(), L);
    s.argmax_ratio.canonicalize();
    s.mean_ratio = s.mean / L;
    return s;
}

std::string density_csv(const LengthDistribution& dist, int bins) {
    const int L = dist.max_length();
    if (bins < 0) throw InvalidInput("bin count must be nonnegative");
    if (bins == 0) bins = L + 1;
    std::vector<BigInt> hist(bins, 0);
    for (int l = 0; l <= L; ++l) {
        // bin of the point l / (L + 1) spread uniformly over [0, 1)
        int b = static_cast<int>((static_cast<long long>(l) * bins) / (L + 1));
        hist[b] += dist.counts[l];
    }
    const BigInt total = dist.total();
    std::ostringstream out;
    out << "x,density\n";
    char buf[64];
    for (int b = 0; b < bins; ++b) {
        Rational density(hist[b] * bins, total);
        density.canonicalize();
        std::snprintf(buf, sizeof buf, "%.12g,%.17g\n", (b + 0.5) / bins, density.get_d());
        out << buf;
    }
    return out.str();
}

std::string distribution_json(const LengthDistribution& dist) {
    nlohmann::ordered_json j;
    j["family"] = std::string(family_name(dist.family));
    j["n"] = dist.n;
    auto counts = nlohmann::json::array();
    for (const auto& c : dist.counts) counts.push_back(c.get_str());
    j["counts"] = counts;
    return j.dump();
}

LengthDistribution distribution_for(Family family, int N) {
    if (family == Family::CompleteN) {
        if (N > kMaxDensityKn) throw ResourceLimit("K_N distributions are limited to N <= " + std::to_string(kMaxDensityKn));
        return f_kn(N);
    }
    if (N > kMaxDensityKnn) throw ResourceLimit("K_{N,N} distributions are limited to N <= " + std::to_string(kMaxDensityKnn));
    return f_knn(N);
}

}  // namespace synpath
