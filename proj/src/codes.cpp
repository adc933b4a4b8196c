#include "synpath/codes.hpp"

#include <charconv>
#include <sstream>

namespace synpath {

namespace {

bool nondecreasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InvalidInput("malformed code entry '" + std::string(item) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

IncreasingCode IncreasingCode::identity(int n) {
    IncreasingCode c;
    for (int i = 1; i <= n; ++i) c.phi.push_back(i);
    return c;
}

IncreasingCode IncreasingCode::complete(int n) { return {std::vector<int>(n, n)}; }

BorderPairCode BorderPairCode::complete(int n) {
    return {std::vector<int>(n, 1), std::vector<int>(n, n)};
}
BorderPairCode BorderPairCode::empty_low(int n) {
    return {std::vector<int>(n, 1), std::vector<int>(n, 0)};
}
BorderPairCode BorderPairCode::empty_high(int n) {
    return {std::vector<int>(n, n + 1), std::vector<int>(n, n)};
}

bool is_valid(const IncreasingCode& code) {
    const int N = code.size();
    if (N < 1 || !nondecreasing(code.phi)) return false;
    for (int n = 1; n <= N; ++n)
        if (code(n) < n || code(n) > N) return false;
    return true;
}

bool is_valid(const BorderPairCode& code) {
    const int N = code.size();
    if (N < 1 || static_cast<int>(code.omega.size()) != N) return false;
    if (!nondecreasing(code.alpha) || !nondecreasing(code.omega)) return false;
    for (int i = 0; i < N; ++i) {
        const int a = code.alpha[i], w = code.omega[i];
        if (a < 1 || a > N + 1 || w < 0 || w > N || a > w + 1) return false;
    }
    return true;
}

void validate(const IncreasingCode& code) {
    if (!is_valid(code)) throw InvalidInput("not an increasing code: " + to_text(code));
}

void validate(const BorderPairCode& code) {
    if (!is_valid(code)) throw InvalidInput("not a border pair: " + to_text(code));
}

EdgeSet decode_kn(const IncreasingCode& code) {
    validate(code);
    EdgeSet edges;
    for (int m = 1; m <= code.size(); ++m)
        for (int n = m + 1; n <= code(m); ++n) edges.insert({m, n});
    return edges;
}

std::vector<IncreasingCode> enumerate_phi_n(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    std::vector<IncreasingCode> out;
    std::vector<int> cur(N);
    // position i (0-based) takes values in [max(i+1, prev), N]
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == N) {
            out.push_back({cur});
            return;
        }
        for (int v = std::max(i + 1, lo); v <= N; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

BigInt catalan(int N) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    return binomial(2 * static_cast<unsigned>(N), static_cast<unsigned>(N)) / (N + 1);
}

long dyck_area(const IncreasingCode& code) {
    long a = 0;
    for (int n = 1; n <= code.size(); ++n) a += code(n) - n;
    return a;
}

EdgeSet decode_knn(const BorderPairCode& code) {
    validate(code);
    const int N = code.size();
    EdgeSet edges;
    for (int n = 1; n <= N; ++n)
        for (int m = code.alpha[n - 1]; m <= code.omega[n - 1]; ++m)
            edges.insert({n, N + m});
    return edges;
}

std::vector<BorderPairCode> enumerate_phi_nn(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    std::vector<BorderPairCode> out;
    std::vector<int> alpha(N), omega(N);
    auto omegas = [&](auto&& self, int i, int lo) -> void {
        if (i == N) {
            out.push_back({alpha, omega});
            return;
        }
        for (int w = std::max(lo, alpha[i] - 1); w <= N; ++w) {
            omega[i] = w;
            self(self, i + 1, w);
        }
    };
    auto alphas = [&](auto&& self, int i, int lo) -> void {
        if (i == N) {
            omegas(omegas, 0, 0);
            return;
        }
        for (int a = lo; a <= N + 1; ++a) {
            alpha[i] = a;
            self(self, i + 1, a);
        }
    };
    alphas(alphas, 0, 1);
    return out;
}

BigInt narayana_count(int N) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    const auto p = 2 * static_cast<unsigned>(N) + 1;
    return binomial(p, static_cast<unsigned>(N) + 1) * binomial(p, static_cast<unsigned>(N)) / p;
}

PolyominoBorders to_polyomino(const BorderPairCode& code) {
    validate(code);
    const int N = code.size();
    PolyominoBorders b;
    b.lower.push_back(0);
    for (int n = 2; n <= N + 1; ++n) b.lower.push_back(code.alpha[n - 2] - 1);
    for (int n = 1; n <= N; ++n) b.upper.push_back(code.omega[n - 1] + 1);
    b.upper.push_back(N + 1);
    return b;
}

long area(const PolyominoBorders& borders) {
    long a = 0;
    for (std::size_t i = 0; i < borders.lower.size(); ++i) a += borders.upper[i] - borders.lower[i];
    return a;
}

bool is_parallelogram_polyomino(const PolyominoBorders& b, int height) {
    const auto& L = b.lower;
    const auto& U = b.upper;
    if (L.empty() || L.size() != U.size()) return false;
    if (L.front() != 0 || U.back() != height) return false;
    if (!nondecreasing(L) || !nondecreasing(U)) return false;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i] < 0 || U[i] > height || L[i] >= U[i]) return false;
        if (i > 0 && L[i] >= U[i - 1]) return false;
    }
    return true;
}

GraphSpec spec_of(const SyncCode& code) {
    return std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            return std::is_same_v<T, IncreasingCode> ? GraphSpec::complete(c.size()) : GraphSpec::bipartite(c.size());
        },
        code);
}

EdgeSet decode(const SyncCode& code) {
    if (auto p = std::get_if<IncreasingCode>(&code)) return decode_kn(*p);
    return decode_knn(std::get<BorderPairCode>(code));
}

int edge_count(const SyncCode& code) {
    if (auto p = std::get_if<IncreasingCode>(&code)) return static_cast<int>(dyck_area(*p));
    const auto& c = std::get<BorderPairCode>(code);
    int e = 0;
    for (int i = 0; i < c.size(); ++i)
        e += c.omega[i] - c.alpha[i] + 1;
    return e;
}

bool is_complete(const SyncCode& code) {
    if (auto p = std::get_if<IncreasingCode>(&code)) return *p == IncreasingCode::complete(p->size());
    const auto& c = std::get<BorderPairCode>(code);
    return c == BorderPairCode::complete(c.size());
}

std::string to_text(const IncreasingCode& code) { return join(code.phi); }
std::string to_text(const BorderPairCode& code) { return join(code.alpha) + "|" + join(code.omega); }
std::string to_text(const SyncCode& code) {
    return std::visit([](const auto& c) { return to_text(c); }, code);
}

SyncCode parse_code(Family family, std::string_view text) {
    if (family == Family::CompleteN) {
        IncreasingCode c{parse_int_list(text)};
        validate(c);
        return c;
    }
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw InvalidInput("bipartite code needs 'alpha|omega'");
    BorderPairCode c{parse_int_list(text.substr(0, bar)), parse_int_list(text.substr(bar + 1))};
    if (c.alpha.size() != c.omega.size()) throw InvalidInput("alpha and omega lengths differ");
    validate(c);
    return c;
}

}  // namespace synpath
