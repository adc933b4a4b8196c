#pragma once

#include "synpath/graph.hpp"
#include "synpath/numeric.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace synpath {

// phi : {1..N} -> {1..N}, nondecreasing, phi(n) >= n. Stored 0-based:
// phi[i] is phi(i+1).
struct IncreasingCode {
    std::vector<int> phi;

    int size() const { return static_cast<int>(phi.size()); }
    int operator()(int n) const { return phi[n - 1]; }

    static IncreasingCode identity(int n);
    static IncreasingCode complete(int n);

    friend auto operator<=>(const IncreasingCode&, const IncreasingCode&) = default;
};

// (alpha, omega) with alpha in [1, N+1], omega in [0, N], both nondecreasing
// and alpha <= omega + 1. Party-one vertex n is linked to N+m exactly when
// alpha(n) <= m <= omega(n).
struct BorderPairCode {
    std::vector<int> alpha;
    std::vector<int> omega;

    int size() const { return static_cast<int>(alpha.size()); }

    static BorderPairCode complete(int n);
    static BorderPairCode empty_low(int n);   // ((1,..,1),(0,..,0)): party two above
    static BorderPairCode empty_high(int n);  // ((N+1,..),(N,..)): party two below

    friend auto operator<=>(const BorderPairCode&, const BorderPairCode&) = default;
};

using SyncCode = std::variant<IncreasingCode, BorderPairCode>;

bool is_valid(const IncreasingCode& code);
bool is_valid(const BorderPairCode& code);
void validate(const IncreasingCode& code);  // throws InvalidInput
void validate(const BorderPairCode& code);

// ---- K_N -------------------------------------------------------------------

template <class Scalar>
IncreasingCode encode_kn(const BasicConfiguration<Scalar>& x, const Scalar& eps) {
    if (x.spec.family != Family::CompleteN) throw InvalidInput("encode_kn expects a K_N configuration");
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    if (!x.is_ordered()) throw InvalidInput("encode_kn expects ascending coordinates");
    const int N = x.spec.n;
    IncreasingCode code;
    code.phi.resize(N);
    int reach = 1;
    for (int m = 1; m <= N; ++m) {
        reach = std::max(reach, m);
        while (reach < N && x(reach + 1) <= x(m) + eps) ++reach;
        code.phi[m - 1] = reach;
    }
    return code;
}

EdgeSet decode_kn(const IncreasingCode& code);
std::vector<IncreasingCode> enumerate_phi_n(int N);
BigInt catalan(int N);
// sum_n (phi(n) - n): cells between the Dyck path and the staircase.
long dyck_area(const IncreasingCode& code);

// ---- K_{N,N} ---------------------------------------------------------------

template <class Scalar>
BorderPairCode encode_knn(const BasicConfiguration<Scalar>& x, const Scalar& eps) {
    if (x.spec.family != Family::BipartiteNN) throw InvalidInput("encode_knn expects a K_{N,N} configuration");
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    if (!x.is_ordered()) throw InvalidInput("encode_knn expects each party in ascending order");
    const int N = x.spec.n;
    BorderPairCode code;
    code.alpha.assign(N, N + 1);
    code.omega.assign(N, 0);
    for (int n = 1; n <= N; ++n) {
        int a = N + 1;
        for (int l = 1; l <= N; ++l) {
            if (x(n) - eps <= x(N + l)) {
                a = l;
                break;
            }
        }
        int w = 0;
        for (int l = N; l >= 1; --l) {
            if (x(N + l) <= x(n) + eps) {
                w = l;
                break;
            }
        }
        code.alpha[n - 1] = a;
        code.omega[n - 1] = w;
    }
    return code;
}

EdgeSet decode_knn(const BorderPairCode& code);
std::vector<BorderPairCode> enumerate_phi_nn(int N);
// T(2N+1, N+1) = binom(2N+1, N+1) binom(2N+1, N) / (2N+1)
BigInt narayana_count(int N);

struct PolyominoBorders {
    std::vector<int> lower;  // L(1..N+1), 0-based storage
    std::vector<int> upper;  // U(1..N+1)
    friend auto operator<=>(const PolyominoBorders&, const PolyominoBorders&) = default;
};

PolyominoBorders to_polyomino(const BorderPairCode& code);
long area(const PolyominoBorders& borders);
// L(1)=0, U(last)=height, both nondecreasing, L(n) < U(n-1).
bool is_parallelogram_polyomino(const PolyominoBorders& borders, int height);

// ---- shared ----------------------------------------------------------------

GraphSpec spec_of(const SyncCode& code);
EdgeSet decode(const SyncCode& code);
int edge_count(const SyncCode& code);
bool is_complete(const SyncCode& code);

// "2,2,4,4" for K_N and "1,2|1,2" (alpha then omega) for K_{N,N}.
std::string to_text(const IncreasingCode& code);
std::string to_text(const BorderPairCode& code);
std::string to_text(const SyncCode& code);
SyncCode parse_code(Family family, std::string_view text);

}  // namespace synpath
