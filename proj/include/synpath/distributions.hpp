#pragma once

#include "synpath/graph.hpp"
#include "synpath/numeric.hpp"

#include <string>
#include <vector>

namespace synpath {

// Coefficient vector, index = exponent.
using Polynomial = std::vector<BigInt>;

Polynomial multiply(const Polynomial& a, const Polynomial& b);

// P_0 = 1, P_N = sum_{n<N} t^n P_n P_{N-1-n}; returns P_0..P_N.
std::vector<Polynomial> carlitz_polynomials(int N);

struct LengthDistribution {
    Family family = Family::CompleteN;
    int n = 1;
    std::vector<BigInt> counts;  // F(0..L_max)

    int max_length() const { return static_cast<int>(counts.size()) - 1; }
    BigInt total() const;
};

LengthDistribution f_kn(int N);
LengthDistribution f_knn(int N);

// Same distribution by walking every code; used as an independent check.
LengthDistribution f_kn_by_enumeration(int N);
LengthDistribution f_knn_by_enumeration(int N);

// Number of pairs of integer partitions of total l, l = 0..count-1.
std::vector<BigInt> partition_pairs(int count);
bool sloane_prefix_check(int N);

// Fraction of codes with length <= floor(x * L_max), for x in [0,1].
Rational cumulative(const LengthDistribution& dist, const Rational& x);

struct SummaryStats {
    std::vector<int> argmax;     // all maximizing lengths, ascending
    Rational argmax_ratio;       // smallest argmax / L_max
    Rational mean;               // sum l F(l) / sum F(l)
    Rational mean_ratio;         // mean / L_max
};

SummaryStats summary(const LengthDistribution& dist);

// Histogram of l / L_max with `bins` equal bins on [0,1]; bins = 0 picks one
// bin per length. Returns "x,density" CSV with bin centres.
std::string density_csv(const LengthDistribution& dist, int bins = 0);
std::string distribution_json(const LengthDistribution& dist);

// Size limits for the exact computations behind density export.
constexpr int kMaxDensityKn = 60;
constexpr int kMaxDensityKnn = 20;
LengthDistribution distribution_for(Family family, int N);

}  // namespace synpath
