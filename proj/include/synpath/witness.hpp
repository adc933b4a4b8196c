#pragma once

#include "synpath/codes.hpp"
#include "synpath/graph.hpp"
#include "synpath/numeric.hpp"

#include <vector>

namespace synpath {

// Trees of phi: one per fixed point, arrows k -> phi(k).
struct WitnessTree {
    int root = 0;
    int height = 0;
    std::vector<std::vector<int>> levels;  // levels[l] = phi^{-l}({root}) minus lower levels, ascending
    std::vector<int> leaves;               // ascending
    int width() const { return static_cast<int>(leaves.size()); }
};

struct WitnessForest {
    std::vector<WitnessTree> trees;  // by ascending root
    std::vector<int> depth;          // depth[m-1] = path length from m to its root
};

WitnessForest forest_decomposition(const IncreasingCode& phi);

// Ordered x with encode_kn(x, eps) == phi.
ExactConfiguration witness_kn(const IncreasingCode& phi, const Rational& eps);

// Party-ordered x with encode_knn(x, eps) == code.
ExactConfiguration witness_knn(const BorderPairCode& code, const Rational& eps);

ExactConfiguration witness(const SyncCode& code, const Rational& eps);

Configuration to_double(const ExactConfiguration& x);

}  // namespace synpath
