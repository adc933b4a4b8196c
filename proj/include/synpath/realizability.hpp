#pragma once

#include "synpath/codes.hpp"
#include "synpath/graph.hpp"
#include "synpath/numeric.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace synpath {

// K_N: (n, k, 0) stands for x_{n+k} - x_n.
// K_{N,N}: (n, m, q) stands for x_{N+m} - x_n, whose sign is q.
struct IncrementLabel {
    int n = 0;
    int k = 0;
    int sign = 0;
    friend auto operator<=>(const IncrementLabel&, const IncrementLabel&) = default;
};

// Labels listed by strictly increasing magnitude.
struct IncrementOrder {
    GraphSpec spec;
    std::vector<IncrementLabel> labels;
    friend bool operator==(const IncrementOrder&, const IncrementOrder&) = default;
};

// all N(N-1)/2 labels of K_N, sorted by (n, k)
std::vector<IncrementLabel> kn_labels(int N);

void validate(const IncrementOrder& order);

// Signed magnitude of a label under configuration x (positive when the
// configuration agrees with the label's sign).
Rational label_value(const IncrementLabel& label, const ExactConfiguration& x);

// True when x is ordered and reproduces the order strictly.
bool certifies(const IncrementOrder& order, const ExactConfiguration& x, bool balanced = false);

struct Feasibility {
    bool feasible = false;
    std::optional<ExactConfiguration> witness;
};

Feasibility feasible(const IncrementOrder& order, bool balanced = false);

// A jump event on a code: site n, and for K_{N,N} the sign q (+1 grows
// omega, -1 lowers alpha).
struct JumpEvent {
    int site = 0;
    int sign = 0;
    friend auto operator<=>(const JumpEvent&, const JumpEvent&) = default;
};

// Applies one event; throws InvalidInput when the event is not admissible.
SyncCode apply_event(const SyncCode& code, const JumpEvent& event);

IncrementOrder path_to_ordering(const SyncCode& initial, const std::vector<JumpEvent>& path);

// Jump sites visited from Id when the increments appear in `order`.
std::vector<JumpEvent> ordering_to_path(const IncrementOrder& order);

// Number of feasible strict orders of the K_N increments (= Golomb(N)).
BigInt count_realizable_paths_kn(int N);
std::vector<IncrementOrder> enumerate_realizable_orders_kn(int N);

// Vertex labels in increasing coordinate order, e.g. {1,3,2,4}.
using Arrangement = std::vector<int>;

struct KnnOrdering {
    Arrangement arrangement;
    IncrementOrder order;
    ExactConfiguration witness;
};

std::vector<Arrangement> knn_arrangements(int N);
std::vector<KnnOrdering> enumerate_realizable_orderings_knn(int N, bool balanced);

// Values of Golomb(N) for N <= 9 as published in the literature (OEIS A237749).
std::optional<BigInt> golomb_reference(int N);

struct GolombBounds {
    BigInt lower;      // (N-1)!
    BigInt factorial;  // binom(N,2)!
    BigInt thrall;
};
GolombBounds golomb_bounds(int N);

struct KnnPathBound {
    BigInt value;
    bool degenerate = false;  // N == 1: the formula gives 0
};
KnnPathBound knn_path_upper_bound(int N);

// Integer ruler with the same increment order as the typical ordered x.
std::vector<BigInt> ruler_from_configuration(const ExactConfiguration& x);

// Increment order of a typical ordered K_N configuration; NotTypical on ties.
IncrementOrder increment_order_kn(const ExactConfiguration& x);

std::string to_text(const IncrementLabel& label);
std::string to_text(const IncrementOrder& order);
std::string to_text(const Arrangement& arrangement);

}  // namespace synpath
