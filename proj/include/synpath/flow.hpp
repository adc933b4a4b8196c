#pragma once

#include "synpath/codes.hpp"
#include "synpath/graph.hpp"

#include <vector>

namespace synpath {

struct KuramotoParams {
    double sigma = 1.0;
    double step = 0.0;           // 0: min(1e-3, eps / (10 sigma N))
    double crossing_tol = 1e-10;
    double horizon = 0.0;        // 0: derived from the initial spread
};

struct OrderParameter {
    double R = 0.0;
    double theta = 0.0;  // reported as 0 when R vanishes
};

struct SyncEvent {
    double t = 0.0;
    int site = 0;   // first-party endpoint of the edge
    int sign = 0;   // K_{N,N}: sign of x_{N+m} - x_n at the event; K_N: 0
    Edge edge;
    bool added = true;
};

// codes[0] is the initial code, codes[i] the code after events[i-1].
struct SyncSequence {
    GraphSpec spec;
    double eps = 0.0;
    std::vector<SyncCode> codes;
    std::vector<SyncEvent> events;

    const SyncCode& initial() const { return codes.front(); }
    const SyncCode& final_code() const { return codes.back(); }
    std::vector<Edge> edge_order() const;
    std::vector<int> sites() const;
};

Configuration laplacian_trajectory_kn(const Configuration& x0, double t);
Configuration laplacian_trajectory_knn(const Configuration& x0, double t);
Configuration laplacian_trajectory(const Configuration& x0, double t);

// Fixed-step RK4 on dx/dt = L x; returns the largest sup-norm gap to the
// closed form over every step in [0, t_end].
double laplacian_rk4_deviation(const Configuration& x0, double t_end, double step);
Configuration laplacian_rk4(const Configuration& x0, double t, double step);

SyncSequence switching_times_kn(const Configuration& x0, double eps);

// Times t > 0 with |x_n(t) - x_{N+m}(t)| = eps, ascending.
std::vector<double> cross_party_crossing_times(const Configuration& x0, double eps, int n, int m);
SyncSequence switching_times_knn(const Configuration& x0, double eps);
SyncSequence laplacian_sequence(const Configuration& x0, double eps);

SyncSequence kuramoto_sequence(const Configuration& x0, const KuramotoParams& params, double eps);

// One entry for K_N, one per party for K_{N,N}.
std::vector<OrderParameter> order_parameter(const Configuration& x);

}  // namespace synpath
