#include "synpath/flow.hpp"

#include "synpath/errors.hpp"

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace synpath {

namespace {

using State = std::vector<double>;
using Stepper = boost::numeric::odeint::runge_kutta4<State>;

void require(const Configuration& x, Family f, const char* what) {
    if (x.spec.family != f) throw InvalidInput(std::string(what) + ": wrong graph family");
}

SyncCode encode_any(const Configuration& x, double eps) {
    if (x.spec.family == Family::CompleteN) return encode_kn(x, eps);
    return encode_knn(x, eps);
}

bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

// Sort events, reject ties, and record the code after each one by encoding
// the closed-form state halfway to the next event.
SyncSequence finish_closed_form(const Configuration& x0, double eps, std::vector<SyncEvent> events) {
    std::stable_sort(events.begin(), events.end(), [](const SyncEvent& a, const SyncEvent& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < events.size(); ++i)
        if (nearly_equal(events[i - 1].t, events[i].t))
            throw NotTypical("edges {" + std::to_string(events[i - 1].edge.u) + "," + std::to_string(events[i - 1].edge.v) +
                             "} and {" + std::to_string(events[i].edge.u) + "," + std::to_string(events[i].edge.v) +
                             "} switch simultaneously");
    SyncSequence seq{x0.spec, eps, {encode_any(x0, eps)}, events};
    for (std::size_t i = 0; i < events.size(); ++i) {
        const double t = i + 1 < events.size() ? 0.5 * (events[i].t + events[i + 1].t) : events[i].t + 1.0;
        seq.codes.push_back(encode_any(laplacian_trajectory(x0, t), eps));
    }
    return seq;
}

}  // namespace

std::vector<Edge> SyncSequence::edge_order() const {
    std::vector<Edge> out;
    for (const auto& e : events) out.push_back(e.edge);
    return out;
}

std::vector<int> SyncSequence::sites() const {
    std::vector<int> out;
    for (const auto& e : events) out.push_back(e.site);
    return out;
}

Configuration laplacian_trajectory_kn(const Configuration& x0, double t) {
    require(x0, Family::CompleteN, "laplacian_trajectory_kn");
    const double mean = x0.mean(), u = std::exp(-x0.spec.n * t);
    Configuration x = x0;
    for (auto& v : x.values) v = mean + u * (v - mean);
    return x;
}

Configuration laplacian_trajectory_knn(const Configuration& x0, double t) {
    require(x0, Family::BipartiteNN, "laplacian_trajectory_knn");
    // party means relax at rate 2N, deviations from them at rate N
    const int N = x0.spec.n;
    const double mean = x0.mean(), u = std::exp(-N * t);
    const double m[2] = {x0.party_mean(1), x0.party_mean(2)};
    Configuration x = x0;
    for (int v = 0; v < 2 * N; ++v) {
        const double mp = m[v < N ? 0 : 1];
        x.values[v] = mean + u * u * (mp - mean) + u * (x0.values[v] - mp);
    }
    return x;
}

Configuration laplacian_trajectory(const Configuration& x0, double t) {
    return x0.spec.family == Family::CompleteN ? laplacian_trajectory_kn(x0, t) : laplacian_trajectory_knn(x0, t);
}

namespace {

struct LinearRhs {
    std::vector<std::vector<int>> L;
    void operator()(const State& x, State& dx, double) const {
        for (std::size_t i = 0; i < L.size(); ++i) {
            double s = 0;
            for (std::size_t j = 0; j < L.size(); ++j) s += L[i][j] * x[j];
            dx[i] = s;
        }
    }
};

}  // namespace

double laplacian_rk4_deviation(const Configuration& x0, double t_end, double step) {
    if (!(step > 0)) throw InvalidInput("step must be positive");
    LinearRhs rhs{laplacian(x0.spec)};
    Stepper stepper;
    State x = x0.values;
    double worst = 0, t = 0;
    const long steps = std::lround(t_end / step);
    for (long k = 1; k <= steps; ++k) {
        stepper.do_step(rhs, x, t, step);
        t = k * step;
        auto exact = laplacian_trajectory(x0, t);
        for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - exact.values[i]));
    }
    return worst;
}

Configuration laplacian_rk4(const Configuration& x0, double t, double step) {
    if (!(step > 0)) throw InvalidInput("step must be positive");
    LinearRhs rhs{laplacian(x0.spec)};
    Stepper stepper;
    State x = x0.values;
    const long steps = std::lround(t / step);
    for (long k = 0; k < steps; ++k) stepper.do_step(rhs, x, k * step, step);
    return Configuration(x0.spec, x);
}

SyncSequence switching_times_kn(const Configuration& x0, double eps) {
    require(x0, Family::CompleteN, "switching_times_kn");
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    if (!x0.is_ordered()) throw InvalidInput("switching_times_kn expects ascending coordinates");
    const int N = x0.spec.n;
    std::vector<SyncEvent> events;
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v) {
            const double d = x0(v) - x0(u);
            if (d <= eps) continue;
            events.push_back({(std::log(d) - std::log(eps)) / N, u, 0, {u, v}, true});
        }
    return finish_closed_form(x0, eps, std::move(events));
}

std::vector<double> cross_party_crossing_times(const Configuration& x0, double eps, int n, int m) {
    require(x0, Family::BipartiteNN, "cross_party_crossing_times");
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    const int N = x0.spec.n;
    if (n < 1 || n > N || m < 1 || m > N) throw InvalidInput("vertex index out of range");
    // x_n(t) - x_{N+m}(t) = u (D - (1 - u) beta) = beta u^2 + (D - beta) u, u = e^{-Nt}
    const double D = x0(n) - x0(N + m), beta = x0.party_mean(1) - x0.party_mean(2);
    std::vector<double> us;
    for (double target : {eps, -eps}) {
        // beta u^2 + (D - beta) u - target = 0
        const double a = beta, b = D - beta, c = -target;
        if (a == 0) {
            if (b != 0) us.push_back(-c / b);
            continue;
        }
        const double disc = b * b - 4 * a * c;
        if (disc < 0) continue;
        const double sq = std::sqrt(disc);
        // numerically stable pair of roots
        const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
        if (q != 0) {
            us.push_back(q / a);
            us.push_back(c / q);
        } else {
            us.push_back(0.0);
        }
    }
    std::vector<double> ts;
    for (double u : us)
        if (u > 0 && u < 1) ts.push_back(-std::log(u) / N);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

SyncSequence switching_times_knn(const Configuration& x0, double eps) {
    require(x0, Family::BipartiteNN, "switching_times_knn");
    if (!x0.is_ordered()) throw InvalidInput("switching_times_knn expects each party in ascending order");
    const int N = x0.spec.n;
    const double beta = x0.party_mean(1) - x0.party_mean(2);
    std::vector<SyncEvent> events;
    for (int n = 1; n <= N; ++n)
        for (int m = 1; m <= N; ++m) {
            const double D = x0(n) - x0(N + m);
            for (double t : cross_party_crossing_times(x0, eps, n, m)) {
                const double u = std::exp(-N * t);
                const double f = beta * u * u + (D - beta) * u;
                const double slope = (D - beta) + 2 * beta * u;  // df/du
                if (slope == 0) throw NotTypical("tangential crossing");
                // t grows as u shrinks: |f| decreases iff f and df/du agree in sign
                const bool added = (f > 0) == (slope > 0);
                events.push_back({t, n, f > 0 ? -1 : 1, {n, N + m}, added});
            }
        }
    return finish_closed_form(x0, eps, std::move(events));
}

SyncSequence laplacian_sequence(const Configuration& x0, double eps) {
    return x0.spec.family == Family::CompleteN ? switching_times_kn(x0, eps) : switching_times_knn(x0, eps);
}

namespace {

struct KuramotoRhs {
    GraphSpec spec;
    double sigma;
    void operator()(const State& x, State& dx, double) const {
        const int V = spec.vertex_count();
        for (int v = 0; v < V; ++v) {
            double s = 0;
            for (int u = 0; u < V; ++u)
                if (spec.is_edge(u + 1, v + 1)) s += std::sin(x[u] - x[v]);
            dx[v] = sigma * s;
        }
    }
};

}  // namespace

SyncSequence kuramoto_sequence(const Configuration& x0, const KuramotoParams& params, double eps) {
    if (!(eps > 0)) throw InvalidInput("epsilon must be positive");
    if (!(params.sigma > 0) || params.step < 0 || !(params.crossing_tol > 0) || params.horizon < 0)
        throw InvalidInput("Kuramoto parameters must be positive");
    if (!x0.is_ordered()) throw InvalidInput("kuramoto_sequence expects ordered coordinates");
    const GraphSpec spec = x0.spec;
    const int N = spec.n;
    double spread = 0;
    for (int p = 1; p <= (spec.family == Family::CompleteN ? 1 : 2); ++p) {
        const double c = spec.family == Family::CompleteN ? x0.mean() : x0.party_mean(p);
        for (double v : x0.party(p)) spread = std::max(spread, std::abs(v - c));
    }
    if (!(spread < std::numbers::pi / 4)) throw InvalidInput("initial condition is not within pi/4 of the diagonal");

    const double h = params.step > 0 ? params.step : std::min(1e-3, eps / (10 * params.sigma * N));
    const double horizon = params.horizon > 0
                               ? params.horizon
                               : 10.0 * (std::log(std::max(2 * spread / eps, 1.0)) + 1.0) / (params.sigma * N);
    const double tol = params.crossing_tol;

    KuramotoRhs rhs{spec, params.sigma};
    Stepper stepper;
    const auto edges = all_edges(spec);
    auto gap = [&](const State& x, const Edge& e) { return std::abs(x[e.v - 1] - x[e.u - 1]) - eps; };
    auto advance = [&](const State& from, double t, double dt) {
        State y = from;
        stepper.do_step(rhs, y, t, dt);
        return y;
    };

    SyncSequence seq{spec, eps, {encode_any(x0, eps)}, {}};
    State x = x0.values;
    double t = 0, last_event = -1;
    std::size_t linked = 0;
    for (const auto& e : edges)
        if (gap(x, e) <= 0) ++linked;

    while (linked < edges.size()) {
        if (t > horizon) throw Unsynchronized("no full synchronization before t = " + std::to_string(horizon));
        State next = advance(x, t, h);
        struct Hit {
            double tau;
            Edge edge;
            bool added;
        };
        std::vector<Hit> hits;
        for (const auto& e : edges) {
            const bool before = gap(x, e) <= 0, after = gap(next, e) <= 0;
            if (before == after) continue;
            double lo = 0, hi = h;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if ((gap(advance(x, t, mid), e) <= 0) == after) hi = mid;
                else lo = mid;
            }
            hits.push_back({hi, e, after});
        }
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.tau < b.tau; });
        for (const auto& hit : hits) {
            const double te = t + hit.tau;
            if (te - last_event < tol) throw NotTypical("two threshold crossings within the crossing tolerance");
            last_event = te;
            const State at = advance(x, t, hit.tau);
            const int n = hit.edge.u;
            const int sign = spec.family == Family::CompleteN ? 0 : (at[hit.edge.v - 1] > at[n - 1] ? 1 : -1);
            seq.events.push_back({te, n, sign, hit.edge, hit.added});
            Configuration cfg(spec, at);
            if (!cfg.is_ordered()) throw Error("Kuramoto flow changed the coordinate order");
            // the bracket end is on the far side of this crossing only
            seq.codes.push_back(encode_any(cfg, eps));
            linked += hit.added ? 1 : -1;
        }
        x = std::move(next);
        t += h;
    }
    return seq;
}

std::vector<OrderParameter> order_parameter(const Configuration& x) {
    std::vector<OrderParameter> out;
    for (int p = 1; p <= (x.spec.family == Family::CompleteN ? 1 : 2); ++p) {
        double c = 0, s = 0;
        for (double v : x.party(p)) {
            c += std::cos(v);
            s += std::sin(v);
        }
        OrderParameter op;
        op.R = std::hypot(c, s);
        op.theta = op.R < 1e-12 ? 0.0 : std::atan2(s, c);
        out.push_back(op);
    }
    return out;
}

}  // namespace synpath
