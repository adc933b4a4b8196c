#include "synpath/realizability.hpp"

#include "synpath/exact_lp.hpp"
#include "synpath/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace synpath {

using Rel = LinearSystem::Relation;

std::vector<IncrementLabel> kn_labels(int N) {
    std::vector<IncrementLabel> out;
    for (int n = 1; n < N; ++n)
        for (int k = 1; n + k <= N; ++k) out.push_back({n, k, 0});
    return out;
}

void validate(const IncrementOrder& order) {
    const int N = order.spec.n;
    std::set<std::pair<int, int>> seen;
    for (const auto& l : order.labels) {
        if (order.spec.family == Family::CompleteN) {
            if (l.n < 1 || l.k < 1 || l.n + l.k > N || l.sign != 0)
                throw InvalidInput("bad K_N increment label " + to_text(l));
        } else if (l.n < 1 || l.n > N || l.k < 1 || l.k > N || (l.sign != 1 && l.sign != -1)) {
            throw InvalidInput("bad K_{N,N} increment label " + to_text(l));
        }
        if (!seen.insert({l.n, l.k}).second) throw InvalidInput("repeated label " + to_text(l));
    }
    if (seen.size() > order.spec.edge_count()) throw InvalidInput("order longer than the edge count");
}

Rational label_value(const IncrementLabel& l, const ExactConfiguration& x) {
    if (x.spec.family == Family::CompleteN) return x(l.n + l.k) - x(l.n);
    return l.sign * (x(x.spec.n + l.k) - x(l.n));
}

bool certifies(const IncrementOrder& order, const ExactConfiguration& x, bool balanced) {
    if (!(x.spec == order.spec)) return false;
    for (int p = 1; p <= (x.spec.family == Family::CompleteN ? 1 : 2); ++p) {
        auto xs = x.party(p);
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i - 1] < xs[i])) return false;
    }
    if (balanced && !x.is_balanced()) return false;
    Rational prev;
    bool first = true;
    for (const auto& l : order.labels) {
        Rational v = label_value(l, x);
        if (x.spec.family == Family::BipartiteNN && sgn(v) <= 0) return false;
        if (!first && !(prev < v)) return false;
        prev = v;
        first = false;
    }
    return true;
}

namespace {

// ---- K_N: variables are the gaps g_i = x_{i+1} - x_i >= 1 -----------------

std::vector<std::pair<int, Rational>> gap_terms(const IncrementLabel& l, int sign = 1) {
    std::vector<std::pair<int, Rational>> t;
    for (int i = l.n; i < l.n + l.k; ++i) t.emplace_back(i - 1, Rational(sign));
    return t;
}

void add_less(LinearSystem& sys, const std::vector<std::pair<int, Rational>>& a,
              const std::vector<std::pair<int, Rational>>& b) {
    // b - a >= 1
    auto terms = b;
    for (const auto& [v, c] : a) terms.emplace_back(v, -c);
    sys.add_sparse(terms, Rel::GreaterEqual, 1);
}

LinearSystem kn_system(int N, const std::vector<IncrementLabel>& chain, const std::vector<IncrementLabel>& above) {
    LinearSystem sys(std::max(N - 1, 0), true);
    for (int i = 0; i + 1 < N; ++i) sys.add_sparse({{i, 1}}, Rel::GreaterEqual, 1);
    for (std::size_t i = 1; i < chain.size(); ++i) add_less(sys, gap_terms(chain[i - 1]), gap_terms(chain[i]));
    if (!chain.empty())
        for (const auto& l : above) add_less(sys, gap_terms(chain.back()), gap_terms(l));
    return sys;
}

ExactConfiguration gaps_to_config(int N, const std::vector<Rational>& g) {
    std::vector<Rational> x(N);
    for (int i = 1; i < N; ++i) x[i] = x[i - 1] + g[i - 1];
    return ExactConfiguration(GraphSpec::complete(N), std::move(x));
}

Rational gap_value(const IncrementLabel& l, const std::vector<Rational>& g) {
    Rational s = 0;
    for (int i = l.n; i < l.n + l.k; ++i) s += g[i - 1];
    return s;
}

// ---- K_{N,N}: free coordinates, x_1 pinned to 0 ---------------------------

std::vector<std::pair<int, Rational>> coord_terms(int N, const IncrementLabel& l) {
    return {{N + l.k - 1, Rational(l.sign)}, {l.n - 1, Rational(-l.sign)}};
}

LinearSystem knn_system(int N, const Arrangement* arrangement, const std::vector<IncrementLabel>& chain,
                        const std::vector<IncrementLabel>& above, bool balanced) {
    LinearSystem sys(2 * N);
    sys.add_sparse({{0, 1}}, Rel::Equal, 0);
    if (arrangement) {
        for (std::size_t i = 1; i < arrangement->size(); ++i)
            sys.add_sparse({{(*arrangement)[i] - 1, 1}, {(*arrangement)[i - 1] - 1, -1}}, Rel::GreaterEqual, 1);
    } else {
        for (int p = 0; p < 2; ++p)
            for (int i = 1; i < N; ++i) sys.add_sparse({{p * N + i, 1}, {p * N + i - 1, -1}}, Rel::GreaterEqual, 1);
    }
    for (const auto& l : chain) sys.add_sparse(coord_terms(N, l), Rel::GreaterEqual, 1);
    for (const auto& l : above) sys.add_sparse(coord_terms(N, l), Rel::GreaterEqual, 1);
    for (std::size_t i = 1; i < chain.size(); ++i) add_less(sys, coord_terms(N, chain[i - 1]), coord_terms(N, chain[i]));
    if (!chain.empty())
        for (const auto& l : above) add_less(sys, coord_terms(N, chain.back()), coord_terms(N, l));
    if (balanced) {
        std::vector<std::pair<int, Rational>> t;
        for (int i = 0; i < N; ++i) {
            t.emplace_back(i, 1);
            t.emplace_back(N + i, -1);
        }
        sys.add_sparse(t, Rel::Equal, 0);
    }
    return sys;
}

Rational coord_value(int N, const IncrementLabel& l, const std::vector<Rational>& x) {
    return l.sign * (x[N + l.k - 1] - x[l.n - 1]);
}

// If `c` is the strict minimum among `pool` under `values`, returns the
// factor that lifts all gaps to >= 1; otherwise 0.
template <class ValueFn>
Rational reuse_scale(const IncrementLabel& c, const std::vector<IncrementLabel>& pool, ValueFn value) {
    const Rational vc = value(c);
    Rational min_gap = -1;
    for (const auto& o : pool) {
        if (o == c) continue;
        Rational d = value(o) - vc;
        if (sgn(d) <= 0) return 0;
        if (sgn(min_gap) < 0 || d < min_gap) min_gap = d;
    }
    if (sgn(min_gap) < 0 || min_gap >= 1) return 1;
    return 1 / min_gap;
}

// Depth-first search over "which increment is next smallest" for K_N.
class KnSearch {
public:
    explicit KnSearch(int N) : N_(N), labels_(kn_labels(N)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) index_[{labels_[i].n, labels_[i].k}] = static_cast<int>(i);
    }

    struct Node {
        std::vector<int> prefix;       // label ids
        std::vector<bool> chosen;
        std::vector<Rational> gaps;    // certifies prefix chain and candidates above it
    };

    Node root() const {
        Node r;
        r.chosen.assign(labels_.size(), false);
        r.gaps.assign(std::max(N_ - 1, 0), Rational(1));
        return r;
    }

    bool is_leaf(const Node& n) const { return n.prefix.size() == labels_.size(); }

    // Children in label order; each child carries its own witness.
    std::vector<Node> children(const Node& node) const {
        std::vector<Node> out;
        auto cands = candidates(node.chosen);
        std::vector<IncrementLabel> pool;
        for (int id : cands) pool.push_back(labels_[id]);
        for (int c : cands) {
            Node child;
            child.prefix = node.prefix;
            child.prefix.push_back(c);
            child.chosen = node.chosen;
            child.chosen[c] = true;
            auto next = candidates(child.chosen);
            Rational s = reuse_scale(labels_[c], pool, [&](const IncrementLabel& l) { return gap_value(l, node.gaps); });
            if (sgn(s) > 0) {
                child.gaps = node.gaps;
                if (s != 1)
                    for (auto& g : child.gaps) g *= s;
            } else {
                std::vector<IncrementLabel> chain, above;
                for (int id : child.prefix) chain.push_back(labels_[id]);
                for (int id : next) above.push_back(labels_[id]);
                auto sol = kn_system(N_, chain, above).solve();
                if (!sol) continue;
                child.gaps = std::move(*sol);
            }
            out.push_back(std::move(child));
        }
        return out;
    }

    IncrementOrder order_of(const Node& n) const {
        IncrementOrder o{GraphSpec::complete(N_), {}};
        for (int id : n.prefix) o.labels.push_back(labels_[id]);
        return o;
    }

    template <class Leaf>
    void dfs(const Node& n, Leaf&& leaf) const {
        if (is_leaf(n)) {
            leaf(n);
            return;
        }
        for (const auto& c : children(n)) dfs(c, leaf);
    }

    const std::vector<IncrementLabel>& labels() const { return labels_; }

private:
    // Unchosen labels whose two maximal sub-intervals are already chosen.
    std::vector<int> candidates(const std::vector<bool>& chosen) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (chosen[i]) continue;
            const auto& l = labels_[i];
            if (l.k > 1 && !(chosen[index_.at({l.n, l.k - 1})] && chosen[index_.at({l.n + 1, l.k - 1})])) continue;
            out.push_back(static_cast<int>(i));
        }
        return out;
    }

    int N_;
    std::vector<IncrementLabel> labels_;
    std::map<std::pair<int, int>, int> index_;
};

}  // namespace

Feasibility feasible(const IncrementOrder& order, bool balanced) {
    validate(order);
    const int N = order.spec.n;
    Feasibility result;
    if (order.spec.family == Family::CompleteN) {
        if (balanced) throw InvalidInput("balanced constraint applies to K_{N,N} only");
        auto sol = kn_system(N, order.labels, {}).solve();
        if (!sol) return result;
        result.feasible = true;
        result.witness = gaps_to_config(N, *sol);
    } else {
        auto sol = knn_system(N, nullptr, order.labels, {}, balanced).solve();
        if (!sol) return result;
        result.feasible = true;
        result.witness = ExactConfiguration(order.spec, std::move(*sol));
    }
    if (!certifies(order, *result.witness, balanced)) throw Error("feasibility witness does not certify the order");
    return result;
}

SyncCode apply_event(const SyncCode& code, const JumpEvent& e) {
    if (auto p = std::get_if<IncreasingCode>(&code)) {
        const int N = p->size();
        if (e.site < 1 || e.site >= N || (*p)(e.site) >= (*p)(e.site + 1) || e.sign != 0)
            throw InvalidInput("jump at site " + std::to_string(e.site) + " is not admissible from " + to_text(*p));
        IncreasingCode next = *p;
        next.phi[e.site - 1] += 1;
        return next;
    }
    BorderPairCode next = std::get<BorderPairCode>(code);
    const int N = next.size();
    if (e.site < 1 || e.site > N || (e.sign != 1 && e.sign != -1))
        throw InvalidInput("bad jump event for a border pair");
    if (e.sign < 0) next.alpha[e.site - 1] -= 1;
    else next.omega[e.site - 1] += 1;
    if (!is_valid(next))
        throw InvalidInput("jump (" + std::to_string(e.site) + "," + std::to_string(e.sign) + ") is not admissible from " +
                           to_text(std::get<BorderPairCode>(code)));
    return next;
}

IncrementOrder path_to_ordering(const SyncCode& initial, const std::vector<JumpEvent>& path) {
    IncrementOrder order{spec_of(initial), {}};
    SyncCode cur = initial;
    for (const auto& e : path) {
        if (auto p = std::get_if<IncreasingCode>(&cur)) {
            if (e.site >= 1 && e.site <= p->size()) {
                int v = (*p)(e.site);
                order.labels.push_back({e.site, v + 1 - e.site, 0});
            }
        } else {
            const auto& c = std::get<BorderPairCode>(cur);
            if (e.site >= 1 && e.site <= c.size()) {
                int m = e.sign < 0 ? c.alpha[e.site - 1] - 1 : c.omega[e.site - 1] + 1;
                order.labels.push_back({e.site, m, e.sign});
            }
        }
        cur = apply_event(cur, e);
    }
    return order;
}

std::vector<JumpEvent> ordering_to_path(const IncrementOrder& order) {
    std::vector<JumpEvent> path;
    for (const auto& l : order.labels) path.push_back({l.n, l.sign});
    return path;
}

BigInt count_realizable_paths_kn(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    if (N > 9) throw ResourceLimit("realizable path counting is limited to N <= 9");
    KnSearch search(N);
    // Expand a frontier breadth-first, then hand subtrees to workers.
    std::vector<KnSearch::Node> frontier{search.root()};
    const std::size_t target = 8 * static_cast<std::size_t>(thread_count());
    while (frontier.size() < target) {
        std::vector<KnSearch::Node> next;
        bool expanded = false;
        for (const auto& n : frontier) {
            if (search.is_leaf(n)) {
                next.push_back(n);
                continue;
            }
            expanded = true;
            for (auto& c : search.children(n)) next.push_back(std::move(c));
        }
        frontier = std::move(next);
        if (!expanded) break;
    }
    std::vector<unsigned long> counts(frontier.size(), 0);
    parallel_for(frontier.size(), [&](std::size_t i) {
        unsigned long c = 0;
        search.dfs(frontier[i], [&](const KnSearch::Node&) { ++c; });
        counts[i] = c;
    });
    BigInt total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::vector<IncrementOrder> enumerate_realizable_orders_kn(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    if (N > 6) throw ResourceLimit("listing realizable orders is limited to N <= 6");
    KnSearch search(N);
    std::vector<IncrementOrder> out;
    search.dfs(search.root(), [&](const KnSearch::Node& n) { out.push_back(search.order_of(n)); });
    return out;
}

std::vector<Arrangement> knn_arrangements(int N) {
    // choose which of the 2N slots hold party one, in lexicographic order of
    // the resulting vertex sequence
    std::vector<Arrangement> out;
    Arrangement cur;
    auto rec = [&](auto&& self, int i1, int i2) -> void {
        if (i1 > N && i2 > N) {
            out.push_back(cur);
            return;
        }
        if (i1 <= N) {
            cur.push_back(i1);
            self(self, i1 + 1, i2);
            cur.pop_back();
        }
        if (i2 <= N) {
            cur.push_back(N + i2);
            self(self, i1, i2 + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

std::vector<KnnOrdering> enumerate_realizable_orderings_knn(int N, bool balanced) {
    if (N < 1) throw InvalidInput("N must be positive");
    if (N > 3) throw ResourceLimit("K_{N,N} ordering enumeration is limited to N <= 3");
    const GraphSpec spec = GraphSpec::bipartite(N);
    auto arrangements = knn_arrangements(N);
    std::vector<std::vector<KnnOrdering>> per(arrangements.size());

    parallel_for(arrangements.size(), [&](std::size_t ai) {
        const auto& arr = arrangements[ai];
        std::vector<int> rank(2 * N + 1);
        for (std::size_t i = 0; i < arr.size(); ++i) rank[arr[i]] = static_cast<int>(i);
        std::vector<IncrementLabel> all;
        for (int n = 1; n <= N; ++n)
            for (int m = 1; m <= N; ++m) all.push_back({n, m, rank[N + m] > rank[n] ? 1 : -1});

        auto root = knn_system(N, &arr, {}, all, balanced).solve();
        if (!root) return;

        std::vector<IncrementLabel> chain;
        std::vector<bool> used(all.size(), false);
        auto rec = [&](auto&& self, const std::vector<Rational>& x) -> void {
            if (chain.size() == all.size()) {
                ExactConfiguration w(spec, x);
                IncrementOrder order{spec, chain};
                if (!certifies(order, w, balanced)) throw Error("K_{N,N} witness does not certify its order");
                per[ai].push_back({arr, std::move(order), std::move(w)});
                return;
            }
            std::vector<IncrementLabel> pool;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (!used[i]) pool.push_back(all[i]);
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                chain.push_back(all[i]);
                std::vector<Rational> child;
                Rational s = reuse_scale(all[i], pool, [&](const IncrementLabel& l) { return coord_value(N, l, x); });
                if (sgn(s) > 0) {
                    child = x;
                    if (s != 1)
                        for (auto& v : child) v *= s;
                } else {
                    std::vector<IncrementLabel> above;
                    for (std::size_t j = 0; j < all.size(); ++j)
                        if (!used[j]) above.push_back(all[j]);
                    auto sol = knn_system(N, &arr, chain, above, balanced).solve();
                    if (sol) child = std::move(*sol);
                }
                if (!child.empty()) self(self, child);
                chain.pop_back();
                used[i] = false;
            }
        };
        rec(rec, *root);
    });

    std::vector<KnnOrdering> out;
    for (auto& v : per)
        for (auto& o : v) out.push_back(std::move(o));
    return out;
}

std::optional<BigInt> golomb_reference(int N) {
    static const char* table[] = {"1", "1", "2", "10", "114", "2608", "107498", "7325650", "771505180"};
    if (N < 1 || N > 9) return std::nullopt;
    return BigInt(table[N - 1]);
}

GolombBounds golomb_bounds(int N) {
    if (N < 2) throw InvalidInput("Golomb bounds need N >= 2");
    const unsigned n = static_cast<unsigned>(N);
    GolombBounds b;
    b.lower = factorial(n - 1);
    b.factorial = factorial(n * (n - 1) / 2);
    BigInt num = factorial(n * (n + 1) / 2), den = 1;
    for (unsigned i = 1; i < n; ++i) num *= factorial(i);
    for (unsigned i = 1; i <= n; ++i) den *= factorial(2 * i - 1);
    if (num % den != 0) throw Error("Thrall bound is not an integer");
    b.thrall = num / den;
    return b;
}

KnnPathBound knn_path_upper_bound(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    auto g = golomb_reference(2 * N);
    if (!g) throw ResourceLimit("Golomb(" + std::to_string(2 * N) + ") is not available");
    KnnPathBound b;
    b.value = (binomial(2 * N, N) - 2) * *g;
    b.degenerate = N == 1;
    return b;
}

IncrementOrder increment_order_kn(const ExactConfiguration& x) {
    if (x.spec.family != Family::CompleteN) throw InvalidInput("increment order needs a K_N configuration");
    const int N = x.spec.n;
    for (int i = 1; i < N; ++i)
        if (!(x(i) < x(i + 1))) throw NotTypical("coordinates must be strictly increasing");
    auto labels = kn_labels(N);
    std::vector<std::pair<Rational, IncrementLabel>> vals;
    for (const auto& l : labels) vals.emplace_back(label_value(l, x), l);
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    IncrementOrder order{x.spec, {}};
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i && vals[i].first == vals[i - 1].first)
            throw NotTypical("increments " + to_text(vals[i - 1].second) + " and " + to_text(vals[i].second) + " coincide");
        order.labels.push_back(vals[i].second);
    }
    return order;
}

std::vector<BigInt> ruler_from_configuration(const ExactConfiguration& x) {
    auto order = increment_order_kn(x);
    const int N = x.spec.n;
    if (N < 2) return {BigInt(0)};
    std::vector<Rational> vals;
    for (const auto& l : order.labels) vals.push_back(label_value(l, x));
    Rational eps1 = vals.front();
    Rational bound = eps1;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        Rational e2 = (vals[i] - vals[i - 1]) / 4;
        if (e2 < bound) bound = e2;
    }
    // smallest p with p * bound > 1
    Rational inv = 1 / bound;
    BigInt p;
    mpz_fdiv_q(p.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    p += 1;
    std::vector<BigInt> q;
    for (int n = 1; n <= N; ++n) {
        Rational v = x(n) * p;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        q.push_back(f);
    }
    return q;
}

std::string to_text(const IncrementLabel& l) {
    std::string s = "D(" + std::to_string(l.n) + "," + std::to_string(l.k) + ")";
    if (l.sign) s += l.sign > 0 ? "+" : "-";
    return s;
}

std::string to_text(const IncrementOrder& order) {
    std::string s;
    for (std::size_t i = 0; i < order.labels.size(); ++i) {
        if (i) s += " < ";
        s += to_text(order.labels[i]);
    }
    return s;
}

std::string to_text(const Arrangement& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += "<";
        s += "x" + std::to_string(a[i]);
    }
    return s;
}

}  // namespace synpath
