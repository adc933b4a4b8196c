#include "synpath/exact_lp.hpp"

#include "synpath/errors.hpp"

namespace synpath {

LinearSystem::LinearSystem(int num_vars, bool nonnegative)
    : num_vars_(num_vars), nonneg_(num_vars, nonnegative) {
    if (num_vars < 0) throw InvalidInput("negative variable count");
}

void LinearSystem::set_nonnegative(int var, bool flag) { nonneg_.at(var) = flag; }

void LinearSystem::add(std::vector<Rational> coef, Relation rel, Rational rhs) {
    if (static_cast<int>(coef.size()) != num_vars_) throw InvalidInput("row width mismatch");
    rows_.push_back({std::move(coef), rel, std::move(rhs)});
}

void LinearSystem::add_sparse(const std::vector<std::pair<int, Rational>>& terms, Relation rel, Rational rhs) {
    std::vector<Rational> coef(num_vars_);
    for (const auto& [v, c] : terms) coef.at(v) += c;
    add(std::move(coef), rel, std::move(rhs));
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != num_vars_) return false;
    for (int j = 0; j < num_vars_; ++j)
        if (nonneg_[j] && sgn(x[j]) < 0) return false;
    for (const auto& r : rows_) {
        Rational lhs = 0;
        for (int j = 0; j < num_vars_; ++j) lhs += r.coef[j] * x[j];
        switch (r.rel) {
            case Relation::GreaterEqual:
                if (lhs < r.rhs) return false;
                break;
            case Relation::LessEqual:
                if (lhs > r.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != r.rhs) return false;
                break;
        }
    }
    return true;
}

std::optional<std::vector<Rational>> LinearSystem::solve() const {
    // Column layout: for each original variable one column (nonnegative) or
    // two (x = p - n). Then one slack/surplus per inequality, then one
    // artificial per row that lacks a natural basic column.
    std::vector<int> pos_col(num_vars_), neg_col(num_vars_, -1);
    int cols = 0;
    for (int j = 0; j < num_vars_; ++j) {
        pos_col[j] = cols++;
        if (!nonneg_[j]) neg_col[j] = cols++;
    }
    const int m = static_cast<int>(rows_.size());
    if (m == 0) return std::vector<Rational>(num_vars_);

    struct Prepared {
        std::vector<Rational> a;  // over structural columns
        Relation rel;
        Rational b;
    };
    std::vector<Prepared> prep;
    prep.reserve(m);
    for (const auto& r : rows_) {
        Prepared p{std::vector<Rational>(cols), r.rel, r.rhs};
        for (int j = 0; j < num_vars_; ++j) {
            const auto& c = r.coef[j];
            p.a[pos_col[j]] = c;
            if (neg_col[j] >= 0) p.a[neg_col[j]] = -c;
        }
        if (sgn(p.b) < 0) {
            for (auto& v : p.a) v = -v;
            p.b = -p.b;
            if (p.rel == Relation::GreaterEqual) p.rel = Relation::LessEqual;
            else if (p.rel == Relation::LessEqual) p.rel = Relation::GreaterEqual;
        }
        prep.push_back(std::move(p));
    }

    int n_slack = 0, n_art = 0;
    for (const auto& p : prep) {
        if (p.rel != Relation::Equal) ++n_slack;
        if (p.rel != Relation::LessEqual) ++n_art;
    }
    const int slack0 = cols, art0 = cols + n_slack, width = art0 + n_art;

    // tableau rows: coefficients[width] | rhs
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>((width + 1)));
    std::vector<int> basis(m);
    {
        int s = slack0, a = art0;
        for (int i = 0; i < m; ++i) {
            auto& row = T[i];
            const auto& p = prep[i];
            for (int j = 0; j < cols; ++j) row[j] = p.a[j];
            row[width] = p.b;
            if (p.rel == Relation::LessEqual) {
                row[s] = 1;
                basis[i] = s++;
            } else {
                if (p.rel == Relation::GreaterEqual) row[s++] = -1;
                row[a] = 1;
                basis[i] = a++;
            }
        }
    }

    // Phase-one objective: minimize the sum of artificials. Reduced costs are
    // kept in `z` (z_j = c_j - c_B B^{-1} A_j), with c = 1 on artificials.
    std::vector<Rational> z((width + 1));
    for (int j = art0; j < width; ++j) z[j] = 1;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= art0)
            for (int j = 0; j <= width; ++j) z[j] -= T[i][j];

    auto pivot = [&](int r, int c) {
        auto& pr = T[r];
        const Rational piv = pr[c];
        for (auto& v : pr) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            auto& row = T[i];
            const Rational f = row[c];
            if (sgn(f) == 0) continue;
            for (int j = 0; j <= width; ++j) row[j] -= f * pr[j];
        }
        const Rational f = z[c];
        if (sgn(f) != 0)
            for (int j = 0; j <= width; ++j) z[j] -= f * pr[j];
        basis[r] = c;
    };

    if (n_art > 0) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < width; ++j)
                if (sgn(z[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) break;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                const auto& a = T[i][enter];
                if (sgn(a) <= 0) continue;
                Rational ratio = T[i][width] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw Error("phase-one objective unbounded (cannot happen)");
            pivot(leave, enter);
        }
        // objective value is -z[width]
        if (sgn(z[width]) != 0) return std::nullopt;
    }

    std::vector<Rational> col_value(width);
    for (int i = 0; i < m; ++i)
        col_value[basis[i]] = T[i][width];
    std::vector<Rational> x(num_vars_);
    for (int j = 0; j < num_vars_; ++j) {
        x[j] = col_value[pos_col[j]];
        if (neg_col[j] >= 0) x[j] -= col_value[neg_col[j]];
    }
    if (!satisfied_by(x)) throw Error("simplex produced a point violating the system");
    return x;
}

}  // namespace synpath
