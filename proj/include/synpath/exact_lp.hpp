#pragma once

#include "synpath/numeric.hpp"

#include <optional>
#include <vector>

namespace synpath {

// Feasibility of { a_i . x  (>=|<=|==)  b_i } over the rationals, solved by a
// dense phase-one simplex with Bland's rule. Variables are free unless marked
// nonnegative.
class LinearSystem {
public:
    enum class Relation { GreaterEqual, LessEqual, Equal };

    struct Row {
        std::vector<Rational> coef;
        Relation rel;
        Rational rhs;
    };

    explicit LinearSystem(int num_vars, bool nonnegative = false);

    int num_vars() const { return num_vars_; }
    void set_nonnegative(int var, bool flag = true);
    void add(std::vector<Rational> coef, Relation rel, Rational rhs);

    // Sparse helper: sum of coef * x_var
    void add_sparse(const std::vector<std::pair<int, Rational>>& terms, Relation rel, Rational rhs);

    const std::vector<Row>& rows() const { return rows_; }

    // A point satisfying every row, or nullopt if the system is infeasible.
    std::optional<std::vector<Rational>> solve() const;

    bool satisfied_by(const std::vector<Rational>& x) const;

private:
    int num_vars_;
    std::vector<bool> nonneg_;
    std::vector<Row> rows_;
};

}  // namespace synpath
