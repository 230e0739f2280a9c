#pragma once

#include <vector>

#include "rocp/grading.hpp"

namespace rocp {

// Degree bookkeeping for the splitting of HZ (x) B_{C_p}S^1 into generators
// e_0, e_1, ... and for the classes it suspends to.

struct SplittingRow {
    long long k;
    RODegree degree;
};

/// The splitting table (k, |e_k|) for 0 <= k <= k_max.
inline std::vector<SplittingRow> splitting_table(Prime p, long long k_max) {
    if (k_max < 0) throw std::invalid_argument("splitting_table: k_max must be >= 0");
    std::vector<SplittingRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 1);
    for (long long k = 0; k <= k_max; ++k) rows.push_back({k, e_degree(p, k)});
    return rows;
}

/// Degree of the homology suspension of e_{p^i}: |e_{p^i}| - lambda.
/// Lands exactly in the degree of t_i.
inline RODegree suspension_degree(Prime p, int i) {
    if (i < 1) throw std::invalid_argument("suspension_degree: index must be >= 1");
    return e_degree(p, ipow(p.value(), i)) - lambda_degree();
}

/// Degree of the j-th divided power gamma_j(beta_1) of the standard module
/// generators of the homology of K(Z, 2); beta_{(i)} = gamma_{p^i}(beta_1)
/// sits in degree 2p^i.
inline long long kz2_generator_degree(long long j) {
    if (j < 0) throw std::invalid_argument("kz2_generator_degree: j must be >= 0");
    return 2 * j;
}

/// Whether the coefficient degree gap of the p-th power relation on e_{p^i}
/// is what it should be: the degree of theta at i = 0, zero for i >= 1.
inline bool power_relation_gap_ok(Prime p, int i) {
    const RODegree expected = i == 0 ? theta_degree() : RODegree{0, 0};
    return mult_gap(p, i) == expected;
}

/// One row of the coefficient-exponent audit.  The restriction check
/// evaluates the claimed coefficient on underlying spectra (theta restricts
/// to p, u_lambda to a unit), where the answer must be p^i regardless of
/// the exponent.
struct ThetaLintRow {
    int index = 0;
    RODegree required_degree;
    long long forced_exponent = 0;
    long long formula_exponent = 0;
    bool exponent_match = false;
    long long restriction_value = 0;
    long long restriction_required = 0;
    bool restriction_pass = false;
};

inline std::vector<ThetaLintRow> lint_theta_coefficients(Prime p, int i_max) {
    if (i_max < 1) throw std::invalid_argument("lint_theta_coefficients: i_max must be >= 1");
    std::vector<ThetaLintRow> rows;
    for (int i = 1; i <= i_max; ++i) {
        const auto exps = theta_coefficient_exponents(p, i);
        ThetaLintRow row;
        row.index = i;
        row.required_degree = exps.required;
        row.forced_exponent = exps.forced;
        row.formula_exponent = exps.formula;
        row.exponent_match = exps.match;
        row.restriction_value = ipow(p.value(), i - 1) * p.value();
        row.restriction_required = ipow(p.value(), i);
        row.restriction_pass = row.restriction_value == row.restriction_required;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rocp
