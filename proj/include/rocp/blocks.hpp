#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "rocp/grading.hpp"

namespace rocp {

// The cell-complex grammar.  Atoms are either explicit (a sphere, a theta
// cofiber, a mod-p Moore block, each in some RO(C_p) suspension) or
// symbolic families that expand on demand: the free algebra on a norm
// class, the T_theta block of a generator, one factor of the dual Steenrod
// model, and the full model.

struct SpectrumExpr;

struct UnitExpr {};

struct SphereExpr {
    RODegree degree;
};

/// Sigma^degree C(theta); two cells one apart on the underlying spectrum.
struct CThetaExpr {
    RODegree degree;
};

/// Sigma^degree M(p); two cells one apart with trivial action.
struct MooreExpr {
    RODegree degree;
};

struct SumExpr {
    std::vector<SpectrumExpr> summands;
};

struct TensorExpr {
    std::vector<SpectrumExpr> factors;
};

/// S^0[N t_i]: spheres on the nonnegative powers of the norm class.
struct FreeNormExpr {
    Prime p;
    int index;
};

/// T_theta(t_i): p-1 suspended theta cofibers on the powers of t_i plus one
/// Moore block on the norm of t_i.
struct TThetaExpr {
    Prime p;
    int index;
};

/// S^0 + (S^0[N t_i] (x) T_theta(t_i)), the i-th factor of the model.
struct DsaFactorExpr {
    Prime p;
    int index;
};

/// The full model: the tensor of all factors whose cells reach the
/// truncation window.
struct DsaModelExpr {
    Prime p;
};

struct SpectrumExpr {
    using Node = std::variant<UnitExpr, SphereExpr, CThetaExpr, MooreExpr, SumExpr, TensorExpr,
                              FreeNormExpr, TThetaExpr, DsaFactorExpr, DsaModelExpr>;
    Node node;
};

inline SpectrumExpr unit_expr() { return {UnitExpr{}}; }
inline SpectrumExpr sphere(RODegree d) { return {SphereExpr{d}}; }
inline SpectrumExpr ctheta(RODegree d) { return {CThetaExpr{d}}; }
inline SpectrumExpr moore(RODegree d) { return {MooreExpr{d}}; }
inline SpectrumExpr sum_expr(std::vector<SpectrumExpr> summands) {
    return {SumExpr{std::move(summands)}};
}
inline SpectrumExpr tensor_expr(std::vector<SpectrumExpr> factors) {
    return {TensorExpr{std::move(factors)}};
}

inline void require_index(int i, const char* what) {
    if (i < 1) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

inline SpectrumExpr free_norm(Prime p, int i) {
    require_index(i, "free_norm");
    return {FreeNormExpr{p, i}};
}
inline SpectrumExpr t_theta(Prime p, int i) {
    require_index(i, "t_theta");
    return {TThetaExpr{p, i}};
}
inline SpectrumExpr dsa_factor(Prime p, int i) {
    require_index(i, "dsa_factor");
    return {DsaFactorExpr{p, i}};
}
inline SpectrumExpr dsa_model(Prime p) { return {DsaModelExpr{p}}; }

/// T_theta(t_i) spelled out: CTheta(j * |t_i|) for j = 1..p-1 and
/// Moore(|N t_i|).
inline SpectrumExpr expand_t_theta(Prime p, int i) {
    require_index(i, "expand_t_theta");
    std::vector<SpectrumExpr> summands;
    const RODegree t = t_degree(p, i);
    for (int j = 1; j <= p.value() - 1; ++j) summands.push_back(ctheta(j * t));
    summands.push_back(moore(norm_degree(p, i)));
    return sum_expr(std::move(summands));
}

/// S^0[N t_i] truncated for the given lens: spheres at k * |N t_i| for
/// k = 0, 1, ... while the lens degree stays within N.
inline SpectrumExpr expand_free_norm(Prime p, int i, Lens lens, long long N) {
    require_index(i, "expand_free_norm");
    const RODegree nd = norm_degree(p, i);
    const long long step = lens_degree(lens, nd);
    std::vector<SpectrumExpr> summands;
    for (long long k = 0; k * step <= N; ++k) summands.push_back(sphere(k * nd));
    if (summands.empty()) return unit_expr();
    return sum_expr(std::move(summands));
}

inline SpectrumExpr expand_dsa_factor(Prime p, int i) {
    require_index(i, "expand_dsa_factor");
    return sum_expr({unit_expr(), tensor_expr({free_norm(p, i), t_theta(p, i)})});
}

/// Smallest positive lens-degree of any cell of factor i: the bottom cell
/// of t_i on underlying spectra, the lower theta-cofiber class on
/// geometric fixed points.
inline long long factor_first_positive_cell(Prime p, int i, Lens lens) {
    require_index(i, "factor_first_positive_cell");
    if (lens == Lens::underlying) return 2 * ipow(p.value(), i) - 2;
    return 2 * ipow(p.value(), i - 1) - 1;
}

/// Number of factors of the model whose cells reach degree N under the
/// given lens (0 when even the first factor starts above N).
inline int dsa_model_factor_count(Prime p, Lens lens, long long N) {
    int i = 0;
    while (factor_first_positive_cell(p, i + 1, lens) <= N) ++i;
    return i;
}

/// The model cut for the given lens: the finite tensor of the factors
/// contributing below N (Unit when none do).
inline SpectrumExpr expand_dsa_model(Prime p, Lens lens, long long N) {
    const int i_max = dsa_model_factor_count(p, lens, N);
    if (i_max == 0) return unit_expr();
    std::vector<SpectrumExpr> factors;
    for (int i = 1; i <= i_max; ++i) factors.push_back(dsa_factor(p, i));
    return tensor_expr(std::move(factors));
}

}  // namespace rocp
