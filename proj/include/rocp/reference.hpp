#pragma once

#include <vector>

#include "rocp/grading.hpp"
#include "rocp/series.hpp"

namespace rocp {

// Classical reference series.  Everything here is assembled from
// from_generators on explicit generator lists, so these series are
// independent of the cell-expression pipeline they are checked against.

/// Polynomial generators xi_i in degree 2p^i - 2, i >= 1, up to N.
inline std::vector<GeneratorSpec> xi_polynomial_generators(Prime p, long long N) {
    std::vector<GeneratorSpec> gens;
    for (int i = 1;; ++i) {
        const long long d = 2 * ipow(p.value(), i) - 2;
        if (d > N) break;
        gens.push_back(poly_gen(d));
    }
    return gens;
}

/// Exterior generators tau_i in degree 2p^i - 1 for i >= first, up to N.
inline std::vector<GeneratorSpec> tau_exterior_generators(Prime p, long long N, int first) {
    std::vector<GeneratorSpec> gens;
    for (int i = first;; ++i) {
        const long long d = 2 * ipow(p.value(), i) - 1;
        if (d > N) break;
        gens.push_back(ext_gen(d));
    }
    return gens;
}

/// Generators of the dual Steenrod algebra,
/// F_p[xi_i : i >= 1] (x) Lambda(tau_i : i >= 0).
inline std::vector<GeneratorSpec> milnor_generators(Prime p, long long N) {
    auto gens = xi_polynomial_generators(p, N);
    auto taus = tau_exterior_generators(p, N, 0);
    gens.insert(gens.end(), taus.begin(), taus.end());
    return gens;
}

inline GradedDimSeries milnor_series(Prime p, long long N) {
    const auto gens = milnor_generators(p, N);
    return from_generators(gens, N);
}

/// The p = 2 presentation on squaring generators: F_2[xi_i : |xi_i| = 2^i - 1].
/// Serves as an independent oracle for milnor_series at p = 2.
inline std::vector<GeneratorSpec> milnor_p2_classical_generators(long long N) {
    std::vector<GeneratorSpec> gens;
    for (int i = 1;; ++i) {
        const long long d = ipow(2, i) - 1;
        if (d > N) break;
        gens.push_back(poly_gen(d));
    }
    return gens;
}

inline GradedDimSeries milnor_series_p2_classical(long long N) {
    const auto gens = milnor_p2_classical_generators(N);
    return from_generators(gens, N);
}

/// Mod-p homology of HZ: F_p[xi_i : i >= 1] (x) Lambda(tau_i : i >= 1),
/// i.e. the dual Steenrod algebra without tau_0.
inline std::vector<GeneratorSpec> hz_modp_generators(Prime p, long long N) {
    auto gens = xi_polynomial_generators(p, N);
    auto taus = tau_exterior_generators(p, N, 1);
    gens.insert(gens.end(), taus.begin(), taus.end());
    return gens;
}

inline GradedDimSeries hz_modp_series(Prime p, long long N) {
    const auto gens = hz_modp_generators(p, N);
    return from_generators(gens, N);
}

/// F_p[b], |b| = 2: the geometric fixed points of the constant integral
/// Mackey functor with mod-p coefficients.
inline GradedDimSeries b_polynomial(long long N) {
    return from_generators({poly_gen(2)}, N);
}

/// Cells of the i-th cofiber block of the classical p-local decomposition
/// of HZ (x) HZ: {0} plus pairs {j(2p^i - 2), j(2p^i - 2) + 1} for j >= 1.
inline std::vector<long long> classical_zz_factor_cells(Prime p, int i, long long N) {
    if (i < 1) throw std::invalid_argument("classical_zz_factor_cells: index must be >= 1");
    std::vector<long long> out{0};
    const long long d = 2 * ipow(p.value(), i) - 2;
    for (long long j = 1; j * d <= N; ++j) {
        out.push_back(j * d);
        if (j * d + 1 <= N) out.push_back(j * d + 1);
    }
    return out;
}

/// Cell multiset of the full classical decomposition through degree N:
/// the Minkowski sum over all factors reaching the window.
inline std::vector<long long> classical_zz_cells(Prime p, long long N) {
    std::vector<long long> acc{0};
    for (int i = 1; 2 * ipow(p.value(), i) - 2 <= N; ++i)
        acc = minkowski_sum_cut(acc, classical_zz_factor_cells(p, i, N), N);
    return acc;
}

}  // namespace rocp
