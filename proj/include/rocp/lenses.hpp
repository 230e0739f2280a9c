#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rocp/blocks.hpp"
#include "rocp/series.hpp"

namespace rocp {

// Atom rules.  On underlying spectra both CTheta and Moore have classes at
// {u, u+1}: the underlying spectrum of C(theta) is the Moore space M(p).
// On geometric fixed points theta dies (it is a transferred class), so
// CTheta contributes at {f-1, f}, while Moore carries a trivial action and
// contributes at {f, f+1}.  Spheres contribute one class at their lens
// degree in either mode.
//
// In phi mode the counts are dimensions of F_p (x) (-)^{Phi C_p}, i.e. the
// number of F_p[b]-module generators per degree, not total fixed-point
// homotopy.

namespace detail {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

inline GradedDimSeries cells_series(std::initializer_list<long long> degrees, long long N) {
    GradedDimSeries s(N);
    for (long long d : degrees) s.add(d, 1);
    return s;
}

}  // namespace detail

/// Dimension series of an expression under a lens, exact through degree N.
inline GradedDimSeries eval(const SpectrumExpr& e, Lens lens, long long N) {
    using detail::cells_series;
    return std::visit(
        detail::Overloaded{
            [&](const UnitExpr&) { return GradedDimSeries::unit(N); },
            [&](const SphereExpr& s) { return cells_series({lens_degree(lens, s.degree)}, N); },
            [&](const CThetaExpr& c) {
                const long long d = lens_degree(lens, c.degree);
                if (lens == Lens::underlying) return cells_series({d, d + 1}, N);
                return cells_series({d - 1, d}, N);
            },
            [&](const MooreExpr& m) {
                const long long d = lens_degree(lens, m.degree);
                return cells_series({d, d + 1}, N);
            },
            [&](const SumExpr& s) {
                GradedDimSeries acc(N);
                for (const auto& x : s.summands) acc = sum(acc, eval(x, lens, N));
                return acc;
            },
            [&](const TensorExpr& t) {
                GradedDimSeries acc = GradedDimSeries::unit(N);
                for (const auto& x : t.factors) acc = tensor(acc, eval(x, lens, N));
                return acc;
            },
            [&](const FreeNormExpr& f) {
                const long long step = lens_degree(lens, norm_degree(f.p, f.index));
                if (step <= 0) throw std::domain_error("eval: free norm degrees do not diverge");
                GradedDimSeries acc(N);
                for (long long k = 0; k * step <= N; ++k) acc.add(k * step, 1);
                return acc;
            },
            [&](const TThetaExpr& t) { return eval(expand_t_theta(t.p, t.index), lens, N); },
            [&](const DsaFactorExpr& f) { return eval(expand_dsa_factor(f.p, f.index), lens, N); },
            [&](const DsaModelExpr& m) { return eval(expand_dsa_model(m.p, lens, N), lens, N); },
        },
        e.node);
}

/// The multiset of lens-degree cells of an expression, sorted, cut at N.
/// Explicit and therefore only suitable for small windows; eval() carries
/// the same information as per-degree counts.
inline std::vector<long long> cells(const SpectrumExpr& e, Lens lens, long long N) {
    auto cut = [N](std::vector<long long> v) {
        std::erase_if(v, [N](long long d) { return d > N; });
        std::sort(v.begin(), v.end());
        return v;
    };
    return std::visit(
        detail::Overloaded{
            [&](const UnitExpr&) { return cut({0}); },
            [&](const SphereExpr& s) { return cut({lens_degree(lens, s.degree)}); },
            [&](const CThetaExpr& c) {
                const long long d = lens_degree(lens, c.degree);
                return lens == Lens::underlying ? cut({d, d + 1}) : cut({d - 1, d});
            },
            [&](const MooreExpr& m) {
                const long long d = lens_degree(lens, m.degree);
                return cut({d, d + 1});
            },
            [&](const SumExpr& s) {
                std::vector<long long> acc;
                for (const auto& x : s.summands) {
                    auto c = cells(x, lens, N);
                    acc.insert(acc.end(), c.begin(), c.end());
                }
                std::sort(acc.begin(), acc.end());
                return acc;
            },
            [&](const TensorExpr& t) {
                std::vector<long long> acc{0};
                for (const auto& x : t.factors)
                    acc = minkowski_sum_cut(acc, cells(x, lens, N), N);
                return acc;
            },
            [&](const FreeNormExpr& f) {
                const long long step = lens_degree(lens, norm_degree(f.p, f.index));
                if (step <= 0) throw std::domain_error("cells: free norm degrees do not diverge");
                std::vector<long long> acc;
                for (long long k = 0; k * step <= N; ++k) acc.push_back(k * step);
                return acc;
            },
            [&](const TThetaExpr& t) { return cells(expand_t_theta(t.p, t.index), lens, N); },
            [&](const DsaFactorExpr& f) { return cells(expand_dsa_factor(f.p, f.index), lens, N); },
            [&](const DsaModelExpr& m) { return cells(expand_dsa_model(m.p, lens, N), lens, N); },
        },
        e.node);
}

/// Report for the three hypotheses under which a dimension count detects
/// an equivalence: (i) underlying series agree, (ii) fixed-point series
/// are degreewise finite and agree, (iii) fixed-point homotopy is free
/// over F_p[b].  In this model (ii)-finiteness and (iii) hold structurally:
/// every phi evaluation is a count of F_p[b]-module generators.
struct DetectReport {
    bool underlying_equal = false;
    std::optional<long long> underlying_first_mismatch;
    bool phi_equal = false;
    std::optional<long long> phi_first_mismatch;
    bool phi_degreewise_finite = true;
    bool phi_free_over_b = true;

    [[nodiscard]] bool all() const noexcept {
        return underlying_equal && phi_equal && phi_degreewise_finite && phi_free_over_b;
    }
};

inline DetectReport check_detect_hypotheses(const SpectrumExpr& lhs,
                                            const GradedDimSeries& underlying_reference,
                                            const GradedDimSeries& phi_reference, long long N) {
    DetectReport r;
    const GradedDimSeries eu = eval(lhs, Lens::underlying, N);
    const GradedDimSeries ep = eval(lhs, Lens::phi, N);
    r.underlying_first_mismatch = first_mismatch(eu, underlying_reference);
    r.underlying_equal = !r.underlying_first_mismatch.has_value();
    r.phi_first_mismatch = first_mismatch(ep, phi_reference);
    r.phi_equal = !r.phi_first_mismatch.has_value();
    return r;
}

}  // namespace rocp
