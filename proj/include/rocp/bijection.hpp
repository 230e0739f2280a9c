#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rocp/grading.hpp"
#include "rocp/series.hpp"

namespace rocp {

// The final counting argument compares two graded vector spaces:
//
//   V = Lambda(tau_i : i >= 0) (x) F_p[b]
//   W = F_p[d_(i) : i >= 0] (x) Lambda(sigma_j, tau_k : j >= 0, k >= 1)
//       / (d_(i)^p, d_(i-1) tau_i, d_(i)^{p-1} sigma_i, sigma_{i-1} tau_i)
//
// with |sigma_i| = |tau_i| = 2p^i - 1, |b| = 2, |d_(i)| = 2p^i.  Both are
// enumerated by the same index data: sequences I = (a_i) with
// 0 <= a_i <= p-2, J = (eps_i) and K = (kappa_i) and K' = (kappa'_i) with
// entries in {0,1}, all finitely supported, subject to
//
//   * kappa'_i = 1 implies kappa_i = 1,
//   * I and K have disjoint support, J and K have disjoint support.
//
// An index names the V-monomial
//   M = (prod b^{a_i p^i}) tau_J (prod b^{kappa_i (p-1) p^i}) tau_{K'}
// and the W-monomial
//   N = d_I sigma_J (prod d_(i)^{(kappa_i - kappa'_i)(p-1)}) tau_{K'[1]},
// where K'[1] shifts every tau index up by one.  The two monomials sit in
// the same degree, position by position.

struct MonomialIndex {
    std::vector<long long> power;      ///< a_i in [0, p-2]        (I)
    std::vector<std::uint8_t> sigma;   ///< eps_i in {0,1}         (J)
    std::vector<std::uint8_t> kappa;   ///< kappa_i in {0,1}       (K)
    std::vector<std::uint8_t> kappa_prime;  ///< kappa'_i in {0,1}  (K')

    [[nodiscard]] std::size_t positions() const noexcept {
        return std::max(std::max(power.size(), sigma.size()),
                        std::max(kappa.size(), kappa_prime.size()));
    }
};

namespace detail {

inline long long index_entry(const std::vector<long long>& v, std::size_t i) {
    return i < v.size() ? v[i] : 0;
}
inline long long index_entry(const std::vector<std::uint8_t>& v, std::size_t i) {
    return i < v.size() ? v[i] : 0;
}

}  // namespace detail

inline void validate_index(const MonomialIndex& idx, Prime p) {
    for (std::size_t i = 0; i < idx.positions(); ++i) {
        const long long a = detail::index_entry(idx.power, i);
        const long long e = detail::index_entry(idx.sigma, i);
        const long long k = detail::index_entry(idx.kappa, i);
        const long long kp = detail::index_entry(idx.kappa_prime, i);
        if (a < 0 || a > p.value() - 2)
            throw std::invalid_argument("index: power entry out of [0, p-2]");
        if ((e | k | kp) > 1 || e < 0 || k < 0 || kp < 0)
            throw std::invalid_argument("index: bit entry out of {0,1}");
        if (kp == 1 && k != 1)
            throw std::invalid_argument("index: kappa' must be dominated by kappa");
        if (k == 1 && (a != 0 || e != 0))
            throw std::invalid_argument("index: supports must be disjoint from kappa");
    }
}

/// Degree of the V-monomial named by the index.
inline long long degree_m(const MonomialIndex& idx, Prime p) {
    validate_index(idx, p);
    long long deg = 0;
    for (std::size_t i = 0; i < idx.positions(); ++i) {
        const long long pi = ipow(p.value(), static_cast<int>(i));
        deg += 2 * detail::index_entry(idx.power, i) * pi;
        if (detail::index_entry(idx.sigma, i)) deg += 2 * pi - 1;
        if (detail::index_entry(idx.kappa, i)) deg += 2 * (p.value() - 1) * pi;
        if (detail::index_entry(idx.kappa_prime, i)) deg += 2 * pi - 1;
    }
    return deg;
}

/// Degree of the W-monomial named by the index.
inline long long degree_n(const MonomialIndex& idx, Prime p) {
    validate_index(idx, p);
    long long deg = 0;
    for (std::size_t i = 0; i < idx.positions(); ++i) {
        const long long pi = ipow(p.value(), static_cast<int>(i));
        deg += 2 * detail::index_entry(idx.power, i) * pi;
        if (detail::index_entry(idx.sigma, i)) deg += 2 * pi - 1;
        const long long k = detail::index_entry(idx.kappa, i);
        const long long kp = detail::index_entry(idx.kappa_prime, i);
        deg += 2 * (k - kp) * (p.value() - 1) * pi;
        if (kp) deg += 2 * pi * p.value() - 1;
    }
    return deg;
}

/// Visits every admissible index whose V-degree is at most N.  Support is
/// confined to positions whose cheapest contribution 2p^i - 1 fits under N;
/// higher positions only add degree.
inline void for_each_index(Prime p, long long N,
                           const std::function<void(const MonomialIndex&)>& fn) {
    int max_positions = 0;
    while (2 * ipow(p.value(), max_positions) - 1 <= N) ++max_positions;

    MonomialIndex idx;
    idx.power.assign(max_positions, 0);
    idx.sigma.assign(max_positions, 0);
    idx.kappa.assign(max_positions, 0);
    idx.kappa_prime.assign(max_positions, 0);

    std::function<void(int, long long)> rec = [&](int pos, long long deg) {
        if (pos == max_positions) {
            fn(idx);
            return;
        }
        const long long pi = ipow(p.value(), pos);
        // kappa = 0: any power digit and sigma bit.
        for (long long a = 0; a <= p.value() - 2; ++a) {
            for (int e = 0; e <= 1; ++e) {
                const long long d = deg + 2 * a * pi + (e ? 2 * pi - 1 : 0);
                if (d > N) break;
                idx.power[pos] = a;
                idx.sigma[pos] = static_cast<std::uint8_t>(e);
                rec(pos + 1, d);
            }
            if (deg + 2 * a * pi > N) break;
        }
        idx.power[pos] = 0;
        idx.sigma[pos] = 0;
        // kappa = 1: power and sigma forced to zero, kappa' free.
        for (int kp = 0; kp <= 1; ++kp) {
            const long long d = deg + 2 * (p.value() - 1) * pi + (kp ? 2 * pi - 1 : 0);
            if (d > N) break;
            idx.kappa[pos] = 1;
            idx.kappa_prime[pos] = static_cast<std::uint8_t>(kp);
            rec(pos + 1, d);
        }
        idx.kappa[pos] = 0;
        idx.kappa_prime[pos] = 0;
    };
    rec(0, 0);
}

/// Per-degree count of the monomials M_{I,J,K} through degree N.
inline GradedDimSeries enumerate_v(Prime p, long long N) {
    GradedDimSeries out(N);
    for_each_index(p, N, [&](const MonomialIndex& idx) { out.add(degree_m(idx, p), 1); });
    return out;
}

/// Per-degree count of the monomials N_{I,J,K} through degree N.
inline GradedDimSeries enumerate_w_basis(Prime p, long long N) {
    GradedDimSeries out(N);
    for_each_index(p, N, [&](const MonomialIndex& idx) {
        const long long d = degree_n(idx, p);
        if (d <= N) out.add(d, 1);
    });
    return out;
}

/// The quotient presentation of W restricted to the generators visible
/// below N, with bookkeeping for which generator index holds d_(i),
/// sigma_j, tau_k.
struct WPresentation {
    std::vector<GeneratorSpec> gens;
    std::vector<MonomialRelation> rels;
    std::vector<std::size_t> d_at;      ///< gens index of d_(i)
    std::vector<std::size_t> sigma_at;  ///< gens index of sigma_j
    std::vector<std::size_t> tau_at;    ///< gens index of tau_k, k >= 1 (entry k-1)
};

inline WPresentation w_presentation(Prime p, long long N) {
    WPresentation w;
    for (int i = 0; 2 * ipow(p.value(), i) <= N; ++i) {
        w.d_at.push_back(w.gens.size());
        w.gens.push_back(poly_gen(2 * ipow(p.value(), i)));
    }
    for (int j = 0; 2 * ipow(p.value(), j) - 1 <= N; ++j) {
        w.sigma_at.push_back(w.gens.size());
        w.gens.push_back(ext_gen(2 * ipow(p.value(), j) - 1));
    }
    for (int k = 1; 2 * ipow(p.value(), k) - 1 <= N; ++k) {
        w.tau_at.push_back(w.gens.size());
        w.gens.push_back(ext_gen(2 * ipow(p.value(), k) - 1));
    }
    const long long pp = p.value();
    for (std::size_t i = 0; i < w.d_at.size(); ++i)
        w.rels.push_back({{{w.d_at[i], pp}}});
    for (std::size_t k = 0; k < w.tau_at.size(); ++k)
        if (k < w.d_at.size())
            w.rels.push_back({{{w.d_at[k], 1}, {w.tau_at[k], 1}}});  // d_(k) tau_{k+1}
    for (std::size_t i = 0; i < w.sigma_at.size(); ++i)
        if (i < w.d_at.size())
            w.rels.push_back({{{w.d_at[i], pp - 1}, {w.sigma_at[i], 1}}});
    for (std::size_t k = 0; k < w.tau_at.size(); ++k)
        if (k < w.sigma_at.size())
            w.rels.push_back({{{w.sigma_at[k], 1}, {w.tau_at[k], 1}}});  // sigma_k tau_{k+1}
    return w;
}

/// Per-degree count of the monomials surviving the W relations.
inline GradedDimSeries enumerate_w_presentation(Prime p, long long N) {
    const WPresentation w = w_presentation(p, N);
    return from_presentation(w.gens, w.rels, N);
}

/// Dimension series of the fixed-point quotient presentation of a single
/// model factor: F_p[d_(i-1), xi_i] (x) Lambda(sigma_{i-1}, tau_i) modulo
/// (d^p, d tau, d^{p-1} sigma, sigma tau).
inline GradedDimSeries factor_phi_presentation_series(Prime p, int i, long long N) {
    if (i < 1) throw std::invalid_argument("factor_phi_presentation_series: index must be >= 1");
    const long long pim1 = ipow(p.value(), i - 1);
    const long long pi = ipow(p.value(), i);
    const std::vector<GeneratorSpec> gens{
        poly_gen(2 * pim1, p.value() - 1),  // d_(i-1), capped by d^p
        poly_gen(2 * pi - 2),               // xi_i
        ext_gen(2 * pim1 - 1),              // sigma_{i-1}
        ext_gen(2 * pi - 1),                // tau_i
    };
    const std::vector<MonomialRelation> rels{
        {{{0, 1}, {3, 1}}},                              // d tau
        {{{0, static_cast<long long>(p.value() - 1)}, {2, 1}}},  // d^{p-1} sigma
        {{{2, 1}, {3, 1}}},                              // sigma tau
    };
    return from_presentation(gens, rels, N);
}

/// Exponent vector of the W-monomial named by an index, in the generator
/// order of w_presentation.  Throws if the index carries weight beyond the
/// generators visible below the truncation.
inline std::vector<long long> w_exponents_from_index(const MonomialIndex& idx, const WPresentation& w,
                                                     Prime p) {
    validate_index(idx, p);
    std::vector<long long> exps(w.gens.size(), 0);
    for (std::size_t i = 0; i < idx.positions(); ++i) {
        const long long a = detail::index_entry(idx.power, i);
        const long long k = detail::index_entry(idx.kappa, i);
        const long long kp = detail::index_entry(idx.kappa_prime, i);
        const long long d_exp = a + (k - kp) * (p.value() - 1);
        if (d_exp > 0) {
            if (i >= w.d_at.size())
                throw std::domain_error("index weight beyond truncated d generators");
            exps[w.d_at[i]] = d_exp;
        }
        if (detail::index_entry(idx.sigma, i)) {
            if (i >= w.sigma_at.size())
                throw std::domain_error("index weight beyond truncated sigma generators");
            exps[w.sigma_at[i]] = 1;
        }
        if (kp) {
            if (i >= w.tau_at.size())
                throw std::domain_error("index weight beyond truncated tau generators");
            exps[w.tau_at[i]] = 1;  // tau_{i+1}
        }
    }
    return exps;
}

struct BijectionReport {
    long long index_count = 0;

    bool degree_identity = true;
    std::optional<long long> degree_mismatch_m;  ///< V-degree of first offending index
    std::optional<long long> degree_mismatch_n;

    bool v_match = true;
    std::optional<long long> v_first_mismatch;

    bool w_match = true;
    std::optional<long long> w_first_mismatch;

    bool monomial_bijection = true;
    std::optional<long long> monomial_mismatch_degree;

    [[nodiscard]] bool all() const noexcept {
        return degree_identity && v_match && w_match && monomial_bijection;
    }
};

/// Certifies the graded bijection four ways through degree N:
///   1. every admissible index has equal V- and W-degree;
///   2. the M-enumeration reproduces the free-algebra series of V;
///   3. the N-enumeration reproduces the quotient-presentation series of W;
///   4. the index -> W-monomial assignment hits every surviving
///      presentation monomial exactly once.
inline BijectionReport check_bijection(Prime p, long long N) {
    BijectionReport r;
    const WPresentation w = w_presentation(p, N);

    GradedDimSeries v_counts(N), w_counts(N);
    std::vector<std::vector<long long>> index_keys;
    for_each_index(p, N, [&](const MonomialIndex& idx) {
        ++r.index_count;
        const long long dm = degree_m(idx, p);
        const long long dn = degree_n(idx, p);
        if (dm != dn && r.degree_identity) {
            r.degree_identity = false;
            r.degree_mismatch_m = dm;
            r.degree_mismatch_n = dn;
        }
        v_counts.add(dm, 1);
        if (dn <= N) {
            w_counts.add(dn, 1);
            index_keys.push_back(w_exponents_from_index(idx, w, p));
        }
    });

    std::vector<GeneratorSpec> v_gens{poly_gen(2)};
    for (int i = 0; 2 * ipow(p.value(), i) - 1 <= N; ++i)
        v_gens.push_back(ext_gen(2 * ipow(p.value(), i) - 1));
    r.v_first_mismatch = first_mismatch(v_counts, from_generators(v_gens, N));
    r.v_match = !r.v_first_mismatch.has_value();

    const GradedDimSeries w_pres = from_presentation(w.gens, w.rels, N);
    r.w_first_mismatch = first_mismatch(w_counts, w_pres);
    r.w_match = !r.w_first_mismatch.has_value();

    std::vector<std::vector<long long>> pres_keys;
    for_each_presentation_monomial(w.gens, w.rels, N,
                                   [&](std::span<const long long> exps, long long) {
                                       pres_keys.emplace_back(exps.begin(), exps.end());
                                   });
    std::sort(index_keys.begin(), index_keys.end());
    std::sort(pres_keys.begin(), pres_keys.end());
    auto key_degree = [&](const std::vector<long long>& key) {
        long long d = 0;
        for (std::size_t g = 0; g < key.size(); ++g) d += key[g] * w.gens[g].degree;
        return d;
    };
    if (index_keys != pres_keys) {
        r.monomial_bijection = false;
        const auto [ia, ib] = std::mismatch(index_keys.begin(), index_keys.end(),
                                            pres_keys.begin(), pres_keys.end());
        if (ia != index_keys.end())
            r.monomial_mismatch_degree = key_degree(*ia);
        else if (ib != pres_keys.end())
            r.monomial_mismatch_degree = key_degree(*ib);
    }
    return r;
}

/// Matched monomial pair, rendered (for the CLI dump).
struct MonomialPair {
    long long degree = 0;
    std::string v_monomial;
    std::string w_monomial;
};

inline std::vector<MonomialPair> monomial_pairs(Prime p, long long N, std::size_t limit) {
    std::vector<MonomialPair> out;
    auto append_power = [](std::string& s, const std::string& base, long long e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += base;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for_each_index(p, N, [&](const MonomialIndex& idx) {
        if (out.size() >= limit) return;
        MonomialPair pair;
        pair.degree = degree_m(idx, p);
        long long b_exp = 0;
        std::string m_tail, n;
        for (std::size_t i = 0; i < idx.positions(); ++i) {
            const long long a = detail::index_entry(idx.power, i);
            const long long k = detail::index_entry(idx.kappa, i);
            const long long kp = detail::index_entry(idx.kappa_prime, i);
            const long long pi = ipow(p.value(), static_cast<int>(i));
            b_exp += a * pi + k * (p.value() - 1) * pi;
            append_power(n, "d_" + std::to_string(i), a + (k - kp) * (p.value() - 1));
            if (detail::index_entry(idx.sigma, i)) {
                append_power(m_tail, "tau_" + std::to_string(i), 1);
                append_power(n, "sigma_" + std::to_string(i), 1);
            }
            if (kp) {
                append_power(m_tail, "tau_" + std::to_string(i), 1);
                append_power(n, "tau_" + std::to_string(i + 1), 1);
            }
        }
        std::string m;
        append_power(m, "b", b_exp);
        if (!m_tail.empty()) m += (m.empty() ? "" : " ") + m_tail;
        pair.v_monomial = m.empty() ? "1" : m;
        pair.w_monomial = n.empty() ? "1" : n;
        out.push_back(std::move(pair));
    });
    return out;
}

}  // namespace rocp
