#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rocp {

/// Integer-graded dimension counts, bounded below and truncated at a fixed
/// degree N.  Counts are exact on [lower_bound, N]; everything above N is
/// deliberately forgotten, so consumers combining series must intersect
/// their exactness windows (enforced here by requiring equal truncations).
///
/// Zero entries are never stored; lower_bound() is the smallest degree
/// carrying a nonzero count (0 for the zero series).
class GradedDimSeries {
public:
    explicit GradedDimSeries(long long truncation) : truncation_(truncation) {}

    static GradedDimSeries unit(long long truncation) {
        GradedDimSeries s(truncation);
        s.add(0, 1);
        return s;
    }

    [[nodiscard]] long long truncation() const noexcept { return truncation_; }

    [[nodiscard]] long long lower_bound() const noexcept {
        return counts_.empty() ? 0 : counts_.begin()->first;
    }

    [[nodiscard]] long long count(long long degree) const noexcept {
        auto it = counts_.find(degree);
        return it == counts_.end() ? 0 : it->second;
    }

    [[nodiscard]] const std::map<long long, long long>& counts() const noexcept { return counts_; }

    [[nodiscard]] long long total() const noexcept {
        long long t = 0;
        for (auto& [d, n] : counts_) t += n;
        return t;
    }

    /// Adds n classes in the given degree; contributions above the
    /// truncation are dropped.
    void add(long long degree, long long n = 1) {
        if (n < 0) throw std::invalid_argument("GradedDimSeries::add: negative count");
        if (n == 0 || degree > truncation_) return;
        counts_[degree] += n;
    }

    /// Counts on the inclusive degree window [from, to], zeros included.
    [[nodiscard]] std::vector<long long> dense(long long from, long long to) const {
        std::vector<long long> out;
        for (long long d = from; d <= to; ++d) out.push_back(count(d));
        return out;
    }

    friend bool operator==(const GradedDimSeries& a, const GradedDimSeries& b) {
        if (a.truncation_ != b.truncation_)
            throw std::invalid_argument("GradedDimSeries: comparing series with different truncations");
        return a.counts_ == b.counts_;
    }

private:
    long long truncation_;
    std::map<long long, long long> counts_;
};

/// First degree on which the two series disagree, walking upward from the
/// smaller lower bound; nullopt if they agree through the truncation.
inline std::optional<long long> first_mismatch(const GradedDimSeries& a, const GradedDimSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("first_mismatch: different truncations");
    auto ia = a.counts().begin(), ib = b.counts().begin();
    while (ia != a.counts().end() || ib != b.counts().end()) {
        if (ib == b.counts().end() || (ia != a.counts().end() && ia->first < ib->first))
            return ia->first;
        if (ia == a.counts().end() || ib->first < ia->first)
            return ib->first;
        if (ia->second != ib->second)
            return ia->first;
        ++ia, ++ib;
    }
    return std::nullopt;
}

inline GradedDimSeries sum(const GradedDimSeries& a, const GradedDimSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("sum: different truncations");
    GradedDimSeries out = a;
    for (auto& [d, n] : b.counts()) out.add(d, n);
    return out;
}

inline GradedDimSeries shift(const GradedDimSeries& a, long long d) {
    GradedDimSeries out(a.truncation());
    for (auto& [deg, n] : a.counts()) out.add(deg + d, n);
    return out;
}

/// Graded tensor product: c_n = sum_i a_i * b_{n-i}.  Exact on
/// [lower_bound(a) + lower_bound(b), N] since both factors are bounded below.
inline GradedDimSeries tensor(const GradedDimSeries& a, const GradedDimSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("tensor: different truncations");
    GradedDimSeries out(a.truncation());
    for (auto& [da, na] : a.counts())
        for (auto& [db, nb] : b.counts()) {
            if (da + db > out.truncation()) break;  // b.counts() ascends
            out.add(da + db, na * nb);
        }
    return out;
}

/// One generator of a free graded-commutative algebra.
struct GeneratorSpec {
    enum class Kind { polynomial, exterior };

    long long degree = 1;
    Kind kind = Kind::polynomial;
    std::optional<long long> exponent_bound;  ///< max exponent, inclusive; exterior means 1
};

inline GeneratorSpec poly_gen(long long degree, std::optional<long long> exponent_bound = std::nullopt) {
    return {degree, GeneratorSpec::Kind::polynomial, exponent_bound};
}

inline GeneratorSpec ext_gen(long long degree) {
    return {degree, GeneratorSpec::Kind::exterior, 1};
}

/// A monomial relation: a monomial is killed when it meets every listed
/// (generator index, minimum exponent) pair simultaneously.
struct MonomialRelation {
    std::vector<std::pair<std::size_t, long long>> min_exponents;
};

namespace detail {

inline void validate_generators(std::span<const GeneratorSpec> gens) {
    for (const auto& g : gens) {
        if (g.degree <= 0)
            throw std::invalid_argument("generator degree must be positive");
        if (g.kind == GeneratorSpec::Kind::exterior && g.exponent_bound.value_or(1) != 1)
            throw std::invalid_argument("exterior generator must have exponent bound 1");
        if (g.exponent_bound && *g.exponent_bound < 0)
            throw std::invalid_argument("exponent bound must be nonnegative");
    }
}

inline void validate_relations(std::span<const GeneratorSpec> gens, std::span<const MonomialRelation> rels) {
    for (const auto& r : rels) {
        if (r.min_exponents.empty())
            throw std::invalid_argument("relation must name at least one generator");
        for (auto& [g, e] : r.min_exponents) {
            if (g >= gens.size())
                throw std::invalid_argument("relation references unknown generator");
            if (e < 1)
                throw std::invalid_argument("relation exponents must be >= 1");
        }
    }
}

}  // namespace detail

/// Dimension series of the free graded-commutative algebra on `gens`,
/// truncated at N.  Generators of degree > N contribute only the unit.
inline GradedDimSeries from_generators(std::span<const GeneratorSpec> gens, long long N) {
    detail::validate_generators(gens);
    GradedDimSeries acc = GradedDimSeries::unit(N);
    for (const auto& g : gens) {
        if (g.degree > N) continue;
        long long cap = N / g.degree;
        if (g.kind == GeneratorSpec::Kind::exterior) cap = std::min(cap, 1LL);
        if (g.exponent_bound) cap = std::min(cap, *g.exponent_bound);
        GradedDimSeries single(N);
        for (long long e = 0; e <= cap; ++e) single.add(e * g.degree, 1);
        acc = tensor(acc, single);
    }
    return acc;
}

inline GradedDimSeries from_generators(std::initializer_list<GeneratorSpec> gens, long long N) {
    return from_generators(std::span<const GeneratorSpec>(gens.begin(), gens.size()), N);
}

/// Visits every monomial of degree <= N surviving all relations, in
/// lexicographic order of the exponent vector.  The callback receives the
/// exponents (one per generator) and the monomial's degree.
inline void for_each_presentation_monomial(
    std::span<const GeneratorSpec> gens, std::span<const MonomialRelation> rels, long long N,
    const std::function<void(std::span<const long long>, long long)>& fn) {
    detail::validate_generators(gens);
    detail::validate_relations(gens, rels);

    std::vector<long long> caps(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        long long cap = gens[g].degree > N ? 0 : N / gens[g].degree;
        if (gens[g].kind == GeneratorSpec::Kind::exterior) cap = std::min(cap, 1LL);
        if (gens[g].exponent_bound) cap = std::min(cap, *gens[g].exponent_bound);
        caps[g] = std::max(cap, 0LL);
    }

    // Single-pair relations are exponent caps; the rest get checked per leaf.
    std::vector<MonomialRelation> mixed;
    for (const auto& r : rels) {
        if (r.min_exponents.size() == 1) {
            auto [g, e] = r.min_exponents.front();
            caps[g] = std::min(caps[g], e - 1);
        } else {
            mixed.push_back(r);
        }
    }

    std::vector<long long> exps(gens.size(), 0);
    auto survives = [&]() {
        for (const auto& r : mixed) {
            bool killed = true;
            for (auto& [g, e] : r.min_exponents)
                if (exps[g] < e) {
                    killed = false;
                    break;
                }
            if (killed) return false;
        }
        return true;
    };

    std::function<void(std::size_t, long long)> rec = [&](std::size_t g, long long degree) {
        if (g == gens.size()) {
            if (survives()) fn(exps, degree);
            return;
        }
        for (long long e = 0; e <= caps[g]; ++e) {
            const long long d = degree + e * gens[g].degree;
            if (d > N) break;
            exps[g] = e;
            rec(g + 1, d);
        }
        exps[g] = 0;
    };
    rec(0, 0);
}

/// Dimension series of the quotient of the free algebra on `gens` by the
/// span of all monomials killed by `rels`, truncated at N.
inline GradedDimSeries from_presentation(std::span<const GeneratorSpec> gens,
                                         std::span<const MonomialRelation> rels, long long N) {
    GradedDimSeries out(N);
    for_each_presentation_monomial(gens, rels, N,
                                   [&](std::span<const long long>, long long d) { out.add(d, 1); });
    return out;
}

/// Multiset Minkowski sum {a + b : a in A, b in B}, entries above N dropped.
inline std::vector<long long> minkowski_sum_cut(const std::vector<long long>& a,
                                                const std::vector<long long>& b, long long N) {
    std::vector<long long> out;
    for (long long x : a)
        for (long long y : b)
            if (x + y <= N) out.push_back(x + y);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rocp
