#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

namespace rocp {

/// A point of the p-local RO(C_p) degree lattice, stored as the pair
/// (dimension of the fixed subrepresentation, total real dimension).
///
/// Working p-locally collapses the full representation ring onto this
/// two-coordinate lattice: every nontrivial 2-dimensional rotation
/// representation contributes (0,2), the trivial line contributes (1,1),
/// and at p = 2 the sign line contributes (0,1).
struct RODegree {
    long long fixed = 0;
    long long underlying = 0;

    friend constexpr RODegree operator+(RODegree a, RODegree b) noexcept {
        return {a.fixed + b.fixed, a.underlying + b.underlying};
    }
    friend constexpr RODegree operator-(RODegree a, RODegree b) noexcept {
        return {a.fixed - b.fixed, a.underlying - b.underlying};
    }
    constexpr RODegree operator-() const noexcept { return {-fixed, -underlying}; }
    friend constexpr RODegree operator*(long long n, RODegree d) noexcept {
        return {n * d.fixed, n * d.underlying};
    }
    friend constexpr RODegree operator*(RODegree d, long long n) noexcept { return n * d; }
    friend constexpr bool operator==(RODegree, RODegree) noexcept = default;
};

inline std::string to_string(RODegree d) {
    return "(" + std::to_string(d.fixed) + "," + std::to_string(d.underlying) + ")";
}

inline std::ostream& operator<<(std::ostream& os, RODegree d) { return os << to_string(d); }

/// A validated prime, p >= 2.
class Prime {
public:
    explicit Prime(int p) : value_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("not prime: " + std::to_string(p));
    }

    [[nodiscard]] int value() const noexcept { return value_; }

    static bool is_prime(int p) noexcept {
        if (p < 2) return false;
        for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(Prime, Prime) noexcept = default;

private:
    int value_;
};

/// lambda: the rotation plane, one fixed vector short of everything.
constexpr RODegree lambda_degree() noexcept { return {0, 2}; }

/// sigma: the sign line at p = 2.
constexpr RODegree sigma_degree() noexcept { return {0, 1}; }

/// The trivial representation R^n.
constexpr RODegree integer_degree(long long n) noexcept { return {n, n}; }

/// Degree of theta: S^{lambda-2} -> S^0, the transfer of 1.
constexpr RODegree theta_degree() noexcept { return {-2, 0}; }

/// Degree of the Thom class u_lambda: S^lambda -> Sigma^2 HZ.
constexpr RODegree u_lambda_degree() noexcept { return {-2, 0}; }

inline long long ipow(long long base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    long long r = 1;
    for (int e = 0; e < exp; ++e) {
        if (base != 0 && r > (1LL << 62) / base)
            throw std::overflow_error("ipow: overflow");
        r *= base;
    }
    return r;
}

/// The regular representation rho_{C_p} = (1, p).
inline RODegree rho(Prime p) noexcept { return {1, p.value()}; }

/// Degree of the generator t_i: 2 p^{i-1} rho - lambda.
inline RODegree t_degree(Prime p, int i) {
    if (i < 1) throw std::invalid_argument("t_degree: index must be >= 1");
    return 2 * ipow(p.value(), i - 1) * rho(p) - lambda_degree();
}

/// Degree of the norm N(t_i): (2 p^i - 2) rho.
inline RODegree norm_degree(Prime p, int i) {
    if (i < 1) throw std::invalid_argument("norm_degree: index must be >= 1");
    return (2 * ipow(p.value(), i) - 2) * rho(p);
}

/// norm_degree(p,i) - p * t_degree(p,i).  Always (-2, 0), the degree of
/// lambda - 2: the gap between the norm cell and the p-th power of t_i
/// is exactly the degree of theta.
inline RODegree norm_transfer_gap(Prime p, int i) {
    return norm_degree(p, i) - p.value() * t_degree(p, i);
}

/// Degree of the splitting generator e_k.  The defining sum of rotation
/// lines lambda^{i-k}, 0 <= i <= k-1, has a trivial plane for each i with
/// p | (i - k), so e_k sits in degree (2*floor(k/p), 2k).
inline RODegree e_degree(Prime p, long long k) {
    if (k < 0) throw std::invalid_argument("e_degree: k must be >= 0");
    return {2 * (k / p.value()), 2 * k};
}

/// p * |e_{p^i}| - |e_{p^{i+1}}|: the degree of the coefficient relating
/// e_{p^i}^p to e_{p^{i+1}}.  Equals theta_degree() at i = 0 and vanishes
/// for i >= 1.
inline RODegree mult_gap(Prime p, int i) {
    if (i < 0) throw std::invalid_argument("mult_gap: index must be >= 0");
    return p.value() * e_degree(p, ipow(p.value(), i)) - e_degree(p, ipow(p.value(), i + 1));
}

enum class VanishingVerdict {
    pass,            ///< positive underlying and positive fixed dimension
    pass_with_flag,  ///< positive underlying dimension but fixed dimension zero
    fail,
};

struct CoefficientDegree {
    RODegree degree;
    VanishingVerdict verdict;
};

/// Degree of the coefficient c_{i,j} in e_{p^i}^p = sum c_{i,j} e_j, for
/// 0 <= j < p^{i+1}, together with a vanishing-region verdict.  The strict
/// criterion (both coordinates positive) fails on the fixed coordinate for
/// every i = 0 coefficient; those cases are flagged rather than adjudicated.
inline CoefficientDegree coefficient_degree(Prime p, int i, long long j) {
    if (i < 0) throw std::invalid_argument("coefficient_degree: index must be >= 0");
    const long long bound = ipow(p.value(), i + 1);
    if (j < 0 || j >= bound)
        throw std::invalid_argument("coefficient_degree: j out of range");
    const RODegree d = p.value() * e_degree(p, ipow(p.value(), i)) - e_degree(p, j);
    VanishingVerdict v = VanishingVerdict::fail;
    if (d.underlying > 0 && d.fixed > 0)
        v = VanishingVerdict::pass;
    else if (d.underlying > 0 && d.fixed == 0)
        v = VanishingVerdict::pass_with_flag;
    return {d, v};
}

/// Exponent audit for the coefficient carrying e_{p^i} to beta_{(i)}.
///
/// The coefficient is taken to be p^{i-1} * theta * u_lambda^m (under the
/// division convention no nonnegative exponent solves the degree equation).
/// `forced` is the unique m with |theta| + m*|u_lambda| equal to the
/// required degree |e_{p^i}| - |beta_{(i)}|; `formula` is the exponent
/// printed in the formula being audited, p^i(p-1) - 1.  Neither value is
/// silently adopted: both are returned along with the match flag.
struct ThetaCoefficientExponents {
    RODegree required;
    long long forced = 0;
    long long formula = 0;
    bool match = false;
};

inline ThetaCoefficientExponents theta_coefficient_exponents(Prime p, int i) {
    if (i < 1) throw std::invalid_argument("theta_coefficient_exponents: index must be >= 1");
    const long long q = ipow(p.value(), i);
    const RODegree required = e_degree(p, q) - integer_degree(2 * q);
    if (required.underlying != 0 || required.fixed % 2 != 0 || required.fixed > -2)
        throw std::domain_error("theta_coefficient_exponents: no solution of the form theta * u_lambda^m");
    ThetaCoefficientExponents out;
    out.required = required;
    out.forced = (-required.fixed - 2) / 2;
    out.formula = q * (p.value() - 1) - 1;
    out.match = out.forced == out.formula;
    return out;
}

/// The two dimension-counting modes: underlying spectrum (total real
/// dimension) and geometric fixed points (fixed dimension).
enum class Lens { underlying, phi };

constexpr long long lens_degree(Lens lens, RODegree d) noexcept {
    return lens == Lens::underlying ? d.underlying : d.fixed;
}

inline std::string to_string(Lens lens) {
    return lens == Lens::underlying ? "underlying" : "phi";
}

/// At odd p every degree in the image of the lattice has even
/// underlying - fixed; at p = 2 the sign line breaks the parity.
inline bool parity_ok(Prime p, RODegree d) noexcept {
    return p.value() == 2 || (d.underlying - d.fixed) % 2 == 0;
}

}  // namespace rocp
