#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quasicount/factorization.hpp"

namespace quasicount {

using Poly = std::vector<BigInt>;  // dense, index = degree

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_pow(Poly base, int e) {
    Poly out{BigInt(1)};
    for (int i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
}

// Rational generating function with numerator and denominator normalized to
// constant term 1, so the series starts at 1 and log has no constant term.
struct RationalGF {
    Poly num{BigInt(1)};
    Poly den{BigInt(1)};

    RationalGF() = default;
    RationalGF(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (num.empty() || den.empty() || num[0] != 1 || den[0] != 1)
            throw std::invalid_argument("generating function must have constant terms 1");
    }
};

enum class ZetaSystem { FibonacciLI, FibonacciTorus, PenroseLI, PenroseTorus };

inline ZetaSystem parse_zeta_system(const std::string& s) {
    if (s == "fibonacci-li") return ZetaSystem::FibonacciLI;
    if (s == "fibonacci-torus") return ZetaSystem::FibonacciTorus;
    if (s == "penrose-li") return ZetaSystem::PenroseLI;
    if (s == "penrose-torus") return ZetaSystem::PenroseTorus;
    throw std::invalid_argument("unknown system: " + s);
}

inline const char* to_string(ZetaSystem s) {
    switch (s) {
        case ZetaSystem::FibonacciLI: return "fibonacci-li";
        case ZetaSystem::FibonacciTorus: return "fibonacci-torus";
        case ZetaSystem::PenroseLI: return "penrose-li";
        case ZetaSystem::PenroseTorus: return "penrose-torus";
    }
    return "?";
}

// The catalogued zeta functions of the inflation action, on the LI class and
// on the torus parametrization.
inline RationalGF catalog(ZetaSystem s) {
    const Poly one_m_z{BigInt(1), BigInt(-1)};            // 1 - z
    const Poly one_p_z{BigInt(1), BigInt(1)};             // 1 + z
    const Poly one_m_z2{BigInt(1), BigInt(0), BigInt(-1)};  // 1 - z^2
    const Poly fib{BigInt(1), BigInt(-1), BigInt(-1)};    // 1 - z - z^2
    const Poly fib_alt{BigInt(1), BigInt(1), BigInt(-1)};  // 1 + z - z^2
    const Poly golden2{BigInt(1), BigInt(-3), BigInt(1)};  // 1 - 3z + z^2
    switch (s) {
        case ZetaSystem::FibonacciLI:
            return {one_m_z, fib};
        case ZetaSystem::FibonacciTorus:
            return {one_m_z2, fib};
        case ZetaSystem::PenroseLI:
            return {poly_mul(poly_pow(fib, 2), one_p_z),
                    poly_mul(poly_mul(golden2, poly_pow(fib_alt, 3)), one_m_z)};
        case ZetaSystem::PenroseTorus:
            return {poly_mul(poly_pow(fib, 2), poly_pow(fib_alt, 2)),
                    poly_mul(poly_mul(golden2, poly_pow(one_m_z, 2)), poly_pow(one_p_z, 4))};
    }
    throw std::invalid_argument("unknown system");
}

// Taylor coefficients 0..M of num/den; integral because den(0) = 1.
inline std::vector<BigInt> series_coeffs(const RationalGF& gf, int M) {
    if (M < 0) throw std::domain_error("order must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(M) + 1, BigInt(0));
    for (int k = 0; k <= M; ++k) {
        BigInt acc = k < static_cast<int>(gf.num.size()) ? gf.num[k] : BigInt(0);
        for (int j = 1; j <= k && j < static_cast<int>(gf.den.size()); ++j)
            acc -= gf.den[j] * c[k - j];
        c[k] = acc;
    }
    return c;
}

// Fixed-point counts a_1..a_M of the iterated map, read off the logarithmic
// derivative: z zeta'/zeta = z num'/num - z den'/den, each an integer series.
inline std::vector<BigInt> fixed_point_counts(const RationalGF& gf, int M) {
    if (M < 1) throw std::domain_error("order must be >= 1");
    // z p'/p has zero constant term; series_coeffs wants constant term 1, so
    // compute (z p' + p)/p and drop the leading 1
    auto log_deriv = [&](const Poly& p) {
        Poly shifted(p.size(), BigInt(0));
        for (std::size_t k = 1; k < p.size(); ++k)
            shifted[k] = bigint_of(static_cast<long long>(k)) * p[k];
        for (std::size_t k = 0; k < p.size(); ++k) shifted[k] += p[k];
        std::vector<BigInt> c = series_coeffs({shifted, p}, M);
        c[0] -= 1;
        return c;
    };
    std::vector<BigInt> n = log_deriv(gf.num), d = log_deriv(gf.den);
    std::vector<BigInt> a(static_cast<std::size_t>(M) + 1, BigInt(0));
    for (int k = 1; k <= M; ++k) a[k] = n[k] - d[k];
    a.erase(a.begin());  // 1-indexed result a_1..a_M
    return a;
}

struct InvalidOrbitDataError : std::runtime_error {
    int n;
    InvalidOrbitDataError(int n_, const std::string& what) : std::runtime_error(what), n(n_) {}
};

// Cycle counts by Moebius inversion of a_n = sum over m | n of m c_m;
// rejects non-integral or negative results.
inline std::vector<BigInt> cycle_counts(const std::vector<BigInt>& a) {
    int M = static_cast<int>(a.size());
    std::vector<BigInt> c(a.size(), BigInt(0));
    for (int n = 1; n <= M; ++n) {
        BigInt acc = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) acc += bigint_of(mobius(n / d)) * a[d - 1];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
            throw InvalidOrbitDataError(n, "cycle count c_" + std::to_string(n) + " is not integral");
        BigInt cn = acc / n;
        if (cn < 0)
            throw InvalidOrbitDataError(n, "cycle count c_" + std::to_string(n) + " is negative");
        c[static_cast<std::size_t>(n) - 1] = cn;
    }
    return c;
}

// Checks 1/zeta = prod (1 - z^n)^(c_n) to order M against den/num. Each
// factor is expanded binomially, so large cycle counts cost only M/n terms.
inline bool euler_product_check(const RationalGF& gf, const std::vector<BigInt>& c, int M) {
    if (M < 0) throw std::domain_error("order must be >= 0");
    std::vector<BigInt> prod(static_cast<std::size_t>(M) + 1, BigInt(0));
    prod[0] = 1;
    for (int n = 1; n <= M && n <= static_cast<int>(c.size()); ++n) {
        const BigInt& cn = c[static_cast<std::size_t>(n) - 1];
        if (cn < 0) return false;
        if (cn == 0) continue;
        std::vector<BigInt> factor(static_cast<std::size_t>(M) + 1, BigInt(0));
        for (int k = 0; n * k <= M; ++k) {
            BigInt b;
            mpz_bin_ui(b.get_mpz_t(), cn.get_mpz_t(), static_cast<unsigned long>(k));
            factor[static_cast<std::size_t>(n) * k] = (k % 2 == 0) ? b : -b;
        }
        std::vector<BigInt> next(static_cast<std::size_t>(M) + 1, BigInt(0));
        for (int i = 0; i <= M; ++i) {
            if (prod[i] == 0) continue;
            for (int j = 0; i + j <= M; j += n)
                if (factor[j] != 0) next[i + j] += prod[i] * factor[j];
        }
        prod = std::move(next);
    }
    std::vector<BigInt> inv = series_coeffs({gf.den, gf.num}, M);
    return prod == inv;
}

}  // namespace quasicount
