#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasicount/factorization.hpp"

namespace quasicount {

// Dirichlet series coefficients, 1-indexed; values[1] = 1 for all normalized
// counting functions here.
struct CoefficientTable {
    std::string name;
    std::vector<BigInt> values;  // index 0 unused

    explicit CoefficientTable(std::string n, long long M)
        : name(std::move(n)), values(static_cast<std::size_t>(M) + 1, BigInt(0)) {}

    long long M() const { return static_cast<long long>(values.size()) - 1; }
    BigInt& operator[](long long m) { return values.at(static_cast<std::size_t>(m)); }
    const BigInt& operator[](long long m) const { return values.at(static_cast<std::size_t>(m)); }

    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
        return a.values == b.values;
    }
};

// Arithmetic function determined by its values on prime powers.
struct MultiplicativeFunction {
    std::string name;
    std::function<BigInt(long long p, int t)> rule;  // t >= 1

    BigInt value(long long m) const {
        if (m < 1) throw std::domain_error("multiplicative function index must be >= 1");
        BigInt v = 1;
        for (auto& [p, t] : factor_rational(m)) v *= rule(p, t);
        return v;
    }

    // Table built with a smallest-prime-factor sieve; independent of evaluation order.
    CoefficientTable table(long long M) const {
        CoefficientTable out(name, M);
        if (M < 1) return out;
        std::vector<long long> spf(static_cast<std::size_t>(M) + 1, 0);
        for (long long i = 2; i <= M; ++i) {
            if (spf[i] == 0)
                for (long long j = i; j <= M; j += i)
                    if (spf[j] == 0) spf[j] = i;
        }
        out[1] = 1;
        for (long long m = 2; m <= M; ++m) {
            long long p = spf[m], q = m, t = 0;
            while (q % p == 0) {
                q /= p;
                ++t;
            }
            out[m] = out[q] * rule(p, static_cast<int>(t));
        }
        return out;
    }
};

// (a * b)[m] = sum over d | m of a[d] * b[m/d]
inline CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b) {
    if (a.M() != b.M()) throw std::invalid_argument("convolution requires equal table lengths");
    CoefficientTable out(a.name + "*" + b.name, a.M());
    for (long long d = 1; d <= a.M(); ++d) {
        if (a[d] == 0) continue;
        for (long long m = d; m <= a.M(); m += d) out[m] += a[d] * b[m / d];
    }
    return out;
}

// ---------------------------------------------------------------------------
// The counting functions, defined by their prime-power rules
// ---------------------------------------------------------------------------

// Triangular sublattices of index m = ideals of Z[w] of norm m.
inline MultiplicativeFunction a6_function() {
    return {"a6", [](long long p, int t) -> BigInt {
                if (p == 3) return 1;
                if (p % 3 == 1) return t + 1;
                return t % 2 == 0 ? 1 : 0;
            }};
}

// Similarity submodules of Z[xi12] of index m = ideals of norm m.
inline MultiplicativeFunction a12_function() {
    return {"a12", [](long long p, int t) -> BigInt {
                if (p == 2 || p == 3) return t % 2 == 0 ? 1 : 0;
                if (p % 12 == 1) return binomial(static_cast<unsigned long>(t) + 3, 3);
                return t % 2 == 0 ? t / 2 + 1 : 0;
            }};
}

// Coincidence sublattices of the triangular lattice of index m.
inline MultiplicativeFunction coincidence_e3_function() {
    return {"coincidence_e3", [](long long p, int t) -> BigInt {
                (void)t;
                return p % 3 == 1 ? 2 : 0;
            }};
}

// Coincidence submodules of Z[xi12] of index m.
inline MultiplicativeFunction coincidence_z12_function() {
    return {"coincidence_z12", [](long long p, int t) -> BigInt {
                if (p % 12 == 1) return 4 * t;
                if (p % 12 == 5 || p % 12 == 7) return t % 2 == 0 ? 2 : 0;
                return 0;
            }};
}

// Ideals of Z[sqrt3] of norm m (Dedekind zeta of the real quadratic subfield).
inline MultiplicativeFunction zeta_qsqrt3_function() {
    return {"zeta_qsqrt3", [](long long p, int t) -> BigInt {
                if (p == 2 || p == 3) return 1;
                if (p % 12 == 1 || p % 12 == 11) return t + 1;
                return t % 2 == 0 ? 1 : 0;
            }};
}

// Norm-only central shelling heuristic f(m), c = 12 f(m) where it applies.
inline MultiplicativeFunction f_count_function() {
    return {"f", [](long long p, int t) -> BigInt {
                if (p == 2 || p == 3) return t % 2 == 0 ? 1 : 0;
                if (p % 12 == 1) return t + 1;
                if (p % 12 == 11) return t % 2 == 0 ? 1 : 0;
                return t % 2 == 0 ? t / 2 + 1 : 0;
            }};
}

inline BigInt a6(long long m) { return a6_function().value(m); }
inline BigInt a12(long long m) { return a12_function().value(m); }
inline BigInt coincidence_e3(long long m) { return coincidence_e3_function().value(m); }
inline BigInt coincidence_z12(long long m) { return coincidence_z12_function().value(m); }
inline BigInt zeta_qsqrt3_coeff(long long m) { return zeta_qsqrt3_function().value(m); }
inline BigInt f_count(long long m) { return f_count_function().value(m); }

// ---------------------------------------------------------------------------
// Sublattice counts l_n(m): coefficients of zeta(s) zeta(s-1) ... zeta(s-n+1)
// ---------------------------------------------------------------------------

// Coefficients of zeta(s - k): m -> m^k.
inline CoefficientTable zeta_shift_table(int k, long long M) {
    CoefficientTable out("zeta(s-" + std::to_string(k) + ")", M);
    for (long long m = 1; m <= M; ++m) out[m] = pow_bigint(bigint_of(m), static_cast<unsigned long>(k));
    return out;
}

inline CoefficientTable ell_table(int rank, long long M) {
    if (rank < 1) throw std::domain_error("rank must be >= 1");
    CoefficientTable acc = zeta_shift_table(0, M);
    for (int k = 1; k < rank; ++k) acc = dirichlet_convolve(acc, zeta_shift_table(k, M));
    acc.name = "ell" + std::to_string(rank);
    return acc;
}

inline BigInt ell(int rank, long long m) { return ell_table(rank, m)[m]; }

// ---------------------------------------------------------------------------
// Zeta-quotient identities for the coincidence series
// ---------------------------------------------------------------------------

// Coefficients of a table evaluated at 2s: value at k lands on k^2.
inline CoefficientTable at_2s(const CoefficientTable& t, long long M) {
    CoefficientTable out(t.name + "(2s)", M);
    for (long long k = 1; k * k <= M; ++k) out[k * k] = t[k];
    return out;
}

// Verifies coefficientwise, up to index M:
//   "phi3":  Phi_E3 * zeta(2s) * (1 + 3^-s)  =  zeta_Q(xi3)
//   "phi12": Phi_Z12 * zeta_Q(sqrt3)(2s)     =  zeta_Q(xi12)
inline bool series_identity_check(const std::string& name, long long M) {
    if (name == "phi3") {
        CoefficientTable lhs = dirichlet_convolve(coincidence_e3_function().table(M),
                                                  at_2s(zeta_shift_table(0, M), M));
        CoefficientTable one_plus_3s("1+3^-s", M);
        one_plus_3s[1] = 1;
        if (M >= 3) one_plus_3s[3] = 1;
        lhs = dirichlet_convolve(lhs, one_plus_3s);
        return lhs == a6_function().table(M);
    }
    if (name == "phi12") {
        CoefficientTable lhs = dirichlet_convolve(coincidence_z12_function().table(M),
                                                  at_2s(zeta_qsqrt3_function().table(M), M));
        return lhs == a12_function().table(M);
    }
    throw std::invalid_argument("unknown identity: " + name);
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

inline std::string table_to_csv(const CoefficientTable& t) {
    std::string out = "m,value\n";
    for (long long m = 1; m <= t.M(); ++m) out += std::to_string(m) + "," + t[m].get_str() + "\n";
    return out;
}

inline std::string table_to_json(const CoefficientTable& t) {
    std::string out = "{\"name\":\"" + t.name + "\",\"M\":" + std::to_string(t.M()) + ",\"values\":[";
    for (long long m = 1; m <= t.M(); ++m) {
        if (m > 1) out += ",";
        out += t[m].get_str();
    }
    out += "]}";
    return out;
}

}  // namespace quasicount
