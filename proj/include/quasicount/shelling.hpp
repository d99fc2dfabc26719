#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "quasicount/dirichlet.hpp"
#include "quasicount/lattice_enum.hpp"
#include "quasicount/polygon.hpp"

namespace quasicount {

enum class ShellMethod { PrimeForm, NormHeuristic, Oracle };

struct ShellingResult {
    ZSqrt3 r2{};
    long long count = 0;
    ShellMethod method = ShellMethod::PrimeForm;
    ZSqrt3Factorization factorization;
};

// Number of module points x with x * conj(x) = r2, from the prime-power
// formula: 12 times prod (t+1) over the split primes dividing r2. The count
// vanishes unless every inert factor appears to even exponent; the two
// ramified primes (above 2 and 3) stay prime in the quadratic step up, so the
// same parity rule applies to them. r2 = 0 is the origin shell of size 1.
inline ShellingResult central_shelling(const ZSqrt3& r2) {
    ShellingResult out;
    out.r2 = r2;
    out.method = ShellMethod::PrimeForm;
    if (r2.is_zero()) {
        out.count = 1;
        return out;
    }
    out.factorization = factor_zsqrt3(r2);
    if (!is_totally_positive(r2)) {
        out.count = 0;
        return out;
    }
    long long c = 12;
    for (const auto& f : out.factorization.factors) {
        if (f.cls == Z12Class::SplitsInZ12) {
            c *= f.exponent + 1;
        } else if (f.exponent % 2 != 0) {
            out.count = 0;
            return out;
        }
    }
    out.count = c;
    return out;
}

inline long long central_shell_count(const ZSqrt3& r2) { return central_shelling(r2).count; }

// Triangular-lattice central shelling: 6 a6(m), the 6 being the unit count.
inline long long central_shell_e3(long long m) {
    if (m < 1) throw std::domain_error("central_shell_e3 requires m >= 1");
    return 6 * to_ll(a6(m));
}

// The norm-only formula c = 12 f(N(r2)) is valid iff no rational prime
// p = 1 (12) contributes both conjugate primes to r2. Returns the first
// offending p, if any. Note the norm of an inert prime is p^2 = 1 (12), so
// primality of the factor norm is part of the test.
inline std::optional<long long> norm_heuristic_failing_prime(const ZSqrt3& r2) {
    if (r2.is_zero()) throw std::domain_error("norm heuristic needs r2 != 0");
    std::map<long long, int> seen;  // p -> number of distinct primes above p in r2
    for (const auto& f : factor_zsqrt3(r2).factors) {
        long long p = norm(f.prime);
        if (p < 0) p = -p;
        if (p % 12 == 1 && is_prime_u64(static_cast<std::uint64_t>(p)) && ++seen[p] == 2) return p;
    }
    return std::nullopt;
}

inline bool norm_heuristic_valid(const ZSqrt3& r2) {
    return !norm_heuristic_failing_prime(r2).has_value();
}

struct NormHeuristicError : std::domain_error {
    long long failing_prime;
    explicit NormHeuristicError(long long p)
        : std::domain_error("norm heuristic invalid: both primes above " + std::to_string(p) +
                            " divide r2"),
          failing_prime(p) {}
};

// 12 f(N(r2)); callers must ensure the shell is non-empty (see
// central_shelling); throws when the validity predicate fails.
inline long long central_shell_via_norm(const ZSqrt3& r2) {
    if (auto p = norm_heuristic_failing_prime(r2)) throw NormHeuristicError(*p);
    long long m = norm(r2);
    if (m < 0) m = -m;
    return 12 * to_ll(f_count(m));
}

// ---------------------------------------------------------------------------
// Averaged shelling for the shield tiling
// ---------------------------------------------------------------------------

// Orbit of a module point under the point symmetry group D12 (rotations by
// powers of xi and complex conjugation).
inline std::vector<Z12> d12_orbit(const Z12& x) {
    std::set<Z12> orbit;
    Z12 r = x;
    for (int k = 0; k < 12; ++k) {
        orbit.insert(r);
        orbit.insert(complex_conjugate(r));
        r = r * Z12{0, 1, 0, 0};
    }
    return {orbit.begin(), orbit.end()};
}

struct AveragedShellingRow {
    ZSqrt3 r2{};
    std::vector<std::pair<Z12, long long>> representatives;  // (orbit rep, orbit length)
    long long central_count = 0;
    Q3 value;  // element of (1/3) Z[sqrt3]
};

// Averaged number of points of the tiling at squared distance r2 from a given
// point: the covariogram of the window evaluated at the star image of every
// central-shell vector, summed exactly over the shell. The per-orbit route
// (orbit length times the value at one representative) must agree exactly,
// since the window is twelvefold and reflection symmetric.
inline AveragedShellingRow averaged_shelling(const ZSqrt3& r2) {
    AveragedShellingRow out;
    out.r2 = r2;
    std::vector<Z12> shell = enumerate_shell_z12(r2);
    out.central_count = static_cast<long long>(shell.size());
    Q3 total;
    for (const Z12& z : shell) total += covariogram(embed(z, Plane::Internal));

    std::set<Z12> remaining(shell.begin(), shell.end());
    Q3 by_orbit;
    while (!remaining.empty()) {
        Z12 rep = *remaining.begin();
        std::vector<Z12> orbit = d12_orbit(rep);
        for (const Z12& p : orbit) remaining.erase(p);
        out.representatives.push_back({rep, static_cast<long long>(orbit.size())});
        by_orbit += rational_of(static_cast<long long>(orbit.size())) *
                    covariogram(embed(rep, Plane::Internal));
    }
    if (!(by_orbit == total)) throw std::logic_error("orbit sum disagrees with full shell sum");
    out.value = total;
    return out;
}

}  // namespace quasicount
