#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasicount/rings.hpp"

namespace quasicount {

// ---------------------------------------------------------------------------
// Rational integer factorization (desk scale, deterministic)
// ---------------------------------------------------------------------------

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
    // deterministic: try offsets c = 1, 2, 3, ... until a factor splits off
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor, next c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::map<long long, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[static_cast<long long>(n)]++;
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace detail

// Complete prime factorization of n >= 1, pairs (p, exponent) sorted by p.
inline std::vector<std::pair<long long, int>> factor_rational(long long n) {
    if (n < 1) throw std::domain_error("factor_rational requires n >= 1");
    std::map<long long, int> acc;
    std::uint64_t m = static_cast<std::uint64_t>(n);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (m % p == 0) {
            acc[static_cast<long long>(p)]++;
            m /= p;
        }
    }
    for (std::uint64_t p = 17; p * p <= m && p < 100000; p += 2) {
        while (m % p == 0) {
            acc[static_cast<long long>(p)]++;
            m /= p;
        }
    }
    detail::factor_u64_into(m, acc);
    return {acc.begin(), acc.end()};
}

inline int mobius(long long n) {
    auto f = factor_rational(n);
    for (auto& [p, t] : f)
        if (t > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

// Square root of a modulo odd prime p (Tonelli-Shanks); deterministic
// non-residue search 2, 3, 4, ... so outputs are reproducible.
inline std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p), r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
        }
        std::uint64_t b = powmod_u64(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Euclidean arithmetic in Z[sqrt3]
// ---------------------------------------------------------------------------

inline ZSqrt3 zsqrt3_fundamental_unit() { return {2, 1}; }  // 2 + sqrt3

// Rounded division: returns q with |N(x - q*y)| < |N(y)|; Z[sqrt3] is
// norm-Euclidean under nearest-integer rounding, with a small fallback search.
inline ZSqrt3 div_round(const ZSqrt3& x, const ZSqrt3& y) {
    long long ny = norm(y);
    if (ny == 0) throw std::domain_error("division by zero in Z[sqrt3]");
    ZSqrt3 num = x * conjugate(y);  // x/y = num/ny
    auto nearest = [](long long n, long long d) {
        // round(n/d) with d != 0, exact
        long long q = n / d, r = n % d;
        if (r != 0) {
            long long ad = d > 0 ? d : -d;
            if (2 * (r > 0 ? r : -r) > ad) q += (n > 0) == (d > 0) ? 1 : -1;
            else if (2 * (r > 0 ? r : -r) == ad) q += (n > 0) == (d > 0) ? 1 : 0;
        }
        return q;
    };
    long long qa = nearest(num.a, ny), qb = nearest(num.b, ny);
    auto abs_ll = [](long long v) { return v < 0 ? -v : v; };
    long long best = -1;
    ZSqrt3 bestq{};
    for (long long da = -1; da <= 1; ++da) {
        for (long long db = -1; db <= 1; ++db) {
            ZSqrt3 q{qa + da, qb + db};
            long long nr = abs_ll(norm(x - q * y));
            if (best < 0 || nr < best) {
                best = nr;
                bestq = q;
            }
        }
    }
    if (best >= abs_ll(ny)) throw std::logic_error("Euclidean division failed in Z[sqrt3]");
    return bestq;
}

inline std::pair<ZSqrt3, ZSqrt3> divmod(const ZSqrt3& x, const ZSqrt3& y) {
    ZSqrt3 q = div_round(x, y);
    return {q, x - q * y};
}

inline bool divides(const ZSqrt3& d, const ZSqrt3& x) {
    return divmod(x, d).second.is_zero();
}

inline ZSqrt3 divide_exact(const ZSqrt3& x, const ZSqrt3& d) {
    auto [q, r] = divmod(x, d);
    if (!r.is_zero()) throw std::domain_error("non-exact division in Z[sqrt3]");
    return q;
}

// Canonical associate: positive real embedding with |x/x'| in [1, (2+sqrt3)^2).
// For totally positive inputs (norm > 0) the canonical form is itself totally
// positive; two elements are associates iff their canonical forms coincide.
// Returns (canonical, unit) with canonical * unit = x.
inline std::pair<ZSqrt3, ZSqrt3> normalize_associate(const ZSqrt3& x0) {
    if (x0.is_zero()) throw std::domain_error("normalize_associate of zero");
    // the ratio test squares coefficients twice over
    if (std::max(x0.a < 0 ? -x0.a : x0.a, x0.b < 0 ? -x0.b : x0.b) > 10000000)
        throw std::overflow_error("normalize_associate: coefficients beyond desk scale");
    ZSqrt3 x = x0;
    ZSqrt3 unit{1, 0};
    const ZSqrt3 u = zsqrt3_fundamental_unit();       // 2 + sqrt3
    const ZSqrt3 uinv = conjugate(u);                 // 2 - sqrt3 = u^-1
    if (sign_embed(x) < 0) {
        x = -x;
        unit = -unit;
    }
    // |x/x'| >= 1  iff  x^2 - x'^2 = 4ab*sqrt3 >= 0  iff  ab >= 0
    auto ratio_ge_1 = [](const ZSqrt3& v) {
        return (v.a >= 0) == (v.b >= 0) || v.a == 0 || v.b == 0;
    };
    // |x/x'| < u^2  iff  x^2 < u^4 * x'^2, compared exactly in Z[sqrt3]
    auto ratio_lt_u2 = [&](const ZSqrt3& v) {
        ZSqrt3 lhs = v * v;
        ZSqrt3 rhs = ZSqrt3{97, 56} * (conjugate(v) * conjugate(v));  // u^4 = 97 + 56 sqrt3
        return sign_embed(rhs - lhs) > 0;
    };
    while (!ratio_ge_1(x)) {
        x = x * u;
        unit = unit * uinv;
    }
    while (!ratio_lt_u2(x)) {
        x = x * uinv;
        unit = unit * u;
    }
    return {x, unit};
}

inline ZSqrt3 canonical_associate(const ZSqrt3& x) { return normalize_associate(x).first; }

// Writes a unit as sign * (2+sqrt3)^l; throws if the input is not a unit.
inline std::pair<int, int> unit_decompose(const ZSqrt3& u0) {
    long long n = norm(u0);
    if (n != 1 && n != -1) throw std::domain_error("not a unit of Z[sqrt3]");
    if (n == -1) throw std::domain_error("units of Z[sqrt3] have norm +1");
    ZSqrt3 u = u0;
    int s = 1;
    if (sign_embed(u) < 0) {
        u = -u;
        s = -1;
    }
    int l = 0;
    const ZSqrt3 fu = zsqrt3_fundamental_unit();
    while (u != ZSqrt3{1, 0} && sign_embed(u - ZSqrt3{1, 0}) > 0) {
        u = u * conjugate(fu);
        ++l;
    }
    while (u != ZSqrt3{1, 0}) {
        u = u * fu;
        --l;
    }
    return {s, l};
}

inline ZSqrt3 gcd_zsqrt3(ZSqrt3 x, ZSqrt3 y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0,0) undefined");
    while (!y.is_zero()) {
        ZSqrt3 r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

// ---------------------------------------------------------------------------
// Prime splitting (Z -> Z[sqrt3] -> Z[xi_12])
// ---------------------------------------------------------------------------

// Behavior of a Z[sqrt3] prime in the quadratic step up to Z[xi_12].
enum class Z12Class { SplitsInZ12, InertInZ12, Ramified2, Ramified3 };

inline const char* to_string(Z12Class c) {
    switch (c) {
        case Z12Class::SplitsInZ12: return "splits";
        case Z12Class::InertInZ12: return "inert";
        case Z12Class::Ramified2: return "ramified2";
        case Z12Class::Ramified3: return "ramified3";
    }
    return "?";
}

struct PrimeSplit {
    long long p = 0;
    // canonical Z[sqrt3] primes above p (one entry, or two conjugates for p = +-1 mod 12)
    std::vector<std::pair<ZSqrt3, Z12Class>> primes;
};

// Splitting of a rational prime:
//   2 = (2-sqrt3)(1+sqrt3)^2, the factor stays prime above;
//   3 = (sqrt3)^2, sqrt3 stays prime above;
//   p = +-1 (12): p = q*q', both split above iff p = 1 (12);
//   p = +-5 (12): p stays prime in Z[sqrt3] and splits above.
inline PrimeSplit split_rational_prime(long long p) {
    PrimeSplit out;
    out.p = p;
    if (p == 2) {
        out.primes.push_back({canonical_associate({1, 1}), Z12Class::Ramified2});
        return out;
    }
    if (p == 3) {
        out.primes.push_back({canonical_associate({0, 1}), Z12Class::Ramified3});
        return out;
    }
    long long r = p % 12;
    if (r == 1 || r == 11) {
        auto s = sqrt_mod(3, static_cast<std::uint64_t>(p));
        if (!s) throw std::logic_error("3 must be a square mod p for p = +-1 (12)");
        ZSqrt3 q = gcd_zsqrt3({p, 0}, {static_cast<long long>(*s), -1});
        Z12Class cls = (r == 1) ? Z12Class::SplitsInZ12 : Z12Class::InertInZ12;
        ZSqrt3 qc = canonical_associate(conjugate(q));
        out.primes.push_back({q, cls});
        out.primes.push_back({qc, cls});
        return out;
    }
    // p = +-5 (12): inert in Z[sqrt3]
    out.primes.push_back({ZSqrt3{p, 0}, Z12Class::SplitsInZ12});
    return out;
}

struct ZSqrt3Factor {
    ZSqrt3 prime;  // canonical associate
    int exponent = 0;
    Z12Class cls = Z12Class::SplitsInZ12;
};

struct ZSqrt3Factorization {
    ZSqrt3 unit{1, 0};  // +- (2+sqrt3)^l
    std::vector<ZSqrt3Factor> factors;

    ZSqrt3 product() const {
        ZSqrt3 acc = unit;
        for (const auto& f : factors)
            for (int i = 0; i < f.exponent; ++i) acc = acc * f.prime;
        return acc;
    }
};

// Factors x by factoring |N(x)|, splitting each rational prime and dividing
// out canonical primes with exact exponents. unit * prod(prime^e) == x.
inline ZSqrt3Factorization factor_zsqrt3(const ZSqrt3& x0) {
    if (x0.is_zero()) throw std::domain_error("factor_zsqrt3 of zero");
    ZSqrt3Factorization out;
    long long n = norm(x0);
    ZSqrt3 rest = x0;
    for (auto& [p, tp] : factor_rational(n < 0 ? -n : n)) {
        (void)tp;
        for (auto& [q, cls] : split_rational_prime(p).primes) {
            int e = 0;
            while (divides(q, rest)) {
                rest = divide_exact(rest, q);
                ++e;
            }
            if (e > 0) out.factors.push_back({q, e, cls});
        }
    }
    if (!is_unit(rest)) throw std::logic_error("factor_zsqrt3 left a non-unit cofactor");
    out.unit = rest;
    return out;
}

// ---------------------------------------------------------------------------
// Euclidean arithmetic and factorization in Z[w] (Eisenstein integers)
// ---------------------------------------------------------------------------

inline E3 div_round(const E3& x, const E3& y) {
    long long ny = norm(y);
    if (ny == 0) throw std::domain_error("division by zero in Z[w]");
    E3 num = x * conjugate(y);
    auto nearest = [](long long n, long long d) {
        long long q = n / d, r = n % d;
        if (r != 0) {
            long long ad = d > 0 ? d : -d;
            if (2 * (r > 0 ? r : -r) >= ad) q += (n > 0) == (d > 0) ? 1 : -1;
        }
        return q;
    };
    return {nearest(num.a, ny), nearest(num.b, ny)};
}

inline std::pair<E3, E3> divmod(const E3& x, const E3& y) {
    E3 q = div_round(x, y);
    return {q, x - q * y};
}

inline bool divides(const E3& d, const E3& x) { return divmod(x, d).second.is_zero(); }

inline E3 divide_exact(const E3& x, const E3& d) {
    auto [q, r] = divmod(x, d);
    if (!r.is_zero()) throw std::domain_error("non-exact division in Z[w]");
    return q;
}

// Canonical associate under the 6 units: the one whose embedding angle lies in
// [0, 60 degrees), i.e. b >= 0 and b < a.
inline E3 canonical_associate(const E3& x0) {
    if (x0.is_zero()) throw std::domain_error("canonical associate of zero");
    E3 x = x0;
    for (int half = 0; half < 2; ++half) {
        for (int i = 0; i < 3; ++i) {
            if (x.b >= 0 && x.b < x.a) return x;
            x = x * E3{0, 1};  // multiply by w, a rotation by 120 degrees
        }
        x = -x0;
    }
    throw std::logic_error("no canonical associate found");
}

inline E3 gcd_e3(E3 x, E3 y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0,0) undefined");
    while (!y.is_zero()) {
        E3 r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

struct E3Factor {
    E3 prime;  // canonical associate
    int exponent = 0;
};

struct E3Factorization {
    E3 unit{1, 0};  // one of the six units
    std::vector<E3Factor> factors;

    E3 product() const {
        E3 acc = unit;
        for (const auto& f : factors)
            for (int i = 0; i < f.exponent; ++i) acc = acc * f.prime;
        return acc;
    }
};

// Splitting in Z[w]: 3 ramifies, p = 1 (3) splits, p = 2 (3) is inert.
inline std::vector<E3> eisenstein_primes_above(long long p) {
    if (p == 3) return {canonical_associate(E3{1, -1})};
    if (p % 3 == 1) {
        // solve c^2 + c + 1 = 0 (mod p) via a square root of -3
        auto s = sqrt_mod(static_cast<std::uint64_t>(p - 3), static_cast<std::uint64_t>(p));
        if (!s) throw std::logic_error("-3 must be a square mod p for p = 1 (3)");
        std::uint64_t inv2 = (static_cast<std::uint64_t>(p) + 1) / 2;
        long long c = static_cast<long long>(
            mulmod_u64((*s + static_cast<std::uint64_t>(p) - 1) % p, inv2, static_cast<std::uint64_t>(p)));
        E3 q = gcd_e3({p, 0}, {-c, 1});  // w = c (mod q)
        return {q, canonical_associate(conjugate(q))};
    }
    return {E3{p, 0}};
}

inline E3Factorization factor_e3(const E3& x0) {
    if (x0.is_zero()) throw std::domain_error("factor_e3 of zero");
    E3Factorization out;
    E3 rest = x0;
    for (auto& [p, tp] : factor_rational(norm(x0))) {
        (void)tp;
        for (const E3& q : eisenstein_primes_above(p)) {
            int e = 0;
            while (divides(q, rest)) {
                rest = divide_exact(rest, q);
                ++e;
            }
            if (e > 0) out.factors.push_back({q, e});
        }
    }
    if (!is_unit(rest)) throw std::logic_error("factor_e3 left a non-unit cofactor");
    out.unit = rest;
    return out;
}

// ---------------------------------------------------------------------------
// Ideals of Z[sqrt3] of given norm
// ---------------------------------------------------------------------------

// Canonical generators of all ideals of absolute norm m (every ideal is
// principal). Used both as shell-radius candidates and as an ideal counter.
inline std::vector<ZSqrt3> zsqrt3_ideal_reps_of_norm(long long m) {
    if (m < 1) throw std::domain_error("ideal norm must be >= 1");
    std::vector<ZSqrt3> reps{{1, 0}};
    for (auto& [p, t] : factor_rational(m)) {
        std::vector<ZSqrt3> next;
        auto split = split_rational_prime(p);
        if (split.primes.size() == 2) {
            // |N(q)| = p: distribute the exponent over the two conjugates
            for (int i = 0; i <= t; ++i) {
                ZSqrt3 v{1, 0};
                for (int k = 0; k < i; ++k) v = v * split.primes[0].first;
                for (int k = 0; k < t - i; ++k) v = v * split.primes[1].first;
                for (const auto& r : reps) next.push_back(r * v);
            }
        } else {
            const ZSqrt3& q = split.primes[0].first;
            long long nq = norm(q);
            if (nq < 0) nq = -nq;
            // |N(q)| = p (ramified) or p^2 (inert)
            int per = (nq == p) ? 1 : 2;
            if (t % per != 0) return {};  // no ideal of this norm
            ZSqrt3 v{1, 0};
            for (int k = 0; k < t / per; ++k) v = v * q;
            for (const auto& r : reps) next.push_back(r * v);
        }
        reps = std::move(next);
    }
    for (auto& r : reps) r = canonical_associate(r);
    std::sort(reps.begin(), reps.end());
    return reps;
}

}  // namespace quasicount
