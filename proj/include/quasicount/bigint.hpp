#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasicount {

using BigInt = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long constructors; LP64 is assumed throughout.
static_assert(sizeof(long) == sizeof(long long), "LP64 platform required");

inline BigInt bigint_of(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }
inline Rational rational_of(long long num, long long den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// floor(sqrt(n)) for n >= 0
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt pow_bigint(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline long long to_ll(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long long");
    return static_cast<long long>(n.get_si());
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Strict "p" or "p/q" with optional leading '-'; no spaces.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-') {
        neg = true;
        ++i;
    }
    auto read_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') out += s[i++];
        if (i == start) throw std::invalid_argument("bad rational literal: " + s);
    };
    std::string num, den;
    read_digits(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        read_digits(den);
    } else {
        den = "1";
    }
    if (i != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    BigInt n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    if (neg) n = -n;
    return make_rational(n, d);
}

// Fixed-point decimal rendering of a rational, round half away from zero.
inline std::string decimal_string(const Rational& q, int digits) {
    BigInt scale = pow_bigint(10, static_cast<unsigned long>(digits));
    // round(q * scale): floor(q*scale + 1/2) for q >= 0, mirrored for q < 0
    Rational scaled = q * Rational(scale);
    BigInt num = scaled.get_num(), den = scaled.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt r = floor_div(2 * num + den, 2 * den);
    std::string ds = r.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    if (neg && r != 0) out.insert(0, 1, '-');
    return out;
}

}  // namespace quasicount
