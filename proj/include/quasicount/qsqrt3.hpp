#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "quasicount/bigint.hpp"

namespace quasicount {

// Element a + b*sqrt(3) of the real quadratic field Q(sqrt(3)).
// Representation is unique; equality is structural.
struct Q3 {
    Rational a{0};
    Rational b{0};

    Q3() = default;
    Q3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    explicit Q3(long long n) : a(rational_of(n)), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const Q3& u, const Q3& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(const Q3& u, const Q3& v) { return !(u == v); }

    friend Q3 operator+(const Q3& u, const Q3& v) { return {u.a + v.a, u.b + v.b}; }
    friend Q3 operator-(const Q3& u, const Q3& v) { return {u.a - v.a, u.b - v.b}; }
    friend Q3 operator-(const Q3& u) { return {-u.a, -u.b}; }
    friend Q3 operator*(const Q3& u, const Q3& v) {
        return {u.a * v.a + 3 * u.b * v.b, u.a * v.b + u.b * v.a};
    }
    friend Q3 operator*(const Rational& r, const Q3& u) { return {r * u.a, r * u.b}; }
    friend Q3 operator*(const Q3& u, const Rational& r) { return r * u; }

    Q3& operator+=(const Q3& v) { a += v.a; b += v.b; return *this; }
    Q3& operator-=(const Q3& v) { a -= v.a; b -= v.b; return *this; }
    Q3& operator*=(const Q3& v) { *this = *this * v; return *this; }
};

inline Q3 conjugate(const Q3& u) { return {u.a, -u.b}; }

// Field norm u * conj(u) = a^2 - 3 b^2; zero iff u = 0.
inline Rational field_norm(const Q3& u) { return u.a * u.a - 3 * u.b * u.b; }

inline Q3 inverse(const Q3& u) {
    Rational n = field_norm(u);
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt3)");
    return {u.a / n, -u.b / n};
}

inline Q3 operator/(const Q3& u, const Q3& v) { return u * inverse(v); }

// Exact sign under the real embedding sqrt(3) -> 1.732...
// If the coefficients do not settle it by sign alone, compare a^2 against 3 b^2.
inline int sign(const Q3& u) {
    int sa = sgn(u.a), sb = sgn(u.b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    Rational a2 = u.a * u.a, b23 = 3 * u.b * u.b;
    if (a2 == b23) throw std::logic_error("sqrt(3) cannot be rational");
    if (sa > 0) return a2 > b23 ? 1 : -1;  // sb < 0
    return b23 > a2 ? 1 : -1;              // sa < 0, sb > 0
}

inline bool operator<(const Q3& u, const Q3& v) { return sign(u - v) < 0; }
inline bool operator>(const Q3& u, const Q3& v) { return sign(u - v) > 0; }
inline bool operator<=(const Q3& u, const Q3& v) { return sign(u - v) <= 0; }
inline bool operator>=(const Q3& u, const Q3& v) { return sign(u - v) >= 0; }

inline bool is_totally_positive(const Q3& u) { return sign(u) > 0 && sign(conjugate(u)) > 0; }

inline Q3 abs(const Q3& u) { return sign(u) < 0 ? -u : u; }

// Enclosing rational interval of width <= 2^(1-precision_bits).
struct QInterval {
    Rational lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline QInterval enclose(const Q3& u, int precision_bits = 64) {
    if (precision_bits < 32) throw std::invalid_argument("precision must be >= 32 bits");
    if (u.b == 0) return {u.a, u.a};
    // scale precision with the height of b so the total width stays below target
    std::size_t extra = mpz_sizeinbase(u.b.get_num().get_mpz_t(), 2);
    unsigned long k = static_cast<unsigned long>(precision_bits) + extra + 1;
    BigInt two_k = pow_bigint(2, k);
    BigInt s = isqrt(3 * two_k * two_k);  // s <= sqrt(3)*2^k < s+1
    Rational lo3 = make_rational(s, two_k), hi3 = make_rational(s + 1, two_k);
    Rational blo, bhi;
    if (u.b > 0) {
        blo = u.b * lo3;
        bhi = u.b * hi3;
    } else {
        blo = u.b * hi3;
        bhi = u.b * lo3;
    }
    return {u.a + blo, u.a + bhi};
}

inline double to_double(const Q3& u) {
    QInterval iv = enclose(u, 64);
    Rational mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

// floor(u * scale), exact.
inline BigInt floor_scaled(const Q3& u, const BigInt& scale) {
    Rational ra = u.a * Rational(scale);
    Rational rb = u.b * Rational(scale);
    // floor(ra + rb*sqrt3): F = floor(rb*sqrt3) via isqrt on 3*(num^2), then correct
    // the rational part with an exact comparison.
    BigInt bn = rb.get_num(), bd = rb.get_den();
    BigInt f3;
    if (bn >= 0) {
        f3 = floor_div(isqrt(3 * bn * bn), bd);
    } else {
        f3 = -floor_div(isqrt(3 * bn * bn), bd) - 1;  // bn*sqrt3 is irrational here
    }
    // candidate floor of the sum; the true value lies in [cand, cand+2)
    BigInt cand = floor_div(ra.get_num() + f3 * ra.get_den(), ra.get_den());
    Q3 scaled{ra, rb};
    while (Q3{Rational(cand + 1), Rational(0)} <= scaled) ++cand;
    while (Q3{Rational(cand), Rational(0)} > scaled) --cand;
    return cand;
}

// Fixed-point decimal rendering, round half away from zero, exact.
inline std::string decimal_string(const Q3& u, int digits) {
    if (u.b == 0) return decimal_string(u.a, digits);
    BigInt scale = pow_bigint(10, static_cast<unsigned long>(digits));
    BigInt twice = floor_scaled(u, 2 * scale);  // floor(2*u*scale)
    BigInt r;                                   // round(|u|*scale)
    bool neg = twice < 0;
    if (neg) {
        // u irrational here, so 2*u*scale is never an exact integer
        twice = -twice - 1;
    }
    r = floor_div(twice + 1, 2);
    std::string ds = r.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    if (neg && r != 0) out.insert(0, 1, '-');
    return out;
}

// Canonical text form "a/b+c/d*sqrt3": reduced rationals, no spaces, zero terms
// omitted, integer shortcut "n". Round-trips bit-exactly through parse_q3.
inline std::string render_q3(const Q3& u) {
    if (u.is_zero()) return "0";
    std::string out;
    if (u.a != 0) out += to_string(u.a);
    if (u.b != 0) {
        if (u.b > 0 && u.a != 0) out += "+";
        if (u.b < 0) out += "-";
        Rational babs = ::abs(u.b);
        out += to_string(babs) + "*sqrt3";
    }
    return out;
}

// Accepts any sum of rational and rational*sqrt3 terms (also bare "sqrt3" and
// non-canonical spellings like "13+0*sqrt3"); strict otherwise.
inline Q3 parse_q3(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty Q(sqrt3) literal");
    Q3 acc;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sgn_term = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (first && s[i] == '+') throw std::invalid_argument("bad Q(sqrt3) literal: " + s);
            sgn_term = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in: " + s);
        }
        first = false;
        Rational coeff;
        bool is_sqrt3 = false;
        if (s.compare(i, 5, "sqrt3") == 0) {
            coeff = 1;
            is_sqrt3 = true;
            i += 5;
        } else {
            std::size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            if (i == start) throw std::invalid_argument("bad Q(sqrt3) literal: " + s);
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::size_t dstart = i;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
                if (i == dstart) throw std::invalid_argument("bad Q(sqrt3) literal: " + s);
            }
            coeff = parse_rational(s.substr(start, i - start));
            if (s.compare(i, 6, "*sqrt3") == 0) {
                is_sqrt3 = true;
                i += 6;
            }
        }
        if (sgn_term < 0) coeff = -coeff;
        if (is_sqrt3)
            acc.b += coeff;
        else
            acc.a += coeff;
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const Q3& u) { return os << render_q3(u); }

// Point of Q(sqrt3)^2; used for window geometry and embeddings.
struct Q3Vector {
    Q3 x, y;

    friend bool operator==(const Q3Vector& u, const Q3Vector& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Q3Vector& u, const Q3Vector& v) { return !(u == v); }
    friend Q3Vector operator+(const Q3Vector& u, const Q3Vector& v) { return {u.x + v.x, u.y + v.y}; }
    friend Q3Vector operator-(const Q3Vector& u, const Q3Vector& v) { return {u.x - v.x, u.y - v.y}; }
    friend Q3Vector operator-(const Q3Vector& u) { return {-u.x, -u.y}; }
    friend Q3Vector operator*(const Q3& r, const Q3Vector& u) { return {r * u.x, r * u.y}; }
};

inline Q3 dot(const Q3Vector& u, const Q3Vector& v) { return u.x * v.x + u.y * v.y; }
inline Q3 cross(const Q3Vector& u, const Q3Vector& v) { return u.x * v.y - u.y * v.x; }
inline Q3 norm2(const Q3Vector& u) { return dot(u, u); }

inline std::string render_q3_vector(const Q3Vector& v) { return render_q3(v.x) + ";" + render_q3(v.y); }

inline Q3Vector parse_q3_vector(const std::string& s) {
    auto pos = s.find(';');
    if (pos == std::string::npos) throw std::invalid_argument("expected \"x;y\" vector: " + s);
    return {parse_q3(s.substr(0, pos)), parse_q3(s.substr(pos + 1))};
}

}  // namespace quasicount
