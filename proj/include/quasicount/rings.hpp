#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "quasicount/qsqrt3.hpp"

namespace quasicount {

// Eisenstein integer a + b*w with w = exp(2*pi*i/3), w^2 = -1 - w.
struct E3 {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const E3&, const E3&) = default;
    friend E3 operator+(const E3& x, const E3& y) { return {x.a + y.a, x.b + y.b}; }
    friend E3 operator-(const E3& x, const E3& y) { return {x.a - y.a, x.b - y.b}; }
    friend E3 operator-(const E3& x) { return {-x.a, -x.b}; }
    friend E3 operator*(const E3& x, const E3& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline E3 conjugate(const E3& x) { return {x.a - x.b, -x.b}; }

inline long long norm(const E3& x) {
    return x.a * x.a - x.a * x.b + x.b * x.b;
}

inline bool is_unit(const E3& x) { return norm(x) == 1; }

// Integer a + b*sqrt(3); norm a^2 - 3 b^2 may be negative, unit iff |norm| = 1.
struct ZSqrt3 {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const ZSqrt3&, const ZSqrt3&) = default;
    friend auto operator<=>(const ZSqrt3&, const ZSqrt3&) = default;
    friend ZSqrt3 operator+(const ZSqrt3& x, const ZSqrt3& y) { return {x.a + y.a, x.b + y.b}; }
    friend ZSqrt3 operator-(const ZSqrt3& x, const ZSqrt3& y) { return {x.a - y.a, x.b - y.b}; }
    friend ZSqrt3 operator-(const ZSqrt3& x) { return {-x.a, -x.b}; }
    friend ZSqrt3 operator*(const ZSqrt3& x, const ZSqrt3& y) {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline ZSqrt3 conjugate(const ZSqrt3& x) { return {x.a, -x.b}; }

inline long long norm(const ZSqrt3& x) {
    __int128 n = static_cast<__int128>(x.a) * x.a - 3 * static_cast<__int128>(x.b) * x.b;
    if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("ZSqrt3 norm overflow");
    return static_cast<long long>(n);
}

inline bool is_unit(const ZSqrt3& x) { return norm(x) == 1 || norm(x) == -1; }

inline Q3 to_q3(const ZSqrt3& x) { return {rational_of(x.a), rational_of(x.b)}; }

inline int sign_embed(const ZSqrt3& x) {
    if (x.a == 0 && x.b == 0) return 0;
    if (x.a >= 0 && x.b >= 0) return 1;
    if (x.a <= 0 && x.b <= 0) return -1;
    __int128 a2 = static_cast<__int128>(x.a) * x.a;
    __int128 b23 = 3 * static_cast<__int128>(x.b) * x.b;
    if (x.a > 0) return a2 > b23 ? 1 : -1;
    return b23 > a2 ? 1 : -1;
}

inline bool is_totally_positive(const ZSqrt3& x) {
    return sign_embed(x) > 0 && sign_embed(conjugate(x)) > 0;
}

inline std::string render_zsqrt3(const ZSqrt3& x) { return render_q3(to_q3(x)); }

inline ZSqrt3 parse_zsqrt3(const std::string& s) {
    Q3 q = parse_q3(s);
    if (q.a.get_den() != 1 || q.b.get_den() != 1)
        throw std::invalid_argument("not an integer element of Z[sqrt3]: " + s);
    return {to_ll(q.a.get_num()), to_ll(q.b.get_num())};
}

inline std::ostream& operator<<(std::ostream& os, const ZSqrt3& x) { return os << render_zsqrt3(x); }

// Element of Z[xi] for xi = exp(2*pi*i/12), on the power basis (1, xi, xi^2, xi^3)
// with the reduction xi^4 = xi^2 - 1.
struct Z12 {
    std::array<long long, 4> c{0, 0, 0, 0};

    Z12() = default;
    Z12(long long c0, long long c1, long long c2, long long c3) : c{c0, c1, c2, c3} {}

    friend bool operator==(const Z12&, const Z12&) = default;
    friend auto operator<=>(const Z12&, const Z12&) = default;
    friend Z12 operator+(const Z12& x, const Z12& y) {
        return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
    }
    friend Z12 operator-(const Z12& x, const Z12& y) {
        return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
    }
    friend Z12 operator-(const Z12& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
    friend Z12 operator*(const Z12& x, const Z12& y) {
        long long d[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) d[i + j] += x.c[i] * y.c[j];
        // xi^4 = xi^2 - 1, xi^5 = xi^3 - xi, xi^6 = -1
        return {d[0] - d[4] - d[6], d[1] - d[5], d[2] + d[4], d[3] + d[5]};
    }
    bool is_zero() const { return c == std::array<long long, 4>{0, 0, 0, 0}; }
};

// Complex conjugation: xi -> xi^-1 = xi - xi^3.
inline Z12 complex_conjugate(const Z12& x) {
    return {x.c[0] + x.c[2], x.c[1], -x.c[2], -x.c[1] - x.c[3]};
}

// Star map of the cut-and-project scheme: the Galois automorphism xi -> xi^5.
// It is an involution and restricts to sqrt(3) -> -sqrt(3) on Z[sqrt3].
inline Z12 star_map(const Z12& x) {
    return {x.c[0] + x.c[2], -x.c[1], -x.c[2], x.c[1] + x.c[3]};
}

// sqrt(3) = xi + xi^-1 sits inside Z[xi] as (0, 2, 0, -1).
inline Z12 z12_from_zsqrt3(const ZSqrt3& x) { return {x.a, 2 * x.b, 0, -x.b}; }

// x * conj(x), an element of the real subring Z[sqrt3]; totally non-negative.
inline ZSqrt3 relative_norm(const Z12& x) {
    Z12 p = x * complex_conjugate(x);
    if (p.c[2] != 0 || p.c[1] != -2 * p.c[3])
        throw std::logic_error("relative norm did not land in Z[sqrt3]");
    return {p.c[0], -p.c[3]};
}

// Norm down to Z: N(x) = (x*conj(x)) * (x*conj(x))', a non-negative integer.
inline long long absolute_norm(const Z12& x) {
    long long n = norm(relative_norm(x));
    if (n < 0) throw std::logic_error("absolute norm must be non-negative");
    return n;
}

inline bool is_unit(const Z12& x) { return !x.is_zero() && absolute_norm(x) == 1; }

enum class Plane { Physical, Internal };

// Physical embedding sends xi to exp(i*pi/6) = (sqrt3/2, 1/2); the internal
// embedding is the physical image of the star map. All coordinates lie in
// (1/2) Z[sqrt3].
inline Q3Vector embed(const Z12& x, Plane plane = Plane::Physical) {
    Z12 z = (plane == Plane::Physical) ? x : star_map(x);
    Q3 px{rational_of(2 * z.c[0] + z.c[2], 2), rational_of(z.c[1], 2)};
    Q3 py{rational_of(z.c[1] + 2 * z.c[3], 2), rational_of(z.c[2], 2)};
    return {px, py};
}

inline std::string render_z12(const Z12& x) {
    return std::to_string(x.c[0]) + "," + std::to_string(x.c[1]) + "," + std::to_string(x.c[2]) +
           "," + std::to_string(x.c[3]);
}

inline Z12 parse_z12(const std::string& s) {
    std::array<long long, 4> c{};
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
        std::size_t next = (k < 3) ? s.find(',', pos) : s.size();
        if (next == std::string::npos) throw std::invalid_argument("expected \"c0,c1,c2,c3\": " + s);
        std::string part = s.substr(pos, next - pos);
        if (part.empty()) throw std::invalid_argument("expected \"c0,c1,c2,c3\": " + s);
        std::size_t used = 0;
        c[k] = std::stoll(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad coordinate in: " + s);
        pos = next + 1;
    }
    return {c[0], c[1], c[2], c[3]};
}

inline std::ostream& operator<<(std::ostream& os, const Z12& x) { return os << render_z12(x); }

}  // namespace quasicount
