#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quasicount/qsqrt3.hpp"

namespace quasicount {

// Convex polygon over Q(sqrt3)^2, vertices in counterclockwise order, no three
// collinear.
struct ConvexPolygon {
    std::vector<Q3Vector> vertices;
};

// Twice the signed area (shoelace); positive for CCW orientation.
inline Q3 area2(const ConvexPolygon& p) {
    Q3 acc;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) acc += cross(p.vertices[i], p.vertices[(i + 1) % n]);
    return acc;
}

inline Q3 area(const ConvexPolygon& p) { return Rational(1, 2) * area2(p); }

// The acceptance window: a regular dodecagon of edge length 1, vertices at
// angles 15 + 30k degrees, circumradius sqrt(2+sqrt3), inradius (2+sqrt3)/2,
// edge midpoints on the coordinate axes. All vertices lie in Q(sqrt3)^2.
inline const ConvexPolygon& dodecagon_window() {
    static const ConvexPolygon w = [] {
        ConvexPolygon p;
        Rational half(1, 2);
        // rotation by 30 degrees: ((sqrt3/2, -1/2), (1/2, sqrt3/2))
        Q3 cos30{Rational(0), half}, sin30{half, Rational(0)};
        Q3Vector v{Q3{Rational(1), half}, Q3{half, Rational(0)}};  // ((2+sqrt3)/2, 1/2)
        for (int k = 0; k < 12; ++k) {
            p.vertices.push_back(v);
            v = Q3Vector{cos30 * v.x - sin30 * v.y, sin30 * v.x + cos30 * v.y};
        }
        return p;
    }();
    return w;
}

namespace detail {

// Left-of test for the directed edge a -> b.
inline int orient(const Q3Vector& a, const Q3Vector& b, const Q3Vector& p) {
    return sign(cross(b - a, p - a));
}

}  // namespace detail

// Exact intersection of two convex CCW polygons by half-plane clipping; every
// output vertex is an input vertex or the solution of a 2x2 linear system.
// Returns nullopt when the interiors are disjoint.
inline std::optional<ConvexPolygon> convex_intersect(const ConvexPolygon& P, const ConvexPolygon& Q) {
    std::vector<Q3Vector> cur = P.vertices;
    std::size_t nq = Q.vertices.size();
    for (std::size_t e = 0; e < nq && !cur.empty(); ++e) {
        const Q3Vector& a = Q.vertices[e];
        const Q3Vector& b = Q.vertices[(e + 1) % nq];
        std::vector<Q3Vector> next;
        std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Q3Vector& p = cur[i];
            const Q3Vector& q = cur[(i + 1) % n];
            Q3 dp = cross(b - a, p - a);
            Q3 dq = cross(b - a, q - a);
            int sp = sign(dp), sq = sign(dq);
            if (sp >= 0) next.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                Q3 t = dp / (dp - dq);  // p + t (q - p) lies on the clip line
                next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        cur = std::move(next);
    }
    // drop duplicate and collinear vertices so the result is strictly convex
    std::vector<Q3Vector> clean;
    for (const Q3Vector& v : cur) {
        if (clean.empty() || !(clean.back() == v)) clean.push_back(v);
    }
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    if (clean.size() >= 3) {
        std::vector<Q3Vector> strict;
        std::size_t n = clean.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Q3Vector& prev = clean[(i + n - 1) % n];
            const Q3Vector& curv = clean[i];
            const Q3Vector& nxt = clean[(i + 1) % n];
            if (detail::orient(prev, curv, nxt) != 0) strict.push_back(curv);
        }
        clean = std::move(strict);
    }
    if (clean.size() < 3) return std::nullopt;
    ConvexPolygon out{std::move(clean)};
    if (sign(area2(out)) <= 0) return std::nullopt;
    return out;
}

// Relative overlap area of the window with its translate by v (the covariogram
// of the window); exact, symmetric under v -> -v, zero once |v| >= 2 R>.
inline Q3 covariogram(const Q3Vector& v) {
    const ConvexPolygon& w = dodecagon_window();
    ConvexPolygon shifted;
    shifted.vertices.reserve(w.vertices.size());
    for (const Q3Vector& p : w.vertices) shifted.vertices.push_back(p + v);
    auto inter = convex_intersect(w, shifted);
    if (!inter) return Q3{};
    return area2(*inter) / area2(w);
}

// ---------------------------------------------------------------------------
// Closed forms along the two reflection axes
// ---------------------------------------------------------------------------

// Covariogram profile for shifts along an edge-midpoint axis (type 1), as a
// piecewise quadratic with branch points 1, 2R< - 1, 2R<.
inline Q3 h1_exact(const Q3& s) {
    if (sign(s) < 0) throw std::domain_error("h1 requires s >= 0");
    const Q3 one{Rational(1), Rational(0)};
    const Q3 two_rlt_m1{Rational(1), Rational(1)};  // 2R< - 1 = 1 + sqrt3
    const Q3 two_rlt{Rational(2), Rational(1)};     // 2R< = 2 + sqrt3
    if (s < one) return one - rational_of(1, 3) * s;
    if (s < two_rlt_m1)
        return Q3{rational_of(15, 18), rational_of(2, 18)} - Q3{rational_of(0), rational_of(2, 9)} * s +
               Q3{rational_of(-3, 18), rational_of(2, 18)} * s * s;
    if (s < two_rlt)
        return Q3{rational_of(5, 6), rational_of(2, 6)} - Q3{rational_of(2, 3), rational_of(0)} * s +
               Q3{rational_of(-3, 6), rational_of(2, 6)} * s * s;
    return Q3{};
}

// Covariogram profile for shifts along a vertex axis (type 2). Shift lengths
// on this axis have the form s = sqrt2 * w with w in Q(sqrt3); the substitution
// keeps every branch value inside the field. Branch points R>, R> + sqrt2, 2R>.
inline Q3 h2_exact_sqrt2(const Q3& w) {
    if (sign(w) < 0) throw std::domain_error("h2 requires s >= 0");
    Q3 s2 = Rational(2) * w * w;  // s^2
    const Q3 rgt2{Rational(2), Rational(1)};        // R>^2 = 2 + sqrt3
    const Q3 rgt_s2{Rational(6), Rational(3)};      // (R> + sqrt2)^2 = 6 + 3 sqrt3
    const Q3 two_rgt2{Rational(8), Rational(4)};    // (2R>)^2
    if (s2 < rgt2)
        return Q3{rational_of(1), rational_of(0)} - Q3{rational_of(-2, 3), rational_of(2, 3)} * w +
               Q3{rational_of(7, 3), rational_of(-4, 3)} * w * w;
    if (s2 < rgt_s2)
        return Q3{rational_of(5, 6), rational_of(1, 6)} - Q3{rational_of(2, 3), rational_of(0)} * w +
               Q3{rational_of(2, 3), rational_of(-1, 3)} * w * w;
    if (s2 < two_rgt2)
        return Q3{rational_of(4, 3), rational_of(2, 3)} - Q3{rational_of(2, 3), rational_of(2, 3)} * w +
               Q3{rational_of(1, 3), rational_of(0)} * w * w;
    return Q3{};
}

inline double h1(double s) {
    if (s < 0) throw std::domain_error("h1 requires s >= 0");
    const double r3 = std::sqrt(3.0);
    if (s < 1.0) return 1.0 - s / 3.0;
    if (s < 1.0 + r3) return (15.0 + 2.0 * r3) / 18.0 - (2.0 * r3 / 9.0) * s + ((2.0 * r3 - 3.0) / 18.0) * s * s;
    if (s < 2.0 + r3) return (5.0 + 2.0 * r3) / 6.0 - (2.0 / 3.0) * s + ((2.0 * r3 - 3.0) / 6.0) * s * s;
    return 0.0;
}

inline double h2(double s) {
    if (s < 0) throw std::domain_error("h2 requires s >= 0");
    const double r3 = std::sqrt(3.0);
    const double r2 = std::sqrt(2.0);
    const double rgt = std::sqrt(2.0 + r3);
    if (s < rgt) return 1.0 - (r2 * (r3 - 1.0) / 3.0) * s + ((7.0 - 4.0 * r3) / 6.0) * s * s;
    if (s < rgt + r2) return (5.0 + r3) / 6.0 - (r2 / 3.0) * s + ((2.0 - r3) / 6.0) * s * s;
    if (s < 2.0 * rgt) return (4.0 + 2.0 * r3) / 3.0 - (r2 * (1.0 + r3) / 3.0) * s + s * s / 6.0;
    return 0.0;
}

// Covariogram of the disk of equal area (radius R = sqrt(3/pi) R>), known as
// Euclid's hat; a good floating-point approximation to the exact covariogram.
inline double euclid_hat(double s) {
    if (s < 0) throw std::domain_error("euclid_hat requires s >= 0");
    const double pi = 3.14159265358979323846;
    const double R = std::sqrt(3.0 / pi) * std::sqrt(2.0 + std::sqrt(3.0));
    if (s >= 2.0 * R) return 0.0;
    double u = s / (2.0 * R);
    return (2.0 / pi) * std::acos(u) - (s / (pi * R)) * std::sqrt(1.0 - u * u);
}

// The 24 exact symmetries of the window (rotations by 30 degrees and
// reflections); used by the symmetry checks and orbit decompositions.
struct Mat2Q3 {
    Q3 a, b, c, d;  // row-major
    Q3Vector apply(const Q3Vector& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

inline const std::vector<Mat2Q3>& window_symmetries() {
    static const std::vector<Mat2Q3> syms = [] {
        std::vector<Mat2Q3> out;
        Rational half(1, 2);
        Q3 c30{Rational(0), half}, s30{half, Rational(0)};
        Mat2Q3 rot{Q3{Rational(1), 0}, Q3{}, Q3{}, Q3{Rational(1), 0}};
        for (int k = 0; k < 12; ++k) {
            out.push_back(rot);
            out.push_back({rot.a, -rot.b, rot.c, -rot.d});  // compose with y -> -y reflection
            rot = Mat2Q3{c30 * rot.a - s30 * rot.c, c30 * rot.b - s30 * rot.d,
                         s30 * rot.a + c30 * rot.c, s30 * rot.b + c30 * rot.d};
        }
        return out;
    }();
    return syms;
}

}  // namespace quasicount
