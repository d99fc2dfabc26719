#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "quasicount/factorization.hpp"

namespace quasicount {

struct ResourceBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical column-style Hermite normal form of a full-rank sublattice of Z^n:
// basis vectors are the columns of an upper-triangular matrix with positive
// diagonal and 0 <= h[i][j] < h[i][i] for j > i. One HNF per sublattice.
struct HNFMatrix {
    int n = 0;
    std::array<std::array<long long, 4>, 4> h{};

    long long det() const {
        long long d = 1;
        for (int i = 0; i < n; ++i) d *= h[i][i];
        return d;
    }

    // Solve H x = v over the integers (membership test), back substitution.
    bool contains(const std::array<long long, 4>& v) const {
        std::array<long long, 4> r = v;
        for (int i = n - 1; i >= 0; --i) {
            if (r[i] % h[i][i] != 0) return false;
            long long xi = r[i] / h[i][i];
            for (int k = 0; k <= i; ++k) r[k] -= xi * h[k][i];
        }
        return true;
    }

    friend bool operator==(const HNFMatrix&, const HNFMatrix&) = default;
    friend auto operator<=>(const HNFMatrix&, const HNFMatrix&) = default;
};

namespace detail {

template <typename Fn>
void hnf_rec(int n, int row, long long rest, HNFMatrix& work, std::size_t& count,
             std::size_t budget, Fn&& emit) {
    if (row == n) {
        if (rest != 1) return;
        if (++count > budget) throw ResourceBudgetError("sublattice enumeration budget exceeded");
        emit(work);
        return;
    }
    for (long long d = 1; d <= rest; ++d) {
        if (rest % d != 0) continue;
        work.h[row][row] = d;
        // off-diagonal entries in this row run over [0, d) in columns right of it
        std::array<long long, 4> digits{};
        bool carry = false;
        while (!carry) {
            for (int j = row + 1; j < n; ++j) work.h[row][j] = digits[j];
            hnf_rec(n, row + 1, rest / d, work, count, budget, emit);
            carry = true;
            for (int j = row + 1; j < n && carry; ++j) {
                if (++digits[j] < d) carry = false;
                else digits[j] = 0;
            }
        }
    }
}

}  // namespace detail

// Exactly one HNF per index-m sublattice of Z^rank.
template <typename Fn>
void for_each_sublattice(int rank, long long m, Fn&& emit, std::size_t budget = 1000000) {
    if (rank < 1 || rank > 4) throw std::domain_error("rank must be between 1 and 4");
    if (m < 1) throw std::domain_error("index must be >= 1");
    HNFMatrix work;
    work.n = rank;
    std::size_t count = 0;
    detail::hnf_rec(rank, 0, m, work, count, budget, emit);
}

inline std::vector<HNFMatrix> enumerate_sublattices(int rank, long long m,
                                                    std::size_t budget = 1000000) {
    std::vector<HNFMatrix> out;
    for_each_sublattice(rank, m, [&](const HNFMatrix& h) { out.push_back(h); }, budget);
    return out;
}

// ---------------------------------------------------------------------------
// Ideal-closed sublattices
// ---------------------------------------------------------------------------

using MultMatrix = std::array<std::array<long long, 4>, 4>;

// Multiplication by the ring generator, on the Z-basis of the ring.
inline MultMatrix generator_matrix_e3() {
    // w * (a + b w) = -b + (a - b) w
    return {{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}};
}

inline MultMatrix generator_matrix_z12() {
    // xi * (c0, c1, c2, c3) = (-c3, c0, c1 + c3, c2)
    return {{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}};
}

inline MultMatrix generator_matrix_zsqrt3() {
    // sqrt3 * (a + b sqrt3) = 3b + a sqrt3
    return {{{0, 3, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}};
}

// Counts index-m sublattices closed under the given generator action.
inline long long count_closed_sublattices(int rank, long long m, const MultMatrix& g,
                                          std::size_t budget = 1000000) {
    long long closed = 0;
    for_each_sublattice(
        rank, m,
        [&](const HNFMatrix& L) {
            for (int j = 0; j < rank; ++j) {
                std::array<long long, 4> img{};
                for (int i = 0; i < rank; ++i) {
                    long long s = 0;
                    for (int k = 0; k < rank; ++k) s += g[i][k] * L.h[k][j];
                    img[i] = s;
                }
                if (!L.contains(img)) return;
            }
            ++closed;
        },
        budget);
    return closed;
}

enum class RingId { E3, Z12 };

// Sublattices that are ideals of the ring: count must equal a6(m) resp. a12(m).
inline long long count_ideal_sublattices(RingId ring, long long m, std::size_t budget = 1000000) {
    if (ring == RingId::E3) return count_closed_sublattices(2, m, generator_matrix_e3(), budget);
    return count_closed_sublattices(4, m, generator_matrix_z12(), budget);
}

// ---------------------------------------------------------------------------
// Coincidence sublattices of the triangular lattice
// ---------------------------------------------------------------------------

namespace detail {

// HNF basis of the sublattice of Z^2 spanned by the given generators
// (assumed full rank) plus N*Z^2.
inline HNFMatrix hnf_from_generators_2d(std::vector<std::array<long long, 2>> gens, long long N) {
    gens.push_back({N, 0});
    gens.push_back({0, N});
    // Euclid on second coordinates: each pair step (v, g) -> (v - q g, g) is
    // unimodular, so the span is preserved; g drops onto the x-axis.
    std::array<long long, 2> v{0, 0};
    long long d0 = 0;
    for (auto g : gens) {
        while (g[1] != 0) {
            if (v[1] == 0) std::swap(v, g);
            if (g[1] == 0) break;
            long long q = v[1] / g[1];
            v = {v[0] - q * g[0], v[1] - q * g[1]};
            std::swap(v, g);
        }
        d0 = std::gcd(d0, g[0] < 0 ? -g[0] : g[0]);
    }
    if (v[1] < 0) v = {-v[0], -v[1]};
    if (d0 == 0 || v[1] == 0) throw std::logic_error("generators are not full rank");
    HNFMatrix out;
    out.n = 2;
    out.h[0][0] = d0;
    out.h[1][1] = v[1];
    out.h[0][1] = ((v[0] % d0) + d0) % d0;
    return out;
}

}  // namespace detail

// Enumerates the coincidence sublattices G intersect R G of the triangular
// lattice for all rotations R = z / conj(z) with z primitive and N(z) bounded
// by max_index. Lattice intersections are exact integer computations: on the
// basis (1, w), x lies in R G iff adj(M_z) M_conj(z) x = 0 (mod N(z)).
inline std::map<long long, std::set<HNFMatrix>> enumerate_csl_e3(long long max_index) {
    if (max_index < 1) throw std::domain_error("max_index must be >= 1");
    if (max_index > 1000) throw ResourceBudgetError("coincidence enumeration capped at index 1000");
    std::map<long long, std::set<HNFMatrix>> by_index;
    long long bound = 2 * static_cast<long long>(std::sqrt(static_cast<double>(max_index))) + 2;
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            E3 z{a, b};
            if (z.is_zero()) continue;
            long long N = norm(z);
            if (N > max_index) continue;
            if (canonical_associate(z) != z) continue;
            if (N > 1 && !is_unit(gcd_e3(z, conjugate(z)))) continue;
            // multiplication matrices on the basis (1, w)
            E3 z2 = z * z;  // R = z/conj(z) = z^2 / N
            // columns of M_{z^2}: z^2 * 1 and z^2 * w
            E3 c0 = z2, c1 = z2 * E3{0, 1};
            long long adj[2][2] = {{c1.b, -c1.a}, {-c0.b, c0.a}};  // adjugate of [[c0.a,c1.a],[c0.b,c1.b]]
            std::vector<std::array<long long, 2>> sol;
            for (long long x = 0; x < N; ++x)
                for (long long y = 0; y < N; ++y) {
                    if ((adj[0][0] * x + adj[0][1] * y) % N == 0 &&
                        (adj[1][0] * x + adj[1][1] * y) % N == 0)
                        sol.push_back({x, y});
                }
            HNFMatrix csl = detail::hnf_from_generators_2d(sol, N);
            long long idx = csl.det();
            if (idx <= max_index) by_index[idx].insert(csl);
        }
    }
    return by_index;
}

// ---------------------------------------------------------------------------
// Shell enumeration
// ---------------------------------------------------------------------------

// All Eisenstein integers of norm m (the central shell of radius sqrt(m)).
inline std::vector<E3> enumerate_shell_e3(long long m) {
    if (m < 0) throw std::domain_error("norm must be >= 0");
    std::vector<E3> out;
    if (m == 0) return {E3{0, 0}};
    long long bound = static_cast<long long>(std::sqrt(4.0 * static_cast<double>(m) / 3.0)) + 2;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            if (norm(E3{a, b}) == m) out.push_back({a, b});
    std::sort(out.begin(), out.end(), [](const E3& x, const E3& y) {
        return std::array{x.a, x.b} < std::array{y.a, y.b};
    });
    return out;
}

namespace detail {

// rational upper bound for sqrt(v), v >= 0
inline Rational sqrt_upper(const Rational& v) {
    if (v < 0) throw std::domain_error("sqrt of negative");
    return make_rational(isqrt(v.get_num() * v.get_den()) + 1, v.get_den());
}

// rational upper bound for the real embedding of x
inline Rational embed_upper(const ZSqrt3& x) {
    Rational s3_hi = rational_of(1732051, 1000000);
    Rational s3_lo = rational_of(1732050, 1000000);
    return rational_of(x.a) + rational_of(x.b) * (x.b >= 0 ? s3_hi : s3_lo);
}

inline long long ceil_to_ll(const Rational& v) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return to_ll(q);
}

}  // namespace detail

// All x in Z[xi12] with x * conj(x) = r2, by exhaustive scan of the coordinate
// box implied by the physical radius sqrt(r2) and the internal radius
// sqrt(r2'). Empty when r2 is not totally positive; {0} when r2 = 0.
inline std::vector<Z12> enumerate_shell_z12(const ZSqrt3& r2, std::size_t budget = 100000000) {
    std::vector<Z12> out;
    if (r2.is_zero()) return {Z12{0, 0, 0, 0}};
    if (!is_totally_positive(r2)) return out;
    // px + ix = 2 c0 + c2, px - ix = sqrt3 c1, py + iy = c1 + 2 c3, py - iy = sqrt3 c2
    Rational rp = detail::sqrt_upper(detail::embed_upper(r2));
    Rational ri = detail::sqrt_upper(detail::embed_upper(conjugate(r2)));
    Rational s = rp + ri;
    Rational s3_hi = rational_of(1732051, 1000000);
    long long b12 = detail::ceil_to_ll(s * s3_hi / 3);  // |c1|, |c2| <= (rp+ri)/sqrt3
    auto range_pair = [&](long long other) {
        // |2 c + other| <= rp + ri
        long long lo = detail::ceil_to_ll((-s - rational_of(other)) / 2);
        long long hi = -detail::ceil_to_ll((rational_of(other) - s) / 2);  // floor((s-other)/2)
        return std::pair<long long, long long>{lo, hi};
    };
    double cells = 0;
    {
        double w = 2.0 * static_cast<double>(b12) + 1.0;
        double c0w = s.get_d() + 1.0;
        cells = w * w * c0w * c0w;
    }
    if (cells > static_cast<double>(budget))
        throw ResourceBudgetError("shell enumeration box exceeds budget");
    for (long long c1 = -b12; c1 <= b12; ++c1) {
        auto [c3lo, c3hi] = range_pair(c1);
        for (long long c2 = -b12; c2 <= b12; ++c2) {
            auto [c0lo, c0hi] = range_pair(c2);
            for (long long c0 = c0lo; c0 <= c0hi; ++c0)
                for (long long c3 = c3lo; c3 <= c3hi; ++c3) {
                    Z12 x{c0, c1, c2, c3};
                    if (relative_norm(x) == r2) out.push_back(x);
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quasicount
