#include <doctest.h>

#include "quasicount/inflation_zeta.hpp"

using namespace quasicount;

namespace {

std::vector<BigInt> big(std::vector<long long> v) {
    std::vector<BigInt> out;
    for (long long x : v) out.push_back(bigint_of(x));
    return out;
}

const ZetaSystem all_systems[] = {ZetaSystem::FibonacciLI, ZetaSystem::FibonacciTorus,
                                  ZetaSystem::PenroseLI, ZetaSystem::PenroseTorus};

}  // namespace

TEST_SUITE("inflation_zeta") {

TEST_CASE("catalog polynomials") {
    RationalGF fib = catalog(ZetaSystem::FibonacciLI);
    CHECK(fib.num == big({1, -1}));
    CHECK(fib.den == big({1, -1, -1}));
    RationalGF fibt = catalog(ZetaSystem::FibonacciTorus);
    CHECK(fibt.num == big({1, 0, -1}));
    CHECK(fibt.den == big({1, -1, -1}));
    // (1-z-z^2)^2 (1+z) and (1-3z+z^2)(1+z-z^2)^3 (1-z), expanded
    RationalGF pli = catalog(ZetaSystem::PenroseLI);
    CHECK(pli.num == poly_mul(poly_mul(big({1, -1, -1}), big({1, -1, -1})), big({1, 1})));
    CHECK(pli.den == poly_mul(poly_mul(big({1, -3, 1}), poly_pow(big({1, 1, -1}), 3)), big({1, -1})));
    CHECK_THROWS_AS(parse_zeta_system("nope"), std::invalid_argument);
}

TEST_CASE("series expansion") {
    CHECK(series_coeffs(catalog(ZetaSystem::FibonacciLI), 4) == big({1, 0, 1, 1, 2}));
    CHECK(series_coeffs({{BigInt(1)}, {BigInt(1), BigInt(-1)}}, 3) == big({1, 1, 1, 1}));
    for (ZetaSystem s : all_systems) CHECK(series_coeffs(catalog(s), 0) == big({1}));
    CHECK_THROWS_AS(series_coeffs(catalog(ZetaSystem::FibonacciLI), -1), std::domain_error);
    CHECK_THROWS_AS(RationalGF(big({2}), big({1})), std::invalid_argument);
}

TEST_CASE("fixed point counts") {
    CHECK(fixed_point_counts(catalog(ZetaSystem::FibonacciLI), 6) == big({0, 2, 3, 6, 10, 17}));
    CHECK(fixed_point_counts(catalog(ZetaSystem::FibonacciTorus), 4) == big({1, 1, 4, 5}));
    // a single fixed point for zeta = 1/(1-z)
    RationalGF one_fp{{BigInt(1)}, {BigInt(1), BigInt(-1)}};
    CHECK(fixed_point_counts(one_fp, 5) == big({1, 1, 1, 1, 1}));
}

TEST_CASE("cycle counts by Moebius inversion") {
    CHECK(cycle_counts(big({0, 2, 3, 6, 10, 17})) == big({0, 1, 1, 1, 2, 2}));
    CHECK(cycle_counts(big({1, 1, 1, 1})) == big({1, 0, 0, 0}));
    // a_6 = 1 c_1 + 2 c_2 + 3 c_3 + 6 c_6
    CHECK(0 * 1 + 2 * 1 + 3 * 1 + 6 * 2 == 17);
    // zeta = 1 + z has a_2 = -1 < a_1, giving a negative 2-cycle count
    RationalGF bad{{BigInt(1), BigInt(1)}, {BigInt(1)}};
    try {
        cycle_counts(fixed_point_counts(bad, 4));
        FAIL("expected InvalidOrbitDataError");
    } catch (const InvalidOrbitDataError& e) {
        CHECK(e.n == 2);
    }
}

TEST_CASE("round-trip identity a_n = sum of m c_m over m | n") {
    for (ZetaSystem s : all_systems) {
        auto a = fixed_point_counts(catalog(s), 40);
        auto c = cycle_counts(a);
        for (int n = 1; n <= 40; ++n) {
            BigInt acc = 0;
            for (int m = 1; m <= n; ++m)
                if (n % m == 0) acc += bigint_of(m) * c[m - 1];
            CHECK(acc == a[n - 1]);
        }
        for (int n = 1; n <= 40; ++n) CHECK(a[n - 1] >= 0);
    }
}

TEST_CASE("Euler product reconstruction") {
    for (ZetaSystem s : all_systems) {
        RationalGF gf = catalog(s);
        auto c = cycle_counts(fixed_point_counts(gf, 20));
        CHECK(euler_product_check(gf, c, 20));
        // vacuous at order 0
        CHECK(euler_product_check(gf, c, 0));
        // perturbation is detected
        auto bad = c;
        bad[3] += 1;
        CHECK_FALSE(euler_product_check(gf, bad, 20));
    }
}

}  // TEST_SUITE
