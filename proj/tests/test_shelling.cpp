#include <doctest.h>

#include <algorithm>

#include "quasicount/shelling.hpp"
#include "quasicount/known_series.hpp"

using namespace quasicount;

TEST_SUITE("shelling") {

TEST_CASE("the norm-169 triple") {
    CHECK(central_shell_count(ZSqrt3{4, 1} * ZSqrt3{4, 1}) == 36);
    CHECK(central_shell_count({13, 0}) == 48);
    CHECK(central_shell_count(ZSqrt3{4, -1} * ZSqrt3{4, -1}) == 36);
}

TEST_CASE("central shelling basics") {
    CHECK(central_shell_count({2, -1}) == 12);  // a unit radius
    CHECK(central_shell_count({1, 0}) == 12);
    CHECK(central_shell_count({0, 0}) == 1);    // origin shell
    CHECK(central_shell_count({1, 1}) == 0);    // not totally positive
    CHECK(central_shell_count({0, 1}) == 0);    // sqrt3 to an odd power
    CHECK(central_shell_count({3, 0}) == 12);
    CHECK(central_shell_count({2, 0}) == 12);
    CHECK(central_shell_count({11, 0}) == 0);   // both inert factors to odd power
    CHECK(central_shell_count({5, 0}) == 24);  // inert below, splits above
    CHECK(central_shell_count({25, 0}) == 36);  // 5 to the power t = 2, split above
}

TEST_CASE("triangular lattice central shelling") {
    CHECK(central_shell_e3(7) == 12);
    CHECK(central_shell_e3(2) == 0);
    CHECK(central_shell_e3(1) == 6);
    CHECK_THROWS_AS(central_shell_e3(0), std::domain_error);
    for (long long m = 1; m <= 40; ++m)
        CHECK(static_cast<long long>(enumerate_shell_e3(m).size()) == central_shell_e3(m));
}

TEST_CASE("norm heuristic validity") {
    CHECK(norm_heuristic_valid(ZSqrt3{4, 1} * ZSqrt3{4, 1}));
    CHECK_FALSE(norm_heuristic_valid({13, 0}));
    CHECK(norm_heuristic_valid({2, 0}));
    CHECK(norm_heuristic_valid({25, 0}));
    CHECK_THROWS_AS(norm_heuristic_valid({0, 0}), std::domain_error);
}

TEST_CASE("norm-only shelling where valid") {
    CHECK(central_shell_via_norm(ZSqrt3{4, 1} * ZSqrt3{4, 1}) == 36);
    CHECK(central_shell_via_norm({2, -1}) == 12);
    try {
        central_shell_via_norm({13, 0});
        FAIL("expected NormHeuristicError");
    } catch (const NormHeuristicError& e) {
        CHECK(e.failing_prime == 13);
    }
}

TEST_CASE("unit and conjugation invariance") {
    for (long long m = 1; m <= 50; ++m) {
        for (const ZSqrt3& r2 : zsqrt3_ideal_reps_of_norm(m)) {
            long long base = central_shell_count(r2);
            CHECK(central_shell_count(conjugate(r2)) == base);
            ZSqrt3 up = r2, dn = r2;
            for (int l = 1; l <= 3; ++l) {
                up = up * ZSqrt3{2, 1};
                dn = dn * ZSqrt3{2, -1};
                CHECK(central_shell_count(up) == base);
                CHECK(central_shell_count(dn) == base);
            }
        }
    }
}

TEST_CASE("closed form agrees with shell enumeration") {
    for (long long m = 1; m <= 60; ++m) {
        for (const ZSqrt3& r2 : zsqrt3_ideal_reps_of_norm(m)) {
            long long c = central_shell_count(r2);
            CHECK(static_cast<long long>(enumerate_shell_z12(r2).size()) == c);
            CHECK(static_cast<long long>(enumerate_shell_z12(conjugate(r2)).size()) == c);
            if (c > 0 && norm_heuristic_valid(r2)) CHECK(central_shell_via_norm(r2) == c);
        }
    }
}

TEST_CASE("averaged shelling spec points") {
    AveragedShellingRow r1 = averaged_shelling({2, -1});
    CHECK(r1.value == Q3{rational_of(8), rational_of(-2)});
    AveragedShellingRow r2 = averaged_shelling({2, 0});
    CHECK(r2.value == Q3{rational_of(48), rational_of(-24)});
    AveragedShellingRow r3 = averaged_shelling({8, -3});
    CHECK(r3.value == Q3{rational_of(-76), rational_of(44)});
}

TEST_CASE("the full averaged shelling table") {
    for (const auto& row : known::averaged_table) {
        ZSqrt3 r2{row.a, row.b};
        AveragedShellingRow got = averaged_shelling(r2);
        CHECK(got.value == Q3{rational_of(row.va, row.vad), rational_of(row.vb, row.vbd)});
        CHECK(got.central_count == row.orbit);  // single orbit at these radii
        REQUIRE(got.representatives.size() == 1);
        CHECK(got.representatives[0].second == row.orbit);
        long long n = norm(r2);
        CHECK((n < 0 ? -n : n) == row.norm);
        // the published shell point lies on this shell
        Z12 rep{row.rep[0], row.rep[1], row.rep[2], row.rep[3]};
        CHECK(relative_norm(rep) == r2);
        auto shell = enumerate_shell_z12(r2);
        CHECK(std::find(shell.begin(), shell.end(), rep) != shell.end());
        // the value lies in (1/3) Z[sqrt3]
        CHECK(mpz_divisible_p(BigInt(3).get_mpz_t(), got.value.a.get_den().get_mpz_t()));
        CHECK(mpz_divisible_p(BigInt(3).get_mpz_t(), got.value.b.get_den().get_mpz_t()));
    }
}

TEST_CASE("averaged shelling of larger shells sums complete orbits") {
    // norm 169 radius with a 48-point shell: several orbits, exact agreement
    AveragedShellingRow row = averaged_shelling({13, 0});
    CHECK(row.central_count == 48);
    long long total = 0;
    for (auto& [rep, len] : row.representatives) {
        (void)rep;
        total += len;
    }
    CHECK(total == 48);
    CHECK(mpz_divisible_p(BigInt(3).get_mpz_t(), row.value.a.get_den().get_mpz_t()));
    CHECK(mpz_divisible_p(BigInt(3).get_mpz_t(), row.value.b.get_den().get_mpz_t()));
}

TEST_CASE("averaged shelling of an empty shell") {
    AveragedShellingRow row = averaged_shelling({1, 1});
    CHECK(row.central_count == 0);
    CHECK(row.representatives.empty());
    CHECK(row.value == Q3{});
}

}  // TEST_SUITE
