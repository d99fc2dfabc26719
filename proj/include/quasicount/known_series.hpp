#pragma once

#include <utility>
#include <vector>


// Frozen leading coefficients of the counting series used across tests.
// Sparse series are given as (m, value) pairs; every index below the last
// listed m that is absent has coefficient 0.

namespace quasicount::known {

// sublattices of a planar lattice by index
inline const std::vector<long long> ell2_prefix = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};

// full-rank submodules of a rank-4 module by index
inline const std::vector<long long> ell4_prefix = {1, 15, 40, 155, 156, 600, 400, 1395, 1210, 2340, 1464};

// triangular similarity sublattices / ideal counts of Z[w]
inline const std::vector<std::pair<long long, long long>> a6_prefix = {
    {1, 1}, {3, 1}, {4, 1}, {7, 2}, {9, 1}, {12, 1}, {13, 2}, {16, 1}, {19, 2}, {21, 2}, {25, 1}};

// similarity submodules / ideal counts of Z[xi12]
inline const std::vector<std::pair<long long, long long>> a12_prefix = {
    {1, 1}, {4, 1}, {9, 1}, {13, 4}, {16, 1}, {25, 2}, {36, 1}, {37, 4}, {49, 2}, {52, 4}, {61, 4}};

// coincidence sublattices of the triangular lattice
inline const std::vector<std::pair<long long, long long>> coin3_prefix = {
    {1, 1}, {7, 2}, {13, 2}, {19, 2}, {31, 2}, {37, 2}, {43, 2}, {49, 2}, {61, 2}, {67, 2}, {73, 2}};

// coincidence submodules of Z[xi12]
inline const std::vector<std::pair<long long, long long>> coin12_prefix = {
    {1, 1}, {13, 4}, {25, 2}, {37, 4}, {49, 2}, {61, 4}, {73, 4}, {97, 4}, {109, 4}, {157, 4}};

// norm-only central shelling function f
inline const std::vector<std::pair<long long, long long>> f_prefix = {
    {1, 1}, {4, 1}, {9, 1}, {13, 2}, {16, 1}, {25, 2}, {36, 1}, {37, 2}, {49, 2}, {52, 2}, {61, 2}};

// Averaged shelling of the shield tiling: all twelve squared distances
// 0 < r <= 2. Row: r2 = (a, b) meaning a + b sqrt3; a known shell point;
// orbit length under D12; norm of r2; exact averaged value
// va/vad + (vb/vbd) sqrt3.
struct AveragedRow {
    long long a, b;
    long long rep[4];
    long long orbit;
    long long norm;
    long long va, vad, vb, vbd;
};

inline const std::vector<AveragedRow> averaged_table = {
    {2, -1, {1, -1, 0, 0}, 12, 1, 8, 1, -2, 1},     // 1 - xi
    {4, -2, {-1, 2, 0, -1}, 12, 4, 2, 1, 0, 1},     // xi + conj(xi) - 1
    {6, -3, {1, -1, 1, -1}, 12, 9, 4, 1, -2, 1},    // 1 - xi + xi^2 - xi^3
    {1, 0, {1, 0, 0, 0}, 12, 1, 8, 1, 0, 1},        // 1
    {5, -2, {2, -1, 0, 0}, 24, 13, 10, 1, -4, 1},   // 2 - xi
    {2, 0, {1, 0, 0, 1}, 12, 4, 48, 1, -24, 1},     // 1 + xi^3
    {4, -1, {-2, 1, 1, 0}, 24, 13, 6, 1, 0, 1},     // xi + xi^2 - 2
    {8, -3, {-1, 3, 0, -1}, 24, 37, -76, 1, 44, 1}, // 3 xi - xi^3 - 1
    {3, 0, {0, 2, 0, -1}, 12, 9, -4, 1, 16, 3},     // xi + conj(xi)
    {7, -2, {2, -2, -1, 0}, 24, 37, 20, 1, -32, 3}, // 2 - 2 xi - xi^2
    {2, 1, {1, 1, 0, 0}, 12, 1, 48, 1, -22, 1},     // 1 + xi
    {4, 0, {2, 0, 0, 0}, 12, 16, 2, 1, 4, 3},       // 2
};

}  // namespace quasicount::known
