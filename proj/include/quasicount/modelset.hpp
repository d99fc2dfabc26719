#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quasicount/lattice_enum.hpp"
#include "quasicount/polygon.hpp"

namespace quasicount {

enum class BoundaryPolicy { RejectSingular, Closed, Open };

inline const char* to_string(BoundaryPolicy p) {
    switch (p) {
        case BoundaryPolicy::RejectSingular: return "reject-singular";
        case BoundaryPolicy::Closed: return "closed";
        case BoundaryPolicy::Open: return "open";
    }
    return "?";
}

inline BoundaryPolicy parse_policy(const std::string& s) {
    if (s == "reject-singular") return BoundaryPolicy::RejectSingular;
    if (s == "closed") return BoundaryPolicy::Closed;
    if (s == "open") return BoundaryPolicy::Open;
    throw std::invalid_argument("unknown boundary policy: " + s);
}

struct ModelSetConfig {
    Q3Vector shift;                // window shift u in internal space
    Rational physical_radius{50};  // cut radius in physical space
    BoundaryPolicy policy = BoundaryPolicy::RejectSingular;
};

struct SingularModelSetError : std::runtime_error {
    Z12 point;
    explicit SingularModelSetError(const Z12& x)
        : std::runtime_error("singular model set: star image of " + render_z12(x) +
                             " lies on the window boundary"),
          point(x) {}
};

// Vertex patch of the shield tiling: all module points with physical image in
// the cut disk and star image in the shifted window. Edges join the pairs at
// the minimal squared distance 2 - sqrt3.
struct PatchPointSet {
    ModelSetConfig config;
    std::vector<Z12> points;                 // sorted by coordinates
    std::vector<std::pair<int, int>> edges;  // index pairs, i < j
};

namespace detail {

// sign of (a + b sqrt3) - p/q with q > 0, in 128-bit integers. Coefficients
// must stay below ~2^30 for the squarings to fit; callers guard the scale.
inline int cmp_zsqrt3_rational(long long a, long long b, long long p, long long q) {
    __int128 ra = static_cast<__int128>(a) * q - p;
    __int128 rb = static_cast<__int128>(b) * q;
    if (ra >= 0 && rb >= 0) return (ra == 0 && rb == 0) ? 0 : 1;
    if (ra <= 0 && rb <= 0) return -1;
    __int128 lhs = ra * ra, rhs = 3 * rb * rb;
    if (ra > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

struct Z12Hash {
    std::size_t operator()(const Z12& z) const {
        std::size_t h = 1469598103934665603ull;
        for (long long c : z.c) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

// Generates the complete patch: candidate coordinates are confined to a box
// via the inverse of the combined physical/internal embedding; membership is
// decided by exact sign predicates only (the integer prefilters are exact
// over-approximations, never decisions).
inline PatchPointSet generate(const ModelSetConfig& config) {
    if (config.physical_radius <= 0) throw std::domain_error("physical radius must be positive");
    if (config.physical_radius > 100000) throw ResourceBudgetError("physical radius too large");
    PatchPointSet out;
    out.config = config;

    const ConvexPolygon& w = dodecagon_window();

    // physical radius^2 as a small rational; the 128-bit comparisons below
    // need num <= 1e12 and den <= 1e6
    Rational r2rad = config.physical_radius * config.physical_radius;
    if (r2rad.get_num() > bigint_of(1000000000000LL) || r2rad.get_den() > bigint_of(1000000))
        throw std::domain_error("physical radius must have small numerator and denominator");
    long long rp_n = to_ll(r2rad.get_num()), rp_d = to_ll(r2rad.get_den());

    // internal disk prefilter bound, as a small rational
    Q3 u2 = norm2(config.shift);
    Rational u2_ub =
        u2.a + u2.b * (sgn(u2.b) >= 0 ? rational_of(1732051, 1000000) : rational_of(3, 2));
    if (u2_ub < 0) u2_ub = 0;
    Rational ri_ub = detail::sqrt_upper(rational_of(2) + rational_of(1732051, 1000000)) +
                     detail::sqrt_upper(u2_ub);  // R> + |u|, from above
    Rational ri2_ub = ri_ub * ri_ub;
    // keep the fast-path integers small
    ri2_ub = rational_of(detail::ceil_to_ll(ri2_ub));
    long long ri_n = to_ll(ri2_ub.get_num()), ri_d = 1;

    // coordinate box bounds
    Rational rp_ub = detail::sqrt_upper(r2rad);
    Rational s = rp_ub + detail::sqrt_upper(ri2_ub);
    Rational s3_hi = rational_of(1732051, 1000000);
    long long b12 = detail::ceil_to_ll(s * s3_hi / 3);
    {
        double wd = 2.0 * static_cast<double>(b12) + 1.0;
        double c0w = s.get_d() + 1.0;
        if (wd * wd * c0w * c0w > 1e8)
            throw ResourceBudgetError("model set candidate box exceeds 1e8 cells");
    }

    bool singular_hit = false;
    Z12 singular_point;

    // exact window membership: +1 interior, 0 boundary, -1 outside of W + u
    auto window_side = [&](const Z12& x) {
        Q3Vector p = embed(x, Plane::Internal) - config.shift;
        int worst = 1;
        for (std::size_t e = 0; e < 12; ++e) {
            const Q3Vector& a = w.vertices[e];
            const Q3Vector& b = w.vertices[(e + 1) % 12];
            int sx = sign(cross(b - a, p - a));
            if (sx < 0) return -1;
            if (sx == 0) worst = 0;
        }
        return worst;
    };

    auto range_pair = [&](long long other) {
        long long lo = detail::ceil_to_ll((-s - rational_of(other)) / 2);
        long long hi = -detail::ceil_to_ll((rational_of(other) - s) / 2);
        return std::pair<long long, long long>{lo, hi};
    };

    for (long long c1 = -b12; c1 <= b12; ++c1) {
        auto [c3lo, c3hi] = range_pair(c1);
        for (long long c2 = -b12; c2 <= b12; ++c2) {
            auto [c0lo, c0hi] = range_pair(c2);
            for (long long c0 = c0lo; c0 <= c0hi; ++c0) {
                for (long long c3 = c3lo; c3 <= c3hi; ++c3) {
                    Z12 x{c0, c1, c2, c3};
                    ZSqrt3 n = relative_norm(x);
                    if (detail::cmp_zsqrt3_rational(n.a, n.b, rp_n, rp_d) > 0) continue;
                    ZSqrt3 ni = relative_norm(star_map(x));
                    if (detail::cmp_zsqrt3_rational(ni.a, ni.b, ri_n, ri_d) > 0) continue;
                    int side = window_side(x);
                    if (side < 0) continue;
                    if (side == 0) {
                        if (config.policy == BoundaryPolicy::RejectSingular) {
                            if (!singular_hit) {
                                singular_hit = true;
                                singular_point = x;
                            }
                            continue;
                        }
                        if (config.policy == BoundaryPolicy::Open) continue;
                    }
                    out.points.push_back(x);
                }
            }
        }
    }
    if (singular_hit) throw SingularModelSetError(singular_point);
    std::sort(out.points.begin(), out.points.end());

    // edges: pairs at the minimal squared distance 2 - sqrt3. The float grid
    // only narrows candidate pairs (cell width 1 covers the 0.52 edge length
    // with a wide margin); the distance test itself is exact.
    const ZSqrt3 min_d2{2, -1};
    std::map<std::pair<long long, long long>, std::vector<int>> grid;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        Q3Vector p = embed(out.points[i]);
        grid[{static_cast<long long>(std::floor(to_double(p.x))),
              static_cast<long long>(std::floor(to_double(p.y)))}]
            .push_back(static_cast<int>(i));
    }
    for (const auto& [cell, members] : grid) {
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({cell.first + dx, cell.second + dy});
                if (it == grid.end()) continue;
                for (int i : members)
                    for (int j : it->second)
                        if (j > i && relative_norm(out.points[j] - out.points[i]) == min_d2)
                            out.edges.push_back({i, j});
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

// Exact minimum squared distance between distinct patch points. A unit float
// grid narrows the candidates; any pair sharing no adjacent cell is farther
// than 1 apart, so a candidate minimum below 1 is global. Otherwise the scan
// falls back to all pairs.
inline std::optional<ZSqrt3> min_squared_distance(const PatchPointSet& patch) {
    std::size_t n = patch.points.size();
    if (n < 2) return std::nullopt;
    std::optional<ZSqrt3> best;
    auto offer = [&](const ZSqrt3& d2) {
        if (!best || sign_embed(d2 - *best) < 0) best = d2;
    };
    std::map<std::pair<long long, long long>, std::vector<int>> grid;
    for (std::size_t i = 0; i < n; ++i) {
        Q3Vector p = embed(patch.points[i]);
        grid[{static_cast<long long>(std::floor(to_double(p.x))),
              static_cast<long long>(std::floor(to_double(p.y)))}]
            .push_back(static_cast<int>(i));
    }
    for (const auto& [cell, members] : grid) {
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({cell.first + dx, cell.second + dy});
                if (it == grid.end()) continue;
                for (int i : members)
                    for (int j : it->second)
                        if (j > i) offer(relative_norm(patch.points[j] - patch.points[i]));
            }
    }
    if (best && sign_embed(*best - ZSqrt3{1, 0}) < 0) return best;
    if (n > 20000) throw ResourceBudgetError("full pairwise scan too large");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            offer(relative_norm(patch.points[j] - patch.points[i]));
    return best;
}

// Mean number of patch points at squared distance r2 from the eligible
// centers (those at least `margin` inside the cut radius); exact rational.
// Neighbor lookups are exact membership tests against the patch.
inline Rational empirical_averaged_shelling(const PatchPointSet& patch, const ZSqrt3& r2,
                                            const Rational& margin) {
    if (margin <= 0) throw std::domain_error("margin must be positive");
    if (!(Q3{margin * margin, Rational(0)} >= to_q3(r2)))
        throw std::domain_error("margin must be at least the shell radius");
    if (!(rational_of(2) * margin < patch.config.physical_radius))
        throw std::domain_error("patch radius must exceed twice the margin");

    std::vector<Z12> shell = enumerate_shell_z12(r2);
    std::unordered_set<Z12, detail::Z12Hash> members(patch.points.begin(), patch.points.end());

    Rational rlim = patch.config.physical_radius - margin;
    Rational rlim2 = rlim * rlim;
    long long centers = 0, hits = 0;
    for (const Z12& x : patch.points) {
        ZSqrt3 nx = relative_norm(x);
        if (sign(Q3{rational_of(nx.a) - rlim2, rational_of(nx.b)}) > 0) continue;
        ++centers;
        for (const Z12& v : shell)
            if (members.count(x + v)) ++hits;
    }
    if (centers == 0) throw std::domain_error("no eligible centers at this margin");
    return Rational(bigint_of(hits)) / Rational(bigint_of(centers));
}

// ---------------------------------------------------------------------------
// Export formats
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json patch_to_json_value(const PatchPointSet& patch) {
    nlohmann::ordered_json j;
    j["config"] = {{"shift", render_q3_vector(patch.config.shift)},
                   {"radius", to_string(patch.config.physical_radius)},
                   {"policy", to_string(patch.config.policy)}};
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const Z12& p : patch.points) {
        Q3Vector phys = embed(p);
        pts.push_back({{"c", {p.c[0], p.c[1], p.c[2], p.c[3]}},
                       {"x", render_q3(phys.x)},
                       {"y", render_q3(phys.y)},
                       {"xd", decimal_string(phys.x, 12)},
                       {"yd", decimal_string(phys.y, 12)}});
    }
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (auto& [i, k] : patch.edges) es.push_back({i, k});
    return j;
}

inline std::string patch_to_json(const PatchPointSet& patch) {
    return patch_to_json_value(patch).dump(2) + "\n";
}

inline PatchPointSet patch_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PatchPointSet out;
    out.config.shift = parse_q3_vector(j.at("config").at("shift").get<std::string>());
    out.config.physical_radius = parse_rational(j.at("config").at("radius").get<std::string>());
    out.config.policy = parse_policy(j.at("config").at("policy").get<std::string>());
    for (const auto& p : j.at("points")) {
        const auto& c = p.at("c");
        out.points.push_back(
            {c.at(0).get<long long>(), c.at(1).get<long long>(), c.at(2).get<long long>(), c.at(3).get<long long>()});
    }
    for (const auto& e : j.at("edges"))
        out.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

inline std::string patch_to_csv(const PatchPointSet& patch) {
    std::string out = "c0,c1,c2,c3,x,y,star_x,star_y\n";
    for (const Z12& p : patch.points) {
        Q3Vector phys = embed(p), internal = embed(p, Plane::Internal);
        out += std::to_string(p.c[0]) + "," + std::to_string(p.c[1]) + "," + std::to_string(p.c[2]) +
               "," + std::to_string(p.c[3]) + "," + decimal_string(phys.x, 12) + "," +
               decimal_string(phys.y, 12) + "," + decimal_string(internal.x, 12) + "," +
               decimal_string(internal.y, 12) + "\n";
    }
    return out;
}

inline std::string patch_to_svg(const PatchPointSet& patch) {
    double r = patch.config.physical_radius.get_d() + 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.3f %.3f %.3f %.3f", -r, -r, 2 * r, 2 * r);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + std::string(buf) +
                      "\">\n<g transform=\"scale(1,-1)\">\n";
    for (auto& [i, j] : patch.edges) {
        Q3Vector a = embed(patch.points[i]), b = embed(patch.points[j]);
        out += "<line x1=\"" + decimal_string(a.x, 6) + "\" y1=\"" + decimal_string(a.y, 6) +
               "\" x2=\"" + decimal_string(b.x, 6) + "\" y2=\"" + decimal_string(b.y, 6) +
               "\" stroke=\"black\" stroke-width=\"0.03\"/>\n";
    }
    for (const Z12& p : patch.points) {
        Q3Vector v = embed(p);
        out += "<circle cx=\"" + decimal_string(v.x, 6) + "\" cy=\"" + decimal_string(v.y, 6) +
               "\" r=\"0.08\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace quasicount
