#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasicount/dirichlet.hpp"
#include "quasicount/inflation_zeta.hpp"
#include "quasicount/known_series.hpp"
#include "quasicount/lattice_enum.hpp"
#include "quasicount/modelset.hpp"
#include "quasicount/polygon.hpp"
#include "quasicount/shelling.hpp"

namespace quasicount::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

using nlohmann::ordered_json;

inline std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Builds one "key,closed_form,oracle,match" CSV block; tracks global success.
struct MatchTable {
    std::string csv = "m,closed_form,oracle,match\n";
    bool all_ok = true;

    void row(const std::string& key, const std::string& closed, const std::string& oracle) {
        bool ok = closed == oracle;
        all_ok = all_ok && ok;
        csv += key + "," + closed + "," + oracle + "," + (ok ? "1" : "0") + "\n";
    }
    void row_checked(const std::string& key, const std::string& closed, const std::string& oracle,
                     bool ok) {
        all_ok = all_ok && ok;
        csv += key + "," + closed + "," + oracle + "," + (ok ? "1" : "0") + "\n";
    }
};

inline std::string fact_class(Z12Class c) { return to_string(c); }

inline ordered_json shell_central_json(const ZSqrt3& r2, const std::string& method) {
    ordered_json j;
    j["r2"] = render_zsqrt3(r2);
    j["method"] = method;
    if (method == "norm") {
        j["count"] = central_shell_via_norm(r2);  // caller owes a non-empty shell
    } else if (method == "oracle") {
        j["count"] = enumerate_shell_z12(r2).size();
    } else {
        j["count"] = central_shell_count(r2);
    }
    long long n = norm(r2);
    j["norm"] = n < 0 ? -n : n;
    j["totally_positive"] = r2.is_zero() ? false : is_totally_positive(r2);
    if (!r2.is_zero()) {
        ShellingResult res = central_shelling(r2);
        j["heuristic_valid"] = norm_heuristic_valid(r2);
        j["unit"] = render_zsqrt3(res.factorization.unit);
        auto& fs = j["factors"] = ordered_json::array();
        for (const auto& f : res.factorization.factors)
            fs.push_back({{"prime", render_zsqrt3(f.prime)},
                          {"exponent", f.exponent},
                          {"class", fact_class(f.cls)}});
    }
    return j;
}

inline ordered_json shell_averaged_json(const ZSqrt3& r2) {
    AveragedShellingRow row = averaged_shelling(r2);
    ordered_json j;
    j["r2"] = render_zsqrt3(r2);
    j["central_count"] = row.central_count;
    j["value"] = render_q3(row.value);
    j["value_decimal"] = decimal_string(row.value, 12);
    auto& os = j["orbits"] = ordered_json::array();
    for (auto& [rep, len] : row.representatives)
        os.push_back({{"representative", render_z12(rep)}, {"length", len}});
    return j;
}

// ---------------------------------------------------------------------------
// oracle checks; each returns its CSV and success flag
// ---------------------------------------------------------------------------

inline MatchTable oracle_series() {
    MatchTable t;
    CoefficientTable l2 = ell_table(2, 12);
    for (std::size_t i = 0; i < known::ell2_prefix.size(); ++i)
        t.row("ell2:" + std::to_string(i + 1), l2[static_cast<long long>(i + 1)].get_str(),
              std::to_string(known::ell2_prefix[i]));
    CoefficientTable l4 = ell_table(4, 11);
    for (std::size_t i = 0; i < known::ell4_prefix.size(); ++i)
        t.row("ell4:" + std::to_string(i + 1), l4[static_cast<long long>(i + 1)].get_str(),
              std::to_string(known::ell4_prefix[i]));
    auto sparse = [&](const char* name, const MultiplicativeFunction& f,
                      const std::vector<std::pair<long long, long long>>& ref) {
        CoefficientTable tab = f.table(ref.back().first);
        std::size_t k = 0;
        for (long long m = 1; m <= ref.back().first; ++m) {
            long long want = 0;
            if (k < ref.size() && ref[k].first == m) want = ref[k++].second;
            if (want != 0 || tab[m] != 0)
                t.row(std::string(name) + ":" + std::to_string(m), tab[m].get_str(),
                      std::to_string(want));
        }
    };
    sparse("a6", a6_function(), known::a6_prefix);
    sparse("a12", a12_function(), known::a12_prefix);
    sparse("coin3", coincidence_e3_function(), known::coin3_prefix);
    sparse("coin12", coincidence_z12_function(), known::coin12_prefix);
    sparse("f", f_count_function(), known::f_prefix);
    return t;
}

inline MatchTable oracle_sublattices(const std::string& module, long long maxm) {
    MatchTable t;
    int rank = module == "e3" ? 2 : 4;
    for (long long m = 1; m <= maxm; ++m)
        t.row(std::to_string(m), ell(rank, m).get_str(),
              std::to_string(enumerate_sublattices(rank, m).size()));
    return t;
}

inline MatchTable oracle_ideals(const std::string& module) {
    MatchTable t;
    if (module == "e3") {
        for (long long m = 1; m <= 60; ++m)
            t.row(std::to_string(m), a6(m).get_str(),
                  std::to_string(count_ideal_sublattices(RingId::E3, m)));
    } else {
        std::vector<long long> ms;
        for (long long m = 1; m <= 16; ++m) ms.push_back(m);
        ms.push_back(25);
        for (long long m : ms)
            t.row(std::to_string(m), a12(m).get_str(),
                  std::to_string(count_ideal_sublattices(RingId::Z12, m)));
    }
    return t;
}

inline MatchTable oracle_coincidence(long long maxm) {
    MatchTable t;
    auto csl = enumerate_csl_e3(maxm);
    for (long long m = 1; m <= maxm; ++m) {
        std::size_t got = csl.count(m) ? csl[m].size() : 0;
        t.row(std::to_string(m), coincidence_e3(m).get_str(), std::to_string(got));
    }
    return t;
}

inline MatchTable oracle_identities(long long maxm) {
    MatchTable t;
    t.row_checked("phi3", "holds", "holds", series_identity_check("phi3", maxm));
    t.row_checked("phi12", "holds", "holds", series_identity_check("phi12", maxm));
    return t;
}

inline MatchTable oracle_shelling(long long max_norm) {
    MatchTable t;
    for (long long m = 1; m <= max_norm; ++m) {
        for (const ZSqrt3& r2 : zsqrt3_ideal_reps_of_norm(m)) {
            long long closed = central_shell_count(r2);
            long long enumd = static_cast<long long>(enumerate_shell_z12(r2).size());
            bool ok = closed == enumd;
            ok = ok && central_shell_count(conjugate(r2)) == closed;
            ZSqrt3 up = r2, dn = r2;
            for (int l = 1; l <= 3 && ok; ++l) {
                up = up * ZSqrt3{2, 1};
                dn = dn * ZSqrt3{2, -1};
                ok = central_shell_count(up) == closed && central_shell_count(dn) == closed;
            }
            if (closed > 0 && norm_heuristic_valid(r2))
                ok = ok && central_shell_via_norm(r2) == closed;
            t.row_checked(render_zsqrt3(r2), std::to_string(closed), std::to_string(enumd), ok);
        }
    }
    return t;
}

inline MatchTable oracle_averaged_table() {
    MatchTable t;
    for (const auto& row : known::averaged_table) {
        ZSqrt3 r2{row.a, row.b};
        AveragedShellingRow got = averaged_shelling(r2);
        Q3 want{rational_of(row.va, row.vad), rational_of(row.vb, row.vbd)};
        bool ok = got.value == want && got.central_count == row.orbit;
        long long n = norm(r2);
        ok = ok && (n < 0 ? -n : n) == row.norm;
        ok = ok && mpz_divisible_p(BigInt(3).get_mpz_t(), got.value.a.get_den().get_mpz_t()) &&
             mpz_divisible_p(BigInt(3).get_mpz_t(), got.value.b.get_den().get_mpz_t());
        t.row_checked(render_zsqrt3(r2), render_q3(got.value), render_q3(want), ok);
    }
    return t;
}

inline MatchTable oracle_covariogram() {
    MatchTable t;
    for (int k = 0; k < 20; ++k) {
        Q3 s = rational_of(k, 20) * Q3{rational_of(2), rational_of(1)};
        t.row("type1:" + std::to_string(k), render_q3(covariogram({s, Q3{}})),
              render_q3(h1_exact(s)));
    }
    for (int k = 0; k < 20; ++k) {
        Q3 w = rational_of(k, 20) * Q3{rational_of(1), rational_of(1)};
        t.row("type2:" + std::to_string(k), render_q3(covariogram({w, w})),
              render_q3(h2_exact_sqrt2(w)));
    }
    return t;
}

inline MatchTable oracle_modelset(long long radius) {
    MatchTable t;
    ModelSetConfig c;
    c.shift = {Q3{rational_of(1, 7), rational_of(0)}, Q3{rational_of(1, 9), rational_of(0)}};
    c.physical_radius = rational_of(radius);
    c.policy = BoundaryPolicy::RejectSingular;
    PatchPointSet patch = generate(c);
    auto mind = min_squared_distance(patch);
    t.row_checked("min_d2", mind ? render_zsqrt3(*mind) : "none", "2-1*sqrt3",
                  mind && *mind == ZSqrt3{2, -1});
    Rational margin = rational_of(5, 2);
    Rational tol = rational_of(15, 100);
    for (const auto& row : known::averaged_table) {
        ZSqrt3 r2{row.a, row.b};
        Q3 exact{rational_of(row.va, row.vad), rational_of(row.vb, row.vbd)};
        Rational emp = empirical_averaged_shelling(patch, r2, margin);
        Q3 diff = Q3{emp, Rational(0)} - exact;
        bool ok = abs(diff) <= Q3{tol, Rational(0)};
        t.row_checked(render_zsqrt3(r2), decimal_string(exact, 6), decimal_string(emp, 6), ok);
    }
    return t;
}

inline MatchTable oracle_zeta(int maxm) {
    MatchTable t;
    for (ZetaSystem s : {ZetaSystem::FibonacciLI, ZetaSystem::FibonacciTorus, ZetaSystem::PenroseLI,
                         ZetaSystem::PenroseTorus}) {
        RationalGF gf = catalog(s);
        bool ok = true;
        std::string note = "ok";
        try {
            auto a = fixed_point_counts(gf, maxm);
            for (const BigInt& v : a) ok = ok && v >= 0;
            auto c = cycle_counts(a);
            for (int n = 1; n <= maxm; ++n) {
                BigInt acc = 0;
                for (int m = 1; m <= n; ++m)
                    if (n % m == 0) acc += bigint_of(m) * c[m - 1];
                ok = ok && acc == a[n - 1];
            }
            ok = ok && euler_product_check(gf, c, maxm);
        } catch (const InvalidOrbitDataError& e) {
            ok = false;
            note = e.what();
        }
        t.row_checked(to_string(s), "consistent", note == "ok" ? "consistent" : note, ok);
    }
    return t;
}

inline MatchTable oracle_euclid_hat(int samples, unsigned seed) {
    MatchTable t;
    t.csv = "shift,covariogram,euclid_hat,abs_error\n";
    double worst = 0.0;
    auto probe = [&](const Q3Vector& v) {
        double ex = to_double(covariogram(v));
        double len = std::sqrt(std::max(0.0, to_double(norm2(v))));
        double ap = euclid_hat(len);
        double err = std::abs(ex - ap);
        worst = std::max(worst, err);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%.9f", ex, ap, err);
        t.csv += render_q3_vector(v) + "," + buf + "\n";
    };
    for (int k = 0; k <= samples; ++k) {
        Q3 s = rational_of(k, samples) * Q3{rational_of(2), rational_of(1)};
        probe({s, Q3{}});
        Q3 w = rational_of(k, samples) * Q3{rational_of(1), rational_of(1)};
        probe({w, w});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-400, 400);
    for (int k = 0; k < samples; ++k) {
        Q3Vector v{Q3{rational_of(num(rng), 100), rational_of(0)},
                   Q3{rational_of(num(rng), 100), rational_of(0)}};
        probe(v);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9f", worst);
    t.csv += "max_abs_error,,," + std::string(buf) + "\n";
    return t;
}

}  // namespace detail

// Parses and executes one command line (no program name in args).
inline CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out;

    CLI::App app{"exact counting functions for the triangular lattice and the twelvefold module"};
    app.name("quasicount");
    unsigned seed = 0;
    int threads = 1;
    app.add_option("--seed", seed, "seed for sampled diagnostics");
    app.add_option("--threads", threads, "reserved; execution is deterministic")
        ->check(CLI::PositiveNumber);

    // count
    auto* count = app.add_subcommand("count", "coefficient tables of the counting series");
    count->require_subcommand(1);
    struct CountOpts {
        std::string module = "e3";
        long long max = 60;
        std::string format = "csv";
    } copt;
    auto add_count = [&](const char* name, const char* help) {
        auto* sc = count->add_subcommand(name, help);
        sc->add_option("--module", copt.module, "ring module")
            ->check(CLI::IsMember({"e3", "e12"}));
        sc->add_option("--max", copt.max, "largest index")->check(CLI::PositiveNumber);
        sc->add_option("--format", copt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        return sc;
    };
    auto emit_table = [&](const CoefficientTable& t) {
        out << (copt.format == "json" ? table_to_json(t) + "\n" : table_to_csv(t));
    };
    add_count("sublattices", "all sublattices / submodules by index")->callback([&] {
        emit_table(ell_table(copt.module == "e3" ? 2 : 4, copt.max));
    });
    add_count("similar", "similarity sublattices by index")->callback([&] {
        emit_table((copt.module == "e3" ? a6_function() : a12_function()).table(copt.max));
    });
    add_count("coincidence", "coincidence sublattices by index")->callback([&] {
        emit_table(
            (copt.module == "e3" ? coincidence_e3_function() : coincidence_z12_function())
                .table(copt.max));
    });

    // shell
    auto* shell = app.add_subcommand("shell", "central and averaged shelling");
    shell->require_subcommand(1);
    struct ShellOpts {
        std::string r2;
        std::string module = "e12";
        std::string method = "prime-form";
    } sopt;
    auto* central = shell->add_subcommand("central", "points on the circle of squared radius r2");
    central->add_option("--r2", sopt.r2, "squared radius, e.g. \"13+0*sqrt3\" (e3: an integer)")
        ->required();
    central->add_option("--module", sopt.module, "ring module")->check(CLI::IsMember({"e3", "e12"}));
    central
        ->add_option("--method", sopt.method,
                     "prime-form (default), norm (needs a non-empty shell), or oracle (enumerate)")
        ->check(CLI::IsMember({"prime-form", "norm", "oracle"}));
    central->callback([&] {
        if (sopt.module == "e3") {
            ZSqrt3 v = parse_zsqrt3(sopt.r2);
            if (v.b != 0 || v.a < 1)
                throw std::invalid_argument("e3 squared radius must be a positive integer");
            nlohmann::ordered_json j;
            j["r2"] = v.a;
            j["method"] = sopt.method == "oracle" ? "oracle" : "prime-form";
            j["count"] = sopt.method == "oracle"
                             ? static_cast<long long>(enumerate_shell_e3(v.a).size())
                             : central_shell_e3(v.a);
            out << detail::json_dump(j);
        } else {
            out << detail::json_dump(detail::shell_central_json(parse_zsqrt3(sopt.r2), sopt.method));
        }
    });
    auto* averaged = shell->add_subcommand("averaged", "averaged shelling of the shield tiling");
    averaged->add_option("--r2", sopt.r2, "squared radius, e.g. \"2-1*sqrt3\"")->required();
    averaged->callback([&] {
        ZSqrt3 r2 = parse_zsqrt3(sopt.r2);
        if (!r2.is_zero() && !is_totally_positive(r2))
            throw std::domain_error("averaged shelling needs a totally positive r2");
        out << detail::json_dump(detail::shell_averaged_json(r2));
    });

    // covariogram
    struct CovOpts {
        std::string shift;
        std::string profile;
        int samples = 40;
    } vopt;
    auto* cov = app.add_subcommand("covariogram", "window overlap function");
    cov->add_option("--shift", vopt.shift, "shift vector \"x;y\" with Q(sqrt3) components");
    cov->add_option("--profile", vopt.profile, "axis profile")
        ->check(CLI::IsMember({"type1", "type2"}));
    cov->add_option("--samples", vopt.samples, "profile sample count")->check(CLI::PositiveNumber);
    cov->callback([&] {
        if (vopt.shift.empty() == vopt.profile.empty())
            throw CLI::ValidationError("covariogram", "use exactly one of --shift / --profile");
        if (!vopt.shift.empty()) {
            Q3Vector v = parse_q3_vector(vopt.shift);
            Q3 val = covariogram(v);
            nlohmann::ordered_json j;
            j["shift"] = render_q3_vector(v);
            j["value"] = render_q3(val);
            j["value_decimal"] = decimal_string(val, 12);
            out << detail::json_dump(j);
            return;
        }
        out << "s,exact,closed_form,euclid_hat\n";
        for (int k = 0; k <= vopt.samples; ++k) {
            Rational frac = rational_of(k, vopt.samples);
            Q3 exact, closed;
            double slen;
            std::string scol;
            if (vopt.profile == "type1") {
                Q3 s = frac * Q3{rational_of(2), rational_of(1)};
                exact = covariogram({s, Q3{}});
                closed = h1_exact(s);
                scol = decimal_string(s, 12);
                slen = to_double(s);
            } else {
                Q3 w = frac * Q3{rational_of(1), rational_of(1)};
                exact = covariogram({w, w});
                closed = h2_exact_sqrt2(w);
                slen = std::sqrt(2.0) * to_double(w);
                char sbuf[32];
                std::snprintf(sbuf, sizeof(sbuf), "%.12f", slen);
                scol = sbuf;
            }
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.12f", euclid_hat(slen));
            out << scol << "," << render_q3(exact) << "," << render_q3(closed) << "," << buf
                << "\n";
        }
    });

    // tiling
    auto* tiling = app.add_subcommand("tiling", "cut-and-project shield tiling patches");
    tiling->require_subcommand(1);
    struct TileOpts {
        std::string shift = "1/7;1/9";
        std::string radius = "12";
        std::string policy = "reject-singular";
        std::string format = "json";
        std::string out_path;
    } topt;
    auto* gen = tiling->add_subcommand("generate", "generate a vertex patch");
    gen->add_option("--shift", topt.shift, "window shift \"x;y\" in internal space");
    gen->add_option("--radius", topt.radius, "physical cut radius (rational)");
    gen->add_option("--policy", topt.policy, "boundary policy")
        ->check(CLI::IsMember({"reject-singular", "closed", "open"}));
    gen->add_option("--format", topt.format, "output format")
        ->check(CLI::IsMember({"svg", "json", "csv"}));
    gen->add_option("--out", topt.out_path, "write to file instead of stdout");
    gen->callback([&] {
        ModelSetConfig c;
        c.shift = parse_q3_vector(topt.shift);
        c.physical_radius = parse_rational(topt.radius);
        c.policy = parse_policy(topt.policy);
        PatchPointSet patch = generate(c);
        std::string payload = topt.format == "svg"
                                  ? patch_to_svg(patch)
                                  : (topt.format == "csv" ? patch_to_csv(patch) : patch_to_json(patch));
        if (topt.out_path.empty()) {
            out << payload;
        } else {
            std::ofstream f(topt.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + topt.out_path);
            f << payload;
            if (!f) throw std::runtime_error("write failed: " + topt.out_path);
        }
    });

    // zeta
    auto* zeta = app.add_subcommand("zeta", "dynamical zeta functions of inflation");
    zeta->require_subcommand(1);
    struct ZetaOpts {
        std::string system;
        int max = 20;
    } zopt;
    auto* expand = zeta->add_subcommand("expand", "fixed-point and cycle counts");
    expand->add_option("--system", zopt.system, "catalog entry")
        ->required()
        ->check(CLI::IsMember({"fibonacci-li", "fibonacci-torus", "penrose-li", "penrose-torus"}));
    expand->add_option("--max", zopt.max, "largest order")->check(CLI::PositiveNumber);
    expand->callback([&] {
        RationalGF gf = catalog(parse_zeta_system(zopt.system));
        auto a = fixed_point_counts(gf, zopt.max);
        auto c = cycle_counts(a);
        out << "n,a_n,c_n\n";
        for (int n = 1; n <= zopt.max; ++n)
            out << n << "," << a[n - 1].get_str() << "," << c[n - 1].get_str() << "\n";
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "closed forms against brute-force enumeration");
    oracle->require_subcommand(1);
    struct OracleOpts {
        std::string module = "e3";
        long long max = 60;
        long long coin_max = 100;
        long long ident_max = 200;
        long long max_norm = 200;
        long long radius = 50;
        int order = 40;
        int samples = 25;
    } oopt;
    bool oracle_ok = true;
    auto finish = [&](const detail::MatchTable& t) {
        out << t.csv;
        oracle_ok = t.all_ok;
    };
    oracle->add_subcommand("series", "published series prefixes")->callback([&] {
        finish(detail::oracle_series());
    });
    {
        auto* sc = oracle->add_subcommand("sublattices", "counts vs HNF enumeration");
        sc->add_option("--module", oopt.module)->check(CLI::IsMember({"e3", "e12"}));
        sc->add_option("--max", oopt.max)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_sublattices(oopt.module, oopt.max)); });
    }
    {
        auto* sc = oracle->add_subcommand("ideals", "ideal counts vs closed sublattices");
        sc->add_option("--module", oopt.module)->check(CLI::IsMember({"e3", "e12"}));
        sc->callback([&] { finish(detail::oracle_ideals(oopt.module)); });
    }
    {
        auto* sc = oracle->add_subcommand("coincidence", "coincidence counts vs CSL enumeration");
        sc->add_option("--max", oopt.coin_max)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_coincidence(oopt.coin_max)); });
    }
    {
        auto* sc = oracle->add_subcommand("identities", "zeta-quotient convolution identities");
        sc->add_option("--max", oopt.ident_max)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_identities(oopt.ident_max)); });
    }
    {
        auto* sc = oracle->add_subcommand("shelling", "prime-power formula vs shell enumeration");
        sc->add_option("--max-norm", oopt.max_norm)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_shelling(oopt.max_norm)); });
    }
    oracle->add_subcommand("averaged-table", "the twelve averaged shelling values")
        ->callback([&] { finish(detail::oracle_averaged_table()); });
    oracle->add_subcommand("covariogram", "clipping engine vs closed forms")->callback([&] {
        finish(detail::oracle_covariogram());
    });
    {
        auto* sc = oracle->add_subcommand("modelset", "patch statistics vs exact values");
        sc->add_option("--radius", oopt.radius)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_modelset(oopt.radius)); });
    }
    {
        auto* sc = oracle->add_subcommand("zeta", "orbit-count identities for the catalog");
        sc->add_option("--max", oopt.order)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_zeta(oopt.order)); });
    }
    {
        auto* sc = oracle->add_subcommand("euclid-hat", "approximation error sweep");
        sc->add_option("--samples", oopt.samples)->check(CLI::PositiveNumber);
        sc->callback([&] { finish(detail::oracle_euclid_hat(oopt.samples, seed)); });
    }

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("quasicount");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        result.exit_code = oracle_ok ? 0 : 1;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const ResourceBudgetError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 3;
    } catch (const std::invalid_argument& e) {
        // malformed values are usage errors, same as unknown flags
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    }
    result.out = out.str();
    return result;
}

}  // namespace quasicount::cli
