#include <doctest.h>

#include <json.hpp>

#include "quasicount/cli.hpp"

using quasicount::cli::CommandResult;
using quasicount::cli::run;

TEST_SUITE("cli") {

TEST_CASE("count similar emits the coefficient table") {
    CommandResult r = run({"count", "similar", "--module", "e3", "--max", "12"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 8) == "m,value\n");
    CHECK(r.out.ends_with("12,1\n"));
    CommandResult j = run({"count", "similar", "--module", "e3", "--max", "4", "--format", "json"});
    CHECK(j.out == "{\"name\":\"a6\",\"M\":4,\"values\":[1,0,1,1]}\n");
}

TEST_CASE("shell central reports the 48-point shell at 13") {
    CommandResult r = run({"shell", "central", "--r2", "13+0*sqrt3"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == 48);
    CHECK(j.at("norm") == 169);
    CHECK(j.at("heuristic_valid") == false);
    CHECK(j.at("method") == "prime-form");

    // all three computation routes agree where the norm heuristic is valid
    CommandResult oracle = run({"shell", "central", "--r2", "13+0*sqrt3", "--method", "oracle"});
    CHECK(nlohmann::json::parse(oracle.out).at("count") == 48);
    CommandResult norm = run({"shell", "central", "--r2", "19+8*sqrt3", "--method", "norm"});
    CHECK(nlohmann::json::parse(norm.out).at("count") == 36);
    CommandResult bad = run({"shell", "central", "--r2", "13+0*sqrt3", "--method", "norm"});
    CHECK(bad.exit_code == 1);

    CommandResult e3 = run({"shell", "central", "--module", "e3", "--r2", "7"});
    CHECK(nlohmann::json::parse(e3.out).at("count") == 12);
    CHECK(run({"shell", "central", "--module", "e3", "--r2", "7abc"}).exit_code == 2);
    CHECK(run({"shell", "central", "--module", "e3", "--r2", "2-1*sqrt3"}).exit_code == 2);
}

TEST_CASE("shell averaged reports exact values") {
    CommandResult r = run({"shell", "averaged", "--r2", "2-1*sqrt3"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value") == "8-2*sqrt3");
    CHECK(j.at("central_count") == 12);
    CHECK(j.at("value_decimal") == "4.535898384862");
}

TEST_CASE("covariogram subcommand") {
    CommandResult r = run({"covariogram", "--shift", "1;0"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value") == "2/3");

    CommandResult p = run({"covariogram", "--profile", "type1", "--samples", "4"});
    CHECK(p.exit_code == 0);
    CHECK(p.out.substr(0, 33) == "s,exact,closed_form,euclid_hat\n0.");

    CommandResult both = run({"covariogram", "--shift", "1;0", "--profile", "type1"});
    CHECK(both.exit_code == 2);
}

TEST_CASE("zeta expand rows") {
    CommandResult r = run({"zeta", "expand", "--system", "fibonacci-li", "--max", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,a_n,c_n\n1,0,0\n2,2,1\n3,3,1\n");
}

TEST_CASE("tiling generate is deterministic") {
    std::vector<std::string> args{"tiling", "generate", "--shift", "1/7;1/9",
                                  "--radius", "4", "--format", "json"};
    CommandResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("points").size() > 10);

    CommandResult svg = run({"tiling", "generate", "--radius", "3", "--format", "svg"});
    CHECK(svg.out.substr(0, 4) == "<svg");

    CommandResult csv = run({"tiling", "generate", "--radius", "3", "--format", "csv"});
    CHECK(csv.out.substr(0, 29) == "c0,c1,c2,c3,x,y,star_x,star_y");

    CommandResult bad = run({"tiling", "generate", "--radius", "3", "--out", "/nonexistent-dir/p.svg"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("/nonexistent-dir/p.svg") != std::string::npos);

    CommandResult sing = run({"tiling", "generate", "--shift", "0;0", "--radius", "2"});
    CHECK(sing.exit_code == 1);
    CHECK(sing.err.find("singular") != std::string::npos);
}

TEST_CASE("usage and budget errors carry distinct exit codes") {
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"count", "similar", "--module", "e5"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
    CHECK(run({"shell", "central", "--r2", "13+x"}).exit_code == 2);
    CHECK(run({"shell", "averaged", "--r2", "1+1*sqrt3"}).exit_code == 1);
    CHECK(run({"tiling", "generate", "--radius", "99999"}).exit_code == 3);
}

TEST_CASE("the seed drives the sampled diagnostic") {
    CommandResult a = run({"--seed", "7", "oracle", "euclid-hat", "--samples", "6"});
    CommandResult b = run({"--seed", "7", "oracle", "euclid-hat", "--samples", "6"});
    CommandResult c = run({"--seed", "8", "oracle", "euclid-hat", "--samples", "6"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("oracle subcommands succeed and emit match tables") {
    CommandResult r = run({"oracle", "identities", "--max", "80"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m,closed_form,oracle,match\nphi3,holds,holds,1\nphi12,holds,holds,1\n");

    CommandResult s = run({"oracle", "sublattices", "--module", "e3", "--max", "20"});
    CHECK(s.exit_code == 0);
    CHECK(s.out.find(",0\n") == std::string::npos);  // no mismatches

    CommandResult z = run({"oracle", "zeta", "--max", "12"});
    CHECK(z.exit_code == 0);

    for (auto args : {std::vector<std::string>{"oracle", "series"},
                      std::vector<std::string>{"oracle", "averaged-table"},
                      std::vector<std::string>{"oracle", "ideals", "--module", "e3"},
                      std::vector<std::string>{"oracle", "shelling", "--max-norm", "40"},
                      std::vector<std::string>{"oracle", "coincidence", "--max", "30"},
                      std::vector<std::string>{"oracle", "covariogram"}}) {
        CommandResult o = run(args);
        CHECK(o.exit_code == 0);
        CHECK(o.out.substr(0, 27) == "m,closed_form,oracle,match\n");
        CHECK(o.out.find(",0\n") == std::string::npos);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    for (auto args : {std::vector<std::string>{"count", "coincidence", "--module", "e12", "--max", "200"},
                      std::vector<std::string>{"shell", "averaged", "--r2", "3+0*sqrt3"},
                      std::vector<std::string>{"oracle", "covariogram"}}) {
        CommandResult a = run(args), b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

}  // TEST_SUITE
