#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "zetamap/cli.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = zetamap::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zeta subcommand") {
    auto r = run_cli({"zeta", "NNENEE"});
    CHECK(r.status == 0);
    CHECK(r.out == "NENNEE\n");

    r = run_cli({"zeta", ""});
    CHECK(r.status == 0);
    CHECK(r.out == "\n");
}

TEST_CASE("malformed encodings exit with status 2 and a position") {
    auto r = run_cli({"zeta", "NNE"});
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("position 3") != std::string::npos);

    r = run_cli({"zeta", "NXE"});
    CHECK(r.status == 2);
    CHECK(r.err.find("position 2") != std::string::npos);

    r = run_cli({"convert", "--from", "tree", "--to", "dyck", "--via", "steep", "(()"});
    CHECK(r.status == 2);
    CHECK(r.err.find("position 3") != std::string::npos);

    r = run_cli({"convert", "--from", "poset", "--to", "dyck", "--via", "phi", "{bad"});
    CHECK(r.status == 2);

    r = run_cli({"render", "{}"});
    CHECK(r.status == 2);
}

TEST_CASE("flag misuse exits with status 2") {
    CHECK(run_cli({"bogus"}).status == 2);
    CHECK(run_cli({"enumerate", "--kind", "dyck"}).status == 2);          // missing --n
    CHECK(run_cli({"enumerate", "--kind", "heap", "--n", "2"}).status == 2);
    CHECK(run_cli({"verify", "--n-max", "2", "--law", "nope"}).status == 2);
    CHECK(run_cli({"convert", "--from", "dyck", "--to", "dyck", "--via", "psi", "NE"}).status == 2);
    CHECK(run_cli({"convert", "--from", "tree", "--to", "poset", "--via", "phi", "(())"}).status ==
          2);
}

TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("enumerate") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    auto r = run_cli({"enumerate", "--kind", "dyck", "--n", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "NENE\nNNEE\n");

    r = run_cli({"enumerate", "--kind", "tree", "--n", "1"});
    CHECK(r.out == "(())\n");

    r = run_cli({"enumerate", "--kind", "poset", "--n", "2"});
    CHECK(r.out == "{\"n\":2,\"relations\":[]}\n{\"n\":2,\"relations\":[[1,2]]}\n");

    r = run_cli({"enumerate", "--kind", "dyck", "--n", "2", "--format", "json"});
    CHECK(r.out == "[\"NENE\",\"NNEE\"]\n");

    r = run_cli({"enumerate", "--kind", "poset", "--n", "1", "--format", "json"});
    CHECK(r.out == "[{\"n\":1,\"relations\":[]}]\n");

    r = run_cli({"enumerate", "--kind", "dyck", "--n", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "\n");
}

TEST_CASE("convert subcommand matches the maps") {
    auto r = run_cli({"convert", "--from", "dyck", "--to", "poset", "--via", "psi", "NNEE"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"n\":2,\"relations\":[[1,2]]}\n");

    r = run_cli({"convert", "--from", "poset", "--to", "dyck", "--via", "phi",
                 R"({"n":3,"relations":[[1,2],[1,3]]})"});
    CHECK(r.out == "NENNEE\n");

    r = run_cli({"convert", "--from", "dyck", "--to", "tree", "--via", "steep", "NNENEE"});
    CHECK(r.out == "((()()))\n");

    r = run_cli({"convert", "--from", "tree", "--to", "dyck", "--via", "bounce", "((()()))"});
    CHECK(r.out == "NENNEE\n");

    r = run_cli({"convert", "--from", "poset", "--to", "tree", "--via", "poset",
                 R"({"n":2,"relations":[[1,2]]})"});
    CHECK(r.out == "((()))\n");

    r = run_cli({"convert", "--from", "tree", "--to", "poset", "--via", "poset", "((()))"});
    CHECK(r.out == "{\"n\":2,\"relations\":[[1,2]]}\n");

    // non-canonical poset input is rejected, not silently relabeled
    r = run_cli({"convert", "--from", "poset", "--to", "dyck", "--via", "phi",
                 R"({"n":2,"relations":[[2,1]]})"});
    CHECK(r.status == 2);
}

TEST_CASE("convert round trips through the CLI, n <= 6") {
    struct Route {
        std::string from, to, via;
    };
    const std::vector<Route> routes{
        {"dyck", "poset", "psi"},  {"dyck", "poset", "phi"},  {"dyck", "tree", "steep"},
        {"dyck", "tree", "bounce"}};
    for (int n = 0; n <= 6; ++n) {
        auto paths = run_cli({"enumerate", "--kind", "dyck", "--n", std::to_string(n)});
        REQUIRE(paths.status == 0);
        std::istringstream lines(paths.out);
        std::string path;
        while (std::getline(lines, path)) {
            for (const auto& rt : routes) {
                auto fwd = run_cli({"convert", "--from", rt.from, "--to", rt.to, "--via", rt.via,
                                    path});
                REQUIRE(fwd.status == 0);
                std::string image = fwd.out.substr(0, fwd.out.size() - 1);
                auto back = run_cli({"convert", "--from", rt.to, "--to", rt.from, "--via", rt.via,
                                     image});
                REQUIRE(back.status == 0);
                CHECK(back.out == path + "\n");
            }
        }
    }
    // the tree<->poset route, swept over trees
    for (int n = 0; n <= 6; ++n) {
        auto trees = run_cli({"enumerate", "--kind", "tree", "--n", std::to_string(n)});
        std::istringstream lines(trees.out);
        std::string tree;
        while (std::getline(lines, tree)) {
            auto fwd = run_cli({"convert", "--from", "tree", "--to", "poset", "--via", "poset",
                                tree});
            REQUIRE(fwd.status == 0);
            std::string image = fwd.out.substr(0, fwd.out.size() - 1);
            auto back = run_cli({"convert", "--from", "poset", "--to", "tree", "--via", "poset",
                                 image});
            CHECK(back.out == tree + "\n");
        }
    }
}

TEST_CASE("verify subcommand aggregates sizes 1..n_max") {
    auto r = run_cli({"verify", "--n-max", "3", "--law", "main"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["law"] == "main");
    CHECK(j["checked"] == 8);  // Cat_1 + Cat_2 + Cat_3
    CHECK(j["counterexamples"].empty());

    r = run_cli({"verify", "--n-max", "2"});
    CHECK(r.status == 0);
    auto all = nlohmann::json::parse(r.out);
    CHECK(all.is_array());
    CHECK(all.size() == 7);
    for (const auto& rep : all) CHECK(rep["checked"] == 3);

    r = run_cli({"verify", "--n-max", "0", "--law", "main"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["checked"] == 0);
}

TEST_CASE("verify exits 1 on a counterexample") {
    auto r = run_cli({"verify", "--n-max", "3", "--law", "main", "--mutant",
                      "contour-left-to-right"});
    CHECK(r.status == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j["counterexamples"].empty());

    r = run_cli({"verify", "--n-max", "3", "--law", "main", "--mutant", "nope"});
    CHECK(r.status == 2);
}

TEST_CASE("render subcommand") {
    auto r = run_cli({"render", "NNEE"});
    CHECK(r.status == 0);
    CHECK(r.out == "____\n|  .\n|.\n");

    r = run_cli({"render", "NENE"});
    CHECK(r.out == "  __\n__|.\n|.\n");

    r = run_cli({"render", "((()))"});
    CHECK(r.out == "*\n  *\n    *\n");

    r = run_cli({"render", "(()())"});
    CHECK(r.out == "*\n  *\n  *\n");

    r = run_cli({"render", ""});
    CHECK(r.status == 0);
    CHECK(r.out == "");
}
