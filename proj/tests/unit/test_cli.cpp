#include "../../tools/cli.hpp"

#include "cquad/core/json_io.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cq(std::vector<std::string> args) {
    args.insert(args.begin(), "cq");
    std::ostringstream out, err;
    int code = cquad::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

cquad::Json json_of(const Run& r) { return cquad::Json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument errors exit with 2") {
    CHECK(cq({}).code == 2);
    CHECK(cq({"frobnicate"}).code == 2);
    CHECK(cq({"cone"}).code == 2);                                   // missing --divisor
    CHECK(cq({"cone", "--divisor", "{not json"}).code == 2);
    CHECK(cq({"canonical", "--n", "1"}).code == 2);
    CHECK(cq({"schubert", "--grassmannian", "1,3", "--expr", "sigma("}).code == 2);
    CHECK(cq({"chamber", "--divisor", R"({"coeffs":["-1","0","0"]})"}).code == 2);
    CHECK(cq({"chamber", "--segment", "3/2"}).code == 2);
    CHECK(cq({"verify-all", "--check", "12"}).code == 2);
    CHECK(cq({"canonical", "--n", "3", "--text", "--json"}).code == 2);
}

TEST_CASE("every JSON document carries a schema") {
    std::vector<std::vector<std::string>> runs = {
        {"canonical", "--n", "3"},
        {"cone", "--divisor", R"({"coeffs":["1","1","1"]})"},
        {"pair", "--curve", "G", "--divisor", R"({"basis":"E","coeffs":["0","0","1"]})"},
        {"table"},
        {"chamber", "--divisor", R"({"coeffs":["1","1","1"]})"},
        {"schubert", "--grassmannian", "1,3", "--expr", "sigma1^4"},
        {"chow", "--form", R"([["1","0","0"],["0","1","0"],["0","0","-1"]])", "--k", "2"},
        {"pencil", "--n", "3", "--seed", "5"},
        {"verify-all", "--check", "5"},
    };
    for (const auto& args : runs) {
        INFO(args.front());
        Run r = cq(args);
        REQUIRE(r.code == 0);
        cquad::Json j = json_of(r);
        CHECK(j.at("schema").get<std::string>() == "cquad." + args.front() + "/1");
    }
}

TEST_CASE("outputs are deterministic") {
    for (std::vector<std::string> args : {std::vector<std::string>{"pencil", "--table", "--seed", "3"},
                                          {"chamber", "--census", "300", "--seed", "9"},
                                          {"pencil", "--bk", "--n", "4", "--k", "2", "--text"}}) {
        Run a = cq(args), b = cq(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("numeric answers") {
    CHECK(json_of(cq({"pair", "--curve", "G", "--divisor", R"({"basis":"E","coeffs":["0","0","1"]})"}))
              .at("value") == "4");
    Run s = cq({"schubert", "--grassmannian", "1,3", "--expr", "sigma2+sigma11", "--pair", "sigma1^2"});
    CHECK(s.code == 0);
    CHECK(json_of(s).at("pairing").at("value") == "2");
    Run chamber = cq({"chamber", "--segment", "1/2", "--text"});
    CHECK(chamber.code == 0);
    CHECK(chamber.out.find("wall H1-H3") != std::string::npos);
}

TEST_CASE("table verification succeeds") {
    Run r = cq({"table", "--verify-table", "--text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C1,2") != std::string::npos);
}

}  // TEST_SUITE
