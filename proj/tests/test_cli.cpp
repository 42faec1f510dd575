#include "defalg/cli.hpp"

#include "doctest.h"

#include <set>
#include <sstream>

using namespace defalg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "defalg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DEFALG_TEST_DATA) + "/" + name; }

Json json_of(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("every module operation is reachable from a subcommand") {
    std::set<std::string> reached;
    for (const auto& s : cli::dispatch_table()) {
        CHECK(s.handler != nullptr);
        CHECK_FALSE(s.operations.empty());
        reached.insert(s.operations.begin(), s.operations.end());
    }
    for (const auto& op : cli::module_operations()) {
        INFO(op);
        CHECK(reached.count(op) == 1);
    }
    std::set<std::string> names;
    for (const auto& s : cli::dispatch_table()) names.insert(s.name);
    for (const char* n : {"check-dgla", "check-na", "mc", "gauge", "obstruction", "cohomology", "cones", "exp-der",
                          "homotopy-eval", "bch", "dsw", "friedrichs", "coder", "comorph", "check-linfty",
                          "from-dgla", "linfty-morphism", "mc-linfty", "hodge-f", "gbv-check", "schouten", "delta",
                          "tian-todorov", "gbv-to-abelian", "lefschetz", "suite"}) {
        INFO(n);
        CHECK(names.count(n) == 1);
    }
}

TEST_CASE("each subcommand on its sample file") {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    std::vector<Case> cases{
        {{"check-dgla", "-i", data("abelian.json")}, 0},
        {{"check-dgla", "-i", data("jacobi_broken.json")}, 1},
        {{"check-na", "-i", data("t3.json")}, 0},
        {{"mc", "-i", data("mc.json")}, 1},
        {{"mc", "-i", data("mc_solution.json")}, 0},
        {{"gauge", "-i", data("gauge.json")}, 0},
        {{"obstruction", "-i", data("obstruction.json")}, 1},
        {{"obstruction", "-i", data("obstruction_free.json")}, 0},
        {{"cohomology", "-i", data("complex.json")}, 0},
        {{"cohomology", "-i", data("xy.json")}, 0},
        {{"cones", "-i", data("cones.json")}, 0},
        {{"exp-der", "-i", data("exp_der.json")}, 0},
        {{"homotopy-eval", "-i", data("homotopy.json")}, 0},
        {{"bch", "-i", data("bch_lie.json")}, 0},
        {{"dsw", "-i", data("tensor.json")}, 0},
        {{"friedrichs", "-i", data("tensor.json")}, 0},
        {{"coder", "-i", data("coderivation.json")}, 0},
        {{"comorph", "-i", data("comorphism.json")}, 0},
        {{"check-linfty", "-i", data("linfty.json")}, 0},
        {{"check-linfty", "-i", data("linfty_bad.json")}, 1},
        {{"from-dgla", "-i", data("xy.json")}, 0},
        {{"linfty-morphism", "-i", data("linfty_morphism.json")}, 0},
        {{"mc-linfty", "-i", data("mc_linfty.json")}, 1},
        {{"hodge-f", "--model", "derived", "--max-arity", "4"}, 0},
        {{"hodge-f", "--model", "injected"}, 1},
        {{"gbv-check", "-i", data("gbv_polyvector.json")}, 0},
        {{"gbv-check", "-i", data("gbv_exterior.json")}, 0},
        {{"schouten", "-i", data("schouten.json")}, 0},
        {{"delta", "-i", data("polyvector.json")}, 0},
        {{"tian-todorov", "-i", data("tian_todorov.json")}, 0},
        {{"gbv-to-abelian", "-i", data("gbv_exterior.json"), "--max-arity", "4"}, 0},
        {{"gbv-to-abelian", "-i", data("gbv_exterior.json"), "--inverse", "signed"}, 1},
        {{"lefschetz", "identities", "--dim", "3"}, 0},
        {{"lefschetz", "decompose", "--dim", "2", "--input", data("covector.json")}, 0},
        {{"lefschetz", "apply", "-i", data("covector.json"), "--op", "Cinv_star"}, 0},
        {{"suite", "--seed", "7", "--only", "1"}, 0},
    };
    for (const auto& c : cases) {
        std::string line;
        for (const auto& a : c.args) line += a + " ";
        INFO(line);
        Result r = invoke(c.args);
        CHECK(r.code == c.code);
        auto json_args = c.args;
        json_args.push_back("--format");
        json_args.push_back("json");
        Result j = invoke(json_args);
        CHECK(j.code == c.code);
        Json rep = json_of(j);
        CHECK(rep.contains("status"));
        CHECK(rep.contains("violations"));
        CHECK(rep.contains("witness"));
        CHECK(rep["status"] == (c.code == 0 ? "pass" : "fail"));
    }
}

TEST_CASE("bch on free generators lists its coefficients") {
    Result r = invoke({"bch", "--mode", "explicit", "--truncate", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1/2 [a,b]") != std::string::npos);
    CHECK(r.out.find("1/12 [a,[a,b]]") != std::string::npos);
    CHECK(r.out.find("1/12 [b,[b,a]]") != std::string::npos);
    Result j = invoke({"bch", "--mode", "free", "--truncate", "3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(json_of(j)["witness"].dump().find("1/12") != std::string::npos);
}

TEST_CASE("input errors exit with 2 and a location") {
    Result r = invoke({"check-dgla", "-i", data("bad_rational.json"), "--format", "json"});
    CHECK(r.code == 2);
    Json j = json_of(r);
    CHECK(j["status"] == "input-error");
    CHECK(j["violations"][0]["location"] == "d/0/value/0/coeff");
    CHECK(invoke({"nosuch"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"check-dgla"}).code == 2);
    CHECK(invoke({"check-dgla", "-i", data("missing.json")}).code == 2);
    CHECK(invoke({"mc", "-i", data("xy.json")}).code == 2);
    CHECK(invoke({"lefschetz", "apply", "-i", data("covector.json"), "--op", "nope"}).code == 2);
    CHECK(invoke({"check-dgla", "--format", "yaml"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
    std::vector<std::string> args{"suite", "--seed", "7", "--only", "1", "--only", "4", "--format", "json"};
    Result a = invoke(args), b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(json_of(a).dump().find("timing") == std::string::npos);
    Result t = invoke({"check-dgla", "-i", data("abelian.json"), "--format", "json", "--timing"});
    CHECK(json_of(t).contains("timing"));
}

TEST_CASE("lie coordinates") {
    const int N = 3;
    TensorSeries a = TensorSeries::letter(2, N, 0), b = TensorSeries::letter(2, N, 1);
    auto terms = cli::lie_coordinates(commutator(a, b) + Scalar(2) * a);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].bracket == "a");
    CHECK(terms[0].coeff == 2);
    CHECK(terms[1].bracket == "[a,b]");
    CHECK(terms[1].coeff == 1);
}
