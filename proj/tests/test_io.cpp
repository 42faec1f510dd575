#include "defalg/io.hpp"

#include "doctest.h"

#include <cstdlib>

using namespace defalg;

namespace {

std::string data(const std::string& name) { return std::string(DEFALG_TEST_DATA) + "/" + name; }

std::string error_path(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.path;
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("basis and element parsing") {
    GradedBasis b = parse_basis(Json::parse(R"([{"name":"x","degree":1},{"name":"y","degree":2}])"), "");
    CHECK(b.size() == 2);
    CHECK(b.degree(1) == 2);
    CHECK(parse_basis(Json::parse(R"({"basis":[{"name":"x","degree":0}]})"), "").size() == 1);
    Element e = parse_element(Json::parse(R"([{"basis":"x","coeff":"1/2"},{"basis":"y"}])"), b, "");
    CHECK(e == Element::basis(0, Scalar(1, 2)) + Element::basis(1));
    CHECK(parse_rational(Json(3), "") == 3);
    CHECK(parse_rational(Json("-2/4"), "") == Scalar(-1, 2));
    CHECK(error_path([&] { parse_element(Json::parse(R"([{"basis":"z"}])"), b, "el"); }) == "el/0/basis");
    CHECK(error_path([&] { parse_rational(Json("1/0"), "c"); }) == "c");
    CHECK(error_path([&] { parse_basis(Json::parse(R"([{"name":"x"}])"), "basis"); }).starts_with("basis/0"));
}

TEST_CASE("structure files") {
    DGLA L = parse_dgla(load_json_file(data("xy.json")));
    CHECK(L.basis.size() == 2);
    CHECK(L.br(Element::basis(0), Element::basis(0)) == Element::basis(1));
    CHECK(check_dgla(L).empty());
    ArtinDg A = parse_artin(load_json_file(data("t3.json")));
    CHECK(A.basis().size() == 2);
    NilpotentLie h = parse_lie(load_json_file(data("heisenberg.json")));
    CHECK(h.nilpotency_index() == 3);
    TensorSeries t = parse_tensor(load_json_file(data("tensor.json")));
    CHECK(is_lie(t));
    LInftyStructure s = parse_linfty(load_json_file(data("linfty.json")), 4);
    CHECK(check_linfty(s, 4).empty());
    Polyvector p = parse_polyvector(load_json_file(data("polyvector.json")));
    CHECK(p == Polyvector::term(1, 3, {1}, 1));
    CovectorElement v = parse_covector(load_json_file(data("covector.json")));
    CHECK(v.n == 2);
    CHECK(v.terms.size() == 1);
    GBVStructure S = parse_gbv(load_json_file(data("gbv_polyvector.json")));
    CHECK(gbv_check(S).empty());
}

TEST_CASE("malformed files name the offending field") {
    CHECK(error_path([] { parse_dgla(load_json_file(data("bad_rational.json"))); }) == "d/0/value/0/coeff");
    CHECK(error_path([] { parse_artin(load_json_file(data("xy.json"))); }) == "kind");
    CHECK(error_path([] { load_json_file(data("missing.json")); }) == "input");
    Json j = Json::parse(R"({"kind":"dgla","basis":[{"name":"x","degree":1}],
        "bracket":[{"left":"x","right":"x","value":[]},{"left":"x","right":"x","value":[]}]})");
    CHECK(error_path([&] { parse_dgla(j); }) == "bracket/1");
    Json lin = Json::parse(R"({"kind":"linfty","basis":[{"name":"x","degree":1}],"brackets":{"two":[]}})");
    CHECK(error_path([&] { parse_linfty(lin, 4); }) == "brackets/two");
}

TEST_CASE("reports round trip") {
    CheckReport r;
    r.command = "mc";
    r.violations.push_back({"element", "1/2*y", "residual != 0"});
    r.witness = Json{{"dim", 2}};
    r.timing_ms = 12;
    r.settle();
    CHECK(r.status == Status::Fail);
    CHECK(r.exit_code() == 1);
    Json j = report_to_json(r);
    CHECK_FALSE(j.contains("timing"));
    CHECK(report_to_json(r, true).contains("timing"));
    CheckReport back = report_from_json(j);
    CHECK(back.command == r.command);
    CHECK(back.status == Status::Fail);
    REQUIRE(back.violations.size() == 1);
    CHECK(back.violations[0].residual == "1/2*y");
    CHECK(back.witness == r.witness);
    CHECK(report_to_json(back) == j);

    CheckReport ok;
    ok.command = "check-dgla";
    ok.settle();
    CHECK(ok.exit_code() == 0);
    ok.status = Status::InputError;
    ok.settle();
    CHECK(ok.exit_code() == 2);
}

TEST_CASE("basis size guard") {
    setenv("DEFALG_MAX_BASIS", "3", 1);
    CHECK(max_basis() == 3);
    CHECK_THROWS_AS(guard_basis(4, "L⊗A"), BoundError);
    CHECK_NOTHROW(guard_basis(3, "L⊗A"));
    CHECK_THROWS_AS(parse_artin(Json::parse(R"({"kind":"artin","truncated_polynomial":6})")), BoundError);
    setenv("DEFALG_MAX_BASIS", "lots", 1);
    CHECK_THROWS_AS(max_basis(), InputError);
    unsetenv("DEFALG_MAX_BASIS");
    CHECK(max_basis() == 4096);
}
