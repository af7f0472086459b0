// Exercises the shared library strictly through the C header, the way an
// external binding would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sweedler.h>

#include <json.hpp>

#include <memory>
#include <string>

using nlohmann::json;

namespace {

struct Free {
    void operator()(char* s) const { swd_string_free(s); }
};
using Str = std::unique_ptr<char, Free>;

json parsed(const Str& s) {
    REQUIRE(s != nullptr);
    return json::parse(s.get());
}

}  // namespace

TEST_CASE("version and error state") {
    CHECK(std::string(swd_version()) == "0.1.0");
    CHECK(std::string(swd_last_error()).empty());
}

TEST_CASE("algebra lifecycle through the C surface") {
    swd_algebra* a = nullptr;
    REQUIRE(swd_algebra_create("mat:2", "Q", &a) == SWD_OK);
    char* raw = nullptr;
    CHECK(swd_algebra_check(a, &raw) == SWD_OK);
    Str rep(raw);
    CHECK(parsed(rep)["pass"] == true);

    raw = nullptr;
    CHECK(swd_algebra_to_json(a, &raw) == SWD_OK);
    Str js(raw);
    CHECK(parsed(js)["dim"] == 4);
    swd_algebra_destroy(a);

    swd_algebra* bad = nullptr;
    CHECK(swd_algebra_create("kn:x", "Q", &bad) == SWD_INVALID_INPUT);
    CHECK(!std::string(swd_last_error()).empty());
    CHECK(swd_algebra_create("kn:2", "Fp:4", &bad) == SWD_INVALID_INPUT);
}

TEST_CASE("comodule verification statuses") {
    swd_algebra* a = nullptr;
    REQUIRE(swd_algebra_create("kn:2", "Q", &a) == SWD_OK);

    swd_comodule* reg = nullptr;
    REQUIRE(swd_comodule_create(a, "regular", &reg) == SWD_OK);
    char* raw = nullptr;
    CHECK(swd_comodule_verify(reg, 1, &raw) == SWD_OK);
    Str rep(raw);
    CHECK(parsed(rep)["pass"] == true);

    swd_comodule* zero = nullptr;
    REQUIRE(swd_comodule_create(a, "zero", &zero) == SWD_OK);
    raw = nullptr;
    CHECK(swd_comodule_verify(zero, 0, &raw) == SWD_VERIFY_FAILED);
    Str zrep(raw);
    const json zero_report = parsed(zrep);
    bool counit_failed = false;
    for (const json& c : zero_report["checks"])
        if (c["name"] == "counit" && c["pass"] == false) counit_failed = true;
    CHECK(counit_failed);

    swd_comodule_destroy(zero);
    swd_comodule_destroy(reg);
    swd_algebra_destroy(a);
}

TEST_CASE("descent, tensor and braiding surfaces") {
    swd_algebra* a = nullptr;
    REQUIRE(swd_algebra_create("kn:2", "Q", &a) == SWD_OK);

    swd_descent* d = nullptr;
    REQUIRE(swd_descent_create(a, "free:2", &d) == SWD_OK);
    char* raw = nullptr;
    CHECK(swd_descent_verify(d, &raw) == SWD_OK);
    Str drep(raw);
    swd_descent_destroy(d);

    swd_comodule* v = nullptr;
    REQUIRE(swd_comodule_create(a, "free:1", &v) == SWD_OK);
    raw = nullptr;
    CHECK(swd_tensor(v, v, &raw) == SWD_OK);
    Str trep(raw);
    CHECK(parsed(trep)["dim"] == 2);

    raw = nullptr;
    CHECK(swd_braiding(v, v, &raw) == SWD_OK);
    Str brep(raw);
    CHECK(parsed(brep)["dim_vw"] == 2);

    raw = nullptr;
    CHECK(swd_braided_check(v, nullptr, "unit", &raw) == SWD_OK);
    Str urep(raw);
    CHECK(parsed(urep)["pass"] == true);

    raw = nullptr;
    CHECK(swd_braided_check(v, nullptr, "naturality", &raw) == SWD_OK);
    Str nrep(raw);

    raw = nullptr;
    CHECK(swd_braided_check(v, v, "hexagon", &raw) == SWD_OK);
    Str hrep(raw);
    CHECK(swd_braided_check(v, nullptr, "bogus", &raw) == SWD_INVALID_INPUT);

    swd_comodule_destroy(v);
    swd_algebra_destroy(a);
}

TEST_CASE("operator build, export, reload and check") {
    swd_algebra* a = nullptr;
    REQUIRE(swd_algebra_create("mat:2", "Q", &a) == SWD_OK);
    swd_comodule* c = nullptr;
    REQUIRE(swd_comodule_create(a, "rmatrix", &c) == SWD_OK);

    swd_operator* op = nullptr;
    REQUIRE(swd_operator_build(c, "comodule", &op) == SWD_OK);
    char* raw = nullptr;
    CHECK(swd_operator_check(op, c, 1, 1, &raw) == SWD_OK);
    Str rep(raw);
    CHECK(parsed(rep)["pass"] == true);

    raw = nullptr;
    REQUIRE(swd_operator_to_json(op, c, &raw) == SWD_OK);
    Str exported(raw);
    const json ej = parsed(exported);
    CHECK(ej["qybe"] == true);
    CHECK(ej["cube"] == true);
    CHECK(ej["provenance"] == "comodule");
    CHECK(ej["dim"] == 4);

    swd_operator* reloaded = nullptr;
    REQUIRE(swd_operator_from_json(exported.get(), &reloaded) == SWD_OK);
    raw = nullptr;
    CHECK(swd_operator_check(reloaded, nullptr, 1, 0, &raw) == SWD_OK);
    Str rrep(raw);
    swd_operator_destroy(reloaded);

    CHECK(swd_operator_from_json("{\"dim\": 2}", &reloaded) == SWD_INVALID_INPUT);
    CHECK(swd_operator_from_json("not json", &reloaded) == SWD_INVALID_INPUT);

    swd_operator_destroy(op);
    swd_comodule_destroy(c);
    swd_algebra_destroy(a);
}

TEST_CASE("grouplike operators through the C surface") {
    swd_algebra* a = nullptr;
    REQUIRE(swd_algebra_create("kn:2", "Q", &a) == SWD_OK);
    swd_operator* op = nullptr;
    REQUIRE(swd_operator_build_grouplike(a, "trivial", &op) == SWD_OK);
    char* raw = nullptr;
    CHECK(swd_operator_check(op, nullptr, 1, 0, &raw) == SWD_OK);
    Str rep(raw);
    raw = nullptr;
    CHECK(swd_operator_to_json(op, nullptr, &raw) == SWD_OK);
    Str js(raw);
    CHECK(parsed(js)["provenance"] == "grouplike");
    swd_operator_destroy(op);

    // a non-grouplike element is rejected as a verification failure
    CHECK(swd_operator_build_grouplike(a, "[\"1\",\"0\",\"0\",\"0\"]", &op) == SWD_VERIFY_FAILED);
    CHECK(swd_operator_build_grouplike(a, "[\"1\"]", &op) == SWD_INVALID_INPUT);
    swd_algebra_destroy(a);
}

TEST_CASE("null arguments are rejected") {
    CHECK(swd_algebra_create(nullptr, "Q", nullptr) == SWD_INVALID_INPUT);
    CHECK(swd_comodule_create(nullptr, "regular", nullptr) == SWD_INVALID_INPUT);
    char* raw = nullptr;
    CHECK(swd_suite_run("bogus", &raw) == SWD_INVALID_INPUT);
}
