#include <doctest.h>

#include "sweedler/json_io.hpp"

using namespace sweedler;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("field serialization") {
    CHECK(field_to_json(Q) == json("Q"));
    CHECK(field_from_json(json("Q")).is_rationals());
    CHECK(field_from_json(field_to_json(Field::prime(7))).modulus() == 7);
    CHECK_THROWS_AS(field_from_json(json("C")), parse_error);
    CHECK_THROWS_AS(field_from_json(json{{"Fp", 4}}), parse_error);
}

TEST_CASE("matrices round-trip losslessly") {
    Matrix m(2, 3, Q);
    m(0, 0) = Scalar::rational(Rational::fraction(-3, 7));
    m(1, 2) = Scalar::integer(Q, 5);
    CHECK(matrix_from_json(Q, matrix_to_json(m)) == m);

    const Field f5 = Field::prime(5);
    Matrix p(2, 2, f5);
    p(0, 1) = Scalar::integer(f5, 3);
    const json j = matrix_to_json(p);
    CHECK(j[0][1] == "3 mod 5");
    CHECK(matrix_from_json(f5, j) == p);

    CHECK_THROWS_AS(matrix_from_json(Q, json::parse("[[\"1\"],[\"2\",\"3\"]]")), parse_error);
    CHECK_THROWS_AS(matrix_from_json(Q, json::parse("[]")), parse_error);
}

TEST_CASE("algebras round-trip") {
    for (const char* name : {"kn:2", "mat:2", "upper:2"}) {
        const AlgebraPtr a = builtin_algebra(name, Q);
        const AlgebraPtr back = algebra_from_json(algebra_to_json(*a));
        INFO(name);
        CHECK(back->same_presentation(*a));
    }
    const AlgebraPtr f5 = builtin_algebra("mat:2", Field::prime(5));
    CHECK(algebra_from_json(algebra_to_json(*f5))->same_presentation(*f5));
}

TEST_CASE("load_algebra accepts names, inline JSON, and files") {
    CHECK(load_algebra("kn:2", Q)->dim() == 2);
    const std::string text = algebra_to_json(*builtin_algebra("upper:2", Q)).dump();
    CHECK(load_algebra(text, Q)->dim() == 3);
    const std::string path = "/tmp/sweedler_test_algebra.json";
    write_text_file(path, text);
    CHECK(load_algebra(path, Q)->same_presentation(*builtin_algebra("upper:2", Q)));
    CHECK_THROWS_AS(load_algebra("/nonexistent/file.json", Q), parse_error);
    CHECK_THROWS_AS(load_algebra("{not json", Q), parse_error);
}

TEST_CASE("comodules round-trip, with and without an explicit left action") {
    const AlgebraPtr m2 = builtin_algebra("mat:2", Q);
    const Coaction c = Coaction::free(m2, 2);
    const Coaction back = comodule_from_json(m2, comodule_to_json(c, false));
    CHECK(back.data_equals(c));

    // dropping "left" reconstructs the induced action
    json j = comodule_to_json(c, false);
    j.erase("left");
    const Coaction induced = comodule_from_json(m2, j);
    CHECK(induced.data_equals(c));

    // inline algebra wins over the fallback
    const json with_alg = comodule_to_json(c, true);
    const Coaction other = comodule_from_json(nullptr, with_alg);
    CHECK(other.data_equals(c));

    json bad = comodule_to_json(c, false);
    bad["dim"] = 5;
    CHECK_THROWS_AS(comodule_from_json(m2, bad), parse_error);
}

TEST_CASE("builtin comodule specs") {
    const AlgebraPtr k2 = builtin_algebra("kn:2", Q);
    CHECK(load_comodule(k2, "regular").data_equals(Coaction::regular(k2)));
    CHECK(load_comodule(k2, "free:3").dim() == 6);
    CHECK(!load_comodule(k2, "zero").comodule_ok());
    const AlgebraPtr m2 = builtin_algebra("mat:2", Q);
    CHECK(load_comodule(m2, "rmatrix").yd_ok());
    CHECK_THROWS_AS(load_comodule(k2, "rmatrix"), parse_error);
    CHECK_THROWS_AS(load_comodule(k2, "free:x"), parse_error);
}

TEST_CASE("descent data round-trip") {
    const AlgebraPtr k2 = builtin_algebra("kn:2", Q);
    const DescentDatum d = DescentDatum::free(k2, 2);
    const DescentDatum back = descent_from_json(k2, descent_to_json(d, false));
    CHECK(back.data_equals(d));
    CHECK(load_descent(k2, "free:2").data_equals(d));
    CHECK(load_descent(k2, "regular").ok());
}

TEST_CASE("operators round-trip and self-describe their field") {
    const Coaction c = Coaction::regular(builtin_algebra("kn:2", Q));
    const YangBaxterOperator om = omega_from_comodule(c);
    const json j = operator_to_json(om, true, true);
    const LoadedOperator back = operator_from_json(j);
    CHECK(back.op.omega == om.omega);
    CHECK(back.op.provenance == OmegaSource::comodule);
    CHECK(back.qybe);

    const Coaction c5 = Coaction::regular(builtin_algebra("kn:2", Field::prime(5)));
    const json j5 = operator_to_json(omega_from_comodule(c5), false, false);
    CHECK(operator_from_json(j5).op.omega.field().modulus() == 5);

    json bad = j;
    bad["provenance"] = "alien";
    CHECK_THROWS_AS(operator_from_json(bad), parse_error);
}

TEST_CASE("grouplike specs") {
    const AlgebraPtr k2 = builtin_algebra("kn:2", Q);
    CHECK(load_grouplike(k2, "trivial").coeffs() ==
          Grouplike::trivial(builtin_algebra("kn:2", Q)).coeffs());
    const Grouplike torus = load_grouplike(k2, R"(["1","2","1/2","1"])");
    CHECK(torus.coeffs()(1, 0) == Scalar::integer(Q, 2));
    CHECK_THROWS_AS(load_grouplike(k2, R"(["1","2"])"), parse_error);
    CHECK_THROWS_AS(load_grouplike(k2, R"(["1","0","0","0"])"), validation_error);
    CHECK(load_grouplike(k2, R"(["1","1","1","1"])").coeffs() == Grouplike::trivial(k2).coeffs());
}

TEST_CASE("report serialization carries witnesses only on failure") {
    Report rep;
    rep.add("good", true);
    rep.add("bad", false, "basis 3 differs");
    const json j = report_to_json(rep);
    CHECK(j["pass"] == false);
    CHECK(j["checks"][0].contains("witness") == false);
    CHECK(j["checks"][1]["witness"] == "basis 3 differs");
}

TEST_CASE("content hashing is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("sweedler") == fnv1a64_hex("sweedler"));
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}
