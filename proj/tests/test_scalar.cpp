#include <doctest.h>

#include "sweedler/scalar.hpp"

using namespace sweedler;

TEST_CASE("rational arithmetic stays in lowest terms") {
    const Rational a = Rational::fraction(2, 4);
    CHECK(a.str() == "1/2");
    CHECK((a + a).str() == "1");
    CHECK((a - a).is_zero());
    CHECK((a * Rational::fraction(2, 3)).str() == "1/3");
    CHECK((a / Rational::fraction(-1, 4)).str() == "-2");
    CHECK(Rational::fraction(-3, -6).str() == "1/2");
    CHECK_THROWS_AS(Rational::fraction(1, 0), error);
    CHECK_THROWS_AS(Rational(0).inverse(), error);
}

TEST_CASE("rational overflow promotes to arbitrary precision and back") {
    const long long big = 3037000499LL;  // floor(sqrt(2^63))
    Rational x(big);
    Rational sq = x * x;           // still fits
    Rational quad = sq * sq;       // needs promotion
    CHECK(!quad.is_small());
    CHECK(quad.str() == "85070591620872599158135621271853498001");
    // dividing back demotes to the inline representation
    Rational back = quad / sq / sq;
    CHECK(back.is_small());
    CHECK(back == Rational(1));
    CHECK(Rational::parse("85070591620872599158135621271853498001") == quad);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-7/14").str() == "-1/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), parse_error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), parse_error);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), parse_error);
}

TEST_CASE("prime field arithmetic and parsing") {
    const Field f5 = Field::prime(5);
    const Scalar a = Scalar::integer(f5, 7);
    CHECK(a.str() == "2 mod 5");
    CHECK((a + a).str() == "4 mod 5");
    CHECK((a * a).str() == "4 mod 5");
    CHECK((-a).str() == "3 mod 5");
    CHECK(a.inverse().str() == "3 mod 5");  // 2 * 3 = 6 = 1 mod 5
    CHECK(Scalar::parse(f5, "12 mod 5") == a);
    CHECK(Scalar::parse(f5, "-3 mod 5") == a);
    CHECK_THROWS_AS(Scalar::parse(f5, "2"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(f5, "2 mod 7"), field_mismatch);
    CHECK_THROWS_AS(Field::prime(6), parse_error);
    CHECK_THROWS_AS(Field::prime(1ull << 61), parse_error);
    CHECK(Field::prime((1ull << 61) - 1).modulus() == (1ull << 61) - 1);  // Mersenne
}

TEST_CASE("mixing fields is an error") {
    const Scalar q = Scalar::integer(Field::rationals(), 1);
    const Scalar p = Scalar::integer(Field::prime(3), 1);
    CHECK_THROWS_AS(q + p, field_mismatch);
    CHECK_THROWS_AS(q == p, field_mismatch);
}

TEST_CASE("field spec parsing") {
    CHECK(Field::parse("Q").is_rationals());
    CHECK(Field::parse("Fp:7").modulus() == 7);
    CHECK_THROWS_AS(Field::parse("Fp:abc"), parse_error);
    CHECK_THROWS_AS(Field::parse("R"), parse_error);
}
