#include "romik/error.hpp"
#include "romik/json_io.hpp"
#include "romik/parse.hpp"

#include <doctest.h>

#include <random>

using namespace romik;

namespace {

std::mt19937_64 gen(31337);

long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

QFE random_qfe() {
    static const long ds[] = {0, 2, 3, 5, 7, 10};
    const long d = ds[pick(0, 5)];
    const Rational a = make_rational(pick(-99, 99), pick(1, 30));
    const Rational b = d == 0 ? Rational(0) : make_rational(pick(-99, 99), pick(1, 30));
    return QFE(a, b, Integer(d));
}

}  // namespace

TEST_CASE("scalar parsing") {
    const QFE r3 = QFE::surd(3), r5 = QFE::surd(5), r2 = QFE::surd(2);
    CHECK(parse_qfe("3/5") == QFE(Rational(3, 5)));
    CHECK(parse_qfe("-1/2") == QFE(Rational(-1, 2)));
    CHECK(parse_qfe("6/4") == QFE(Rational(3, 2)));
    CHECK(parse_qfe("√3/2") == r3 / 2);
    CHECK(parse_qfe("sqrt(3)/2") == r3 / 2);
    CHECK(parse_qfe("1/2+1/2√5") == (1 + r5) / 2);
    CHECK(parse_qfe("(1+√5)/4") == (1 + r5) / 4);
    CHECK(parse_qfe("3-2*sqrt(2)") == 3 - 2 * r2);
    CHECK(parse_qfe(" 2 sqrt(12) ") == 4 * r3);
    CHECK(parse_qfe("sqrt(4)") == QFE(2));
    CHECK(parse_qfe("√2*√2") == QFE(2));
}

TEST_CASE("scalar parse errors") {
    for (const char* bad : {"", "1/0", "sqrt(-3)", "√2+√3", "1/(1-1)", "(1+2", "abc", "1..2", "2^3", "sqrt(1/2)x"}) {
        CAPTURE(bad);
        CHECK_THROWS(parse_qfe(bad));
    }
    CHECK_THROWS_AS(parse_qfe("(1+2"), ParseError);
    CHECK_THROWS_AS(parse_qfe("abc"), ParseError);
}

TEST_CASE("points, words and triples") {
    CHECK(parse_point("3/5,4/5") == CirclePoint(Rational(3, 5), Rational(4, 5)));
    CHECK(parse_point("1/2, sqrt(3)/2") == CirclePoint(Rational(1, 2), QFE::surd(3) / 2));
    CHECK_THROWS_AS(parse_point("1/2"), ParseError);
    CHECK_THROWS(parse_point("1,1"));

    CHECK(parse_word("3,1") == make_word({3, 1}));
    CHECK(parse_word("31") == make_word({3, 1}));
    CHECK(parse_word("1,2,2") == make_word({1, 2, 2}));
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("4"), ParseError);
    CHECK_THROWS_AS(parse_word("3,0"), ParseError);

    CHECK(parse_triple("3,4,5") == Triple(3, 4, 5));
    CHECK(parse_triple("20,21,29") == Triple(20, 21, 29));
    CHECK_THROWS_AS(parse_triple("3,4"), ParseError);
    CHECK_THROWS_AS(parse_triple("3,4,x"), ParseError);
    CHECK_THROWS(parse_triple("6,8,10"));
}

TEST_CASE("json encodings") {
    CHECK(to_json(QFE::surd(3) / 2).dump() == R"({"a":"0","b":"1/2","d":"3"})");
    CHECK(to_json(QFE(Rational(-7, 4))).dump() == R"({"a":"-7/4","b":"0","d":"0"})");
    CHECK(to_json(make_word({3, 1})).dump() == "[3,1]");
    CHECK(to_json(Triple(3, 4, 5)).dump() == R"({"a":"3","b":"4","c":"5"})");
    CHECK(to_json(RationalExpansion{make_word({2}), Tail::ones}).dump() == R"({"prefix":[2],"tail":"ONES"})");
    CHECK(to_json(CirclePoint(0, 1)).dump() ==
          R"({"x":{"a":"0","b":"0","d":"0"},"y":{"a":"1","b":"0","d":"0"}})");

    // Values beyond 64 bits survive as strings.
    const QFE big(Rational(Integer("123456789012345678901234567891"), Integer(7)));
    CHECK(to_json(big)["a"] == "123456789012345678901234567891/7");
    CHECK(qfe_from_json(to_json(big)) == big);
}

TEST_CASE("json decoding") {
    CHECK(qfe_from_json(Json::parse(R"({"a":"1/2","b":"1/2","d":5})")) == (1 + QFE::surd(5)) / 2);
    CHECK(qfe_from_json(Json::parse(R"({"a":"2/4","b":"0","d":"0"})")) == QFE(Rational(1, 2)));
    CHECK_THROWS_AS(qfe_from_json(Json::parse(R"({"a":"1/2","b":"1"})")), ParseError);
    CHECK_THROWS_AS(qfe_from_json(Json::parse(R"({"a":"x","b":"1","d":"2"})")), ParseError);
    CHECK_THROWS_AS(qfe_from_json(Json::parse("[1,2]")), ParseError);
    CHECK_THROWS_AS(vec3_from_json(Json::parse("[]")), ParseError);
    CHECK_THROWS_AS(mat3_from_json(Json::parse("[[],[],[]]")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse(R"({"x":{"a":"1","b":"0","d":"0"}})")), ParseError);
}

TEST_CASE("property: json round trips") {
    for (int i = 0; i < 2000; ++i) {
        const QFE x = random_qfe();
        REQUIRE(qfe_from_json(to_json(x)) == x);
        REQUIRE(qfe_from_json(Json::parse(to_json(x).dump())) == x);
        // Text form parses back too.
        REQUIRE(parse_qfe(x.to_string()) == x);
    }
    for (int i = 0; i < 200; ++i) {
        Mat3 m = Mat3::identity();
        for (long k = pick(1, 5); k > 0; --k) m = m * mat_const(static_cast<MatName>(pick(0, 6)));
        const Vec3 v = m * Vec3(3, 4, 5);
        REQUIRE(vec3_from_json(Json::parse(to_json(v).dump())) == v);
        REQUIRE(mat3_from_json(Json::parse(to_json(m).dump())) == m);
        const CirclePoint p = project(v);
        REQUIRE(point_from_json(Json::parse(to_json(p).dump())) == p);
    }
}
