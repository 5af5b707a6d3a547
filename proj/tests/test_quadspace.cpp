#include "romik/error.hpp"
#include "romik/quadspace.hpp"

#include <doctest.h>

#include <random>

using namespace romik;

namespace {

std::mt19937_64 gen(77);

long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

const QFE r3 = QFE::surd(3);

QFE random_qfe(long d) {
    return QFE(make_rational(pick(-9, 9), pick(1, 5)), make_rational(pick(-9, 9), pick(1, 5)), Integer(d));
}

Vec3 random_vec(long d) { return Vec3(random_qfe(d), random_qfe(d), random_qfe(d)); }

MatName random_name() { return static_cast<MatName>(pick(0, 6)); }

// A rational point of the unit circle, from the tangent half-angle.
CirclePoint random_circle_point() {
    const Rational t = make_rational(pick(-30, 30), pick(1, 30));
    const Rational den = 1 + t * t;
    return CirclePoint(QFE((1 - t * t) / den), QFE(2 * t / den));
}

// The same point with x, y >= 0.
CirclePoint random_quarter_point() {
    const CirclePoint p = random_circle_point();
    return CirclePoint(p.x().abs(), p.y().abs());
}

}  // namespace

TEST_CASE("quadratic form and pairing examples") {
    CHECK(q_form(Vec3(3, 4, 5)) == QFE(0));
    CHECK(q_form(Vec3(1, 1, 1)) == QFE(1));
    CHECK(q_form(Vec3(4 * r3, 0, 2 * r3)) == QFE(36));
    CHECK(bilinear(Vec3(1, 0, 1), Vec3(0, 1, 1)) == QFE(-1));
    CHECK(bilinear(Vec3(1, r3, 2), Vec3(1, -r3, 2)) == QFE(-6));
}

TEST_CASE("reflections") {
    CHECK(reflect(Vec3(1, 1, 1), Vec3(1, 1, 1)) == Vec3(-1, -1, -1));
    CHECK(reflect(Vec3(1, 1, 1), Vec3(3, 4, 5)) == Vec3(-1, 0, 1));
    CHECK(reflection_matrix(Vec3(0, 1, 0)) == mat_const(MatName::U1));
    CHECK(reflection_matrix(Vec3(1, 0, 0)) == mat_const(MatName::U3));
    CHECK(reflection_matrix(Vec3(1, 1, 1)) == mat_const(MatName::H));
    CHECK_THROWS_AS(reflect(Vec3(3, 4, 5), Vec3(1, 0, 0)), InvalidArgument);

    for (int i = 0; i < 300; ++i) {
        const long d = pick(0, 1) ? 2 : 5;
        const Vec3 z = random_vec(d), x = random_vec(d), y = random_vec(d);
        if (q_form(z).is_zero()) continue;
        REQUIRE(reflect(z, reflect(z, x)) == x);
        REQUIRE(bilinear(reflect(z, x), reflect(z, y)) == bilinear(x, y));
        REQUIRE(reflect(z, z) == -z);
        REQUIRE(reflection_matrix(z) * x == reflect(z, x));
        REQUIRE(reflection_matrix(z).det() == QFE(-1));
    }
}

TEST_CASE("matrix constants") {
    const Mat3 h = mat_const(MatName::H);
    CHECK(mat_const(MatName::M1) == h * mat_const(MatName::U1));
    CHECK(mat_const(MatName::M2) == h * mat_const(MatName::U2));
    CHECK(mat_const(MatName::M3) == h * mat_const(MatName::U3));
    CHECK(h * h == Mat3::identity());
    CHECK(mat_const(MatName::M1).det() == QFE(1));
    CHECK(mat_const(MatName::M2).det() == QFE(-1));
    CHECK(mat_const(MatName::M3).det() == QFE(1));
    CHECK(mat_const(MatName::M2) * Vec3(3, 4, 5) == Vec3(21, 20, 29));
    CHECK(mat_const(MatName::M1) * Vec3(3, 4, 5) == Vec3(15, 8, 17));
    CHECK(h * Vec3(0, 1, 1) == Vec3(0, 1, 1));
    CHECK(mat_word(make_word({2})) == mat_const(MatName::M2));
    CHECK(mat_word(make_word({3, 1})).det() == QFE(1));
    CHECK(mat_word(make_word({2, 2})).det() == QFE(1));
    CHECK_THROWS_AS(mat_word(Word{}), InvalidArgument);
    CHECK(parse_mat_name("M2") == MatName::M2);
    CHECK(parse_mat_name("H") == MatName::H);
    CHECK_FALSE(parse_mat_name("h"));
    CHECK_FALSE(parse_mat_name("M4"));
    CHECK(to_string(MatName::U3) == "U3");

    // Every constant preserves Q: A^T J A = J.
    const Mat3 j = Mat3::from_integers({1, 0, 0, 0, 1, 0, 0, 0, -1});
    for (int n = 0; n <= 6; ++n) {
        const Mat3 a = mat_const(static_cast<MatName>(n));
        CHECK(a.transpose() * j * a == j);
    }
}

TEST_CASE("q-cross product examples") {
    CHECK(q_cross(Vec3(1, 0, 1), Vec3(0, 1, 1)) == Vec3(-1, -1, -1));
    CHECK(q_cross(Vec3(1, r3, 2), Vec3(1, -r3, 2)) == Vec3(4 * r3, 0, 2 * r3));
    const Vec3 v(2, r3, 7);
    CHECK(q_cross(v, v).is_zero());
}

TEST_CASE("property: q-cross product algebra") {
    for (int i = 0; i < 1000; ++i) {
        const long d = pick(0, 1) ? 3 : 7;
        const Vec3 u = random_vec(d), v = random_vec(d), w = random_vec(d);
        const Vec3 c = q_cross(u, v);
        REQUIRE(bilinear(c, u).is_zero());
        REQUIRE(bilinear(c, v).is_zero());
        REQUIRE(q_cross(v, u) == -c);
        REQUIRE(q_cross(u + w, v) == c + q_cross(w, v));
        // The Q-volume: <u x_Q v, w> is the ordinary triple product.
        REQUIRE(bilinear(c, w) == triple_product(u, v, w));

        Mat3 a = Mat3::identity();
        for (long k = pick(1, 4); k > 0; --k) a = a * mat_const(random_name());
        REQUIRE(q_cross(a * u, a * v) == a.det() * (a * c));
    }
}

TEST_CASE("property: null vectors") {
    for (int i = 0; i < 1000; ++i) {
        const CirclePoint p = random_circle_point(), q = random_circle_point();
        const QFE s = random_qfe(5), t = random_qfe(5);
        const Vec3 u = s * lift(p), v = t * lift(q);
        const QFE pairing = bilinear(u, v);
        REQUIRE(q_form(q_cross(u, v)) == pairing * pairing);
    }
}

TEST_CASE("projection and the action on points") {
    CHECK(project(Vec3(3, 4, 5)) == CirclePoint(Rational(3, 5), Rational(4, 5)));
    CHECK(project(Vec3(1, r3, 2)) == CirclePoint(Rational(1, 2), r3 / 2));
    CHECK(project(Vec3(0, 1, 1)) == CirclePoint(0, 1));
    CHECK_THROWS_AS(project(Vec3(1, 1, 1)), InvalidArgument);
    CHECK_THROWS_AS(project(Vec3(0, 0, 0)), InvalidArgument);
    CHECK_THROWS_AS(CirclePoint(1, 1), InvalidArgument);

    const CirclePoint p(Rational(1, 2), r3 / 2);
    CHECK(act(mat_const(MatName::M1), p) == CirclePoint(r3 / 2, Rational(1, 2)));
    CHECK(act(mat_const(MatName::H), CirclePoint(Rational(3, 5), Rational(4, 5))) == CirclePoint(-1, 0));
    const CirclePoint q(Rational(5, 13), Rational(12, 13));
    CHECK(act(mat_const(MatName::U1), q) == CirclePoint(q.x(), -q.y()));
    CHECK(p.conj() == CirclePoint(Rational(1, 2), -r3 / 2));
}

TEST_CASE("property: H maps the upper null cone to itself") {
    const Mat3 h = mat_const(MatName::H);
    for (int i = 0; i < 2000; ++i) {
        const CirclePoint p = random_circle_point();
        const QFE scale(make_rational(pick(1, 50), pick(1, 50)));
        const Vec3 v = scale * lift(p);
        REQUIRE((h * v)[2].sign() > 0);
    }
}

TEST_CASE("property: between the lines x + y = 1 and x + y = 2") {
    // For v = (a, b, c) with c > 0, H v has a smaller third coordinate in
    // absolute value exactly when 1 < (a + b)/c < 2.
    const Mat3 h = mat_const(MatName::H);
    for (int i = 0; i < 3000; ++i) {
        const long c = pick(1, 500);
        const long a = pick(-600, 600);
        const long b = i % 7 == 0 ? c - a : (i % 7 == 1 ? 2 * c - a : pick(-600, 600));
        const QFE c2 = (h * Vec3(a, b, c))[2];
        const Rational s = make_rational(a + b, c);
        REQUIRE((c2.abs() < QFE(c)) == (s > 1 && s < 2));
    }
}

TEST_CASE("property: M_j maps the quarter circle into itself") {
    for (int i = 0; i < 500; ++i) {
        const CirclePoint p = random_quarter_point();
        for (int j = 0; j < 3; ++j) {
            const CirclePoint q = act(mat_const(static_cast<MatName>(j)), p);
            REQUIRE(q.in_quarter());
        }
    }
}

TEST_CASE("vector field tags") {
    CHECK(Vec3(1, 2, 3).field() == 0);
    CHECK(Vec3(1, r3, 2).field() == 3);
    CHECK_THROWS_AS(Vec3(QFE::surd(2), r3, 1).field(), FieldMismatch);
    CHECK(Vec3(1, r3, 2).conj() == Vec3(1, -r3, 2));
}
