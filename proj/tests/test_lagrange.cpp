#include "romik/error.hpp"
#include "romik/lagrange.hpp"
#include "romik/parse.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace romik;

namespace {

std::mt19937_64 gen(31337);

long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

const QFE r2 = QFE::surd(2);
const QFE r3 = QFE::surd(3);

CirclePoint pt(const char* s) { return parse_point(s); }

std::vector<Word> words_of_length(std::size_t k) {
    std::vector<Word> out;
    Word w(k, Digit::one);
    while (true) {
        out.push_back(w);
        std::size_t i = k;
        while (i > 0 && w[i - 1] == Digit::three) w[--i] = Digit::one;
        if (i == 0) break;
        w[i - 1] = static_cast<Digit>(to_int(w[i - 1]) + 1);
    }
    return out;
}

Word random_word(std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(make_digit(static_cast<int>(pick(1, 3))));
    return w;
}

Word concat(Word a, const Word& b, std::size_t times = 1) {
    for (std::size_t i = 0; i < times; ++i) a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Coordinates of v lie in O_K: a + b sqrt D with a, b integers, or both
// halves of odd integers when D = 1 mod 4.
bool integral(const Vec3& v, const Integer& d) {
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational a2 = 2 * v[i].a(), b2 = 2 * v[i].b();
        if (a2.get_den() != 1 || b2.get_den() != 1) return false;
        const bool whole = v[i].a().get_den() == 1 && v[i].b().get_den() == 1;
        if (!whole && !(d % 4 == 1 && v[i].a().get_den() == 2 && v[i].b().get_den() == 2)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("admissible words") {
    CHECK(is_admissible(make_word({2})));
    CHECK(is_admissible(make_word({3, 1})));
    CHECK_FALSE(is_admissible(make_word({1, 1})));
    CHECK_FALSE(is_admissible(make_word({3})));
    CHECK_FALSE(is_admissible(Word{}));
    CHECK_THROWS_AS(construct_periodic(make_word({1, 1, 1})), InvalidArgument);
    CHECK_THROWS_AS(construct_periodic(Word{}), InvalidArgument);
}

TEST_CASE("periodic point examples") {
    const auto two = construct_periodic(make_word({2}));
    CHECK(two.point == CirclePoint(r2 / 2, r2 / 2));
    CHECK(two.lambda1 == 3 + 2 * r2);
    CHECK(two.lambda2 == 3 - 2 * r2);
    CHECK(two.lambda3 == -1);
    CHECK(two.d == 2);
    CHECK(two.discriminant == 32);

    const auto a = construct_periodic(make_word({3, 1}));
    CHECK(a.point == CirclePoint(Rational(1, 2), r3 / 2));
    CHECK(a.lambda1 == 7 + 4 * r3);
    CHECK(a.d == 3);
    CHECK(a.discriminant == 192);
    CHECK(a.lambda3 == 1);

    const auto b = construct_periodic(make_word({1, 3}));
    CHECK(b.point == CirclePoint(r3 / 2, Rational(1, 2)));
    CHECK(b.lambda1 == 7 + 4 * r3);
}

TEST_CASE("property: constructed points are fixed by their matrix") {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const Word& w : words_of_length(k)) {
            if (!is_admissible(w)) continue;
            const auto pd = construct_periodic(w);
            const Mat3 m = mat_word(w);
            REQUIRE(act(m, pd.point) == pd.point);
            REQUIRE(m * pd.v1 == pd.lambda1 * pd.v1);
            REQUIRE(m * pd.v2 == pd.lambda2 * pd.v2);
            REQUIRE(m * pd.v3 == QFE(pd.lambda3) * pd.v3);
            REQUIRE(pd.lambda1 * pd.lambda2 == QFE(1));
            REQUIRE(pd.lambda1 > 1);
            REQUIRE(pd.lambda3 == (m.det() == QFE(1) ? 1 : -1));
            REQUIRE(expand_stream(pd.point, 2 * k) == concat(w, w));
            REQUIRE(pd.point.field() == pd.d);
        }
    }
}

TEST_CASE("period detection") {
    CHECK(detect_period(pt("1/2,sqrt(3)/2")) == ExpansionResult{{}, make_word({3, 1})});
    CHECK(detect_period(pt("sqrt(2)/2,sqrt(2)/2")) == ExpansionResult{{}, make_word({2})});
    const CirclePoint p = act(mat_const(MatName::M2), pt("1/2,sqrt(3)/2"));
    CHECK(detect_period(p) == ExpansionResult{make_word({2}), make_word({3, 1})});
    CHECK_THROWS_AS(detect_period(pt("3/5,4/5")), InvalidArgument);
    CHECK_THROWS_AS(detect_period(p, 1), LimitExceeded);
}

TEST_CASE("property: preperiodic points round trip") {
    for (int i = 0; i < 200; ++i) {
        Word period;
        do {
            period = random_word(static_cast<std::size_t>(pick(1, 4)));
        } while (!is_admissible(period));
        const Word prefix = random_word(static_cast<std::size_t>(pick(0, 5)));
        CirclePoint p = construct_periodic(period).point;
        if (!prefix.empty()) p = act(mat_word(prefix), p);

        const ExpansionResult r = detect_period(p);
        REQUIRE(r.preperiod.size() <= prefix.size());
        REQUIRE(r.period == primitive_root(r.period));
        REQUIRE(r.period.size() <= period.size());
        const std::size_t n = prefix.size() + 3 * period.size();
        const Word stream = expand_stream(p, n);
        REQUIRE(stream == concat(prefix, period, 3));
        const Word rebuilt = concat(r.preperiod, r.period, n);
        REQUIRE(Word(rebuilt.begin(), rebuilt.begin() + static_cast<std::ptrdiff_t>(n)) == stream);
        // Minimal preperiod: dropping the last preperiod digit breaks it.
        if (!r.preperiod.empty()) REQUIRE(r.preperiod.back() != r.period.back());
    }
}

TEST_CASE("integralization") {
    CHECK(integralize(pt("1/2,sqrt(3)/2")) == Vec3(1, r3, 2));
    CHECK(integralize(pt("3/5,4/5")) == Vec3(3, 4, 5));
    CHECK(integralize(pt("sqrt(2)/2,sqrt(2)/2")) == Vec3(r2, r2, 2));

    // D = 17: the point of (1,3,2) needs half-integer coordinates.
    const QFE r17 = QFE::surd(17);
    const auto pd = construct_periodic(make_word({1, 3, 2}));
    const Vec3 v = integralize(pd.point);
    CHECK(v == Vec3((1 + r17) / 2, (r17 - 1) / 2, 3));
    CHECK(project(v) == pd.point);
}

TEST_CASE("exploration: half-integer coordinates occur for D = 1 mod 4") {
    // integralize must support (u + v sqrt D)/2 coordinates, and does.
    std::size_t one_mod_four = 0, halves = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
        for (const Word& w : words_of_length(k)) {
            if (!is_admissible(w)) continue;
            const auto pd = construct_periodic(w);
            const Vec3 v = integralize(pd.point);
            REQUIRE(project(v) == pd.point);
            REQUIRE(integral(v, pd.d));
            if (pd.d % 4 != 1) continue;
            ++one_mod_four;
            bool half = false;
            for (std::size_t i = 0; i < 3; ++i) half = half || v[i].a().get_den() == 2;
            halves += half;
        }
    }
    MESSAGE("D = 1 mod 4 words with k <= 6: " << one_mod_four << ", with half-integer coordinates: " << halves);
    CHECK(one_mod_four == 530);
    CHECK(halves == 84);
}

TEST_CASE("exploration: no admissible word is degenerate for k <= 7") {
    // A square (trace - det)^2 - 4 would make the periodic point rational.
    std::size_t words = 0;
    for (std::size_t k = 1; k <= 7; ++k) {
        for (const Word& w : words_of_length(k)) {
            if (!is_admissible(w)) continue;
            ++words;
            const Mat3 m = mat_word(w);
            const Integer p = (m.trace() - m.det()).a().get_num();
            const Integer disc = p * p - 4;
            REQUIRE(disc > 0);
            REQUIRE_FALSE(mpz_perfect_square_p(disc.get_mpz_t()));
        }
    }
    CHECK(words == 3265);
    CHECK_NOTHROW(construct_periodic(make_word({1, 2, 3, 1, 2, 3, 2})));
}

TEST_CASE("w-sequence") {
    const auto ws = w_sequence(pt("1/2,sqrt(3)/2"), 6);
    CHECK(ws.w0 == Vec3(4 * r3, 0, 2 * r3));
    CHECK(ws.big_w == 36);
    CHECK(ws.d == 3);
    CHECK(ws.terms.size() == 7);
    CHECK(ws.digits == make_word({3, 1, 3, 1, 3, 1}));
    CHECK(ws.terms[2] == ws.terms[0]);
    CHECK(ws.lattice[0] == std::array<Integer, 3>{8, 0, 4});
    CHECK(ws.max_abs_x3 == 2 * r3);
    CHECK_THROWS_AS(w_sequence(pt("3/5,4/5"), 3), InvalidArgument);

    const auto two = w_sequence(pt("sqrt(2)/2,sqrt(2)/2"), 4);
    CHECK(two.signs == std::vector<int>{1, -1, 1, -1, 1});
    CHECK(two.terms[1] == two.terms[0]);
}

TEST_CASE("lattice and closeness helpers") {
    CHECK(lattice_coordinates(Vec3(4 * r3, 0, 2 * r3), 3) == std::array<Integer, 3>{8, 0, 4});
    CHECK_FALSE(lattice_coordinates(Vec3(r3 / 4, 0, 0), 3));
    CHECK_FALSE(lattice_coordinates(Vec3(1, 0, 0), 3));
    CHECK(hyperboloid_closeness(Vec3(4 * r3, 0, 2 * r3), 36, 3));
    // w3 > 0 and w1 = -7 sqrt 3 < -sqrt 36.
    CHECK_FALSE(hyperboloid_closeness(Vec3(-7 * r3, 0, 2 * r3), 36, 3));
    CHECK_FALSE(hyperboloid_closeness(Vec3(7 * r3, 0, -2 * r3), 36, 3));
    CHECK(hyperboloid_closeness(Vec3(-3 * r3, r3, 2 * r3), 36, 3));
}

TEST_CASE("galois corollary") {
    const auto two = galois_check(make_word({2}));
    CHECK(two.conjugate == CirclePoint(-r2 / 2, -r2 / 2));
    CHECK(two.expected_signs == std::array{-1, -1});
    CHECK(two.passed());

    const auto a = galois_check(make_word({3, 1}));
    CHECK(a.expected_signs == std::array{1, -1});
    CHECK(a.target == make_word({3, 1}));
    CHECK(a.passed());

    const auto b = galois_check(make_word({1, 2, 3}));
    CHECK(b.target == make_word({2, 1, 3}));
    CHECK(b.detected.period == make_word({2, 1, 3}));
    CHECK(b.passed());

    // The sign table, independently: conjugate coordinates by d_k.
    for (std::size_t k = 1; k <= 5; ++k) {
        for (const Word& w : words_of_length(k)) {
            if (!is_admissible(w)) continue;
            const CirclePoint c = construct_periodic(w).point.conj();
            const int sx = c.x().sign(), sy = c.y().sign();
            switch (w.back()) {
                case Digit::one: REQUIRE((sx > 0 && sy < 0)); break;
                case Digit::two: REQUIRE((sx < 0 && sy < 0)); break;
                case Digit::three: REQUIRE((sx < 0 && sy > 0)); break;
            }
        }
    }
}

TEST_CASE("counting words over a field") {
    const auto one = count_nkk(1, 2);
    CHECK(one.count == 1);
    CHECK(one.words == std::vector<Word>{make_word({2})});
    const auto w3 = count_nkk(2, 3);
    CHECK(std::find(w3.words.begin(), w3.words.end(), make_word({3, 1})) != w3.words.end());
    CHECK(std::find(w3.words.begin(), w3.words.end(), make_word({1, 3})) != w3.words.end());
    CHECK_THROWS_AS(count_nkk(2, 4), InvalidArgument);
    CHECK_THROWS_AS(count_nkk(0, 3), InvalidArgument);

    // Oracle: the field of each constructed point.
    for (std::size_t k = 1; k <= 5; ++k) {
        std::map<Integer, std::vector<Word>> by_field;
        std::size_t admissible = 0;
        for (const Word& w : words_of_length(k)) {
            if (!is_admissible(w)) continue;
            ++admissible;
            by_field[construct_periodic(w).point.field()].push_back(w);
        }
        std::size_t total = 0;
        for (const auto& [d, words] : by_field) {
            const auto r = count_nkk(static_cast<unsigned>(k), d);
            REQUIRE(r.words == words);
            total += r.count;
        }
        REQUIRE(total == admissible);
    }
    MESSAGE("N(2, Q(sqrt 7)) = " << count_nkk(2, 7).count);
}

TEST_CASE("unit classes") {
    const FundamentalUnit eps = fundamental_unit(3);
    const Vec3 a(1, r3, 2), b(r3, 1, 2);
    CHECK(mat_const(MatName::M1) * a == (2 + r3) * b);
    CHECK(same_class(mat_const(MatName::M1) * a, b, eps));
    CHECK_FALSE(same_class(a, b, eps));
    CHECK(normalize_class((7 + 4 * r3) * a, eps) == normalize_class(a, eps));
    const Vec3 n = normalize_class((2 - r3) * b, eps);
    CHECK(n[2] >= 1);
    CHECK(n[2] < eps.value);
    CHECK_THROWS_AS(normalize_class(Vec3(1, 0, -1), eps), InvalidArgument);
}

TEST_CASE("circular roots") {
    const CircularRoot r = circular_root(make_word({3, 1}));
    REQUIRE(r.classes.size() == 2);
    CHECK(r.d == 3);
    CHECK(r.unit->value == 2 + r3);
    CHECK(r.classes[0].representative == Vec3(1, r3, 2));
    CHECK(r.classes[1].representative == Vec3(r3, 1, 2));
    CHECK(r.classes[0].period == make_word({3, 1}));
    CHECK(r.classes[1].period == make_word({1, 3}));
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0].from == 1);
    CHECK(r.edges[0].to == 0);
    CHECK(r.edges[0].label == Digit::three);
    CHECK(r.edges[1].label == Digit::one);

    const CircularRoot two = circular_root(make_word({2}));
    REQUIRE(two.classes.size() == 1);
    REQUIRE(two.edges.size() == 1);
    CHECK(two.edges[0].from == 0);
    CHECK(two.edges[0].to == 0);
    CHECK(two.edges[0].label == Digit::two);

    const CircularRoot raw = circular_root(make_word({3, 1}), false);
    CHECK_FALSE(raw.unit);
    CHECK(raw.classes[1].representative == Vec3(r3, 1, 2));
    CHECK_THROWS_AS(circular_root(make_word({1})), InvalidArgument);

    for (std::size_t k = 1; k <= 4; ++k) {
        for (const Word& w : words_of_length(k)) {
            if (is_admissible(w)) REQUIRE_NOTHROW(circular_root(w));
        }
    }
}

TEST_CASE("content removal") {
    const QFE r5 = QFE::surd(5);
    const FundamentalUnit eps5 = fundamental_unit(5);
    // (2 sqrt 5, sqrt 5, 5) = sqrt 5 (2, 1, sqrt 5); the generator is fixed
    // only up to a unit.
    CHECK(same_class(remove_content(Vec3(2 * r5, r5, 5), eps5), Vec3(2, 1, r5), eps5));
    CHECK(remove_content(Vec3(2, r5, 3), eps5) == Vec3(2, r5, 3));
    const FundamentalUnit eps3 = fundamental_unit(3);
    CHECK(remove_content(Vec3(1, r3, 2), eps3) == Vec3(1, r3, 2));
    CHECK_THROWS_AS(remove_content(Vec3(Rational(1, 2), 0, 1), eps3), InvalidArgument);

    // Classes of (1,2) in Q(sqrt 5) differ by units only after the content goes.
    const CircularRoot r = circular_root(make_word({1, 2}));
    REQUIRE(r.classes.size() == 2);
    CHECK(r.d == 5);
    const Vec3 back = mat_const(MatName::M1) * r.classes[1].representative;
    CHECK(same_class(back, r.classes[0].representative, *r.unit));
}
