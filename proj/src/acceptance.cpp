#include "romik/acceptance.hpp"

#include "romik/berggren.hpp"
#include "romik/error.hpp"
#include "romik/lagrange.hpp"
#include "romik/parse.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace romik {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    int failures = 0;

    // Keeps the first few failure messages.
    void fail(const std::string& what) {
        passed = false;
        if (failures++ < 3) detail << "FAIL " << what << "; ";
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5EED'2024ULL);
    return gen;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Word random_word(std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(make_digit(static_cast<int>(uniform(1, 3))));
    return w;
}

Word random_admissible(std::size_t max_len) {
    while (true) {
        Word w = random_word(static_cast<std::size_t>(uniform(1, static_cast<long>(max_len))));
        if (is_admissible(w)) return w;
    }
}

std::vector<Word> all_words(std::size_t k) {
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

Word repeat(const Word& w, std::size_t times) {
    Word out;
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Mat3 u_matrix(Digit d) {
    static const MatName names[] = {MatName::U1, MatName::U2, MatName::U3};
    return mat_const(names[to_int(d) - 1]);
}

QFE sqrt_of(long n) { return QFE::surd(Integer(n)); }

// ---------------------------------------------------------------------------

struct TableNode {
    std::array<long, 3> t;
    std::vector<int> path;
};

// Both depth-2 trees as drawn, children left to right as M1, M2, M3.
const std::vector<TableNode>& expected_tree(bool second_root) {
    static const std::vector<TableNode> left = {
        {{3, 4, 5}, {}},         {{15, 8, 17}, {1}},      {{21, 20, 29}, {2}},
        {{5, 12, 13}, {3}},      {{35, 12, 37}, {1, 1}},  {{65, 72, 97}, {1, 2}},
        {{33, 56, 65}, {1, 3}},  {{77, 36, 85}, {2, 1}},  {{119, 120, 169}, {2, 2}},
        {{39, 80, 89}, {2, 3}},  {{45, 28, 53}, {3, 1}},  {{55, 48, 73}, {3, 2}},
        {{7, 24, 25}, {3, 3}},
    };
    static const std::vector<TableNode> right = {
        {{4, 3, 5}, {}},         {{12, 5, 13}, {1}},      {{20, 21, 29}, {2}},
        {{8, 15, 17}, {3}},      {{24, 7, 25}, {1, 1}},   {{48, 55, 73}, {1, 2}},
        {{28, 45, 53}, {1, 3}},  {{80, 39, 89}, {2, 1}},  {{120, 119, 169}, {2, 2}},
        {{36, 77, 85}, {2, 3}},  {{56, 33, 65}, {3, 1}},  {{72, 65, 97}, {3, 2}},
        {{12, 35, 37}, {3, 3}},
    };
    return second_root ? right : left;
}

void root_trees_depth_two(Outcome& o) {
    const auto start = Clock::now();
    std::vector<std::string> got, want;
    for (bool second : {false, true}) {
        const Triple& root = second ? root_435() : root_345();
        const auto nodes = tree(root, 2);
        const auto& table = expected_tree(second);
        o.expect(nodes.size() == table.size(), "node count " + std::to_string(nodes.size()));
        for (std::size_t i = 0; i < std::min(nodes.size(), table.size()); ++i) {
            const auto& f = table[i];
            std::ostringstream line;
            line << f.t[0] << ',' << f.t[1] << ',' << f.t[2] << ':' << to_string(make_word(f.path));
            want.push_back(line.str());
            std::ostringstream mine;
            mine << nodes[i].triple.a() << ',' << nodes[i].triple.b() << ',' << nodes[i].triple.c() << ':'
                 << to_string(nodes[i].path);
            got.push_back(mine.str());
        }
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    o.expect(got == want, "depth-2 trees differ from the table");
    const double t = seconds_since(start);
    o.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
    o.detail << got.size() << " triples match";
}

void oracle_equivalence(Outcome& o) {
    for (long c : {100L, 1000L, 10000L}) {
        const auto start = Clock::now();
        const auto bfs = enumerate_bfs(Integer(c));
        const auto oracle = enumerate_oracle(Integer(c));
        const double t = seconds_since(start);
        o.expect(bfs == oracle, "sets differ at c=" + std::to_string(c));
        if (c == 10000) o.expect(t < 30.0, "runtime " + std::to_string(t) + " s at 1e4");
        o.detail << (c == 100 ? "" : ", ") << "c=" << c << ": " << bfs.size() << " triples";
    }
}

void funnel_theorem(Outcome& o) {
    std::size_t funnels = 0, roots = 0;
    for (const Triple& t : enumerate_oracle(Integer(1000))) {
        const FunnelReport r = is_funnel(t);
        if (t == root_345() || t == root_435()) {
            o.expect(r.root_exception && r.indegree == 0 && r.outdegree_three, "root flags");
            ++roots;
        } else {
            std::ostringstream name;
            name << t;
            o.expect(r.is_funnel() && !r.root_exception, "not a funnel " + name.str());
            ++funnels;
        }
    }
    o.expect(roots == 2, "expected two roots");
    o.detail << funnels << " funnel vertices, " << roots << " roots flagged";
}

void lagrange_round_trip(Outcome& o) {
    const auto start = Clock::now();
    std::size_t words = 0;
    for (std::size_t k = 1; k <= 5; ++k) {
        for (const Word& w : all_words(k)) {
            if (!is_admissible(w)) continue;
            ++words;
            const PeriodicPointData pd = construct_periodic(w);
            const ExpansionResult r = detect_period(pd.point);
            o.expect(r.preperiod.empty() && r.period == primitive_root(w),
                     "round trip of " + to_string(w) + " gave " + to_string(r.period));
            o.expect(expand_stream(pd.point, 3 * k) == repeat(w, 3), "stream of " + to_string(w));
        }
    }
    o.expect(words == 353, "word count " + std::to_string(words));
    const double t = seconds_since(start);
    o.expect(t < 120.0, "runtime " + std::to_string(t) + " s");
    o.detail << words << " admissible words with k <= 5";
}

void galois_corollary(Outcome& o) {
    std::size_t words = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const Word& w : all_words(k)) {
            if (!is_admissible(w)) continue;
            ++words;
            const GaloisReport g = galois_check(w);
            Word target(w.rbegin() + 1, w.rend());
            target.push_back(w.back());
            o.expect(g.target == target, "target of " + to_string(w));
            o.expect(g.passed(), "corollary fails for " + to_string(w));
        }
    }
    o.detail << words << " words";
}

void named_points(Outcome& o) {
    const QFE half(Rational(1, 2));
    const auto two = construct_periodic(make_word({2}));
    o.expect(two.point == CirclePoint(half * sqrt_of(2), half * sqrt_of(2)), "point of (2)");
    o.expect(two.lambda1 == QFE(3) + QFE(2) * sqrt_of(2), "lambda1 of (2)");
    o.expect(two.d == 2, "D of (2)");

    const auto w31 = construct_periodic(make_word({3, 1}));
    o.expect(w31.point == CirclePoint(half, half * sqrt_of(3)), "point of (3,1)");
    o.expect(w31.lambda1 == QFE(7) + QFE(4) * sqrt_of(3), "lambda1 of (3,1)");
    o.expect(w31.d == 3, "D of (3,1)");

    const CircularRoot root = circular_root(make_word({3, 1}));
    o.expect(root.unit && root.unit->value == QFE(2) + sqrt_of(3), "unit 2+sqrt(3)");
    o.expect(root.classes.size() == 2, "two classes");
    if (!root.unit || root.classes.size() != 2) return;

    const Vec3 a(1, sqrt_of(3), 2);
    const Vec3 b(sqrt_of(3), 1, 2);
    o.expect(same_class(root.classes[0].representative, a, *root.unit), "class [1,sqrt3,2]");
    o.expect(same_class(root.classes[1].representative, b, *root.unit), "class [sqrt3,1,2]");
    bool m1 = false, m3 = false;
    for (const RootEdge& e : root.edges) {
        m1 |= e.from == 0 && e.to == 1 && e.label == Digit::one;
        m3 |= e.from == 1 && e.to == 0 && e.label == Digit::three;
    }
    o.expect(m1 && m3 && root.edges.size() == 2, "edges M1, M3");

    // First generation of the drawn Berggren graph over Q(sqrt 3).
    const QFE r3 = sqrt_of(3);
    o.expect(mat_const(MatName::M3) * a == Vec3(5 - 2 * r3, 6 - r3, 8 - 2 * r3), "M3 [1,sqrt3,2]");
    o.expect(mat_const(MatName::M2) * a == Vec3(5 + 2 * r3, 6 + r3, 8 + 2 * r3), "M2 [1,sqrt3,2]");
    o.expect(mat_const(MatName::M2) * b == Vec3(6 + r3, 5 + 2 * r3, 8 + 2 * r3), "M2 [sqrt3,1,2]");
    o.expect(mat_const(MatName::M1) * b == Vec3(6 - r3, 5 - 2 * r3, 8 - 2 * r3), "M1 [sqrt3,1,2]");
    o.detail << "(2), (3,1) and the circular root of (3,1) match";
}

// w with coordinates in sqrt(D) Q: is w_i > -sqrt(W) (or < sqrt(W))?
bool above_minus_root(const QFE& x, const Rational& big_w) {
    return x.sign() >= 0 || (x * x) < QFE(big_w);
}

void w_sequence_invariants(Outcome& o) {
    const Mat3 h = mat_const(MatName::H);
    std::size_t terms = 0;
    for (int sample = 0; sample < 50; ++sample) {
        const Word word = random_admissible(4);
        const Word prefix = random_word(static_cast<std::size_t>(uniform(0, 4)));
        CirclePoint p = construct_periodic(word).point;
        if (!prefix.empty()) p = act(mat_word(prefix), p);
        const std::string label = to_string(prefix) + "|" + to_string(word);

        const std::size_t n = prefix.size() + 3 * word.size() + 2;
        const WSequence ws = w_sequence(p, n);
        const ExpansionResult period = detect_period(p);
        o.expect(period.preperiod.size() <= prefix.size(), "preperiod of " + label);

        int sign = 1;
        for (std::size_t i = 0; i <= n; ++i, ++terms) {
            const Vec3& w = ws.terms[i];
            o.expect(q_form(w) == QFE(ws.big_w), "Q(w) at " + label);
            for (std::size_t c = 0; c < 3; ++c) {
                const QFE& x = w[c];
                const bool lattice = x.is_zero() ||
                                     (x.d() == ws.d && x.a() == 0 && Rational(2 * x.b()).get_den() == 1);
                o.expect(lattice, "lattice at " + label);
            }
            if (w[2].sign() > 0) {
                o.expect(above_minus_root(w[0], ws.big_w) && above_minus_root(w[1], ws.big_w),
                         "closeness at " + label);
            } else if (w[2].sign() < 0) {
                o.expect(above_minus_root(-w[0], ws.big_w) && above_minus_root(-w[1], ws.big_w),
                         "closeness at " + label);
            }
            o.expect(ws.signs[i] == sign, "sign at " + label);
            if (i < n) {
                const Digit d = ws.digits[i];
                const QFE s = d == Digit::two ? -1 : 1;
                o.expect(ws.terms[i + 1] == s * (u_matrix(d) * (h * w)),
                         "recurrence at " + label);
                if (d == Digit::two) sign = -sign;
            }
        }

        // Once the orbit cycles, w is periodic and its height stops growing.
        const std::size_t pre = period.preperiod.size(), per = period.period.size();
        for (std::size_t i = pre; i + per <= n; ++i) {
            o.expect(ws.terms[i + per] == ws.terms[i], "w periodic at " + label);
        }
        QFE early_max = 0;
        for (std::size_t i = 0; i <= pre + per; ++i) early_max = std::max(early_max, ws.terms[i][2].abs());
        o.expect(early_max == ws.max_abs_x3, "max |x3| stabilizes at " + label);
    }
    o.detail << "50 points, " << terms << " terms";
}

void descent_criterion(Outcome& o) {
    const Mat3 h = mat_const(MatName::H);
    std::size_t shrink = 0, boundary = 0;
    for (int sample = 0; sample < 10000; ++sample) {
        long c = 0;
        while (c == 0) c = uniform(-1000, 1000);
        const long a = uniform(-1000, 1000);
        long b = uniform(-1000, 1000);
        if (sample % 5 == 0) {
            b = (sample % 10 == 0 ? c : 2 * c) - a;
            ++boundary;
        }
        const Vec3 image = h * Vec3(a, b, c);
        const bool shrinks = image[2].abs() < QFE(std::abs(c));
        const Rational s = make_rational(a + b, c);
        const bool between = 1 < s && s < 2;
        if (shrinks) ++shrink;
        std::ostringstream v;
        v << '(' << a << ',' << b << ',' << c << ')';
        o.expect(shrinks == between, "criterion fails at " + v.str());
    }
    o.detail << "10000 vectors, " << shrink << " shrinking, " << boundary << " on the lines";
}

void rational_expansions(Outcome& o) {
    const RationalExpansion ones2{make_word({2}), Tail::ones}, ones3{make_word({3}), Tail::ones};
    o.expect(expand_rational_both(parse_point("3/5,4/5")) == std::pair(ones2, ones3), "(3/5,4/5)");
    const RationalExpansion a{make_word({3, 2}), Tail::ones}, b{make_word({3, 3}), Tail::ones};
    o.expect(expand_rational_both(parse_point("5/13,12/13")) == std::pair(a, b), "(5/13,12/13)");

    std::size_t count = 0;
    for (const Triple& t : enumerate_oracle(Integer(1000))) {
        ++count;
        Word expected;
        Triple bottom = t;
        for (const DescentStep& s : descend(t)) {
            expected.push_back(s.j);
            bottom = s.parent;
        }
        const ParentStep last = parent(bottom);
        expected.push_back(last.j);
        const Tail tail = std::get<Terminal>(last.parent) == Terminal::x_axis ? Tail::ones : Tail::threes;
        std::ostringstream name;
        name << t;
        o.expect(expand_rational(t.point()) == RationalExpansion{expected, tail}, "prefix of " + name.str());
    }
    o.detail << "both endings match; " << count << " triples agree with their descent";
}

QFE random_qfe(long d) {
    const Rational a = make_rational(uniform(-9, 9), uniform(1, 4));
    const Rational b = make_rational(uniform(-9, 9), uniform(1, 4));
    return QFE(a, b, Integer(d));
}

Vec3 random_vec(long d) { return Vec3(random_qfe(d), random_qfe(d), random_qfe(d)); }

// A random point of the rational unit circle, lifted and scaled.
Vec3 random_null(long d) {
    const Rational t = make_rational(uniform(-20, 20), uniform(1, 20));
    const Rational den = 1 + t * t;
    const Rational x = (1 - t * t) / den, y = 2 * t / den;
    QFE s = 0;
    while (s.is_zero()) s = random_qfe(d);
    return s * Vec3(x, y, 1);
}

void cross_product_algebra(Outcome& o) {
    static const long fields[] = {2, 3, 5, 6, 7, 13};
    for (int sample = 0; sample < 10000; ++sample) {
        const long d = fields[uniform(0, 5)];
        Mat3 a = Mat3::identity();
        for (long i = uniform(1, 3); i > 0; --i) a = a * mat_const(static_cast<MatName>(uniform(0, 6)));
        const Vec3 v1 = random_vec(d), v2 = random_vec(d);
        o.expect(q_cross(a * v1, a * v2) == a.det() * (a * q_cross(v1, v2)), "equivariance");

        const Vec3 n1 = random_null(d), n2 = random_null(d);
        const QFE pairing = bilinear(n1, n2);
        o.expect(q_form(q_cross(n1, n2)) == pairing * pairing, "null norm identity");
    }
    o.detail << "10000 equivariance and 10000 null-vector samples";
}

struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
};

const std::array<Criterion, kCriterionCount>& criteria() {
    static const std::array<Criterion, kCriterionCount> table = {{
        {"depth-2 root trees", root_trees_depth_two},
        {"bfs equals oracle", oracle_equivalence},
        {"funnel theorem", funnel_theorem},
        {"lagrange round trip", lagrange_round_trip},
        {"galois corollary", galois_corollary},
        {"named periodic points", named_points},
        {"w-sequence invariants", w_sequence_invariants},
        {"descent criterion", descent_criterion},
        {"rational expansions", rational_expansions},
        {"cross product algebra", cross_product_algebra},
    }};
    return table;
}

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount) {
        throw InvalidArgument("no acceptance criterion " + std::to_string(id));
    }
    const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult result{id, c.name, false, "", 0.0};
    const auto start = Clock::now();
    Outcome o;
    try {
        c.run(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    result.seconds = seconds_since(start);
    result.passed = o.passed;
    result.detail = o.detail.str();
    return result;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results, bool with_timing) {
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << r.name;
        if (with_timing) os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
        os << ": " << r.detail << '\n';
    }
}

}  // namespace romik
