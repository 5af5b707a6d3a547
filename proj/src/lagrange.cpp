#include "romik/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace romik {

namespace {

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Integer as_integer(const QFE& x, const char* what) {
    if (!x.is_rational() || x.a().get_den() != 1) {
        throw InvariantViolation(std::string(what) + " is not a rational integer: " + x.to_string());
    }
    return x.a().get_num();
}

struct Eigen2x2 {
    QFE x;
    QFE y;
};

// Solves (M - lambda I) (x, y, 1)^T = 0 from the first pair of rows whose
// 2x2 block is invertible.
std::optional<Eigen2x2> solve_eigenvector(const Mat3& m, const QFE& lambda) {
    Mat3 a = m;
    for (std::size_t i = 0; i < 3; ++i) a(i, i) -= lambda;
    constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [r0, r1] : pairs) {
        const QFE det = a(r0, 0) * a(r1, 1) - a(r0, 1) * a(r1, 0);
        if (det.is_zero()) continue;
        const QFE e0 = -a(r0, 2);
        const QFE e1 = -a(r1, 2);
        return Eigen2x2{(e0 * a(r1, 1) - a(r0, 1) * e1) / det, (a(r0, 0) * e1 - a(r1, 0) * e0) / det};
    }
    return std::nullopt;
}

void require_irrational_quarter(const CirclePoint& p, const char* op) {
    if (p.is_rational()) {
        throw InvalidArgument(std::string(op) + " needs a quadratic irrational point; use expand_rational for " +
                              str(p));
    }
    if (!p.in_quarter()) {
        throw InvalidArgument(std::string(op) + ": point " + str(p) + " is outside the quarter circle");
    }
}

// Coefficient beta of a coordinate beta*sqrt(d), if it has that form.
std::optional<Rational> pure_surd_coefficient(const QFE& x, const Integer& d) {
    if (x.is_zero()) return Rational(0);
    if (sgn(x.a()) != 0 || x.d() != d) return std::nullopt;
    return x.b();
}

using IntMat = std::array<Integer, 9>;

IntMat int_mul(const IntMat& a, const IntMat& b) {
    IntMat p;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            p[3 * r + c] = a[3 * r] * b[c] + a[3 * r + 1] * b[3 + c] + a[3 * r + 2] * b[6 + c];
    return p;
}

IntMat int_const(MatName name) {
    IntMat m;
    const auto& src = integer_matrix(name);
    for (std::size_t i = 0; i < 9; ++i) m[i] = src[i];
    return m;
}

Integer int_det(const IntMat& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}


bool in_ring_of_integers(const QFE& x, const Integer& d) {
    const Rational a2 = 2 * x.a();
    const Rational b2 = 2 * x.b();
    if (a2.get_den() != 1 || b2.get_den() != 1) return false;
    if (x.a().get_den() == 1 && x.b().get_den() == 1) return true;
    return d % 4 == 1 && x.a().get_den() == 2 && x.b().get_den() == 2;
}

// Coordinates of an element of O_K in the Z-basis (1, omega), omega = sqrt d
// or (1 + sqrt d)/2.
std::array<Integer, 2> ring_coordinates(const QFE& x, const Integer& d) {
    if (d % 4 == 1) {
        const Rational u = x.a() - x.b();
        const Rational v = 2 * x.b();
        return {u.get_num(), v.get_num()};
    }
    return {x.a().get_num(), x.b().get_num()};
}

// Norm of the O_K-ideal generated by the coordinates of v: the index of the
// lattice spanned by each c and c * omega, i.e. the gcd of its 2x2 minors.
Integer content_norm(const Vec3& v, const Integer& d) {
    const QFE omega = d % 4 == 1 ? (QFE(1) + QFE::surd(d)) / 2 : QFE::surd(d);
    std::vector<std::array<Integer, 2>> gens;
    for (std::size_t i = 0; i < 3; ++i) {
        gens.push_back(ring_coordinates(v[i], d));
        gens.push_back(ring_coordinates(v[i] * omega, d));
    }
    Integer g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Integer minor = gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
        }
    }
    return g;
}

bool divides_all(const QFE& g, const Vec3& v, const Integer& d) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!in_ring_of_integers(v[i] / g, d)) return false;
    }
    return true;
}

}  // namespace

bool is_admissible(const Word& word) {
    if (word.empty()) return false;
    const bool all_ones = std::all_of(word.begin(), word.end(), [](Digit d) { return d == Digit::one; });
    const bool all_threes = std::all_of(word.begin(), word.end(), [](Digit d) { return d == Digit::three; });
    return !all_ones && !all_threes;
}

PeriodicPointData construct_periodic(const Word& word) {
    if (word.empty()) {
        throw InvalidArgument("construct_periodic needs a nonempty word");
    }
    if (!is_admissible(word)) {
        throw InvalidArgument("word " + to_string(word) + " is excluded: its fixed point is rational");
    }
    PeriodicPointData out{word, mat_word(word), CirclePoint(QFE(1), QFE(0)), {}, {}, 1, {}, {}, {}, {}, {}};
    const Mat3& m = out.matrix;

    // Characteristic polynomial l^3 - t l^2 + s l - e. Since l1 l2 = 1 and
    // l3 = e, it factors as (l - e)(l^2 - (t - e) l + 1).
    const Integer t = as_integer(m.trace(), "trace");
    const Integer e = as_integer(m.det(), "det");
    const Integer s = as_integer(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                                     m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1),
                                 "minor sum");
    if (e != 1 && e != -1) {
        throw InvariantViolation("det of " + to_string(word) + " is not +-1");
    }
    const Integer p = t - e;
    if (s != 1 + e * p) {
        throw InvariantViolation("characteristic polynomial of " + to_string(word) +
                                 " does not have the factor (l - det)");
    }
    out.lambda3 = static_cast<int>(e.get_si());
    out.discriminant = p * p - 4;
    if (out.discriminant <= 0 || mpz_perfect_square_p(out.discriminant.get_mpz_t())) {
        throw DegenerateWord("word " + to_string(word) + " has quadratic discriminant " +
                             out.discriminant.get_str() + ", not a non-square positive integer");
    }
    const auto [d, f] = squarefree_part(out.discriminant);
    out.d = d;
    out.lambda1 = QFE(Rational(p, 2), Rational(f, 2), d);
    out.lambda2 = out.lambda1.conj();

    const auto sol = solve_eigenvector(m, out.lambda1);
    if (!sol) {
        throw InvariantViolation("singular eigen-solve for word " + to_string(word));
    }
    out.v1 = Vec3(sol->x, sol->y, QFE(1));
    out.v2 = out.v1.conj();
    out.v3 = q_cross(out.v1, out.v2);
    out.point = CirclePoint(sol->x, sol->y);

    if (out.lambda1 <= QFE(1) || out.lambda1 * out.lambda2 != QFE(1)) {
        throw InvariantViolation("eigenvalue relations fail for " + to_string(word));
    }
    if (m * out.v1 != out.lambda1 * out.v1 || m * out.v2 != out.lambda2 * out.v2 ||
        m * out.v3 != QFE(out.lambda3) * out.v3) {
        throw InvariantViolation("eigenvector check fails for " + to_string(word));
    }
    if (!q_form(out.v1).is_zero()) {
        throw InvariantViolation("lambda1 eigenvector is not null for " + to_string(word));
    }
    // Cylinder set membership and pure periodicity.
    CirclePoint cur = out.point;
    for (Digit dj : word) {
        const auto valid = digit_all(cur);
        if (std::find(valid.begin(), valid.end(), dj) == valid.end()) {
            throw InvariantViolation("fixed point of " + to_string(word) + " is outside its cylinder set");
        }
        cur = t_map(cur);
    }
    if (cur != out.point) {
        throw InvariantViolation("fixed point of " + to_string(word) + " is not periodic under T");
    }
    return out;
}

ExpansionResult detect_period(const CirclePoint& p, std::size_t max_iter) {
    require_irrational_quarter(p, "detect_period");
    std::unordered_map<CirclePoint, std::size_t> seen;
    Word digits;
    CirclePoint cur = p;
    for (std::size_t n = 0; n <= max_iter; ++n) {
        if (auto it = seen.find(cur); it != seen.end()) {
            const auto first = static_cast<std::ptrdiff_t>(it->second);
            ExpansionResult r{Word(digits.begin(), digits.begin() + first),
                              Word(digits.begin() + first, digits.end())};
            while (!r.preperiod.empty() && r.preperiod.back() == r.period.back()) {
                std::rotate(r.period.rbegin(), r.period.rbegin() + 1, r.period.rend());
                r.preperiod.pop_back();
            }
            r.period = primitive_root(r.period);
            return r;
        }
        seen.emplace(cur, n);
        digits.push_back(digit(cur));
        cur = t_map(cur);
    }
    throw LimitExceeded("no period found within " + std::to_string(max_iter) + " iterations");
}

Vec3 integralize(const CirclePoint& p) {
    const Integer d = p.field();
    const std::array<QFE, 3> coords{p.x(), p.y(), QFE(1)};
    Integer lcm = 1;
    for (const QFE& c : coords) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.b().get_den_mpz_t());
    }
    std::array<Integer, 3> u;
    std::array<Integer, 3> v;
    Integer g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] = Rational(coords[i].a() * lcm).get_num();
        v[i] = Rational(coords[i].b() * lcm).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), u[i].get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] /= g;
        v[i] /= g;
    }
    Rational scale = 1;
    // In O_K for D = 1 mod 4, (u + v sqrt D)/2 is integral when u = v mod 2.
    if (d != 0 && d % 4 == 1) {
        bool halvable = true;
        for (std::size_t i = 0; i < 3; ++i) {
            halvable = halvable && mpz_odd_p(u[i].get_mpz_t()) == mpz_odd_p(v[i].get_mpz_t());
        }
        if (halvable) scale = Rational(1, 2);
    }
    Vec3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = d == 0 ? QFE(Rational(u[i]) * scale) : QFE(Rational(u[i]) * scale, Rational(v[i]) * scale, d);
    }
    return out;
}

std::optional<std::array<Integer, 3>> lattice_coordinates(const Vec3& w, const Integer& d) {
    std::array<Integer, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto beta = pure_surd_coefficient(w[i], d);
        if (!beta) return std::nullopt;
        const Rational twice = 2 * *beta;
        if (twice.get_den() != 1) return std::nullopt;
        out[i] = twice.get_num();
    }
    return out;
}

bool hyperboloid_closeness(const Vec3& w, const Rational& big_w, const Integer& d) {
    if (sgn(big_w) <= 0 || d <= 0) return false;
    const Rational mu = big_w / d;  // W = D mu and sqrt W = sqrt D sqrt mu
    std::array<Rational, 3> beta;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto b = pure_surd_coefficient(w[i], d);
        if (!b) return false;
        beta[i] = *b;
    }
    const int s3 = sgn(beta[2]);
    auto above_minus_root = [&](const Rational& b) { return sgn(b) >= 0 || b * b < mu; };
    auto below_root = [&](const Rational& b) { return sgn(b) <= 0 || b * b < mu; };
    if (s3 > 0) return above_minus_root(beta[0]) && above_minus_root(beta[1]);
    if (s3 < 0) return below_root(beta[0]) && below_root(beta[1]);
    return true;
}

WSequence w_sequence(const CirclePoint& p, std::size_t n) {
    require_irrational_quarter(p, "w_sequence");
    WSequence out;
    out.d = p.field();
    Vec3 v = integralize(p);
    out.w0 = q_cross(v, v.conj());
    if (out.w0.is_zero()) {
        throw InvariantViolation("v0 and its conjugate are dependent");
    }
    const QFE big_w = q_form(out.w0);
    if (!big_w.is_rational() || big_w.sign() <= 0) {
        throw InvariantViolation("Q(w0) is not a positive rational: " + big_w.to_string());
    }
    out.big_w = big_w.a();

    const Mat3 h = mat_const(MatName::H);
    CirclePoint cur = p;
    Vec3 w = out.w0;
    int sign = 1;
    for (std::size_t step = 0;; ++step) {
        const std::string where = " at n = " + std::to_string(step);
        if (w != q_cross(v, v.conj())) throw InvariantViolation("signed recurrence disagrees with v x v^sigma" + where);
        if (project(v) != cur) throw InvariantViolation("v_n does not represent T^n(P)" + where);
        if (q_form(w) != big_w) throw InvariantViolation("Q(w_n) != W" + where);
        auto lat = lattice_coordinates(w, out.d);
        if (!lat) throw InvariantViolation("w_n is not in (sqrt D Z / 2)^3" + where);
        if (!hyperboloid_closeness(w, out.big_w, out.d)) {
            throw InvariantViolation("closeness inequality fails" + where);
        }
        out.terms.push_back(w);
        out.lattice.push_back(std::move(*lat));
        out.signs.push_back(sign);
        out.abs_x3.push_back(w[2].abs());
        if (step == 0 || out.abs_x3.back() > out.max_abs_x3) out.max_abs_x3 = out.abs_x3.back();
        if (step == n) break;

        const Digit dj = digit(cur);
        out.digits.push_back(dj);
        const Mat3 inverse = mat_const(dj == Digit::one ? MatName::U1 : dj == Digit::two ? MatName::U2 : MatName::U3) * h;
        const int flip = dj == Digit::two ? -1 : 1;
        sign *= flip;
        v = inverse * v;
        w = QFE(flip) * (inverse * w);
        cur = t_map(cur);
    }
    return out;
}

GaloisReport galois_check(const Word& word) {
    const PeriodicPointData data = construct_periodic(word);
    const CirclePoint conj = data.point.conj();
    GaloisReport r{word, conj, {}, {}, {}, {}, false, false};
    switch (word.back()) {
        case Digit::one: r.expected_signs = {1, -1}; break;
        case Digit::two: r.expected_signs = {-1, -1}; break;
        case Digit::three: r.expected_signs = {-1, 1}; break;
    }
    r.actual_signs = {conj.x().sign(), conj.y().sign()};
    r.signs_ok = r.actual_signs == r.expected_signs;

    r.target.assign(word.rbegin() + 1, word.rend());
    r.target.push_back(word.back());
    const CirclePoint folded(conj.x().abs(), conj.y().abs());
    r.detected = detect_period(folded);
    r.period_ok = r.detected.preperiod.empty() && r.detected.period == primitive_root(r.target);
    return r;
}

NkkResult count_nkk(unsigned k, const Integer& d) {
    if (k == 0) {
        throw InvalidArgument("count_nkk needs k >= 1");
    }
    if (d <= 1 || !is_squarefree(d)) {
        throw InvalidArgument("count_nkk needs a squarefree D > 1");
    }
    const std::array<IntMat, 3> gens{int_const(MatName::M1), int_const(MatName::M2), int_const(MatName::M3)};
    NkkResult out;
    std::vector<int> idx(k, 0);
    while (true) {
        Word w(k);
        for (unsigned i = 0; i < k; ++i) w[i] = make_digit(idx[i] + 1);
        if (is_admissible(w)) {
            IntMat m = gens[static_cast<std::size_t>(idx[0])];
            for (unsigned i = 1; i < k; ++i) m = int_mul(m, gens[static_cast<std::size_t>(idx[i])]);
            const Integer trace = m[0] + m[4] + m[8];
            const Integer p = trace - int_det(m);
            const Integer disc = p * p - 4;
            if (disc > 0 && squarefree_part(disc).d == d) {
                ++out.count;
                out.words.push_back(std::move(w));
            }
        }
        unsigned pos = k;
        while (pos > 0 && idx[pos - 1] == 2) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return out;
}

Vec3 normalize_class(const Vec3& v, const FundamentalUnit& eps) {
    if (v[2].sign() <= 0) {
        throw InvalidArgument("unit class normalization needs x3 > 0");
    }
    const QFE inverse = QFE(1) / eps.value;
    Vec3 out = v;
    while (out[2] >= eps.value) out = inverse * out;
    while (out[2] < QFE(1)) out = eps.value * out;
    return out;
}

bool same_class(const Vec3& u, const Vec3& v, const FundamentalUnit& eps) {
    return normalize_class(u, eps) == normalize_class(v, eps);
}

Vec3 remove_content(const Vec3& v, const FundamentalUnit& eps) {
    const Integer& d = eps.d;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!in_ring_of_integers(v[i], d)) {
            throw InvalidArgument("remove_content needs coordinates in O_K, got " + v[i].to_string());
        }
    }
    const Integer norm = content_norm(v, d);
    if (norm == 1) return v;

    // A generator g = (a + b sqrt d)/2 has a^2 - d b^2 = +-4 norm. Scaled by
    // units into [sqrt(norm/eps), sqrt(norm eps)], both g and its conjugate
    // are at most sqrt(norm eps), so b sqrt d <= 2 sqrt(norm eps).
    const double bound = 2.0 * std::sqrt(norm.get_d() * (eps.value.a().get_d() + eps.value.b().get_d() *
                                                         std::sqrt(d.get_d())) / d.get_d());
    if (!(bound < 1e7)) {
        throw LimitExceeded("generator search for an ideal of norm " + norm.get_str() + " is too large");
    }
    const long b_max = static_cast<long>(bound) + 2;
    for (long b = 0; b <= b_max; ++b) {
        for (int sign : {1, -1}) {
            const Integer t = d * b * b + sign * 4 * norm;
            if (sgn(t) < 0 || !mpz_perfect_square_p(t.get_mpz_t())) continue;
            const Integer a = sqrt(t);
            for (const Integer& signed_a : {a, Integer(-a)}) {
                const QFE g = QFE(Rational(signed_a, 2), Rational(b, 2), d);
                if (g.is_zero() || !in_ring_of_integers(g, d)) continue;
                if (divides_all(g, v, d)) {
                    const QFE inv = QFE(1) / g;
                    return inv * v;
                }
            }
        }
    }
    return v;  // non-principal content
}

CircularRoot circular_root(const Word& word, bool with_unit_normalization) {
    if (!is_admissible(word)) {
        throw InvalidArgument("word " + to_string(word) + " is not admissible");
    }
    CircularRoot out;
    const std::size_t k = word.size();
    std::vector<CirclePoint> points;
    for (std::size_t i = 0; i < k; ++i) {
        const Word rot = rotate_left(word, i);
        const PeriodicPointData data = construct_periodic(rot);
        if (i == 0) {
            out.d = data.d;
            if (with_unit_normalization) out.unit = fundamental_unit(data.d);
        }
        points.push_back(data.point);
        out.classes.push_back({integralize(data.point), data.d, rot});
    }
    if (out.unit) {
        // A coprime triple for the first class; M_j^{-1} = U_j H carries it
        // around the cycle, which closes up to the unit lambda1.
        Vec3 rep = remove_content(out.classes[0].representative, *out.unit);
        if (rep[2].sign() < 0) rep = -rep;
        const Mat3 h = mat_const(MatName::H);
        static const MatName u[] = {MatName::U1, MatName::U2, MatName::U3};
        for (std::size_t i = 0; i < k; ++i) {
            if (project(rep) != points[i]) {
                throw InvariantViolation("circular root class " + std::to_string(i) + " left its point");
            }
            out.classes[i].representative = normalize_class(rep, *out.unit);
            rep = mat_const(u[to_int(word[i]) - 1]) * (h * rep);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t from = (i + 1) % k;
        const Vec3 image = mat_const(mat_for(word[i])) * out.classes[from].representative;
        const bool linked = out.unit ? same_class(image, out.classes[i].representative, *out.unit)
                                     : project(image) == project(out.classes[i].representative);
        if (!linked) {
            throw InvariantViolation("circular root edge " + std::to_string(from) + " -> " + std::to_string(i) +
                                     " does not map classes");
        }
        out.edges.push_back({from, i, word[i]});
    }
    return out;
}

}  // namespace romik
