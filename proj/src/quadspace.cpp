#include "romik/quadspace.hpp"

#include "romik/error.hpp"

#include <ostream>
#include <sstream>

namespace romik {

Integer Vec3::field() const {
    Integer d = common_field(x[0], x[1]);
    const Integer& d3 = x[2].d();
    if (d == 0) return d3;
    if (d3 != 0 && d3 != d) {
        throw FieldMismatch("vector coordinates live in different quadratic fields");
    }
    return d;
}

Vec3 Vec3::conj() const { return {x[0].conj(), x[1].conj(), x[2].conj()}; }

bool Vec3::is_zero() const { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
Vec3 operator-(const Vec3& u) { return {-u[0], -u[1], -u[2]}; }
Vec3 operator*(const QFE& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

Mat3 Mat3::identity() { return from_integers({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

Mat3 Mat3::from_integers(const std::array<int, 9>& rows) {
    Mat3 m;
    for (std::size_t i = 0; i < 9; ++i) m.e[i] = QFE(static_cast<long>(rows[i]));
    return m;
}

QFE Mat3::det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

QFE Mat3::trace() const { return e[0] + e[4] + e[8]; }

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 p;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return p;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2],
            a(1, 0) * v[0] + a(1, 1) * v[1] + a(1, 2) * v[2],
            a(2, 0) * v[0] + a(2, 1) * v[1] + a(2, 2) * v[2]};
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
    for (std::size_t r = 0; r < 3; ++r) {
        os << (r == 0 ? "[" : " ") << '[' << m(r, 0) << ", " << m(r, 1) << ", " << m(r, 2) << ']'
           << (r == 2 ? "]" : "\n");
    }
    return os;
}

CirclePoint::CirclePoint(QFE x, QFE y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ * x_ + y_ * y_ != QFE(1)) {
        throw InvalidArgument("point (" + x_.to_string() + ", " + y_.to_string() +
                              ") is not on the unit circle");
    }
}

Integer CirclePoint::field() const { return common_field(x_, y_); }

std::ostream& operator<<(std::ostream& os, const CirclePoint& p) {
    return os << '(' << p.x() << ", " << p.y() << ')';
}

std::size_t hash_value(const CirclePoint& p) {
    const std::size_t h = hash_value(p.x());
    return h ^ (hash_value(p.y()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

QFE q_form(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] - v[2] * v[2]; }

QFE bilinear(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]; }

QFE triple_product(const Vec3& u, const Vec3& v, const Vec3& w) {
    return (u[1] * v[2] - u[2] * v[1]) * w[0] + (u[2] * v[0] - u[0] * v[2]) * w[1] +
           (u[0] * v[1] - u[1] * v[0]) * w[2];
}

Vec3 reflect(const Vec3& z, const Vec3& x) {
    const QFE qz = q_form(z);
    if (qz.is_zero()) {
        throw InvalidArgument("reflection needs Q(z) != 0");
    }
    return x - (QFE(2) * bilinear(x, z) / qz) * z;
}

Mat3 reflection_matrix(const Vec3& z) {
    Mat3 m;
    for (std::size_t c = 0; c < 3; ++c) {
        Vec3 basis(0, 0, 0);
        basis[c] = QFE(1);
        const Vec3 col = reflect(z, basis);
        for (std::size_t r = 0; r < 3; ++r) m(r, c) = col[r];
    }
    return m;
}

namespace {

constexpr std::array<int, 9> kM1{-1, 2, 2, -2, 1, 2, -2, 2, 3};
constexpr std::array<int, 9> kM2{1, 2, 2, 2, 1, 2, 2, 2, 3};
constexpr std::array<int, 9> kM3{1, -2, 2, 2, -1, 2, 2, -2, 3};
constexpr std::array<int, 9> kU1{1, 0, 0, 0, -1, 0, 0, 0, 1};
constexpr std::array<int, 9> kU2{-1, 0, 0, 0, -1, 0, 0, 0, 1};
constexpr std::array<int, 9> kU3{-1, 0, 0, 0, 1, 0, 0, 0, 1};
constexpr std::array<int, 9> kH{-1, -2, 2, -2, -1, 2, -2, -2, 3};

}  // namespace

std::optional<MatName> parse_mat_name(std::string_view name) {
    if (name == "M1") return MatName::M1;
    if (name == "M2") return MatName::M2;
    if (name == "M3") return MatName::M3;
    if (name == "U1") return MatName::U1;
    if (name == "U2") return MatName::U2;
    if (name == "U3") return MatName::U3;
    if (name == "H") return MatName::H;
    return std::nullopt;
}

std::string_view to_string(MatName name) {
    switch (name) {
        case MatName::M1: return "M1";
        case MatName::M2: return "M2";
        case MatName::M3: return "M3";
        case MatName::U1: return "U1";
        case MatName::U2: return "U2";
        case MatName::U3: return "U3";
        case MatName::H: return "H";
    }
    return "?";
}

const std::array<int, 9>& integer_matrix(MatName name) {
    switch (name) {
        case MatName::M1: return kM1;
        case MatName::M2: return kM2;
        case MatName::M3: return kM3;
        case MatName::U1: return kU1;
        case MatName::U2: return kU2;
        case MatName::U3: return kU3;
        case MatName::H: return kH;
    }
    throw InvalidArgument("unknown matrix name");
}

Mat3 mat_const(MatName name) { return Mat3::from_integers(integer_matrix(name)); }

MatName mat_for(Digit d) {
    switch (d) {
        case Digit::one: return MatName::M1;
        case Digit::two: return MatName::M2;
        case Digit::three: return MatName::M3;
    }
    throw InvalidArgument("bad digit");
}

Mat3 mat_word(const Word& word) {
    if (word.empty()) {
        throw InvalidArgument("mat_word needs a nonempty word");
    }
    Mat3 m = mat_const(mat_for(word.front()));
    for (std::size_t i = 1; i < word.size(); ++i) m = m * mat_const(mat_for(word[i]));
    return m;
}

Vec3 q_cross(const Vec3& v1, const Vec3& v2) {
    const QFE& a1 = v1[0];
    const QFE& b1 = v1[1];
    const QFE& c1 = v1[2];
    const QFE& a2 = v2[0];
    const QFE& b2 = v2[1];
    const QFE& c2 = v2[2];
    return {b1 * c2 - b2 * c1, a2 * c1 - a1 * c2, a2 * b1 - a1 * b2};
}

CirclePoint project(const Vec3& v) {
    if (v[2].is_zero()) {
        throw InvalidArgument("cannot project a vector with x3 = 0");
    }
    if (!q_form(v).is_zero()) {
        throw InvalidArgument("cannot project non-null vector " + [&] {
            std::ostringstream os;
            os << v;
            return os.str();
        }());
    }
    return CirclePoint(v[0] / v[2], v[1] / v[2]);
}

Vec3 lift(const CirclePoint& p) { return {p.x(), p.y(), QFE(1)}; }

CirclePoint act(const Mat3& m, const CirclePoint& p) {
    const Vec3 image = m * lift(p);
    if (image[2].is_zero()) {
        throw InvalidArgument("matrix action sends the point to infinity");
    }
    return project(image);
}

}  // namespace romik
