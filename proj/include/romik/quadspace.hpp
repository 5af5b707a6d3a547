#pragma once

// The quadratic space (R^3, Q) with Q(x) = x1^2 + x2^2 - x3^2, realized
// exactly over QFE.

#include "romik/digit.hpp"
#include "romik/field.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace romik {

struct Vec3 {
    std::array<QFE, 3> x{};

    Vec3() = default;
    Vec3(QFE x1, QFE x2, QFE x3) : x{std::move(x1), std::move(x2), std::move(x3)} {}

    const QFE& operator[](std::size_t i) const { return x[i]; }
    QFE& operator[](std::size_t i) { return x[i]; }

    /// Common field tag of the three coordinates (0 when all rational).
    Integer field() const;
    Vec3 conj() const;
    bool is_zero() const;

    friend bool operator==(const Vec3&, const Vec3&) = default;
    friend Vec3 operator+(const Vec3& u, const Vec3& v);
    friend Vec3 operator-(const Vec3& u, const Vec3& v);
    friend Vec3 operator-(const Vec3& u);
    friend Vec3 operator*(const QFE& s, const Vec3& v);
};

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Dense 3x3 matrix over QFE, row-major.
struct Mat3 {
    std::array<QFE, 9> e{};

    static Mat3 identity();
    static Mat3 from_integers(const std::array<int, 9>& rows);

    const QFE& operator()(std::size_t r, std::size_t c) const { return e[3 * r + c]; }
    QFE& operator()(std::size_t r, std::size_t c) { return e[3 * r + c]; }

    QFE det() const;
    QFE trace() const;
    Mat3 transpose() const;

    friend bool operator==(const Mat3&, const Mat3&) = default;
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Vec3 operator*(const Mat3& a, const Vec3& v);
};

std::ostream& operator<<(std::ostream& os, const Mat3& m);

/// A point (x, y) with x^2 + y^2 = 1 exactly.
class CirclePoint {
public:
    /// Throws InvalidArgument unless x^2 + y^2 == 1.
    CirclePoint(QFE x, QFE y);

    const QFE& x() const noexcept { return x_; }
    const QFE& y() const noexcept { return y_; }
    Integer field() const;
    bool is_rational() const { return x_.is_rational() && y_.is_rational(); }
    /// Galois conjugate (x^sigma, y^sigma); stays on the circle.
    CirclePoint conj() const { return CirclePoint(x_.conj(), y_.conj()); }
    /// x >= 0 and y >= 0.
    bool in_quarter() const { return x_.sign() >= 0 && y_.sign() >= 0; }

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

private:
    QFE x_;
    QFE y_;
};

std::ostream& operator<<(std::ostream& os, const CirclePoint& p);
std::size_t hash_value(const CirclePoint& p);

QFE q_form(const Vec3& v);
QFE bilinear(const Vec3& u, const Vec3& v);
/// Ordinary triple product (u x v) . w.
QFE triple_product(const Vec3& u, const Vec3& v, const Vec3& w);

/// s_z(x) = x - 2 <x,z>/Q(z) z. Throws InvalidArgument when Q(z) == 0.
Vec3 reflect(const Vec3& z, const Vec3& x);
Mat3 reflection_matrix(const Vec3& z);

enum class MatName { M1, M2, M3, U1, U2, U3, H };

std::optional<MatName> parse_mat_name(std::string_view name);
std::string_view to_string(MatName name);
const std::array<int, 9>& integer_matrix(MatName name);
Mat3 mat_const(MatName name);

/// M_d for a digit d.
MatName mat_for(Digit d);
/// M_{d1} M_{d2} ... M_{dk}. Throws InvalidArgument for an empty word.
Mat3 mat_word(const Word& word);

/// Q-cross product (b1c2 - b2c1, a2c1 - a1c2, a2b1 - a1b2).
Vec3 q_cross(const Vec3& v1, const Vec3& v2);

/// (x1/x3, x2/x3) for a Q-null v with x3 != 0.
CirclePoint project(const Vec3& v);
Vec3 lift(const CirclePoint& p);

/// The point represented by M (x, y, 1).
CirclePoint act(const Mat3& m, const CirclePoint& p);

}  // namespace romik

template <>
struct std::hash<romik::CirclePoint> {
    std::size_t operator()(const romik::CirclePoint& p) const noexcept {
        return romik::hash_value(p);
    }
};
