#pragma once

// Exact arithmetic over Q and real quadratic fields Q(sqrt D).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace romik {

using Integer = mpz_class;
// mpq_class keeps itself reduced with a positive denominator once
// canonicalized; every Rational handed out by this library is canonical.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

std::size_t hash_value(const Integer& z);
std::size_t hash_value(const Rational& q);

struct SquarefreeDecomposition {
    Integer d;  // squarefree
    Integer f;  // n = d * f^2
};

// n = d * f^2 with d squarefree. Trial division up to the cube root of n,
// then a perfect-square test on the cofactor.
SquarefreeDecomposition squarefree_part(const Integer& n);
bool is_squarefree(const Integer& n);

/// An element a + b*sqrt(d) of Q(sqrt d).
///
/// d == 0 marks the rational subfield and forces b == 0. Values are kept
/// canonical: b == 0 always stores d == 0, so equality is structural.
/// Arithmetic between two irrational values requires equal d; a rational
/// value combines with anything.
class QFE {
public:
    QFE() = default;
    QFE(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    QFE(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    QFE(const Integer& a) : a_(a) {}  // NOLINT(google-explicit-constructor)

    /// Validating constructor: d must be 0 (then b must be 0) or a
    /// squarefree integer > 1. d == 1 collapses to the rational a + b.
    QFE(Rational a, Rational b, const Integer& d);

    /// sqrt(n) for n >= 0, written as f * sqrt(D).
    static QFE surd(const Integer& n);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Integer& d() const noexcept { return d_; }

    bool is_rational() const noexcept { return d_ == 0; }
    bool is_zero() const noexcept { return sgn(a_) == 0 && d_ == 0; }

    QFE conj() const;
    /// x * conj(x), always rational.
    Rational norm() const;
    int sign() const;
    QFE abs() const { return sign() < 0 ? -*this : *this; }

    QFE operator-() const;
    QFE& operator+=(const QFE& y);
    QFE& operator-=(const QFE& y);
    QFE& operator*=(const QFE& y);
    QFE& operator/=(const QFE& y);

    friend QFE operator+(QFE x, const QFE& y) { return x += y; }
    friend QFE operator-(QFE x, const QFE& y) { return x -= y; }
    friend QFE operator*(QFE x, const QFE& y) { return x *= y; }
    friend QFE operator/(QFE x, const QFE& y) { return x /= y; }

    friend bool operator==(const QFE& x, const QFE& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Real-number order; throws FieldMismatch for incompatible fields.
    friend std::strong_ordering operator<=>(const QFE& x, const QFE& y);

    std::string to_string() const;

private:
    struct Unchecked {};
    QFE(Rational a, Rational b, Integer d, Unchecked);
    void canonicalize();

    Rational a_{0};
    Rational b_{0};
    Integer d_{0};
};

/// Field tag shared by x and y: 0 if both rational, the common d otherwise.
/// Throws FieldMismatch when both are irrational over different fields.
Integer common_field(const QFE& x, const QFE& y);

int qfe_sign(const QFE& x);
std::strong_ordering qfe_cmp(const QFE& x, const QFE& y);
QFE qfe_conj(const QFE& x);

std::ostream& operator<<(std::ostream& os, const QFE& x);
std::size_t hash_value(const QFE& x);

/// The smallest unit > 1 of the ring of integers of Q(sqrt d).
struct FundamentalUnit {
    QFE value;
    Integer d;
};

inline constexpr std::uint64_t kDefaultPellSearchLimit = 10'000'000;

/// Naive search over y = 1, 2, ... for x^2 - d y^2 = +-4; the first hit
/// gives (x + y sqrt d) / 2. Throws LimitExceeded past `max_y`.
FundamentalUnit fundamental_unit(const Integer& d,
                                 std::uint64_t max_y = kDefaultPellSearchLimit);

}  // namespace romik

template <>
struct std::hash<romik::QFE> {
    std::size_t operator()(const romik::QFE& x) const noexcept { return romik::hash_value(x); }
};
