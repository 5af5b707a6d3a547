#include "romik/field.hpp"

#include "romik/error.hpp"

#include <ostream>
#include <sstream>

namespace romik {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) {
            throw ParseError("empty integer in rational '" + std::string(text) + "'");
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
        }
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::size_t hash_value(const Integer& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t hash_value(const Rational& q) {
    const std::size_t h = hash_value(q.get_num());
    return h ^ (hash_value(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

SquarefreeDecomposition squarefree_part(const Integer& n) {
    if (n <= 0) {
        throw InvalidArgument("squarefree_part requires n >= 1");
    }
    Integer m = n;
    Integer d = 1;
    Integer f = 1;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        for (unsigned k = 0; k < e / 2; ++k) f *= p;
        if (e % 2 == 1) d *= p;
    };
    strip(Integer(2));
    for (Integer p = 3; p * p * p <= m; p += 2) {
        strip(p);
    }
    // Every prime factor of m now exceeds the cube root of m, so m is 1, a
    // prime, a product of two distinct primes, or the square of a prime.
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            f *= r;
        } else {
            d *= m;
        }
    }
    return {d, f};
}

bool is_squarefree(const Integer& n) { return n >= 1 && squarefree_part(n).f == 1; }

QFE::QFE(Rational a, Rational b, const Integer& d) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    if (d < 0) {
        throw InvalidArgument("QFE requires d >= 0");
    }
    if (d == 0) {
        if (sgn(b_) != 0) {
            throw InvalidArgument("QFE with d = 0 must have b = 0");
        }
        return;
    }
    if (d == 1) {
        a_ += b_;
        b_ = 0;
        return;
    }
    if (!is_squarefree(d)) {
        throw InvalidArgument("QFE requires squarefree d, got " + d.get_str());
    }
    d_ = d;
    canonicalize();
}

QFE::QFE(Rational a, Rational b, Integer d, Unchecked)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    canonicalize();
}

void QFE::canonicalize() {
    if (sgn(b_) == 0) {
        d_ = 0;
    }
}

QFE QFE::surd(const Integer& n) {
    if (n < 0) {
        throw InvalidArgument("surd of a negative integer");
    }
    if (n == 0) {
        return QFE();
    }
    auto [d, f] = squarefree_part(n);
    if (d == 1) {
        return QFE(f);
    }
    return QFE(Rational(0), Rational(f), d, Unchecked{});
}

Integer common_field(const QFE& x, const QFE& y) {
    if (x.d() == 0) return y.d();
    if (y.d() == 0 || x.d() == y.d()) return x.d();
    throw FieldMismatch("incompatible quadratic fields: sqrt(" + x.d().get_str() + ") vs sqrt(" +
                        y.d().get_str() + ")");
}

QFE QFE::conj() const { return QFE(a_, -b_, d_, Unchecked{}); }

Rational QFE::norm() const { return a_ * a_ - b_ * b_ * d_; }

int QFE::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and b^2 d wins. Equality is
    // impossible because d is squarefree and > 1.
    const int c = cmp(a_ * a_, b_ * b_ * d_);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

QFE QFE::operator-() const { return QFE(-a_, -b_, d_, Unchecked{}); }

QFE& QFE::operator+=(const QFE& y) {
    d_ = common_field(*this, y);
    a_ += y.a_;
    b_ += y.b_;
    canonicalize();
    return *this;
}

QFE& QFE::operator-=(const QFE& y) {
    d_ = common_field(*this, y);
    a_ -= y.a_;
    b_ -= y.b_;
    canonicalize();
    return *this;
}

QFE& QFE::operator*=(const QFE& y) {
    const Integer d = common_field(*this, y);
    Rational a = a_ * y.a_;
    if (d != 0) {
        a += b_ * y.b_ * d;
    }
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
}

QFE& QFE::operator/=(const QFE& y) {
    if (y.is_zero()) {
        throw DivisionByZero("QFE division by zero");
    }
    common_field(*this, y);
    const Rational n = y.norm();
    *this *= y.conj();
    a_ /= n;
    b_ /= n;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const QFE& x, const QFE& y) { return qfe_cmp(x, y); }

std::string QFE::to_string() const {
    if (d_ == 0) {
        return romik::to_string(a_);
    }
    std::ostringstream os;
    if (sgn(a_) != 0) {
        os << romik::to_string(a_) << (sgn(b_) > 0 ? "+" : "-");
    } else if (sgn(b_) < 0) {
        os << '-';
    }
    const Rational mag = sgn(b_) < 0 ? Rational(-b_) : b_;
    if (mag != 1) {
        os << romik::to_string(mag) << '*';
    }
    os << "sqrt(" << d_.get_str() << ')';
    return os.str();
}

int qfe_sign(const QFE& x) { return x.sign(); }

std::strong_ordering qfe_cmp(const QFE& x, const QFE& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QFE qfe_conj(const QFE& x) { return x.conj(); }

std::ostream& operator<<(std::ostream& os, const QFE& x) { return os << x.to_string(); }

std::size_t hash_value(const QFE& x) {
    std::size_t h = hash_value(x.a());
    h ^= hash_value(x.b()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_value(x.d()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

FundamentalUnit fundamental_unit(const Integer& d, std::uint64_t max_y) {
    if (d <= 1 || !is_squarefree(d)) {
        throw InvalidArgument("fundamental_unit requires a squarefree d > 1, got " + d.get_str());
    }
    // Units of O_K are (x + y sqrt d)/2 with x^2 - d y^2 = +-4. For
    // d != 1 mod 4 this forces x, y even; for d = 1 mod 4 half-integers
    // occur. Among positive solutions the unit grows with y.
    const bool half_integers = (d % 4) == 1;
    Integer x;
    for (std::uint64_t yy = 1; yy <= max_y; ++yy) {
        const Integer y(static_cast<unsigned long>(yy));
        const Integer dy2 = d * y * y;
        for (int s : {-4, 4}) {
            const Integer t = dy2 + s;
            if (t <= 0 || !mpz_perfect_square_p(t.get_mpz_t())) continue;
            mpz_sqrt(x.get_mpz_t(), t.get_mpz_t());
            if (!half_integers && (mpz_odd_p(x.get_mpz_t()) || mpz_odd_p(y.get_mpz_t()))) continue;
            return {QFE(make_rational(x, 2), make_rational(y, 2), d), d};
        }
    }
    throw LimitExceeded("fundamental unit search for d = " + d.get_str() + " exceeded y <= " +
                        std::to_string(max_y));
}

}  // namespace romik
