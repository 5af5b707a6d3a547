#include "romik/romik_map.hpp"

#include "romik/error.hpp"

#include <ostream>
#include <sstream>

namespace romik {

namespace {

const QFE& three_fifths() {
    static const QFE v(Rational(3, 5));
    return v;
}

const QFE& four_fifths() {
    static const QFE v(Rational(4, 5));
    return v;
}

void require_quarter(const CirclePoint& p) {
    if (!p.in_quarter()) {
        std::ostringstream os;
        os << "point " << p << " is outside the quarter circle";
        throw InvalidArgument(os.str());
    }
}

}  // namespace

std::vector<Digit> digit_all(const CirclePoint& p) {
    require_quarter(p);
    const auto lo = qfe_cmp(p.x(), three_fifths());
    const auto hi = qfe_cmp(p.x(), four_fifths());
    if (hi > 0) return {Digit::one};
    if (hi == 0) return {Digit::one, Digit::two};
    if (lo > 0) return {Digit::two};
    if (lo == 0) return {Digit::two, Digit::three};
    return {Digit::three};
}

Digit digit(const CirclePoint& p) { return digit_all(p).front(); }

CirclePoint t_map(const CirclePoint& p) {
    require_quarter(p);
    const QFE& x = p.x();
    const QFE& y = p.y();
    const QFE den = QFE(3) - QFE(2) * x - QFE(2) * y;
    if (den.sign() <= 0) {
        throw InvariantViolation("T denominator 3 - 2x - 2y is not positive");
    }
    const QFE nx = (QFE(2) - x - QFE(2) * y).abs();
    const QFE ny = (QFE(2) - QFE(2) * x - y).abs();
    return CirclePoint(nx / den, ny / den);
}

std::string to_string(const RationalExpansion& e) {
    std::string s = "[";
    for (Digit d : e.prefix) {
        s += static_cast<char>('0' + to_int(d));
        s += ',';
    }
    s += e.tail == Tail::ones ? "1^inf]" : "3^inf]";
    return s;
}

std::ostream& operator<<(std::ostream& os, const RationalExpansion& e) { return os << to_string(e); }

RationalExpansion expand_rational(const CirclePoint& p) {
    if (!p.is_rational()) {
        throw InvalidArgument("expand_rational needs a rational point");
    }
    require_quarter(p);
    const CirclePoint east(QFE(1), QFE(0));
    const CirclePoint north(QFE(0), QFE(1));
    RationalExpansion out;
    CirclePoint cur = p;
    // Each step strictly lowers the denominator of the point, so the loop
    // reaches one of the two fixed points.
    while (true) {
        if (cur == east) {
            out.tail = Tail::ones;
            return out;
        }
        if (cur == north) {
            out.tail = Tail::threes;
            return out;
        }
        out.prefix.push_back(digit(cur));
        cur = t_map(cur);
    }
}

std::pair<RationalExpansion, RationalExpansion> expand_rational_both(const CirclePoint& p) {
    RationalExpansion canonical = expand_rational(p);
    if (canonical.prefix.empty()) {
        throw InvalidArgument("fixed points (1,0) and (0,1) have a unique expansion");
    }
    RationalExpansion other = canonical;
    Digit& last = other.prefix.back();
    if (canonical.tail == Tail::ones) {
        // The point before 1^inf is (3/5, 4/5), digits {2, 3}.
        last = Digit::three;
        return {canonical, other};
    }
    // The point before 3^inf is (4/5, 3/5), digits {1, 2}; canonical is 1.
    last = Digit::two;
    return {other, canonical};
}

Word expand_stream(const CirclePoint& p, std::size_t n) {
    return DigitStream(p).extended(n).emitted();
}

DigitStream::DigitStream(CirclePoint start) : start_(start), current_(std::move(start)) {
    require_quarter(start_);
}

DigitStream DigitStream::extended(std::size_t n) const {
    DigitStream next = *this;
    next.emitted_.reserve(emitted_.size() + n);
    for (std::size_t i = 0; i < n; ++i) {
        next.emitted_.push_back(digit(next.current_));
        next.current_ = t_map(next.current_);
    }
    return next;
}

}  // namespace romik
