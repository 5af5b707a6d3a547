#pragma once

// The Romik map T on the closed quarter circle, its digit function and the
// digit expansions built from it.

#include "romik/quadspace.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace romik {

/// All digits valid at P: a singleton off the arc boundaries, {1,2} at
/// (4/5, 3/5) and {2,3} at (3/5, 4/5). Sorted ascending.
/// Throws InvalidArgument for points outside the quarter circle.
std::vector<Digit> digit_all(const CirclePoint& p);
/// The canonical digit: the smaller one at a boundary point.
Digit digit(const CirclePoint& p);

/// T(x, y) = (|2 - x - 2y|, |2 - 2x - y|) / (3 - 2x - 2y), evaluated exactly.
CirclePoint t_map(const CirclePoint& p);

enum class Tail { ones, threes };

struct RationalExpansion {
    Word prefix;
    Tail tail = Tail::ones;

    friend bool operator==(const RationalExpansion&, const RationalExpansion&) = default;
};

std::string to_string(const RationalExpansion& e);  // e.g. "[3,2,1^inf]"
std::ostream& operator<<(std::ostream& os, const RationalExpansion& e);

/// Canonical expansion of a rational point: prefix then 1^inf or 3^inf.
RationalExpansion expand_rational(const CirclePoint& p);

/// Both endings of a rational point other than (1,0) and (0,1). The first
/// member uses digit 2 at the boundary position, the second uses the other
/// admissible digit (3 before 1^inf, 1 before 3^inf).
std::pair<RationalExpansion, RationalExpansion> expand_rational_both(const CirclePoint& p);

/// First n canonical digits, by n exact iterations of T.
Word expand_stream(const CirclePoint& p, std::size_t n);

/// A lazily extended digit expansion. Extending returns a new value.
class DigitStream {
public:
    explicit DigitStream(CirclePoint start);

    const CirclePoint& start() const noexcept { return start_; }
    /// T^k(start) where k is the number of emitted digits.
    const CirclePoint& current() const noexcept { return current_; }
    const Word& emitted() const noexcept { return emitted_; }

    [[nodiscard]] DigitStream extended(std::size_t n) const;

private:
    CirclePoint start_;
    CirclePoint current_;
    Word emitted_;
};

}  // namespace romik
