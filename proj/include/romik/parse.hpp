#pragma once

// Exact textual input. Nothing here goes through floating point.
//
// Scalars are sums of terms built from integers, surds and parentheses:
//   "3/5"  "-1/2"  "sqrt(3)/2"  "√3/2"  "1/2+1/2√5"  "3-2*sqrt(2)"  "(1+√5)/4"
// Juxtaposition multiplies and binds like '*' and '/', left to right, so
// "1/2√3" is (1/2)·√3.

#include "romik/berggren.hpp"

#include <string_view>

namespace romik {

QFE parse_qfe(std::string_view text);
/// "x,y"
CirclePoint parse_point(std::string_view text);
/// "3,1" (commas optional between single digits: "31" also works)
Word parse_word(std::string_view text);
/// "3,4,5"
Triple parse_triple(std::string_view text);

}  // namespace romik
