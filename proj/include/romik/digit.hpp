#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace romik {

enum class Digit : std::uint8_t { one = 1, two = 2, three = 3 };

using Word = std::vector<Digit>;

inline int to_int(Digit d) { return static_cast<int>(d); }
/// Throws InvalidArgument unless v is 1, 2 or 3.
Digit make_digit(int v);
Word make_word(std::initializer_list<int> digits);
Word make_word(std::span<const int> digits);
std::string to_string(const Word& w);  // "3,1"

/// The shortest u with w = u^m.
Word primitive_root(const Word& w);
/// (d_{i+1}, ..., d_k, d_1, ..., d_i).
Word rotate_left(const Word& w, std::size_t i);

}  // namespace romik
