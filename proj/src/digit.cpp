#include "romik/digit.hpp"

#include "romik/error.hpp"

#include <algorithm>

namespace romik {

Digit make_digit(int v) {
    if (v < 1 || v > 3) {
        throw InvalidArgument("digit must be 1, 2 or 3, got " + std::to_string(v));
    }
    return static_cast<Digit>(v);
}

Word make_word(std::initializer_list<int> digits) {
    return make_word(std::span<const int>(digits.begin(), digits.size()));
}

Word make_word(std::span<const int> digits) {
    Word w;
    w.reserve(digits.size());
    for (int v : digits) w.push_back(make_digit(v));
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + to_int(w[i]));
    }
    return s;
}

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return w;
}

Word rotate_left(const Word& w, std::size_t i) {
    Word out = w;
    if (!out.empty()) {
        std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i % out.size()), out.end());
    }
    return out;
}

}  // namespace romik
