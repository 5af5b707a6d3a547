#include "romik/parse.hpp"

#include "romik/error.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace romik {

namespace {

class QfeParser {
public:
    explicit QfeParser(std::string_view text) : text_(text) {}

    QFE parse() {
        QFE v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_surd() const {
        return text_.substr(pos_).starts_with("\xE2\x88\x9A") || text_.substr(pos_).starts_with("sqrt");
    }

    bool at_factor() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_surd();
    }

    QFE expr() {
        skip_space();
        bool negate = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        QFE acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
            const bool minus = text_[pos_++] == '-';
            QFE t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    QFE term() {
        QFE acc = factor();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/')) {
                const bool divide = text_[pos_++] == '/';
                QFE f = factor();
                if (divide && f.is_zero()) fail("division by zero");
                acc = divide ? acc / f : acc * f;
            } else if (at_factor()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    QFE factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == '(') {
            ++pos_;
            QFE v = expr();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return v;
        }
        if (at_surd()) {
            pos_ += text_[pos_] == 's' ? 4 : 3;
            skip_space();
            Integer n;
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                n = integer();
                skip_space();
                if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')' after sqrt");
                ++pos_;
            } else {
                n = integer();
            }
            return QFE::surd(n);
        }
        return QFE(integer());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

QFE parse_qfe(std::string_view text) { return QfeParser(text).parse(); }

CirclePoint parse_point(std::string_view text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2) {
        throw ParseError("a point is written \"x,y\", got '" + std::string(text) + "'");
    }
    return CirclePoint(parse_qfe(parts[0]), parse_qfe(parts[1]));
}

Word parse_word(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < '1' || c > '3') {
            throw ParseError("words use digits 1, 2, 3; got '" + std::string(text) + "'");
        }
        w.push_back(static_cast<Digit>(c - '0'));
    }
    if (w.empty()) {
        throw ParseError("empty word");
    }
    return w;
}

Triple parse_triple(std::string_view text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw ParseError("a triple is written \"a,b,c\", got '" + std::string(text) + "'");
    }
    std::array<Integer, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
        const QFE q = parse_qfe(parts[i]);
        if (!q.is_rational() || q.a().get_den() != 1) {
            throw ParseError("triple entries must be integers, got '" + std::string(parts[i]) + "'");
        }
        v[i] = q.a().get_num();
    }
    return Triple(v[0], v[1], v[2]);
}

}  // namespace romik
