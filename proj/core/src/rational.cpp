#include "ctx/rational.hpp"

#include <sstream>

#include "ctx/errors.hpp"

namespace ctx {

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) {
        out << '/' << denominator(value);
    }
    return out.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
    }
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') {
        start = 1;
    }
    if (start == text.size()) {
        throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
        }
    }
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

}  // namespace ctx
