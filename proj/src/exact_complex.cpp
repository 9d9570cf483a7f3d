#include "conecert/exact_complex.hpp"

namespace conecert {

namespace {

// Splits "a+bi" / "a-bi" / "a" / "bi" at the sign that separates the two
// parts. The split sign is the last '+'/'-' that is not the leading sign of
// the string and not immediately after '/', '.', or another sign.
std::size_t find_split(const std::string& s) {
    for (std::size_t pos = s.size(); pos-- > 1;) {
        const char c = s[pos];
        if (c != '+' && c != '-') continue;
        const char prev = s[pos - 1];
        if (prev == '/' || prev == '.' || prev == '+' || prev == '-' || prev == 'e' || prev == 'E')
            continue;
        return pos;
    }
    return std::string::npos;
}

Rational parse_part(std::string part) {
    if (part.empty() || part == "+") return rational_of(1);
    if (part == "-") return rational_of(-1);
    return parse_rational(part);
}

}  // namespace

ExactComplex parse_exact_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("complex: empty string");

    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return ExactComplex(parse_rational(s));

    s.pop_back();
    const auto split = find_split(s);
    if (split == std::string::npos) return ExactComplex(rational_of(0), parse_part(s));
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);  // keeps the sign
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return ExactComplex(parse_rational(re), parse_part(im));
}

std::string format_exact_complex(const ExactComplex& v) {
    std::string s = format_rational(v.re);
    if (v.im >= 0) s += "+";
    s += format_rational(v.im) + "i";
    return s;
}

}  // namespace conecert
