#include "conecert/rational.hpp"

#include <cctype>

namespace conecert {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("rational: malformed fraction '" + text + "'");
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
            throw std::invalid_argument("rational: malformed fraction '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("rational: malformed integer '" + text + "'");
        q.canonicalize();
        return q;
    }
    // Decimal literal: sign, integer part, fractional digits.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw std::invalid_argument("rational: malformed decimal '" + text + "'");
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '+' || c == '-'))))
            throw std::invalid_argument("rational: malformed decimal '" + text + "'");
    }
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t numerator_bits(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace conecert
