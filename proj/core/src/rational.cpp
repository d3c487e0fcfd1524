#include "monoinv/rational.hpp"

#include <cctype>
#include <string>

#include "monoinv/error.hpp"

namespace monoinv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) bad(whole);
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) bad(text);
        mpz_class den(std::string(den_text), 10);
        if (den == 0) bad(text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
            exp_negative = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 4) bad(text);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) bad(text);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) bad(text);
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) bad(text);
        digits = std::string(s);
    }
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;

    long scale = exponent - fraction_digits;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace monoinv
