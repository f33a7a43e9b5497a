#include "acb3/rational.hpp"

#include <cmath>
#include <regex>

#include "acb3/errors.hpp"

namespace acb3 {

namespace {

Integer pow10(std::size_t n) {
    Integer p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 10;
    return p;
}

// Builds the integer from decimal digits only.  Leading zeros are stripped
// first: cpp_int's string constructor would read them as an octal prefix.
Integer from_digits(const std::string& digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string::npos) return Integer(0);
    return Integer(digits.substr(first));
}

Integer parse_integer(const std::string& text) {
    static const std::regex kInt(R"(^([+-]?)([0-9]+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, kInt))
        throw ParseError("not an integer: '" + text + "'");
    Integer value = from_digits(m[2].str());
    return m[1].str() == "-" ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        Integer den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    static const std::regex kDecimal(
        R"(^([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, kDecimal) || (m[2].str().empty() && m[3].str().empty()))
        throw ParseError("malformed rational literal '" + text + "'");

    Rational v(from_digits(m[2].str() + m[3].str()), pow10(m[3].str().size()));
    if (m[4].matched) {
        long exp = std::stol(m[4].str());
        if (exp > 0)
            v *= Rational(pow10(static_cast<std::size_t>(exp)));
        else if (exp < 0)
            v /= Rational(pow10(static_cast<std::size_t>(-exp)));
    }
    if (m[1].str() == "-") v = -v;
    return v;
}

std::string format_rational(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw ParseError("non-finite number literal");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(v, &exp);  // v = m * 2^exp with |m| in [1/2, 1)
    auto mantissa = static_cast<long long>(std::ldexp(m, 53));
    Rational r(mantissa);
    int shift = exp - 53;
    if (shift >= 0)
        r *= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(shift)));
    else
        r /= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-shift)));
    return r;
}

double rational_to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace acb3
