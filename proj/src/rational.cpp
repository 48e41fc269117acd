#include "tropsym/rational.hpp"

#include <cctype>

namespace tropsym {

std::optional<Rational> parse_rational(const std::string& token) {
    if (token.empty()) return std::nullopt;

    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    std::string s = token;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) return std::nullopt;

    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) return std::nullopt;
        boost::multiprecision::cpp_int d(den);
        if (d == 0) return std::nullopt;
        value = Rational(boost::multiprecision::cpp_int(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!is_digits(whole) || !is_digits(frac)) return std::nullopt;
        boost::multiprecision::cpp_int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(boost::multiprecision::cpp_int(whole) * scale +
                             boost::multiprecision::cpp_int(frac),
                         scale);
    } else {
        if (!is_digits(s)) return std::nullopt;
        value = Rational(boost::multiprecision::cpp_int(s));
    }
    if (negative) value = -value;
    return value;
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace tropsym
