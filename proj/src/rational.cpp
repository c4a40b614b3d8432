#include "dpers/rational.hpp"

#include <cctype>

#include "dpers/errors.hpp"

namespace dpers {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

boost::multiprecision::cpp_int to_int(std::string_view digits) {
    return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        auto d = to_int(den);
        if (d == 0) return std::nullopt;
        result = Rational(to_int(num), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(to_int(whole)) + Rational(to_int(frac), scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        result = Rational(to_int(text));
    }
    return negative ? Rational(-result) : result;
}

Rational parse_rational(std::string_view text) {
    auto value = try_parse_rational(text);
    if (!value) throw DomainError("not a rational number: '" + std::string(text) + "'");
    return *value;
}

std::string to_string(const Rational& value) {
    return value.str();
}

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 0) throw DomainError("negative digit count");
    using boost::multiprecision::cpp_int;
    cpp_int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = abs(value) * scale;
    cpp_int num = numerator(scaled);
    cpp_int den = denominator(scaled);
    cpp_int q = num / den;
    if ((num % den) * 2 >= den) q += 1;
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = value < 0 && q != 0;
    return negative ? "-" + body : body;
}

Degree::Degree(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
        throw DomainError("degree outside [0,1]: " + to_string(value_));
}

Degree::Degree(int numerator, int denominator) : Degree(Rational(numerator, denominator)) {}

std::string to_string(const Degree& degree) {
    return to_string(degree.value());
}

}  // namespace dpers
