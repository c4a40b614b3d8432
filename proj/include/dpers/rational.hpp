#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpers {

/// Exact arbitrary-precision rational. All time points and certainty degrees
/// are built on it so that strict comparisons are never subject to rounding.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Accepts `p`, `p/q` and decimals `p.ddd`, optionally signed.
std::optional<Rational> try_parse_rational(std::string_view text);
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or `p` for integers.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// A certainty degree: an exact rational in [0,1].
class Degree {
public:
    Degree() = default;
    explicit Degree(Rational value);
    Degree(int numerator, int denominator);

    static Degree zero() { return Degree(); }
    static Degree one() { return Degree(Rational(1)); }

    const Rational& value() const noexcept { return value_; }
    Degree complement() const { return Degree(Rational(1) - value_); }

    friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        return compare(a.value_, b.value_);
    }

private:
    Rational value_{0};
};

std::string to_string(const Degree& degree);

}  // namespace dpers
