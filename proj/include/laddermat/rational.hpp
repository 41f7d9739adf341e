#pragma once

/**
 * Exact scalar types used throughout the library.
 *
 * Every matrix entry is a BigRational kept in lowest terms with a positive
 * denominator, so equality of values is equality of representations.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace laddermat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Builds a canonical rational from an arbitrary numerator/denominator pair.
 * The sign is moved to the numerator and the fraction reduced. A zero
 * denominator raises std::domain_error.
 */
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

/// Renders "p/q" with the sign on p, or just "p" when q == 1.
inline std::string format_rational(const BigRational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

namespace detail {
inline bool is_integer_token(std::string_view text, bool allow_sign) {
    if (allow_sign && !text.empty() && text.front() == '-')
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char ch : text)
        if (ch < '0' || ch > '9')
            return false;
    return true;
}
} // namespace detail

/**
 * Parses the format emitted by format_rational: an optionally negated
 * integer, or "p/q" with an unsigned q. Anything else raises
 * std::invalid_argument.
 */
inline BigRational parse_rational(std::string_view text) {
    const auto fail = [&] {
        return std::invalid_argument("parse_rational: malformed value '" +
                                     std::string(text) + "'");
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!detail::is_integer_token(text, true))
            throw fail();
        return BigRational(BigInt(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!detail::is_integer_token(num, true) ||
        !detail::is_integer_token(den, false))
        throw fail();
    BigInt d{std::string(den)};
    if (d == 0)
        throw fail();
    return make_rational(BigInt(std::string(num)), d);
}

} // namespace laddermat
