/**
 * @file rational.hpp
 * @brief Exact rational scalars. Every coefficient in this library is a
 *        Rational or a polynomial over Rational; there is no floating point.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace afb {

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rational_from(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("rational_from: zero denominator");
    return Rational(num, den);
}

// Accepts "p", "-p", "p/q". Used by every CLI input path.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

// Emits "p" for integers and "p/q" otherwise; inverse of parse_rational.
inline std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace afb
