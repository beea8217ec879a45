#ifndef L1HOM_RATIONAL_HPP
#define L1HOM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace l1hom {

/// Exact rational coefficient. GMP keeps values in canonical reduced form
/// with a positive denominator, which is what chain equality and golden-file
/// comparisons rely on.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rational_sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Canonical "p/q" form, denominator always spelled out ("3/1", "0/1").
inline std::string to_fraction_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

} // namespace l1hom

#endif
