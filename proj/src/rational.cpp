#include "cpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cpoly {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(const std::string& s) {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (!all_digits(s, start, s.size())) {
        throw std::invalid_argument("not an integer literal: '" + s + "'");
    }
    return Integer(s, 10);
}

/* mpq_class arithmetic keeps results reduced, but the two-argument
 * constructor stores the fraction as given, so anything that inspects the
 * numerator or denominator has to reduce a copy first. */
Rational canonical(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    const Rational c = canonical(r);
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integer(const Rational& r) { return canonical(r).get_den() == 1; }

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

long rational_to_long(const Rational& r) {
    const Rational c = canonical(r);
    if (c.get_den() != 1) {
        throw std::invalid_argument("non-integral rational: " + format_rational(c));
    }
    return to_long(c.get_num());
}

}  // namespace cpoly
