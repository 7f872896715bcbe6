#include "nhopf/ball.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nhopf {

using detail::add_up;
using detail::div_up;
using detail::dn;
using detail::mul_up;
using detail::ulp_err;
using detail::up;

namespace {

Ball make(double c, double r) { return Ball(c, r); }

} // namespace

Ball operator+(const Ball& a, const Ball& b) {
    const double c = a.center() + b.center();
    const double r = add_up(add_up(a.radius(), b.radius()), ulp_err(c));
    return make(c, r);
}

Ball operator-(const Ball& a, const Ball& b) {
    const double c = a.center() - b.center();
    const double r = add_up(add_up(a.radius(), b.radius()), ulp_err(c));
    return make(c, r);
}

Ball operator-(const Ball& a) { return Ball(-a.center(), a.radius()); }

Ball operator*(const Ball& a, const Ball& b) {
    const double c = a.center() * b.center();
    double r = mul_up(std::fabs(a.center()), b.radius());
    r = add_up(r, mul_up(std::fabs(b.center()), a.radius()));
    r = add_up(r, mul_up(a.radius(), b.radius()));
    r = add_up(r, ulp_err(c));
    return make(c, r);
}

Ball operator/(const Ball& a, const Ball& b) {
    // |y| >= |b.c| - b.r for every y in b; require that lower bound positive.
    const double m = dn(std::fabs(b.center()) - b.radius());
    if (!(m > 0.0)) throw DomainError("Ball division by an interval containing zero");
    const double c = a.center() / b.center();
    const double qa = up(std::fabs(a.center()) / std::fabs(b.center()));
    double r = div_up(add_up(a.radius(), mul_up(b.radius(), qa)), m);
    r = add_up(r, ulp_err(c));
    return make(c, r);
}

Ball arith(ArithOp op, const Ball& a, const Ball& b) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw ParamError("arith: unknown operation");
}

Ball sqrt_ball(const Ball& a) {
    const double lo = dn(a.center() - a.radius());
    if (lo < 0.0) throw DomainError("sqrt_ball of an interval reaching below zero");
    // IEEE sqrt is correctly rounded, so one nextafter step is outward enough.
    const double s_lo = dn(std::sqrt(lo));
    const double s_hi = up(std::sqrt(up(a.center() + a.radius())));
    return Ball::from_endpoints(std::max(0.0, s_lo), s_hi);
}

Ball square(const Ball& a) {
    const double lo = a.mig();
    const double hi = a.mag();
    return Ball::from_endpoints(dn(lo * lo), mul_up(hi, hi));
}

Ball pi_ball() {
    // M_PI is the nearest double below pi.
    return Ball::from_endpoints(M_PI, up(M_PI));
}

namespace {

using boost::multiprecision::cpp_int;

// Canonical decimal of a string: sign, significant digits, exponent of the
// least significant digit. Returns false on malformed input.
bool parse_decimal(std::string_view s, bool& neg, std::string& digits, long& exp10) {
    size_t i = 0;
    neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    if (intpart.empty() && fracpart.empty()) return false;
    long e = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size()) return false;
        long ev = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ev = ev * 10 + (s[i] - '0');
            if (ev > 1000000) return false;
            ++i;
        }
        e = eneg ? -ev : ev;
    }
    if (i != s.size()) return false;
    digits = intpart + fracpart;
    exp10 = e - static_cast<long>(fracpart.size());
    // Strip leading zeros, then trailing zeros into the exponent.
    size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) {
        digits = "0";
        exp10 = 0;
        neg = false;
        return true;
    }
    digits.erase(0, first);
    size_t last = digits.find_last_not_of('0');
    exp10 += static_cast<long>(digits.size() - 1 - last);
    digits.erase(last + 1);
    return true;
}

cpp_int digits_to_int(const std::string& digits) {
    cpp_int v = 0;
    for (char ch : digits) v = v * 10 + (ch - '0');
    return v;
}

// Exactness test: does the decimal digits*10^exp10 (with sign) equal c?
bool decimal_equals_double(bool neg, const std::string& digits, long exp10, double c) {
    if (digits == "0") return c == 0.0;
    if (c == 0.0) return false;
    if (std::signbit(c) != neg) return false;
    int e2 = 0;
    const double m = std::frexp(std::fabs(c), &e2); // |c| = m * 2^e2, m in [0.5, 1)
    const double scaled = std::ldexp(m, 53);
    cpp_int mant = static_cast<long long>(scaled);
    long exp2 = e2 - 53;
    // Compare digits * 10^exp10 with mant * 2^exp2 by cross multiplication.
    cpp_int lhs = digits_to_int(digits);
    cpp_int rhs = mant;
    if (exp10 >= 0)
        lhs *= boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exp10));
    else
        rhs *= boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(-exp10));
    if (exp2 >= 0)
        rhs *= boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(exp2));
    else
        lhs *= boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(-exp2));
    return lhs == rhs;
}

} // namespace

Ball enclose_decimal(std::string_view s) {
    bool neg = false;
    std::string digits;
    long exp10 = 0;
    if (!parse_decimal(s, neg, digits, exp10))
        throw ParseError("enclose_decimal: malformed decimal '" + std::string(s) + "'");
    const std::string str(s);
    char* end = nullptr;
    const double c = std::strtod(str.c_str(), &end);
    if (end != str.c_str() + str.size() || !std::isfinite(c))
        throw ParseError("enclose_decimal: unparseable or non-finite decimal '" + str + "'");
    if (decimal_equals_double(neg, digits, exp10, c)) return Ball(c);
    // strtod returns a correctly rounded value, within half an ulp.
    return Ball(c, ulp_err(c));
}

std::ostream& operator<<(std::ostream& os, const Ball& b) {
    return os << "(" << b.center() << " ± " << b.radius() << ")";
}

} // namespace nhopf
