#pragma once

#include <cmath>
#include <iosfwd>
#include <string_view>

#include "nhopf/errors.hpp"

namespace nhopf {

namespace detail {

inline double up(double x) { return std::nextafter(x, INFINITY); }
inline double dn(double x) { return std::nextafter(x, -INFINITY); }

// Upper bounds on rounded results. Round-to-nearest leaves the result within
// half an ulp of the exact value, so one nextafter step in the wanted
// direction restores a valid bound.
inline double add_up(double a, double b) { return up(a + b); }
inline double sub_up(double a, double b) { return up(a - b); }
inline double mul_up(double a, double b) { return up(a * b); }
inline double div_up(double a, double b) { return up(a / b); }
inline double add_dn(double a, double b) { return dn(a + b); }
inline double sub_dn(double a, double b) { return dn(a - b); }

// Bound on the distance from a rounded center to the exact value.
inline double ulp_err(double c) {
    const double hi = up(c) - c;
    const double lo = c - dn(c);
    return hi > lo ? hi : lo;
}

} // namespace detail

// Outward-rounded enclosure of a real number: the set {x : |x - center| <= radius}.
// Every operation returns a Ball containing the exact image of its operand
// sets. Directed rounding is realized by next-representable inflation, so no
// floating-point environment state is touched; values are immutable and safe
// to share across threads.
class Ball {
public:
    Ball() = default;
    explicit Ball(double center) : c_(center), r_(0.0) { check(); }
    Ball(double center, double radius) : c_(center), r_(radius) {
        if (radius < 0.0) throw DomainError("Ball: negative radius");
        check();
    }

    static Ball from_endpoints(double lo, double hi) {
        if (!(lo <= hi)) throw DomainError("Ball::from_endpoints: lo > hi");
        const double c = lo + 0.5 * (hi - lo);
        const double r = std::max(detail::sub_up(hi, c), detail::sub_up(c, lo));
        return Ball(c, r);
    }

    static Ball hull(const Ball& a, const Ball& b) {
        return from_endpoints(std::min(a.lower(), b.lower()),
                              std::max(a.upper(), b.upper()));
    }

    double center() const { return c_; }
    double radius() const { return r_; }
    double upper() const { return detail::add_up(c_, r_); }
    double lower() const { return detail::sub_dn(c_, r_); }

    // Largest and smallest absolute value over the enclosed set.
    double mag() const { return detail::add_up(std::fabs(c_), r_); }
    double mig() const {
        const double m = detail::sub_dn(std::fabs(c_), r_);
        return m > 0.0 ? m : 0.0;
    }

    bool contains(double x) const { return lower() <= x && x <= upper(); }
    bool contains_zero() const { return contains(0.0); }
    bool is_point() const { return r_ == 0.0; }

    // True when every element of *this is strictly below every element of b.
    bool certainly_less(const Ball& b) const { return upper() < b.lower(); }

    bool same_data(const Ball& b) const { return c_ == b.c_ && r_ == b.r_; }

private:
    void check() const {
        if (!std::isfinite(c_) || !std::isfinite(r_))
            throw OverflowError("Ball: non-finite enclosure");
    }

    double c_ = 0.0;
    double r_ = 0.0;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);

enum class ArithOp { add, sub, mul, div };

// Dispatch form of the four basic operations.
Ball arith(ArithOp op, const Ball& a, const Ball& b);

// Contains sqrt(x) for every x in a. Requires a within [0, inf).
Ball sqrt_ball(const Ball& a);

// Contains x^2 for every x in a; always a subset of [0, inf).
Ball square(const Ball& a);

// Encloses the exact value of a finite decimal string. The radius is zero
// when the decimal is exactly representable and at most one ulp otherwise.
Ball enclose_decimal(std::string_view s);

// Enclosure of pi.
Ball pi_ball();

inline Ball operator*(double a, const Ball& b) { return Ball(a) * b; }
inline Ball operator*(const Ball& a, double b) { return a * Ball(b); }
inline Ball operator+(const Ball& a, double b) { return a + Ball(b); }
inline Ball operator-(const Ball& a, double b) { return a - Ball(b); }

std::ostream& operator<<(std::ostream& os, const Ball& b);

} // namespace nhopf
