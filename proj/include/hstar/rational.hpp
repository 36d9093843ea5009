#ifndef HSTAR_RATIONAL_HPP
#define HSTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hstar/errors.hpp"

namespace hstar {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored canonically: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "123" or "-4/7". Throws parse_error (position is relative to `text`).
    static Rational from_string(const std::string& text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;
    Rational pow(long e) const;   // e may be negative for nonzero values
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "3", "-1/2"; matches the coefficient grammar of the polynomial parser.
    std::string str() const;

private:
    mpq_class v_;
};

} // namespace hstar

#endif
