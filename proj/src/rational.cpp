#include "hstar/rational.hpp"

#include <cctype>

namespace hstar {

Rational::Rational(long n, long d) {
    if (d == 0) throw validation_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw validation_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class base = v_, acc = 1;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return Rational(acc);
}

Rational Rational::from_string(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& m) -> void { throw parse_error("malformed rational: " + m, pos + 1); };

    auto read_int = [&](bool allow_sign) -> mpz_class {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start) fail("expected digits");
        return mpz_class(text.substr(start, pos - start));
    };

    mpz_class num = read_int(true);
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0) fail("zero denominator");
    }
    if (pos != text.size()) fail("trailing characters");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace hstar
