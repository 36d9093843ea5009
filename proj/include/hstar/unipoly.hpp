#ifndef HSTAR_UNIPOLY_HPP
#define HSTAR_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "hstar/rational.hpp"

namespace hstar {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree with no trailing zeros. Degree of the zero polynomial is -1.
struct UniPoly {
    std::vector<Rational> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }
    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, int degree);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const Rational& leading() const;
    Rational coeff(int d) const;

    Rational evaluate(const Rational& x) const;

    void trim();
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, const UniPoly& a);
bool operator==(const UniPoly& a, const UniPoly& b);

/// Quotient and remainder with deg(rem) < deg(divisor). Divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct XgcdResult {
    UniPoly g, s, t;
};
XgcdResult xgcd(const UniPoly& a, const UniPoly& b);

/// Unique polynomial of degree < points.size() through the given (x, y) pairs.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// "3*i^2 - 1/2*i + 4" with the given variable name; "0" for the zero polynomial.
std::string unipoly_str(const UniPoly& p, const std::string& var);

} // namespace hstar

#endif
