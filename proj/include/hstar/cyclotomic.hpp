#ifndef HSTAR_CYCLOTOMIC_HPP
#define HSTAR_CYCLOTOMIC_HPP

#include <string>
#include <variant>
#include <vector>

#include "hstar/unipoly.hpp"

namespace hstar {

/// Euler totient, valid for m >= 1.
int euler_totient(int m);

/// The m-th cyclotomic polynomial, computed by dividing t^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
UniPoly cyclotomic_polynomial(int m);

/// Element of the cyclotomic field Q(zeta_m), stored as coefficients of
/// 1, zeta, ..., zeta^(phi(m)-1), i.e. a residue modulo the m-th cyclotomic
/// polynomial. Arithmetic is exact; inverses come from the extended Euclidean
/// algorithm against Phi_m.
class CycloElement {
public:
    CycloElement(int order, std::vector<Rational> coeffs);

    static CycloElement zero(int order);
    static CycloElement from_rational(int order, const Rational& r);
    /// The generator zeta_m itself.
    static CycloElement zeta(int order);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the element lies in Q, i.e. all basis coefficients beyond the
    /// constant one vanish.
    bool is_rational() const;
    Rational rational_part() const;  // valid only when is_rational()

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement inverse() const;
    CycloElement pow(long e) const;

    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> c_;  // length phi(order_)

    static void check_same_order(const CycloElement& a, const CycloElement& b);
};

/// A scalar from the ring's coefficient field: either a rational or a
/// cyclotomic element. Rational-valued cyclotomic elements are demoted to the
/// Rational alternative on construction, so representation is canonical and
/// equality is structural.
class FieldElement {
public:
    FieldElement() : v_(Rational(0)) {}
    FieldElement(Rational r) : v_(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    FieldElement(long n) : v_(Rational(n)) {}               // NOLINT(google-explicit-constructor)
    FieldElement(CycloElement c);                           // NOLINT(google-explicit-constructor)

    static FieldElement zero() { return FieldElement(Rational(0)); }
    static FieldElement one() { return FieldElement(Rational(1)); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;            // requires is_rational()
    const CycloElement& cyclo() const;           // requires !is_rational()

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    std::variant<Rational, CycloElement> v_;
};

} // namespace hstar

#endif
