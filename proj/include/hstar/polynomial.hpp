#ifndef HSTAR_POLYNOMIAL_HPP
#define HSTAR_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hstar/cyclotomic.hpp"
#include "hstar/order.hpp"
#include "hstar/ring.hpp"

namespace hstar {

bool exps_divides(const Exponents& a, const Exponents& b);  // a | b coordinatewise
Exponents exps_add(const Exponents& a, const Exponents& b);
Exponents exps_sub(const Exponents& a, const Exponents& b);  // requires b | a
Exponents exps_lcm(const Exponents& a, const Exponents& b);
bool exps_coprime(const Exponents& a, const Exponents& b);

struct Term {
    FieldElement coeff;
    Exponents exps;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.exps == b.exps;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

/// A sparse multivariate polynomial over a ring's coefficient field. Terms are
/// stored with nonzero coefficients, exponent vectors of length nvars, sorted
/// descending under graded-lex; this canonical form makes equality structural.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, FieldElement c);
    static Polynomial variable(const Ring& r, size_t index);
    static Polynomial monomial(const Ring& r, FieldElement c, Exponents e);
    /// Normalizing constructor: merges duplicate exponents, drops zeros, sorts.
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Max total degree of any term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    /// Term that is maximal under `order`. Throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const FieldElement& c, const Polynomial& p);
    Polynomial pow(long e) const;

    /// Multiply by the single term c * X^e.
    Polynomial mul_term(const FieldElement& c, const Exponents& e) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    /// Reinterpret in `target`, sending variable i of this ring to variable
    /// var_map[i] of the target. Coefficients must embed (same field, or Q
    /// into a cyclotomic field).
    Polynomial map_to(const Ring& target, const std::vector<size_t>& var_map) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<Term> terms_;

    void normalize();
    static void check_same_ring(const Polynomial& a, const Polynomial& b);
};

} // namespace hstar

#endif
