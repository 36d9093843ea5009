#ifndef HSTAR_HILBERT_HPP
#define HSTAR_HILBERT_HPP

#include <optional>

#include "hstar/groebner.hpp"
#include "hstar/unipoly.hpp"

namespace hstar {

/// A monomial ideal stored by its minimal generators (an antichain under
/// divisibility). Construction minimalizes and sorts the given exponents.
class MonomialIdeal {
public:
    MonomialIdeal(Ring ring, std::vector<Exponents> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Exponents>& min_gens() const { return gens_; }
    bool divides_some_gen(const Exponents& e) const;  // e is divisible by a generator

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<Exponents> gens_;
};

/// Minimal monomial generators of LT_<(I), from the reduced Groebner basis.
MonomialIdeal leading_term_ideal(const Ideal& I, const MonomialOrder& order,
                                 const Caps& caps = default_caps());

/// HF_{R/M}(d): the number of degree-d monomials not divisible by any
/// generator of M, by direct enumeration.
mpz_class hilbert_function(const MonomialIdeal& M, int d, const Caps& caps = default_caps());

/// The same count via inclusion–exclusion over generator subsets; used as an
/// independent cross-check of the enumeration.
mpz_class hilbert_function_inclusion_exclusion(const MonomialIdeal& M, int d,
                                               const Caps& caps = default_caps());

struct HilbertData {
    std::vector<mpz_class> values;          // HF(0..D) for the window used
    std::optional<UniPoly> polynomial;      // absent when no stabilization found
    std::optional<int> stabilization_degree;
};

/// Hilbert function values plus the Hilbert polynomial, found by locating the
/// degree from which finite differences vanish and interpolating through the
/// stable tail (verified against at least 3 further degrees). The window is
/// 25, extended to 50 before giving up.
HilbertData hilbert_polynomial(const Ideal& I, const MonomialOrder& order,
                               const Caps& caps = default_caps());

struct DegreeDimension {
    long degree;
    int dimension;  // projective dimension; -1 for the empty variety
};

/// dimension = deg of the Hilbert polynomial, degree = leading coefficient
/// times dimension factorial (always an integer).
DegreeDimension degree_and_dimension(const Ideal& I, const Caps& caps = default_caps());

} // namespace hstar

#endif
