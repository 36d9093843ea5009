#ifndef HSTAR_GROEBNER_HPP
#define HSTAR_GROEBNER_HPP

#include <vector>

#include "hstar/caps.hpp"
#include "hstar/ideal.hpp"

namespace hstar {

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor
    Polynomial remainder;
};

/// Multivariate division of f by an ordered list of nonzero divisors. The
/// first divisor whose leading term divides the current leading term wins, so
/// the result is deterministic for a fixed divisor order. Postconditions:
/// f = sum quotients[i] * divisors[i] + remainder, and no monomial of the
/// remainder is divisible by any divisor's leading term.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order, const Caps& caps = default_caps());

/// Remainder of division only.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order, const Caps& caps = default_caps());

/// S(f, g) = lcm/LT(f) * f - lcm/LT(g) * g where lcm is of the leading
/// monomials. Leading monomials cancel by construction.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct GroebnerBasis {
    Ideal ideal;  // the generating set the basis was computed from
    MonomialOrder order;
    std::vector<Polynomial> elements;
    bool reduced = false;
};

/// Buchberger's algorithm with normal pair selection (smallest lcm first) and
/// the coprime and chain criteria. Deterministic: pair queues are ordered by
/// (lcm under the order, generator indices).
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order,
                         const Caps& caps = default_caps());

/// Minimize, inter-reduce, and make monic. The result is the unique reduced
/// Groebner basis of the ideal for this order, with elements sorted by
/// descending leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& gb, const Caps& caps = default_caps());

/// buchberger + reduce_basis.
GroebnerBasis reduced_groebner_basis(const Ideal& I, const MonomialOrder& order,
                                     const Caps& caps = default_caps());

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb, const Caps& caps = default_caps());
bool ideal_member(const Polynomial& f, const Ideal& I, const MonomialOrder& order,
                  const Caps& caps = default_caps());

/// True iff the reduced Groebner bases under `order` coincide element-wise.
bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order,
                 const Caps& caps = default_caps());

/// Generators of I intersected with the subring on the variables not in
/// `drop_vars`; the result lives in the smaller ring (original variable order
/// preserved). Computed from a Groebner basis under a block elimination order
/// with the dropped variables leading.
Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop_vars,
                const Caps& caps = default_caps());

/// I : f, via the tag-variable intersection I ∩ <f> = (t*I + (1-t)*<f>) ∩ k[X]
/// followed by exact division by f.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f, const Caps& caps = default_caps());

/// I : f^∞, by iterating the quotient until it stabilizes.
Ideal saturate(const Ideal& I, const Polynomial& f, const Caps& caps = default_caps());

/// Whether I contains any monomial; decided by saturating at the product of
/// all variables and testing whether 1 appears.
bool contains_monomial(const Ideal& I, const Caps& caps = default_caps());

/// Test helpers: verify the Buchberger criterion / the reduced-basis shape
/// directly from the definitions.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& elements,
                                    const MonomialOrder& order, const Caps& caps = default_caps());
bool is_reduced_basis(const std::vector<Polynomial>& elements, const MonomialOrder& order);

} // namespace hstar

#endif
