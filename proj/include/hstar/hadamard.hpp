#ifndef HSTAR_HADAMARD_HPP
#define HSTAR_HADAMARD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hstar/groebner.hpp"
#include "hstar/point.hpp"

namespace hstar {

/// One aligned binomial generator, canonically oriented: the polynomial is
/// X^alpha + trail_coeff * X^beta with alpha > beta under graded-lex and the
/// leading coefficient normalized to 1.
struct BinomialPair {
    Exponents alpha;
    Exponents beta;
    FieldElement trail_coeff;
};

struct BinomialPresentation {
    std::vector<BinomialPair> pairs;

    Polynomial pair_polynomial(const Ring& r, size_t i) const;
};

/// Exponent-pair data with attached root-of-unity types (t_i, epsilon_i),
/// t_i >= 2, 1 <= epsilon_i <= t_i - 1. The base ring names the variables; the
/// resulting ideal lives over Q(zeta_M) with M = lcm of the t_i.
struct BinomialTypeSpec {
    Ring base_ring;
    std::vector<std::pair<Exponents, Exponents>> pairs;
    std::vector<std::pair<int, int>> types;  // (t_i, epsilon_i)
};

/// Coordinate-wise product of projective points; undefined (error) when every
/// coordinate product vanishes.
ProjectivePoint point_star(const ProjectivePoint& p, const ProjectivePoint& q);

/// f^{*p}: each coefficient a_alpha becomes a_alpha / p^alpha. Requires p to
/// have no zero coordinate.
Polynomial hadamard_transform(const Polynomial& f, const ProjectivePoint& p);

/// The ideal generated by the Hadamard transforms of I's generators — the
/// defining ideal of p * V(I).
Ideal point_variety_ideal(const ProjectivePoint& p, const Ideal& I);

/// Transform a reduced Groebner basis by a point: elements p^{alpha_i} f_i^{*p}
/// where alpha_i is the leading exponent of f_i. The output is again reduced
/// under the same order.
GroebnerBasis reduced_gb_transform(const GroebnerBasis& gb, const ProjectivePoint& p);

/// The ideal of the Hadamard product of the two varieties, by the elimination
/// construction: in k[y, z, x], form I(y) + J(z) + <x_i - y_i z_i> and
/// eliminate the y and z blocks. Exact but potentially expensive.
Ideal hadamard_product_elimination(const Ideal& I, const Ideal& J,
                                   const Caps& caps = default_caps());

/// The point ideal <p_j x_i - p_i x_j : i < j> cutting out {p}.
Ideal point_ideal(const ProjectivePoint& p);

/// If every generator of both ideals is a binomial and the canonically
/// oriented exponent-pair multisets coincide, returns the two presentations
/// aligned pair-for-pair (sorted by exponent pair); otherwise absent.
/// Decides on the presented generators only.
std::optional<std::pair<BinomialPresentation, BinomialPresentation>>
same_exponent_match(const Ideal& I, const Ideal& J);

enum class FastStatus { certified, containment_only };

struct FastResult {
    Ideal ideal;
    FastStatus status;
    bool witness_supplied = false;  // caller passed a witness point
    bool witness_valid = false;     // the witness (or default all-ones) certified the hypothesis
};

/// Closed-form Hadamard product for same-exponent binomial ideals: generators
/// X^alpha - (b_i d_i) X^beta from the aligned trailing coefficients. The
/// result equals the elimination-path ideal whenever some point with no zero
/// coordinate lies on V(I) or V(J); with a valid witness (supplied, or the
/// default all-ones candidate) the status is `certified`, otherwise
/// `containment_only` (the generators are still always members of the
/// elimination ideal). Throws validation_error when the ideals do not match.
FastResult hadamard_product_binomial_fast(const Ideal& I, const Ideal& J,
                                          const std::optional<ProjectivePoint>& witness = std::nullopt);

enum class PowerMode { fast, elimination };

/// I^{*r}: r = 0 gives the point ideal of [1:...:1], r = 1 gives I, larger r
/// iterates the product. Fast mode requires a binomial self-match and raises
/// the trailing coefficients in closed form.
Ideal hadamard_power(const Ideal& I, long r, PowerMode mode, const Caps& caps = default_caps());

/// Ideal <X^{alpha_i} - xi_i^{epsilon_i} X^{beta_i}> over Q(zeta_M), where
/// M = lcm(t_i) and xi_i = zeta_M^{M/t_i} has multiplicative order t_i.
Ideal type_ideal(const BinomialTypeSpec& spec, const Caps& caps = default_caps());

/// t = 1 + lcm_i(t_i / gcd(t_i, epsilon_i)); the smallest exponent > 1 with
/// V^{*t} = V for the typed variety.
long potency_exponent(const BinomialTypeSpec& spec);

/// True iff every generator of I vanishes at p (exact evaluation).
bool verify_point_on_variety(const ProjectivePoint& p, const Ideal& I);

} // namespace hstar

#endif
