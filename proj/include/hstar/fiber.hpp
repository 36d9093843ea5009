#ifndef HSTAR_FIBER_HPP
#define HSTAR_FIBER_HPP

#include <optional>
#include <string>

#include "hstar/groebner.hpp"
#include "hstar/point.hpp"

namespace hstar {

/// True iff (I : x0 x1 ... xn) = I. Requires a homogeneous ideal.
bool check_coordinate_saturated(const Ideal& I, const Caps& caps = default_caps());

enum class FiberStatus { certified, containment_only, hypothesis_failed };

/// Outcome of the fiber construction at a point p with nonzero coordinates:
/// the hypothesis checks, the reduced basis they were evaluated on, and --
/// when the three pre-checks hold -- the binomial ideal J whose variety is
/// the set of points q with q * V = p * V.
struct FiberReport {
    Ideal input;
    ProjectivePoint point;
    GroebnerBasis gb;
    bool I_saturated = false;
    bool monomial_free = false;
    bool min_gb_degree_ok = false;
    bool J_saturated = false;
    std::optional<Ideal> fiber;  // present only when the three pre-checks hold
    FiberStatus status = FiberStatus::hypothesis_failed;
    std::string details;
};

/// Computes the reduced Groebner basis of I under `order` and checks that
/// (a) I is coordinate-saturated, (b) I contains no monomial, and (c) every
/// basis element has degree >= 2. When all three hold, J is generated by
/// X^a1 - (p^a1 / p^al) X^al for each basis element with monomials
/// X^a1 > X^a2 > ... under `order` and each trailing position l; the point p
/// itself satisfies every generator. Status is `certified` when additionally
/// saturate(J, x0...xn) = J, else `containment_only`; any failed pre-check
/// gives `hypothesis_failed` with no fiber ideal.
///
/// Requires p without zero coordinates and I nonzero and proper.
FiberReport fiber_ideal(const Ideal& I, const ProjectivePoint& p, const MonomialOrder& order,
                        const Caps& caps = default_caps());

/// True iff q has no zero coordinate and the transformed ideals of q * V(I)
/// and p * V(I) coincide, i.e. q lies in the fiber of the Hadamard
/// transformation over p * V(I). Requires p without zero coordinates.
bool verify_fiber(const Ideal& I, const ProjectivePoint& p, const ProjectivePoint& q,
                  const Caps& caps = default_caps());

} // namespace hstar

#endif
