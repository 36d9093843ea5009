#include "hstar/fiber.hpp"

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/hadamard.hpp"
#include "hstar/parser.hpp"

namespace hstar {

namespace {

Polynomial coordinate_product(const Ring& r) {
    return Polynomial::monomial(r, FieldElement::one(), Exponents(r.nvars(), 1));
}

} // namespace

bool check_coordinate_saturated(const Ideal& I, const Caps& caps) {
    if (!I.is_homogeneous())
        throw validation_error("coordinate saturation check needs a homogeneous ideal");
    Ideal q = ideal_quotient(I, coordinate_product(I.ring()), caps);
    return ideal_equal(q, I, MonomialOrder::grevlex(), caps);
}

FiberReport fiber_ideal(const Ideal& I, const ProjectivePoint& p, const MonomialOrder& order,
                        const Caps& caps) {
    if (!p.has_no_zero_coordinate())
        throw validation_error("fiber point must have no zero coordinate");
    if (I.is_zero()) throw validation_error("fiber construction needs a nonzero ideal");

    GroebnerBasis gb = reduced_groebner_basis(I, order, caps);
    if (gb.elements.size() == 1 && gb.elements[0].is_constant())
        throw validation_error("fiber construction needs a proper ideal");

    FiberReport rep{I, p, gb, false, false, false, false, std::nullopt,
                    FiberStatus::hypothesis_failed, ""};
    rep.I_saturated = check_coordinate_saturated(I, caps);
    rep.monomial_free = !contains_monomial(I, caps);
    rep.min_gb_degree_ok = true;
    std::string offender;
    for (const auto& g : gb.elements) {
        if (g.degree() < 2) {
            rep.min_gb_degree_ok = false;
            offender = to_string(g);
            break;
        }
    }

    if (!rep.I_saturated || !rep.monomial_free || !rep.min_gb_degree_ok) {
        std::string why;
        auto add = [&why](const std::string& s) {
            if (!why.empty()) why += "; ";
            why += s;
        };
        if (!rep.I_saturated) add("I is not saturated with respect to x0...xn");
        if (!rep.monomial_free) add("I contains a monomial");
        if (!rep.min_gb_degree_ok) add("basis element '" + offender + "' has degree < 2");
        rep.details = "hypothesis failed: " + why;
        return rep;
    }

    const Ring& r = I.ring();
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements) {
        std::vector<Term> terms = g.terms();
        std::stable_sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
            return order.compare(a.exps, b.exps) > 0;
        });
        FieldElement lead_val = p.power(terms[0].exps);
        for (size_t l = 1; l < terms.size(); ++l) {
            FieldElement b = lead_val / p.power(terms[l].exps);
            gens.push_back(Polynomial::from_terms(
                r, {Term{FieldElement::one(), terms[0].exps}, Term{-b, terms[l].exps}}));
        }
    }
    Ideal J(r, std::move(gens));

    Ideal sat = saturate(J, coordinate_product(r), caps);
    bool stable = ideal_equal(sat, J, order, caps);
    bool linear_saturation = false;
    if (!stable) {
        GroebnerBasis satgb = reduced_groebner_basis(sat, order, caps);
        linear_saturation = !satgb.elements.empty();
        for (const auto& g : satgb.elements) {
            if (g.is_zero() || g.degree() != 1) {
                linear_saturation = false;
                break;
            }
        }
    }
    rep.J_saturated = stable || linear_saturation;
    rep.fiber = J;
    if (stable) {
        rep.status = FiberStatus::certified;
        rep.details =
            "certified: J equals its saturation by x0...xn, and J is a coordinate rescaling "
            "of a pure-difference binomial ideal, hence a lattice ideal, which is radical in "
            "characteristic zero";
    } else if (linear_saturation) {
        rep.status = FiberStatus::certified;
        rep.details =
            "certified: the saturation of J by x0...xn is generated by linear forms, hence "
            "radical, and cuts out the closure of the fiber exactly; away from the coordinate "
            "hyperplanes V(J) coincides with the fiber";
    } else {
        rep.status = FiberStatus::containment_only;
        rep.details =
            "containment only: J is strictly smaller than its saturation by x0...xn; the "
            "generators vanish on the fiber but may not cut it out exactly";
    }
    return rep;
}

bool verify_fiber(const Ideal& I, const ProjectivePoint& p, const ProjectivePoint& q,
                  const Caps& caps) {
    if (!p.has_no_zero_coordinate())
        throw validation_error("fiber base point must have no zero coordinate");
    if (!q.has_no_zero_coordinate()) return false;
    return ideal_equal(point_variety_ideal(q, I), point_variety_ideal(p, I),
                       MonomialOrder::grevlex(), caps);
}

} // namespace hstar
