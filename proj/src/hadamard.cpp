#include "hstar/hadamard.hpp"

#include <algorithm>
#include <numeric>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw ring_mismatch_error("ideals live in different rings");
}

void require_homogeneous(const Ideal& I, const char* what) {
    if (!I.is_homogeneous())
        throw validation_error(std::string(what) + ": generators must be homogeneous");
}

void require_nonvanishing(const ProjectivePoint& p) {
    if (!p.has_no_zero_coordinate())
        throw validation_error("point has a zero coordinate");
}

} // namespace

Polynomial BinomialPresentation::pair_polynomial(const Ring& r, size_t i) const {
    const BinomialPair& bp = pairs.at(i);
    return Polynomial::from_terms(
        r, {Term{FieldElement::one(), bp.alpha}, Term{bp.trail_coeff, bp.beta}});
}

ProjectivePoint point_star(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.ring() != q.ring()) throw ring_mismatch_error("points live in different rings");
    std::vector<FieldElement> prod;
    prod.reserve(p.coords().size());
    bool any = false;
    for (size_t i = 0; i < p.coords().size(); ++i) {
        FieldElement c = p.coords()[i] * q.coords()[i];
        if (!c.is_zero()) any = true;
        prod.push_back(std::move(c));
    }
    if (!any)
        throw undefined_product_error("coordinate-wise product vanishes in every coordinate");
    return ProjectivePoint(p.ring(), std::move(prod));
}

Polynomial hadamard_transform(const Polynomial& f, const ProjectivePoint& p) {
    if (f.ring() != p.ring()) throw ring_mismatch_error("point and polynomial rings differ");
    require_nonvanishing(p);
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms())
        ts.push_back(Term{t.coeff * p.power(t.exps).inverse(), t.exps});
    return Polynomial::from_terms(f.ring(), std::move(ts));
}

Ideal point_variety_ideal(const ProjectivePoint& p, const Ideal& I) {
    if (I.ring() != p.ring()) throw ring_mismatch_error("point and ideal rings differ");
    require_nonvanishing(p);
    require_homogeneous(I, "point_variety_ideal");
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(hadamard_transform(g, p));
    return Ideal(I.ring(), std::move(gens));
}

GroebnerBasis reduced_gb_transform(const GroebnerBasis& gb, const ProjectivePoint& p) {
    if (!gb.reduced) throw validation_error("reduced_gb_transform requires a reduced basis");
    require_nonvanishing(p);
    std::vector<Polynomial> elems;
    elems.reserve(gb.elements.size());
    for (const auto& f : gb.elements) {
        const Exponents& alpha = f.leading_term(gb.order).exps;
        elems.push_back(p.power(alpha) * hadamard_transform(f, p));
    }
    Ideal transformed(gb.elements.empty() ? gb.ideal.ring() : elems[0].ring(), elems);
    return GroebnerBasis{std::move(transformed), gb.order, std::move(elems), true};
}

Ideal hadamard_product_elimination(const Ideal& I, const Ideal& J, const Caps& caps) {
    require_same_ring(I, J);
    require_homogeneous(I, "hadamard product");
    require_homogeneous(J, "hadamard product");
    const Ring& R = I.ring();
    size_t n = R.nvars();

    std::vector<std::string> yvars = fresh_names("y", n, R.vars());
    std::vector<std::string> taken = R.vars();
    taken.insert(taken.end(), yvars.begin(), yvars.end());
    std::vector<std::string> zvars = fresh_names("z", n, taken);

    std::vector<std::string> svars = yvars;
    svars.insert(svars.end(), zvars.begin(), zvars.end());
    svars.insert(svars.end(), R.vars().begin(), R.vars().end());
    Ring S(svars, R.field());

    std::vector<size_t> to_y(n), to_z(n);
    for (size_t i = 0; i < n; ++i) {
        to_y[i] = i;
        to_z[i] = n + i;
    }

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.map_to(S, to_y));
    for (const auto& g : J.generators()) gens.push_back(g.map_to(S, to_z));
    for (size_t i = 0; i < n; ++i) {
        Polynomial link = Polynomial::variable(S, 2 * n + i) -
                          Polynomial::variable(S, i) * Polynomial::variable(S, n + i);
        gens.push_back(std::move(link));
    }

    std::vector<size_t> drop(2 * n);
    std::iota(drop.begin(), drop.end(), size_t{0});
    return eliminate(Ideal(S, std::move(gens)), drop, caps);
}

Ideal point_ideal(const ProjectivePoint& p) {
    const Ring& R = p.ring();
    std::vector<Polynomial> gens;
    for (size_t i = 0; i + 1 < R.nvars(); ++i) {
        for (size_t j = i + 1; j < R.nvars(); ++j) {
            Exponents ei(R.nvars(), 0), ej(R.nvars(), 0);
            ei[i] = 1;
            ej[j] = 1;
            gens.push_back(Polynomial::from_terms(
                R, {Term{p.coords()[j], ei}, Term{-p.coords()[i], ej}}));
        }
    }
    return Ideal(R, std::move(gens));
}

namespace {

// Canonically oriented binomial presentation of the presented generators, or
// absent if some generator is not a binomial or an exponent pair repeats.
std::optional<BinomialPresentation> presentation_of(const Ideal& I) {
    const MonomialOrder grlex = MonomialOrder::grlex();
    BinomialPresentation pres;
    for (const auto& g : I.generators()) {
        if (g.term_count() != 2) return std::nullopt;
        const Term& t0 = g.terms()[0];
        const Term& t1 = g.terms()[1];
        const bool first_leads = grlex.compare(t0.exps, t1.exps) > 0;
        const Term& lead = first_leads ? t0 : t1;
        const Term& trail = first_leads ? t1 : t0;
        pres.pairs.push_back(BinomialPair{lead.exps, trail.exps, trail.coeff / lead.coeff});
    }
    std::sort(pres.pairs.begin(), pres.pairs.end(), [](const BinomialPair& a, const BinomialPair& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    });
    for (size_t i = 1; i < pres.pairs.size(); ++i)
        if (pres.pairs[i].alpha == pres.pairs[i - 1].alpha &&
            pres.pairs[i].beta == pres.pairs[i - 1].beta)
            return std::nullopt;
    return pres;
}

} // namespace

std::optional<std::pair<BinomialPresentation, BinomialPresentation>>
same_exponent_match(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    auto pi = presentation_of(I);
    auto pj = presentation_of(J);
    if (!pi || !pj) return std::nullopt;
    if (pi->pairs.size() != pj->pairs.size()) return std::nullopt;
    for (size_t i = 0; i < pi->pairs.size(); ++i)
        if (pi->pairs[i].alpha != pj->pairs[i].alpha || pi->pairs[i].beta != pj->pairs[i].beta)
            return std::nullopt;
    return std::make_pair(std::move(*pi), std::move(*pj));
}

FastResult hadamard_product_binomial_fast(const Ideal& I, const Ideal& J,
                                          const std::optional<ProjectivePoint>& witness) {
    require_same_ring(I, J);
    require_homogeneous(I, "hadamard product");
    require_homogeneous(J, "hadamard product");
    auto match = same_exponent_match(I, J);
    if (!match)
        throw validation_error("ideals do not have matching binomial exponents");

    const Ring& R = I.ring();
    std::vector<Polynomial> gens;
    gens.reserve(match->first.pairs.size());
    for (size_t i = 0; i < match->first.pairs.size(); ++i) {
        const BinomialPair& a = match->first.pairs[i];
        const BinomialPair& b = match->second.pairs[i];
        // Generators are X^a + s X^b and X^a + u X^b; the product of the
        // varieties is cut out by X^a - (s u) X^b.
        FieldElement trail = -(a.trail_coeff * b.trail_coeff);
        gens.push_back(Polynomial::from_terms(
            R, {Term{FieldElement::one(), a.alpha}, Term{std::move(trail), a.beta}}));
    }

    FastResult res{Ideal(R, std::move(gens)), FastStatus::containment_only,
                   witness.has_value(), false};
    ProjectivePoint candidate = witness ? *witness : ProjectivePoint::all_ones(R);
    if (candidate.ring() != R) throw ring_mismatch_error("witness point from a different ring");
    if (candidate.has_no_zero_coordinate() &&
        (verify_point_on_variety(candidate, I) || verify_point_on_variety(candidate, J))) {
        res.status = FastStatus::certified;
        res.witness_valid = true;
    }
    return res;
}

Ideal hadamard_power(const Ideal& I, long r, PowerMode mode, const Caps& caps) {
    if (r < 0) throw validation_error("Hadamard power requires r >= 0");
    const Ring& R = I.ring();
    if (r == 0) return point_ideal(ProjectivePoint::all_ones(R));
    if (r == 1) return I;

    if (mode == PowerMode::fast) {
        require_homogeneous(I, "hadamard power");
        auto match = same_exponent_match(I, I);
        if (!match)
            throw validation_error("fast Hadamard power requires a binomial ideal");
        std::vector<Polynomial> gens;
        for (const auto& bp : match->first.pairs) {
            // Trailing coefficient of the r-th power: with the generator
            // written X^a - c X^b (c = -trail), the power has coefficient c^r.
            FieldElement c = -bp.trail_coeff;
            FieldElement trail = -c.pow(r);
            gens.push_back(Polynomial::from_terms(
                R, {Term{FieldElement::one(), bp.alpha}, Term{std::move(trail), bp.beta}}));
        }
        return Ideal(R, std::move(gens));
    }

    Ideal acc = I;
    for (long k = 2; k <= r; ++k) acc = hadamard_product_elimination(acc, I, caps);
    return acc;
}

Ideal type_ideal(const BinomialTypeSpec& spec, const Caps& caps) {
    const Ring& B = spec.base_ring;
    if (B.field().is_cyclotomic)
        throw validation_error("type spec base ring must be over Q");
    if (spec.pairs.empty()) throw validation_error("type spec needs at least one pair");
    if (spec.pairs.size() != spec.types.size())
        throw validation_error("type spec: one (t, epsilon) per exponent pair required");

    long m = 1;
    for (auto [t, eps] : spec.types) {
        if (t < 2) throw validation_error("type spec: each t_i must be at least 2");
        if (eps < 1 || eps > t - 1)
            throw validation_error("type spec: epsilon_i must satisfy 1 <= epsilon_i <= t_i - 1");
        m = std::lcm(m, static_cast<long>(t));
    }
    if (m > caps.cyclo_order_cap)
        throw cap_exceeded_error("cyclotomic order " + std::to_string(m) +
                                 " exceeds the configured cap");

    for (const auto& [alpha, beta] : spec.pairs) {
        if (alpha.size() != B.nvars() || beta.size() != B.nvars())
            throw validation_error("type spec: exponent length does not match ring");
        if (alpha == beta) throw validation_error("type spec: alpha and beta must differ");
        if (total_degree(alpha) != total_degree(beta))
            throw validation_error("type spec: pairs must be homogeneous (equal degrees)");
    }
    for (size_t i = 0; i < spec.pairs.size(); ++i)
        for (size_t j = i + 1; j < spec.pairs.size(); ++j)
            if (spec.pairs[i] == spec.pairs[j])
                throw validation_error("type spec: exponent pairs must be distinct");

    Ring R(B.vars(), FieldSpec::cyclotomic(static_cast<int>(m)));
    CycloElement zeta = CycloElement::zeta(static_cast<int>(m));
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < spec.pairs.size(); ++i) {
        auto [t, eps] = spec.types[i];
        FieldElement xi = FieldElement(zeta.pow(m / t));  // order t_i
        FieldElement trail = -xi.pow(eps);
        gens.push_back(Polynomial::from_terms(
            R, {Term{FieldElement::one(), spec.pairs[i].first},
                Term{std::move(trail), spec.pairs[i].second}}));
    }
    return Ideal(R, std::move(gens));
}

long potency_exponent(const BinomialTypeSpec& spec) {
    if (spec.pairs.empty() || spec.pairs.size() != spec.types.size())
        throw validation_error("invalid type spec");
    long l = 1;
    for (auto [t, eps] : spec.types) {
        if (t < 2 || eps < 1 || eps > t - 1) throw validation_error("invalid type spec entry");
        l = std::lcm(l, static_cast<long>(t) / std::gcd(static_cast<long>(t), static_cast<long>(eps)));
    }
    return 1 + l;
}

bool verify_point_on_variety(const ProjectivePoint& p, const Ideal& I) {
    if (p.ring() != I.ring()) throw ring_mismatch_error("point and ideal rings differ");
    for (const auto& g : I.generators())
        if (!g.evaluate(p.coords()).is_zero()) return false;
    return true;
}

} // namespace hstar
