#include "hstar/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

struct DescExps {
    const MonomialOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return order->compare(a, b) > 0;
    }
};

void poll_cancel(const Caps& caps) {
    if (caps.cancel && caps.cancel->load(std::memory_order_relaxed)) throw cancelled_error();
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    const FieldElement& lc = p.leading_term(order).coeff;
    if (lc.is_one()) return p;
    return lc.inverse() * p;
}

// One bit per variable (folded at 64): a divisor whose mask has a bit the
// candidate term lacks cannot divide it, which skips most exps_divides calls.
std::uint64_t exps_mask(const Exponents& e) {
    std::uint64_t m = 0;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) m |= (1ULL << (i & 63));
    return m;
}

// Cached leading data for a fixed divisor list, so repeated reductions do not
// rescan every divisor for its leading term.
struct Reducer {
    const std::vector<Polynomial>* divisors = nullptr;
    std::vector<Exponents> lms;
    std::vector<FieldElement> lcinv;
    std::vector<std::uint64_t> masks;
    const MonomialOrder* order = nullptr;

    void attach(const std::vector<Polynomial>& ds, const MonomialOrder& ord) {
        divisors = &ds;
        order = &ord;
        lms.clear();
        lcinv.clear();
        masks.clear();
        for (const auto& d : ds) push_head(d);
    }

    void push_head(const Polynomial& d) {
        const Term& lt = d.leading_term(*order);
        lms.push_back(lt.exps);
        lcinv.push_back(lt.coeff.inverse());
        masks.push_back(exps_mask(lt.exps));
    }

    Polynomial remainder(const Polynomial& f, const Caps& caps) const {
        std::map<Exponents, FieldElement, DescExps> work{DescExps{order}};
        for (const auto& t : f.terms()) work.emplace(t.exps, t.coeff);
        std::vector<Term> rem_terms;

        while (!work.empty()) {
            if (work.size() + rem_terms.size() > caps.term_limit)
                throw cap_exceeded_error("term limit exceeded during division");
            auto lead = work.begin();
            const Exponents e = lead->first;
            const FieldElement c = lead->second;
            const std::uint64_t emask = exps_mask(e);

            size_t which = lms.size();
            for (size_t i = 0; i < lms.size(); ++i) {
                if (masks[i] & ~emask) continue;
                if (exps_divides(lms[i], e)) {
                    which = i;
                    break;
                }
            }
            if (which == lms.size()) {
                rem_terms.push_back(Term{c, e});
                work.erase(lead);
                continue;
            }

            FieldElement coef = c * lcinv[which];
            Exponents shift = exps_sub(e, lms[which]);
            for (const auto& dt : (*divisors)[which].terms()) {
                Exponents ne = exps_add(dt.exps, shift);
                FieldElement delta = coef * dt.coeff;
                auto [it, inserted] = work.emplace(std::move(ne), -delta);
                if (!inserted) {
                    it->second = it->second - delta;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        }
        return Polynomial::from_terms(f.ring(), std::move(rem_terms));
    }
};

} // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order, const Caps& caps) {
    if (divisors.empty()) throw validation_error("division by an empty divisor list");
    for (const auto& d : divisors) {
        if (d.is_zero()) throw validation_error("division by a zero divisor");
        if (d.ring() != f.ring()) throw ring_mismatch_error("divisor from a different ring");
    }

    Reducer red;
    red.attach(divisors, order);

    std::map<Exponents, FieldElement, DescExps> work{DescExps{&order}};
    for (const auto& t : f.terms()) work.emplace(t.exps, t.coeff);

    std::vector<std::vector<Term>> quot_terms(divisors.size());
    std::vector<Term> rem_terms;

    while (!work.empty()) {
        if (work.size() + rem_terms.size() > caps.term_limit)
            throw cap_exceeded_error("term limit exceeded during division");
        auto lead = work.begin();
        const Exponents e = lead->first;
        const FieldElement c = lead->second;
        const std::uint64_t emask = exps_mask(e);

        size_t which = divisors.size();
        for (size_t i = 0; i < red.lms.size(); ++i) {
            if (red.masks[i] & ~emask) continue;
            if (exps_divides(red.lms[i], e)) {
                which = i;
                break;
            }
        }
        if (which == divisors.size()) {
            rem_terms.push_back(Term{c, e});
            work.erase(lead);
            continue;
        }

        FieldElement coef = c * red.lcinv[which];
        Exponents shift = exps_sub(e, red.lms[which]);
        quot_terms[which].push_back(Term{coef, shift});
        for (const auto& dt : divisors[which].terms()) {
            Exponents ne = exps_add(dt.exps, shift);
            FieldElement delta = coef * dt.coeff;
            auto [it, inserted] = work.emplace(std::move(ne), -delta);
            if (!inserted) {
                it->second = it->second - delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }

    DivisionResult res{{}, Polynomial::from_terms(f.ring(), std::move(rem_terms))};
    res.quotients.reserve(divisors.size());
    for (auto& qt : quot_terms)
        res.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(qt)));
    return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order, const Caps& caps) {
    if (divisors.empty()) return f;
    for (const auto& d : divisors) {
        if (d.is_zero()) throw validation_error("division by a zero divisor");
        if (d.ring() != f.ring()) throw ring_mismatch_error("divisor from a different ring");
    }
    Reducer red;
    red.attach(divisors, order);
    return red.remainder(f, caps);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw validation_error("S-polynomial of the zero polynomial");
    if (f.ring() != g.ring()) throw ring_mismatch_error("S-polynomial across rings");
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Exponents gamma = exps_lcm(lf.exps, lg.exps);
    Polynomial a = f.mul_term(lf.coeff.inverse(), exps_sub(gamma, lf.exps));
    Polynomial b = g.mul_term(lg.coeff.inverse(), exps_sub(gamma, lg.exps));
    return a - b;
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order, const Caps& caps) {
    GroebnerBasis out{I, order, {}, false};
    std::vector<Polynomial> elems = I.generators();
    if (elems.empty()) return out;

    Reducer red;
    red.attach(elems, order);
    const std::vector<Exponents>& lms = red.lms;

    struct PairKey {
        Exponents lcm;
        size_t i, j;
    };
    struct PairLess {
        const MonomialOrder* order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            int c = order->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<PairKey, PairLess> pending{PairLess{&order}};

    // Gebauer-Moeller installation: prune the pair list with the coprime,
    // chain, and duplicate-lcm criteria as each element enters the basis.
    auto install = [&](size_t t) {
        const Exponents& m = lms[t];

        struct Cand {
            Exponents lcm;
            size_t g;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (size_t g = 0; g < t; ++g) {
            Exponents l = exps_lcm(lms[g], m);
            bool cop = l == exps_add(lms[g], m);
            cands.push_back(Cand{std::move(l), g, cop});
        }

        std::vector<size_t> admitted;
        for (size_t a = 0; a < cands.size(); ++a) {
            bool admit = cands[a].coprime;
            if (!admit) {
                admit = true;
                for (size_t b = a + 1; b < cands.size() && admit; ++b)
                    if (exps_divides(cands[b].lcm, cands[a].lcm)) admit = false;
                for (size_t k = 0; k < admitted.size() && admit; ++k)
                    if (exps_divides(cands[admitted[k]].lcm, cands[a].lcm)) admit = false;
            }
            if (admit) admitted.push_back(a);
        }

        // Old pairs whose lcm is strictly refined through the new monomial
        // reduce to zero once both side pairs do (chain criterion).
        for (auto it = pending.begin(); it != pending.end();) {
            if (exps_divides(m, it->lcm) && exps_lcm(lms[it->i], m) != it->lcm &&
                exps_lcm(lms[it->j], m) != it->lcm)
                it = pending.erase(it);
            else
                ++it;
        }

        for (size_t a : admitted)
            if (!cands[a].coprime) pending.insert(PairKey{cands[a].lcm, cands[a].g, t});
    };

    for (size_t t = 1; t < elems.size(); ++t) install(t);

    std::uint64_t reductions = 0;
    std::uint64_t total_terms = 0;
    for (const auto& p : elems) total_terms += p.term_count();

    while (!pending.empty()) {
        poll_cancel(caps);
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());

        if (++reductions > caps.spair_limit)
            throw cap_exceeded_error("S-pair limit exceeded in Buchberger's algorithm");

        Polynomial s = s_polynomial(elems[pk.i], elems[pk.j], order);
        Polynomial r = red.remainder(s, caps);
        if (r.is_zero()) continue;

        total_terms += r.term_count();
        if (total_terms > caps.term_limit)
            throw cap_exceeded_error("term limit exceeded in Buchberger's algorithm");

        elems.push_back(std::move(r));
        red.push_head(elems.back());
        install(elems.size() - 1);
    }

    out.elements = std::move(elems);
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb, const Caps& caps) {
    const MonomialOrder& order = gb.order;
    std::vector<Polynomial> es;
    es.reserve(gb.elements.size());
    for (const auto& p : gb.elements)
        if (!p.is_zero()) es.push_back(make_monic(p, order));

    // Minimal basis: drop any element whose leading monomial is divisible by
    // another kept element's leading monomial (first occurrence wins on ties).
    std::vector<Exponents> lms;
    lms.reserve(es.size());
    for (const auto& p : es) lms.push_back(p.leading_term(order).exps);
    std::vector<char> keep(es.size(), 1);
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (!exps_divides(lms[j], lms[i])) continue;
            if (lms[j] == lms[i] && j > i) continue;
            keep[i] = 0;
            break;
        }
    }
    std::vector<Polynomial> kept;
    for (size_t i = 0; i < es.size(); ++i)
        if (keep[i]) kept.push_back(es[i]);

    // One tail-reduction pass reaches the reduced basis: the leading monomials
    // are minimal and pairwise non-dividing, so they never change, and a full
    // normal form leaves every term irreducible modulo the other elements.
    if (kept.size() > 1) {
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(kept.size() - 1);
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            Polynomial r = normal_form(kept[i], others, order, caps);
            if (r != kept[i]) kept[i] = make_monic(r, order);
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_term(order).exps, b.leading_term(order).exps) > 0;
    });
    return GroebnerBasis{gb.ideal, order, std::move(kept), true};
}

GroebnerBasis reduced_groebner_basis(const Ideal& I, const MonomialOrder& order, const Caps& caps) {
    return reduce_basis(buchberger(I, order, caps), caps);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb, const Caps& caps) {
    if (gb.elements.empty()) return f.is_zero();
    if (f.is_zero()) return true;
    return normal_form(f, gb.elements, gb.order, caps).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& I, const MonomialOrder& order, const Caps& caps) {
    if (f.ring() != I.ring()) throw ring_mismatch_error("membership test across rings");
    return ideal_member(f, reduced_groebner_basis(I, order, caps), caps);
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order, const Caps& caps) {
    if (I.ring() != J.ring()) throw ring_mismatch_error("ideal comparison across rings");
    return reduced_groebner_basis(I, order, caps).elements ==
           reduced_groebner_basis(J, order, caps).elements;
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop_vars, const Caps& caps) {
    const Ring& R = I.ring();
    std::set<size_t> drop(drop_vars.begin(), drop_vars.end());
    for (size_t d : drop)
        if (d >= R.nvars()) throw validation_error("eliminate: variable index out of range");

    if (drop.empty()) {
        auto gb = reduced_groebner_basis(I, MonomialOrder::grevlex(), caps);
        return Ideal(R, gb.elements);
    }

    // Permuted ring with the dropped variables first, then a block order
    // graded on that leading segment: its Groebner basis elements free of
    // dropped variables generate the elimination ideal.
    std::vector<size_t> dropped(drop.begin(), drop.end());
    std::vector<size_t> kept_src;
    for (size_t i = 0; i < R.nvars(); ++i)
        if (!drop.count(i)) kept_src.push_back(i);

    std::vector<std::string> pvars;
    pvars.reserve(R.nvars());
    for (size_t d : dropped) pvars.push_back(R.vars()[d]);
    for (size_t k : kept_src) pvars.push_back(R.vars()[k]);
    Ring P(pvars, R.field());

    std::vector<size_t> src_to_perm(R.nvars());
    for (size_t a = 0; a < dropped.size(); ++a) src_to_perm[dropped[a]] = a;
    for (size_t b = 0; b < kept_src.size(); ++b) src_to_perm[kept_src[b]] = dropped.size() + b;

    std::vector<Polynomial> mapped;
    mapped.reserve(I.generators().size());
    for (const auto& g : I.generators()) mapped.push_back(g.map_to(P, src_to_perm));

    MonomialOrder ord = MonomialOrder::block(dropped.size(), MonomialOrder::grevlex());
    GroebnerBasis gb = reduced_groebner_basis(Ideal(P, std::move(mapped)), ord, caps);

    std::vector<std::string> kept_names;
    for (size_t k : kept_src) kept_names.push_back(R.vars()[k]);
    Ring K(kept_names, R.field());

    std::vector<Polynomial> result;
    for (const auto& g : gb.elements) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (size_t a = 0; a < dropped.size() && pure; ++a)
                if (t.exps[a] != 0) pure = false;
        if (!pure) continue;
        std::vector<Term> ts;
        ts.reserve(g.term_count());
        for (const auto& t : g.terms())
            ts.push_back(Term{t.coeff, Exponents(t.exps.begin() + static_cast<long>(dropped.size()),
                                                 t.exps.end())});
        result.push_back(Polynomial::from_terms(K, std::move(ts)));
    }
    return Ideal(K, std::move(result));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f, const Caps& caps) {
    const Ring& R = I.ring();
    if (f.is_zero()) throw validation_error("ideal quotient by the zero polynomial");
    if (f.ring() != R) throw ring_mismatch_error("quotient divisor from a different ring");
    if (I.is_zero()) return Ideal::zero(R);
    if (f.is_constant()) return I;

    // I ∩ <f> = (t*I + (1-t)*<f>) ∩ k[X], then divide the intersection by f.
    std::string tname = fresh_names("t", 1, R.vars())[0];
    std::vector<std::string> tvars;
    tvars.push_back(tname);
    for (const auto& v : R.vars()) tvars.push_back(v);
    Ring T(tvars, R.field());

    std::vector<size_t> shift(R.nvars());
    for (size_t i = 0; i < R.nvars(); ++i) shift[i] = i + 1;

    Polynomial t = Polynomial::variable(T, 0);
    Polynomial one = Polynomial::constant(T, FieldElement::one());
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * g.map_to(T, shift));
    gens.push_back((one - t) * f.map_to(T, shift));

    Ideal intersection = eliminate(Ideal(T, std::move(gens)), {0}, caps);

    std::vector<Polynomial> quotients;
    for (const auto& g : intersection.generators()) {
        DivisionResult dr = divide(g, {f}, MonomialOrder::grevlex(), caps);
        if (!dr.remainder.is_zero())
            throw validation_error("internal: intersection element not divisible by f");
        quotients.push_back(dr.quotients[0]);
    }
    return Ideal(R, std::move(quotients));
}

Ideal saturate(const Ideal& I, const Polynomial& f, const Caps& caps) {
    if (f.is_zero()) throw validation_error("saturation by the zero polynomial");
    Ideal prev = I;
    for (int iter = 0; iter < 1000; ++iter) {
        poll_cancel(caps);
        Ideal next = ideal_quotient(prev, f, caps);
        if (ideal_equal(next, prev, MonomialOrder::grevlex(), caps)) return next;
        prev = std::move(next);
    }
    throw cap_exceeded_error("saturation did not stabilize within the iteration limit");
}

bool contains_monomial(const Ideal& I, const Caps& caps) {
    if (I.is_zero()) return false;
    const Ring& R = I.ring();
    Exponents all_ones(R.nvars(), 1);
    Polynomial prod = Polynomial::monomial(R, FieldElement::one(), all_ones);
    Ideal sat = saturate(I, prod, caps);
    Polynomial one = Polynomial::constant(R, FieldElement::one());
    return ideal_member(one, sat, MonomialOrder::grevlex(), caps);
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& elements,
                                    const MonomialOrder& order, const Caps& caps) {
    for (const auto& p : elements)
        if (p.is_zero()) return false;
    if (elements.size() < 2) return true;
    Reducer red;
    red.attach(elements, order);
    for (size_t j = 1; j < elements.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            Polynomial s = s_polynomial(elements[i], elements[j], order);
            if (!red.remainder(s, caps).is_zero()) return false;
        }
    }
    return true;
}

bool is_reduced_basis(const std::vector<Polynomial>& elements, const MonomialOrder& order) {
    for (const auto& p : elements) {
        if (p.is_zero()) return false;
        if (!p.leading_term(order).coeff.is_one()) return false;
    }
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = 0; j < elements.size(); ++j) {
            if (i == j) continue;
            const Exponents& lm = elements[j].leading_term(order).exps;
            for (const auto& t : elements[i].terms())
                if (exps_divides(lm, t.exps)) return false;
        }
    }
    return true;
}

} // namespace hstar
