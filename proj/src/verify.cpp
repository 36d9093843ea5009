#include "hstar/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hstar/errors.hpp"
#include "hstar/fiber.hpp"
#include "hstar/hilbert.hpp"
#include "hstar/parser.hpp"

namespace hstar {

std::uint64_t Rng::next() {
    // SplitMix64 (Steele-Lea-Flood); fixed constants, platform-independent.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    // Multiply-shift range reduction; bias is immaterial for the tiny bounds
    // used by the suites.
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

long Rng::int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

Exponents random_composition(Rng& rng, size_t nvars, int degree) {
    Exponents e(nvars, 0);
    for (int k = 0; k < degree; ++k) ++e[rng.below(nvars)];
    return e;
}

ProjectivePoint random_witness(Rng& rng, const Ring& r) {
    std::vector<FieldElement> coords;
    for (size_t i = 0; i < r.nvars(); ++i) {
        long num = rng.int_in(1, 3);
        long den = rng.int_in(1, 3);
        if (rng.below(2) == 0) num = -num;
        coords.push_back(FieldElement(Rational(num, den)));
    }
    return ProjectivePoint(r, std::move(coords));
}

Ideal plant(const Ring& R, const std::vector<std::pair<Exponents, Exponents>>& pairs,
            const ProjectivePoint& w) {
    std::vector<Polynomial> gens;
    for (const auto& [a, b] : pairs) {
        FieldElement c = w.power(a) / w.power(b);
        gens.push_back(
            Polynomial::from_terms(R, {Term{FieldElement::one(), a}, Term{-c, b}}));
    }
    return Ideal(R, std::move(gens));
}

class Checker {
public:
    explicit Checker(std::string suite) { result_.suite = std::move(suite); }

    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (ok)
            ++result_.passed;
        else
            result_.failures.push_back(what);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

} // namespace

PlantedPair random_planted_pair(Rng& rng) {
    size_t nvars = 2 + rng.below(4);
    size_t s = 1 + rng.below(3);
    std::vector<std::string> names;
    for (size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    Ring R(names);

    MonomialOrder grlex = MonomialOrder::grlex();
    std::set<std::pair<Exponents, Exponents>> seen;
    std::vector<std::pair<Exponents, Exponents>> pairs;
    while (pairs.size() < s) {
        int d = 2 + static_cast<int>(rng.below(2));
        Exponents a = random_composition(rng, nvars, d);
        Exponents b = random_composition(rng, nvars, d);
        if (a == b) continue;
        if (grlex.compare(a, b) < 0) std::swap(a, b);
        if (seen.insert({a, b}).second) pairs.emplace_back(a, b);
    }
    ProjectivePoint p = random_witness(rng, R);
    ProjectivePoint q = random_witness(rng, R);
    return PlantedPair{plant(R, pairs, p), plant(R, pairs, q), p, q};
}

SuiteResult run_suite_hadamard(std::uint64_t seed, int cases, const Caps& caps) {
    Checker c("hadamard");
    MonomialOrder gvx = MonomialOrder::grevlex();
    {
        Ring R({"x", "y", "z"});
        Ideal I(R, {parse_polynomial("x^3 - 2*y^2*z", R)});
        Ideal J(R, {parse_polynomial("x^3 - 2*y*z^2", R)});
        Ideal prod = hadamard_product_elimination(I, J, caps);
        c.check(prod.is_zero(), "golden cubic pair: product ideal is zero");
        Ideal sq = hadamard_product_elimination(I, I, caps);
        GroebnerBasis gb = reduced_groebner_basis(sq, gvx, caps);
        c.check(gb.elements.size() == 1 && to_string(gb.elements[0]) == "x^3 - 4*y^2*z",
                "golden cubic square: reduced basis is x^3 - 4*y^2*z");
        FastResult fast = hadamard_product_binomial_fast(I, I);
        c.check(ideal_equal(fast.ideal, sq, gvx, caps),
                "golden cubic square: fast path equals elimination");
        c.check(fast.status == FastStatus::containment_only,
                "golden cubic square: without a rational witness the fast path is containment-only");
    }
    if (cases <= 0) return c.take();

    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        std::string tag = "case " + std::to_string(k) + ": ";
        PlantedPair pp = random_planted_pair(rng);
        Ideal elim = hadamard_product_elimination(pp.I, pp.J, caps);
        FastResult fast = hadamard_product_binomial_fast(pp.I, pp.J, pp.p);
        c.check(fast.status == FastStatus::certified,
                tag + "fast path certified by the planted witness");
        c.check(ideal_equal(fast.ideal, elim, gvx, caps), tag + "fast path equals elimination");
        c.check(ideal_equal(point_variety_ideal(pp.p, pp.J), elim, gvx, caps),
                tag + "witness transform of J equals the product");

        GroebnerBasis gbJ = reduced_groebner_basis(pp.J, gvx, caps);
        GroebnerBasis tr = reduced_gb_transform(gbJ, pp.p);
        c.check(satisfies_buchberger_criterion(tr.elements, gvx, caps),
                tag + "transformed basis satisfies the Buchberger criterion");
        c.check(ideal_equal(Ideal(pp.I.ring(), tr.elements), elim, gvx, caps),
                tag + "transformed basis generates the product");
        bool lt_cover = true;
        for (const auto& g : fast.ideal.generators()) {
            const Exponents& lm = g.leading_term(gvx).exps;
            bool covered = false;
            for (const auto& t : tr.elements)
                covered = covered || exps_divides(t.leading_term(gvx).exps, lm);
            lt_cover = lt_cover && covered;
        }
        c.check(lt_cover, tag + "fast leading terms lie in the transformed initial ideal");

        FastResult blind = hadamard_product_binomial_fast(pp.I, pp.J);
        GroebnerBasis gbE = reduced_groebner_basis(elim, gvx, caps);
        bool members = true;
        for (const auto& g : blind.ideal.generators())
            members = members && ideal_member(g, gbE, caps);
        c.check(members, tag + "fast generators lie in the elimination ideal without a witness");

        if (k < 5)
            c.check(ideal_equal(elim, hadamard_product_elimination(pp.J, pp.I, caps), gvx, caps),
                    tag + "product commutes");

        GroebnerBasis gbI = reduced_groebner_basis(pp.I, gvx, caps);
        GroebnerBasis trI = reduced_gb_transform(gbI, pp.p);
        c.check(is_reduced_basis(trI.elements, gvx) &&
                    satisfies_buchberger_criterion(trI.elements, gvx, caps),
                tag + "transform of a reduced basis is a reduced basis");
        Ideal back = point_variety_ideal(pp.p.inverse(), point_variety_ideal(pp.p, pp.I));
        c.check(back == pp.I, tag + "double transform is the identity");
    }
    return c.take();
}

SuiteResult run_suite_hilbert(std::uint64_t seed, int cases, const Caps& caps) {
    Checker c("hilbert");
    {
        Ring R({"x", "y", "z"});
        Ideal I(R, {parse_polynomial("x^3 - 2*y^2*z", R)});
        MonomialIdeal lt = leading_term_ideal(I, MonomialOrder::grevlex(), caps);
        bool hf_ok = hilbert_function(lt, 0, caps) == 1;
        for (int i = 1; i <= 8; ++i) hf_ok = hf_ok && hilbert_function(lt, i, caps) == 3 * i;
        c.check(hf_ok, "cubic hypersurface in three variables: HF is 1, 3, 6, 9, ...");
        DegreeDimension dd = degree_and_dimension(I, caps);
        c.check(dd.degree == 3 && dd.dimension == 1,
                "cubic hypersurface in three variables: degree 3, dimension 1");
    }
    if (cases <= 0) return c.take();

    Rng rng(seed);
    const std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grlex(),
                                               MonomialOrder::grevlex()};
    for (int k = 0; k < cases; ++k) {
        std::string tag = "case " + std::to_string(k) + ": ";
        PlantedPair pp = random_planted_pair(rng);
        Ideal K = hadamard_product_elimination(pp.I, pp.J, caps);

        bool lt_eq = true;
        for (const auto& ord : orders) {
            MonomialIdeal li = leading_term_ideal(pp.I, ord, caps);
            lt_eq = lt_eq && li == leading_term_ideal(pp.J, ord, caps) &&
                    li == leading_term_ideal(K, ord, caps);
        }
        c.check(lt_eq, tag + "leading-term ideals of I, J, I*J agree under all three orders");

        MonomialIdeal mi = leading_term_ideal(pp.I, MonomialOrder::grevlex(), caps);
        MonomialIdeal mj = leading_term_ideal(pp.J, MonomialOrder::grevlex(), caps);
        MonomialIdeal mk = leading_term_ideal(K, MonomialOrder::grevlex(), caps);
        MonomialIdeal mlex = leading_term_ideal(pp.I, MonomialOrder::lex(), caps);
        bool hf_eq = true, order_free = true;
        for (int i = 0; i <= 10; ++i) {
            mpz_class v = hilbert_function(mi, i, caps);
            hf_eq = hf_eq && v == hilbert_function(mj, i, caps) &&
                    v == hilbert_function(mk, i, caps);
            order_free = order_free && v == hilbert_function(mlex, i, caps);
        }
        c.check(hf_eq, tag + "Hilbert functions of I, J, I*J agree up to degree 10");
        c.check(order_free, tag + "Hilbert function is independent of the term order");

        DegreeDimension di = degree_and_dimension(pp.I, caps);
        DegreeDimension dj = degree_and_dimension(pp.J, caps);
        DegreeDimension dk = degree_and_dimension(K, caps);
        c.check(di.degree == dj.degree && di.dimension == dj.dimension &&
                    di.degree == dk.degree && di.dimension == dk.dimension,
                tag + "degree and dimension triples agree");

        int d = static_cast<int>(rng.below(6));
        c.check(hilbert_function(mi, d, caps) ==
                    hilbert_function_inclusion_exclusion(mi, d, caps),
                tag + "standard-monomial count matches inclusion-exclusion");
    }
    return c.take();
}

std::vector<Graph> toric_corpus() {
    using E = std::vector<std::pair<std::string, std::string>>;
    return {
        Graph({"a", "b", "c"}, E{{"a", "b"}, {"b", "c"}, {"c", "a"}}),
        Graph({"a", "b", "c", "d"}, E{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}),
        Graph({"a", "b", "c", "d", "e", "f"},
              E{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}}),
        Graph({"a", "b", "c"}, E{{"a", "b"}, {"b", "c"}}),
        Graph({"a", "b", "c", "d"}, E{{"a", "b"}, {"b", "c"}, {"c", "d"}}),
        Graph({"a", "b", "c", "d"},
              E{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}}),
        Graph({"a", "b", "c", "d", "e", "f"},
              E{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"d", "e"}, {"e", "f"},
                {"f", "c"}}),
        Graph({"a", "b", "c", "d"},
              E{{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}),
    };
}

std::vector<std::pair<size_t, size_t>> designated_subgraph_pairs() {
    return {{1, 4}, {1, 3}, {1, 1}, {0, 3}, {2, 4}, {5, 1}, {6, 1}, {6, 4}, {7, 1}, {7, 0}};
}

SuiteResult run_suite_toric(std::uint64_t, int, const Caps& caps) {
    Checker c("toric");
    Caps tc = caps;
    // The corpus needs headroom beyond the CLI defaults: K4's walk tree alone
    // has ~3M nodes, and the 21-variable product eliminations are large.
    tc.walk_limit = std::max<std::uint64_t>(tc.walk_limit, 100000000ULL);
    tc.spair_limit = std::max<std::uint64_t>(tc.spair_limit, 200000ULL);
    tc.term_limit = std::max<std::uint64_t>(tc.term_limit, 10000000ULL);

    const std::vector<Graph> corpus = toric_corpus();
    const char* names[] = {"C3", "C4", "C6", "P3", "P4", "C4+chord", "C4C4", "K4"};
    MonomialOrder gvx = MonomialOrder::grevlex();

    for (size_t gi = 0; gi < corpus.size(); ++gi) {
        const Graph& G = corpus[gi];
        std::string tag = std::string(names[gi]) + ": ";
        Ideal IG = toric_ideal_graph(G, tc);
        c.check(!contains_monomial(IG, tc), tag + "toric ideal contains no monomial");
        c.check(verify_point_on_variety(ProjectivePoint::all_ones(IG.ring()), IG),
                tag + "the all-ones point lies on the toric variety");

        auto walks = closed_even_walks(G, 2 * static_cast<int>(G.n_edges()), tc);
        GroebnerBasis gb = reduced_groebner_basis(IG, gvx, tc);
        Ring er = G.edge_ring();
        std::vector<Polynomial> wpolys;
        bool walks_in = true;
        for (const auto& w : walks) {
            wpolys.push_back(walk_binomial(w, G, er));
            walks_in = walks_in && ideal_member(wpolys.back(), gb, tc);
        }
        c.check(walks_in, tag + "every walk binomial lies in the elimination ideal");
        GroebnerBasis wgb = reduced_groebner_basis(Ideal(er, wpolys), gvx, tc);
        bool gens_in = true;
        for (const auto& g : IG.generators()) gens_in = gens_in && ideal_member(g, wgb, tc);
        c.check(gens_in, tag + "every elimination generator lies in the walk-binomial ideal");

        FastResult fast = hadamard_product_binomial_fast(IG, IG);
        c.check(fast.status == FastStatus::certified && ideal_equal(fast.ideal, IG, gvx, tc),
                tag + "toric square I_G * I_G = I_G certified at the all-ones witness");
    }

    for (auto [gi, hi] : designated_subgraph_pairs()) {
        std::string tag =
            std::string("pair (") + names[gi] + ", " + names[hi] + "): ";
        SubgraphTheoremReport rep = verify_subgraph_theorem(corpus[gi], corpus[hi], tc);
        c.check(rep.holds, tag + rep.details);
    }
    return c.take();
}

namespace {

/// A nonzero integer vector w in [-3,3]^n with w . v = 0, if one exists.
std::optional<std::vector<int>> small_kernel_vector(const std::vector<long>& v) {
    size_t n = v.size();
    std::vector<int> w(n, -3);
    while (true) {
        long dot = 0;
        bool nonzero = false;
        for (size_t i = 0; i < n; ++i) {
            dot += w[i] * v[i];
            nonzero = nonzero || w[i] != 0;
        }
        if (nonzero && dot == 0) return w;
        size_t i = 0;
        while (i < n && w[i] == 3) {
            w[i] = -3;
            ++i;
        }
        if (i == n) return std::nullopt;
        ++w[i];
    }
}

} // namespace

SuiteResult run_suite_fiber(std::uint64_t seed, int cases, const Caps& caps) {
    Checker c("fiber");
    MonomialOrder gvx = MonomialOrder::grevlex();
    {
        Ring R({"x", "y", "z", "w"});
        Ideal I(R, {parse_polynomial("x^2 - x*y - y*z", R)});
        c.check(check_coordinate_saturated(I, caps),
                "golden fiber: the ideal equals its quotient by x*y*z*w");
        ProjectivePoint p(R, {FieldElement(Rational(1)), FieldElement(Rational(2)),
                              FieldElement(Rational(3)), FieldElement(Rational(4))});
        FiberReport rep = fiber_ideal(I, p, gvx, caps);
        c.check(rep.status == FiberStatus::certified, "golden fiber: status is certified");
        bool gens_ok = rep.fiber.has_value() && rep.fiber->generators().size() == 2 &&
                       to_string(rep.fiber->generators()[0]) == "x^2 - 1/2*x*y" &&
                       to_string(rep.fiber->generators()[1]) == "x^2 - 1/6*y*z";
        c.check(gens_ok, "golden fiber: J = <x^2 - 1/2*x*y, x^2 - 1/6*y*z>");
        ProjectivePoint q(R, {FieldElement(Rational(1)), FieldElement(Rational(2)),
                              FieldElement(Rational(3)), FieldElement(Rational(5))});
        c.check(verify_fiber(I, p, q, caps),
                "golden fiber: the free fourth coordinate stays in the fiber");
        c.check(!verify_fiber(I, p, ProjectivePoint::all_ones(R), caps),
                "golden fiber: the all-ones point leaves the fiber");

        Ring R2({"x0", "x1"});
        Ideal hyper(R2, {Polynomial::variable(R2, 0)});
        FiberReport bad = fiber_ideal(hyper, ProjectivePoint::all_ones(R2), gvx, caps);
        c.check(!bad.I_saturated && !bad.fiber.has_value() &&
                    bad.status == FiberStatus::hypothesis_failed,
                "coordinate hyperplane: hypothesis failure carries no fiber ideal");
    }
    if (cases <= 0) return c.take();

    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        std::string tag = "case " + std::to_string(k) + ": ";
        size_t nvars = 3 + rng.below(2);
        std::vector<std::string> names;
        for (size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
        Ring R(names);

        std::vector<size_t> perm(nvars);
        for (size_t i = 0; i < nvars; ++i) perm[i] = i;
        for (size_t i = nvars - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        size_t ka = 1 + rng.below(nvars - 1);
        size_t kb = 1 + rng.below(nvars - ka);
        int d = 2 + static_cast<int>(rng.below(2));
        Exponents a(nvars, 0), b(nvars, 0);
        for (int t = 0; t < d; ++t) ++a[perm[rng.below(ka)]];
        for (int t = 0; t < d; ++t) ++b[perm[ka + rng.below(kb)]];

        ProjectivePoint p = random_witness(rng, R);
        FieldElement cc = p.power(a) / p.power(b);
        Ideal I(R, {Polynomial::from_terms(R, {Term{FieldElement::one(), a}, Term{-cc, b}})});

        FiberReport rep = fiber_ideal(I, p, gvx, caps);
        c.check(rep.status == FiberStatus::certified && rep.fiber.has_value(),
                tag + "principal binomial input certifies");
        if (!rep.fiber) continue;
        c.check(verify_point_on_variety(p, *rep.fiber), tag + "base point lies on V(J)");

        std::vector<long> diff(nvars);
        for (size_t i = 0; i < nvars; ++i) diff[i] = a[i] - b[i];
        if (auto w = small_kernel_vector(diff)) {
            std::vector<FieldElement> rc;
            for (size_t i = 0; i < nvars; ++i)
                rc.push_back(FieldElement(Rational(2).pow((*w)[i])));
            ProjectivePoint q = point_star(p, ProjectivePoint(R, std::move(rc)));
            c.check(verify_fiber(I, p, q, caps), tag + "sampled fiber point stays in the fiber");
        }

        Ideal rescaled = point_variety_ideal(p.inverse(), *rep.fiber);
        bool pure = true;
        for (const auto& g : rescaled.generators()) {
            if (g.term_count() != 2) {
                pure = false;
                continue;
            }
            FieldElement lead = g.terms()[0].coeff;
            pure = pure && (g.terms()[1].coeff / lead) == -FieldElement::one();
        }
        c.check(pure, tag + "rescaling by the inverse point gives pure differences");
    }
    return c.take();
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed, int cases,
                                    const Caps& caps) {
    if (which == "hadamard") return {run_suite_hadamard(seed, cases, caps)};
    if (which == "toric") return {run_suite_toric(seed, cases, caps)};
    if (which == "hilbert") return {run_suite_hilbert(seed, cases, caps)};
    if (which == "fiber") return {run_suite_fiber(seed, cases, caps)};
    if (which == "all")
        return {run_suite_hadamard(seed, cases, caps), run_suite_toric(seed, cases, caps),
                run_suite_hilbert(seed, cases, caps), run_suite_fiber(seed, cases, caps)};
    throw validation_error("unknown suite '" + which +
                           "' (expected hadamard, toric, hilbert, fiber, or all)");
}

} // namespace hstar
